// Copyright 2026 The qgal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qgal/catalog.hpp"
#include "qgal/errors.hpp"
#include "qgal/galois.hpp"

namespace qgal {
namespace {

using namespace fixtures;

const GaloisStructure kQ{StructureKind::QuandlePi0, 0};
const GaloisStructure kG{StructureKind::GroupAb, 0};
const GaloisStructure kG1{StructureKind::GroupAb, 1};

Hom q8_to_v4() {
  auto q8 = Q8();
  auto c = congruence_closure(q8, std::vector<ElemPair>{{0, 4}});  // {±1}
  return quotient(c).projection;
}

TEST(Structure, Parse) {
  EXPECT_EQ(GaloisStructure::parse("group-ab", 1).level, 1);
  EXPECT_EQ(GaloisStructure::parse("rack-pi0").variety(), Variety::Rack);
  EXPECT_THROW(GaloisStructure::parse("ring"), InputError);
  EXPECT_THROW(GaloisStructure::parse("group-ab", 3), InputError);
}

TEST(Reflect0, Examples) {
  EXPECT_EQ(reflect0(kQ, R3()).object->size(), 1u);
  auto t = reflect0(kQ, T2());
  EXPECT_EQ(t.object->size(), 2u);
  EXPECT_TRUE(is_isomorphism(t.unit));
  auto ab = reflect0(kG, Q8());
  EXPECT_EQ(ab.object->size(), 4u);
  EXPECT_TRUE(in_base(kG, *ab.object));
  EXPECT_FALSE(in_base(kG, *Q8()));
  EXPECT_TRUE(find_isomorphism(ab.object, product(cyclic_group(2), cyclic_group(2))).has_value());
}

TEST(Reflect0, Idempotent) {
  auto cat = enumerate_algebras(Variety::Quandle, 4);
  for (const auto& e : cat.entries) {
    auto r = reflect0(kQ, e.algebra);
    EXPECT_TRUE(in_base(kQ, *r.object));
    EXPECT_TRUE(is_surjection(r.unit));
    EXPECT_TRUE(is_isomorphism(reflect0(kQ, r.object).unit));
  }
}

TEST(TrivialCovering, Examples) {
  EXPECT_TRUE(is_trivial_covering(kQ, p()).yes());
  EXPECT_TRUE(is_trivial_covering(kQ, Hom::make(T2(), T2(), {1, 0})).yes());
  EXPECT_TRUE(is_trivial_covering(kG, q8_to_v4()).no());
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(covering_oracle(kQ, p()).yes());
  auto v = covering_oracle(kQ, bang(R3()));
  ASSERT_TRUE(v.no());
  // First violation in (a, a', x) search order: 0◁0 = 0 but 0◁1 = 2.
  EXPECT_EQ(v.counterexample, (std::vector<Elem>{0, 1, 0}));
  // The pair a = 1, a' = 2 with x = 0 also fails.
  EXPECT_NE(R3()->op(0, 1), R3()->op(0, 2));
  EXPECT_TRUE(covering_oracle(kG, q8_to_v4()).yes());
}

TEST(Oracle, CounterexampleIsGenuine) {
  auto v = covering_oracle(kQ, bang(R3()));
  auto r = R3();
  const Elem a = v.counterexample[0], a2 = v.counterexample[1], x = v.counterexample[2];
  EXPECT_NE(r->op(x, a), r->op(x, a2));
}

TEST(Normal, Examples) {
  EXPECT_TRUE(is_normal_covering(kQ, CubeDiagram::arrow(p())).yes());
  EXPECT_TRUE(is_normal_covering(kG, CubeDiagram::arrow(q8_to_v4())).yes());
  EXPECT_TRUE(is_normal_covering(kQ, CubeDiagram::arrow(bang(R3()))).no());
}

TEST(Splitting, Examples) {
  auto ap = CubeDiagram::arrow(p());
  EXPECT_TRUE(verify_splitting(kQ, ap, CubeDiagram::arrow(Hom::identity(R3()))));
  auto c = CubeDiagram::arrow(q8_to_v4());
  EXPECT_TRUE(verify_splitting(kG, c, c));
  auto b = CubeDiagram::arrow(bang(R3()));
  EXPECT_FALSE(verify_splitting(kQ, b, CubeDiagram::arrow(Hom::identity(T1()))));
}

TEST(Search, Examples) {
  auto cat = enumerate_algebras(Variety::Quandle, 6);
  auto c = CubeDiagram::arrow(q8_to_v4());
  auto v = covering_by_search(kG, c, 8);
  ASSERT_TRUE(v.yes());
  EXPECT_TRUE(same_cube(*v.witness, c));
  auto w = covering_by_search(kQ, CubeDiagram::arrow(p()), 3, &cat);
  ASSERT_TRUE(w.yes());
  EXPECT_TRUE(same_hom(w.witness->edge(0, 1), Hom::identity(R3())));
  auto u = covering_by_search(kQ, CubeDiagram::arrow(bang(R3())), 6, &cat);
  EXPECT_TRUE(u.unknown());
  EXPECT_EQ(u.bound, 6u);
}

TEST(Centralisation, Examples) {
  auto f = bang(R3());
  EXPECT_EQ(centralization_congruence(kQ, f).num_classes(), 1u);
  auto r = reflect_ext(kQ, f);
  EXPECT_EQ(r.covering.dom->size(), 1u);
  EXPECT_EQ(centralization_congruence(kQ, p()).num_classes(), 6u);
  EXPECT_TRUE(is_isomorphism(reflect_ext(kQ, p()).unit.edge(0, 1)));
  auto g = Hom::to_terminal(Q8(), trivial_group());
  auto cg = centralization_congruence(kG, g);
  EXPECT_EQ(cg.num_classes(), 4u);
  auto rg = reflect_ext(kG, g);
  EXPECT_EQ(rg.covering.dom->size(), 4u);
  // Unit square: identity on the codomain.
  EXPECT_TRUE(is_isomorphism(rg.unit.edge(2, 1)));
}

TEST(Birkhoff, QuandlesAndDegenerate) {
  auto cat = enumerate_algebras(Variety::Quandle, 3);
  std::vector<CubeDiagram> corpus;
  enumerate_extension_cubes(cat, 1, 3, [&](const CubeDiagram& c) { return corpus.push_back(c), true; });
  EXPECT_TRUE(is_strongly_birkhoff(kQ, corpus).pass());
  std::vector<CubeDiagram> isos{CubeDiagram::arrow(Hom::identity(R3()))};
  EXPECT_TRUE(is_strongly_birkhoff(kQ, isos).pass());
}

TEST(Level1, GroupDoubleExtensions) {
  // Q8 -> V4 and Q8 -> Q8/<i>: K_f = {±1}, K_g = <i>; commute and the
  // intersection {±1} is central, so this is a double covering.
  auto q8 = Q8();
  auto f = q8_to_v4();
  auto g = quotient(congruence_closure(q8, std::vector<ElemPair>{{0, 1}})).projection;
  auto pb = quotient(join(kernel_congruence(f), kernel_congruence(g)));
  auto right = factor_through(f, pb.projection);
  auto bottom = factor_through(g, pb.projection);
  auto sq = CubeDiagram::square(f, g, right, bottom);
  EXPECT_TRUE(covering_oracle(kG1, sq).yes());
  auto tr = is_trivial_covering(kG1, sq, 1);
  EXPECT_FALSE(tr.unknown());
}

}  // namespace
}  // namespace qgal
