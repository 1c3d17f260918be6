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

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "qgal/errors.hpp"

namespace qgal {
namespace {

using namespace fixtures;

TEST(Validate, DihedralIsQuandle) {
  auto r = validate_algebra({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}, Variety::Quandle);
  EXPECT_TRUE(r.ok);
}

TEST(Validate, ProjectionQuandle) {
  EXPECT_TRUE(validate_algebra({{0, 0}, {1, 1}}, Variety::Quandle).ok);
}

TEST(Validate, NonBijectiveColumn) {
  auto r = validate_algebra({{0, 0}, {0, 1}}, Variety::Quandle);
  ASSERT_FALSE(r.ok);
  EXPECT_NE(r.failures.front().axiom.find("right translation by 0 not bijective"), std::string::npos);
}

TEST(Validate, ShapeErrors) {
  EXPECT_THROW(validate_algebra({{0, 1}, {1}}, Variety::Quandle), InputError);
  EXPECT_THROW(validate_algebra({{0, 5}, {1, 1}}, Variety::Quandle), InputError);
}

TEST(Validate, GroupAxioms) {
  EXPECT_TRUE(validate_algebra(Q8()->rows(), Variety::Group).ok);
  EXPECT_FALSE(validate_algebra({{0, 1}, {1, 1}}, Variety::Group).ok);
}

TEST(Hom, ProjectionAndIdentity) {
  EXPECT_TRUE(is_homomorphism(p()));
  EXPECT_TRUE(is_homomorphism(Hom::identity(R3())));
  std::vector<Elem> v{0, 1};
  EXPECT_FALSE(is_homomorphism(T2(), R3(), v));
  std::vector<Elem> bad{0, 7};
  EXPECT_THROW(is_homomorphism(T2(), R3(), bad), InputError);
}

TEST(Hom, Surjections) {
  EXPECT_TRUE(is_surjection(p()));
  EXPECT_TRUE(is_surjection(bang(R3())));
  EXPECT_FALSE(is_surjection(Hom::unchecked(R3(), T2(), {0, 0, 0})));
}

TEST(Congruence, Closure) {
  EXPECT_EQ(congruence_closure(R3(), std::vector<ElemPair>{{0, 1}}).num_classes(), 1u);
  EXPECT_EQ(congruence_closure(R3(), {}).num_classes(), 3u);
  auto a = P();
  std::vector<ElemPair> seed;
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) seed.emplace_back(x, a->op(x, y));
  auto c = congruence_closure(a, seed);
  EXPECT_EQ(c.num_classes(), 2u);
  for (Elem x = 0; x < 6; ++x) EXPECT_EQ(c.related(x, 0), x % 2 == 0);
}

// Brute force: every partition of the carrier, filtered by is_congruence.
std::vector<std::vector<Elem>> all_partitions(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur(n);
  auto rec = [&](auto&& self, std::size_t i, Elem used) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (Elem c = 0; c <= used && c < n; ++c) {
      cur[i] = c;
      self(self, i + 1, std::max<Elem>(used, c + 1));
    }
  };
  if (n) rec(rec, 0, 0);
  return out;
}

TEST(Congruence, ClosureIsMinimal) {
  for (const auto& a : {P(), dihedral_quandle(4), dihedral_quandle(5)}) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<ElemPair> seed{{static_cast<Elem>(rng() % a->size()), static_cast<Elem>(rng() % a->size())}};
      auto c = congruence_closure(a, seed);
      EXPECT_TRUE(is_congruence(*a, c.classes()));
      for (const auto& part : all_partitions(a->size())) {
        if (!is_congruence(*a, part)) continue;
        if (part[seed[0].first] != part[seed[0].second]) continue;
        auto d = Congruence::make(a, part);
        EXPECT_TRUE(c.refines(d));
      }
    }
  }
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient(Congruence::full(R3())).algebra->size(), 1u);
  auto qq = quotient(kernel_congruence(q()));
  EXPECT_TRUE(find_isomorphism(qq.algebra, T2()).has_value());
  EXPECT_TRUE(find_isomorphism(quotient(Congruence::discrete(R3())).algebra, R3()).has_value());
  EXPECT_TRUE(is_surjection(qq.projection));
}

TEST(Pullback, Examples) {
  auto hp = p();
  EXPECT_EQ(pullback(hp, Hom::identity(R3())).algebra->size(), 6u);
  EXPECT_EQ(pullback(hp, hp).algebra->size(), 12u);
  auto pb = pullback(bang(R3()), bang(T2()));
  EXPECT_EQ(pb.algebra->size(), 6u);
  EXPECT_TRUE(find_isomorphism(pb.algebra, P()).has_value());
  EXPECT_TRUE(is_surjection(pb.to_left));
}

TEST(Coequalizer, Examples) {
  auto kp = kernel_pair(p());
  auto co = coequalizer(kp.to_left, kp.to_right);
  EXPECT_TRUE(find_isomorphism(co.algebra, R3()).has_value());
  EXPECT_EQ(coequalizer(Hom::identity(R3()), Hom::identity(R3())).algebra->size(), 3u);
  auto a = Hom::make(T1(), R3(), {0}), b = Hom::make(T1(), R3(), {1});
  EXPECT_EQ(coequalizer(a, b).algebra->size(), 1u);
}

TEST(KernelCongruence, Examples) {
  auto k = kernel_congruence(p());
  EXPECT_EQ(k.num_classes(), 3u);
  EXPECT_EQ(kernel_congruence(Hom::identity(R3())).num_classes(), 3u);
  EXPECT_EQ(kernel_congruence(bang(R3())).num_classes(), 1u);
}

TEST(Image, MatchesKernelQuotient) {
  auto f = Hom::make(P(), P(), {0, 0, 2, 2, 4, 4});
  auto im = image(f);
  auto qk = quotient(kernel_congruence(f));
  EXPECT_TRUE(find_isomorphism(im.algebra, qk.algebra).has_value());
}

// Brute force over all permutations.
bool brute_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size() || a.variety() != b.variety()) return false;
  std::vector<Elem> perm(a.size());
  std::iota(perm.begin(), perm.end(), Elem{0});
  do {
    bool ok = true;
    for (Elem x = 0; x < a.size() && ok; ++x)
      for (Elem y = 0; y < a.size() && ok; ++y) ok = perm[a.op(x, y)] == b.op(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST(Canonical, RelabelledDihedral) {
  auto r = R3();
  std::vector<Elem> cyc{1, 2, 0};
  auto s = relabel(*r, cyc);
  EXPECT_EQ(canonical_form(*r), canonical_form(*s));
  EXPECT_EQ(canonical_form(*T1()).size, 1u);
}

TEST(Canonical, AgreesWithBruteForce) {
  std::vector<AlgebraPtr> pool{R3(), T2(), trivial_quandle(3), dihedral_quandle(4), dihedral_quandle(5),
                               trivial_rack(3), cyclic_group(4), product(cyclic_group(2), cyclic_group(2)),
                               product(T2(), T2()), cyclic_group(5)};
  std::mt19937 rng(11);
  std::vector<AlgebraPtr> all;
  for (const auto& a : pool) {
    all.push_back(a);
    std::vector<Elem> perm(a->size());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    all.push_back(relabel(*a, perm));
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      const bool brute = brute_isomorphic(*a, *b);
      EXPECT_EQ(canonical_form(*a) == canonical_form(*b), brute);
      EXPECT_EQ(find_isomorphism(a, b).has_value(), brute);
    }
}

}  // namespace
}  // namespace qgal
