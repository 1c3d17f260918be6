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
#include "qgal/errors.hpp"
#include "qgal/extension.hpp"

namespace qgal {
namespace {

using namespace fixtures;

CubeDiagram diagonal_square() {
  // R3 -> R3 x_{T1} R3, the diagonal.
  auto id = Hom::identity(R3());
  return sq(id, id, bang(R3()), bang(R3()));
}

TEST(ComparisonHom, ReflectionSquareIsIso) {
  auto c = comparison_hom(reflection_square_p());
  EXPECT_EQ(c.pullback.algebra->size(), 6u);
  EXPECT_TRUE(is_isomorphism(c.comparison));
}

TEST(ComparisonHom, IdentityVerticals) {
  auto f = p();
  auto s = sq(f, Hom::identity(P()), Hom::identity(R3()), f);
  auto c = comparison_hom(s);
  EXPECT_TRUE(is_isomorphism(c.comparison));
  EXPECT_EQ(c.pullback.algebra->size(), 6u);
}

TEST(ComparisonHom, Diagonal) {
  auto c = comparison_hom(diagonal_square());
  EXPECT_EQ(c.pullback.algebra->size(), 9u);
  EXPECT_FALSE(is_surjection(c.comparison));
}

TEST(DoubleExtension, Examples) {
  EXPECT_TRUE(is_double_extension(reflection_square_p()).is_extension);
  auto v = is_double_extension(diagonal_square());
  EXPECT_FALSE(v.is_extension);
  EXPECT_EQ(v.part, "comparison");
  auto id = Hom::identity(R3());
  EXPECT_TRUE(is_double_extension(sq(id, id, id, id)).is_extension);
}

TEST(NFold, OneCubes) {
  EXPECT_TRUE(is_nfold_extension(CubeDiagram::arrow(p())).is_extension);
  EXPECT_FALSE(is_nfold_extension(CubeDiagram::arrow(Hom::make(T1(), R3(), {0}))).is_extension);
  EXPECT_TRUE(is_nfold_extension(CubeDiagram::object(R3())).is_extension);
}

TEST(CubePullback, AlongIdentity) {
  auto f = CubeDiagram::arrow(p());
  auto id = CubeDiagram::arrow(Hom::identity(R3()));
  auto c = cube_pullback(f, id, 1);
  ASSERT_EQ(c.dim(), 2);
  EXPECT_EQ(c.initial()->size(), 6u);
  EXPECT_TRUE(same_cube(face(c, 1, Side::Codomain), f));
}

TEST(CubePullback, KernelPairOfP) {
  auto f = CubeDiagram::arrow(p());
  auto c = cube_pullback(f, f, 1);
  EXPECT_EQ(c.initial()->size(), 12u);
  EXPECT_TRUE(is_nfold_extension(c).is_extension);
}

TEST(CubePullback, ReflectionSquareAlongItself) {
  auto r = reflection_square_p();
  for (int d = 1; d <= 2; ++d) {
    auto c = cube_pullback(r, r, d);
    ASSERT_EQ(c.dim(), 3);
    EXPECT_TRUE(is_nfold_extension(c).is_extension);
    // The codomain face in direction 1 is the original square.
    EXPECT_TRUE(same_cube(face(c, 1, Side::Codomain), r));
  }
}

TEST(CubePullback, NeedsAnExtension) {
  auto inc = CubeDiagram::arrow(Hom::make(T1(), R3(), {0}));
  EXPECT_THROW(cube_pullback(inc, inc, 1), InputError);
  EXPECT_THROW(cube_pullback(CubeDiagram::arrow(p()), CubeDiagram::arrow(q()), 1), InputError);
}

TEST(KernelPair, OfP) {
  auto k = kernel_pair_cube(CubeDiagram::arrow(p()), 1);
  EXPECT_EQ(k.eq.initial()->size(), 12u);
  EXPECT_TRUE(is_surjection(k.first.edge(0, 1)));
  EXPECT_TRUE(is_surjection(k.second.edge(0, 1)));
  ASSERT_TRUE(k.cube.has_value());
  EXPECT_EQ(k.cube->dim(), 2);
}

TEST(KernelPair, NonExtensionHasNoCube) {
  auto id = Hom::identity(R3());
  auto k = kernel_pair_cube(sq(id, id, bang(R3()), bang(R3())), 1);
  EXPECT_FALSE(k.cube.has_value());
  EXPECT_FALSE(is_double_extension(k.first).is_extension);
}

TEST(KernelPair, OfIso) {
  auto sw = Hom::make(T2(), T2(), {1, 0});
  auto k = kernel_pair_cube(CubeDiagram::arrow(sw), 1);
  EXPECT_TRUE(is_isomorphism(k.first.edge(0, 1)));
  EXPECT_TRUE(is_isomorphism(k.second.edge(0, 1)));
}

TEST(KernelPair, OfReflectionSquare) {
  auto r = reflection_square_p();
  auto k = kernel_pair_cube(r, 1);
  EXPECT_TRUE(is_double_extension(k.first).is_extension);
  EXPECT_TRUE(is_double_extension(k.second).is_extension);
  auto co = pointwise_coequalizer(k.first, k.second, 1);
  for (Subset s = 0; s < 2; ++s)
    EXPECT_TRUE(find_isomorphism(co.image.vertex(s), face(r, 1, Side::Codomain).vertex(s)).has_value());
}

TEST(InitialPushout, Identities) {
  auto id = Hom::identity(R3());
  auto ip = initial_pushout(sq(id, id, id, id), 2, 1);
  EXPECT_TRUE(ip.is_pushout);
  EXPECT_EQ(ip.pushout->size(), 3u);
}

TEST(InitialPushout, AlongBang) {
  // z: R3 -> R3 (identity) in direction 2, φ: R3 -> T1 in direction 1.
  auto s = sq(bang(R3()), Hom::identity(R3()), Hom::identity(T1()), bang(R3()));
  auto ip = initial_pushout(s, 2, 1);
  EXPECT_EQ(ip.pushout->size(), 1u);
  EXPECT_TRUE(ip.is_pushout);
}

TEST(InitialPushout, ShapeViolation) {
  // A 3-cube whose unit leg collapses R3 at the terminal vertex.
  auto id = Hom::identity(R3());
  auto base = sq(id, id, id, id);
  auto c = map_vertices(base, {id, id, id, bang(R3())}).connecting;
  EXPECT_THROW(initial_pushout(c, 1, 2), InputError);
}

TEST(InitialPushout, ReflectionSquare) {
  auto s = sq(q(), p(), bang(T2()), bang(R3()));
  auto ip = initial_pushout(s, 1, 2);
  EXPECT_EQ(ip.pushout->size(), 1u);
  EXPECT_TRUE(ip.is_pushout);
}

}  // namespace
}  // namespace qgal
