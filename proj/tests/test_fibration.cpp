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
#include "qgal/fibration.hpp"

namespace qgal {
namespace {

using namespace fixtures;

TEST(PuncturedLimit, SquareIsPullback) {
  auto r = reflection_square_p();
  auto lim = punctured_limit(r);
  EXPECT_EQ(lim.apex->size(), 6u);
  auto pb = comparison_hom(r);
  EXPECT_TRUE(find_isomorphism(lim.apex, pb.pullback.algebra).has_value());
  ASSERT_EQ(lim.cone.size(), 2u);
  EXPECT_TRUE(is_homomorphism(lim.cone[0]));
}

TEST(PuncturedLimit, IdentitySquare) {
  auto id = Hom::identity(R3());
  auto lim = punctured_limit(sq(id, id, id, id));
  EXPECT_TRUE(find_isomorphism(lim.apex, R3()).has_value());
}

TEST(DiscreteFibration, Examples) {
  auto r = reflection_square_p();
  auto v = is_discrete_fibration(r);
  EXPECT_TRUE(v.is_df);
  EXPECT_EQ(v.limit_size, 6u);
  auto hp = p();
  EXPECT_TRUE(is_discrete_fibration(sq(Hom::identity(P()), hp, hp, Hom::identity(R3()))).is_df);
  auto bad = sq(bang(R3()), bang(R3()), Hom::identity(T1()), Hom::identity(T1()));
  auto w = is_discrete_fibration(bad);
  EXPECT_TRUE(w.is_extension);
  EXPECT_FALSE(w.is_df);
  EXPECT_EQ(w.limit_size, 1u);
}

TEST(DiscreteFibration, NonExtensionFlagged) {
  auto inc = CubeDiagram::arrow(Hom::make(T1(), R3(), {0}));
  auto v = is_discrete_fibration(inc);
  EXPECT_FALSE(v.is_extension);
  EXPECT_FALSE(v.is_df);
}

TEST(Recursive, AgreesOnSquares) {
  auto r = reflection_square_p();
  EXPECT_TRUE(is_df_recursive(r, 1, 2));
  EXPECT_TRUE(is_df_recursive(r, 2, 1));
  auto bad = sq(bang(R3()), bang(R3()), Hom::identity(T1()), Hom::identity(T1()));
  EXPECT_FALSE(is_df_recursive(bad, 1, 2));
}

TEST(Recursive, PullbackOfDoubleExtensions) {
  auto r = reflection_square_p();
  auto c = cube_pullback(r, r, 1);
  for (int d = 1; d <= 3; ++d)
    for (int e = 1; e <= 3; ++e)
      if (d != e) EXPECT_TRUE(is_df_recursive(c, d, e));
}

TEST(DfPullback, AlongIdentity) {
  auto r = reflection_square_p();
  auto id = identity_arrow(face(r, 1, Side::Codomain), 1);
  auto c = df_pullback(r, 1, id);
  auto pulled = face(c, 1, Side::Domain);
  EXPECT_TRUE(is_discrete_fibration(pulled).is_df);
  EXPECT_EQ(pulled.initial()->size(), 6u);
}

TEST(DfPullback, AlongExtension) {
  // Pull the reflection square back along (p over id) in direction 2.
  auto r = reflection_square_p();
  auto hp = p();
  auto along = from_arrow(CubeDiagram::arrow(bang(P())), face(r, 2, Side::Codomain),
                          {hp, Hom::identity(T1())}, 2);
  auto c = df_pullback(r, 2, along);
  EXPECT_TRUE(is_discrete_fibration(face(c, 1, Side::Domain)).is_df);
}

}  // namespace
}  // namespace qgal
