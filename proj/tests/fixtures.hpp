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

// Shared fixtures: R3, T1, T2, P = R3 x T2 and the projections out of P.
#pragma once

#include "qgal/algebra.hpp"
#include "qgal/diagram.hpp"

namespace qgal::fixtures {

inline AlgebraPtr R3() { return dihedral_quandle(3); }
inline AlgebraPtr T1() { return trivial_quandle(1); }
inline AlgebraPtr T2() { return trivial_quandle(2); }
inline AlgebraPtr P() { return product(R3(), T2()); }

// p: P -> R3 and q: P -> T2 (P encodes (a, b) as 2a + b).
inline Hom p() {
  auto a = P();
  std::vector<Elem> v(6);
  for (Elem x = 0; x < 6; ++x) v[x] = x / 2;
  return Hom::make(a, R3(), v);
}
inline Hom q() {
  std::vector<Elem> v(6);
  for (Elem x = 0; x < 6; ++x) v[x] = x % 2;
  return Hom::make(P(), T2(), v);
}
inline Hom bang(const AlgebraPtr& a) { return Hom::to_terminal(a, terminal_algebra(a->variety())); }

// Reflection square of p under π₀: direction 1 carries the units, direction
// 2 carries p.
inline CubeDiagram reflection_square_p() {
  auto hp = p();
  return map_vertices(CubeDiagram::arrow(hp), {q(), bang(hp.cod)}).connecting;
}

// Square built by hand: vertex ∅ = a, top f, left g, right h, bottom k.
inline CubeDiagram sq(const Hom& top, const Hom& left, const Hom& right, const Hom& bottom) {
  return CubeDiagram::square(top, left, right, bottom);
}

inline AlgebraPtr Q8() {
  // Elements ±1, ±i, ±j, ±k encoded as sign*4 + unit with unit 1,i,j,k = 0..3.
  static const int mul[4][4][2] = {{{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                                   {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
                                   {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
                                   {{3, 0}, {2, 0}, {1, 1}, {0, 1}}};
  std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int u = x % 4, v = y % 4, s = (x / 4) ^ (y / 4);
      auto r = mul[u][v];
      t[x][y] = static_cast<Elem>(((s ^ r[1]) * 4) + r[0]);
    }
  return make_algebra(Variety::Group, t);
}

}  // namespace qgal::fixtures
