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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgal/algebra.hpp"

namespace qgal {

// A subset of the directions {1..n}; direction d is bit d-1.
using Subset = std::uint32_t;

constexpr bool has_direction(Subset s, int d) { return (s >> (d - 1)) & 1u; }
constexpr Subset with_direction(Subset s, int d) { return s | (1u << (d - 1)); }
// Removes direction d and shifts the higher directions down by one.
Subset drop_direction(Subset s, int d);
// Inverse of drop_direction: opens a slot at d with the given membership.
Subset insert_direction(Subset s, int d, bool member);
// Little-endian over directions 1..n.
std::string bitstring(Subset s, int n);
Subset parse_bitstring(const std::string& bits);

/// An n-cubical diagram: an algebra at every subset of {1..n} and a
/// homomorphism vertex(S) -> vertex(S ∪ {d}) for every d ∉ S. Every 2-face
/// commutes; build() checks this.
/// Trusted skips the homomorphism and commutativity checks; only for data
/// that is valid by construction.
enum class Validation { Full, Trusted };

class CubeDiagram {
 public:
  /// `edges` is indexed by S * n + (d - 1); entries with d ∈ S are ignored.
  /// Throws InputError on missing data, non-homomorphic edges, or a
  /// non-commuting face (the message names the face).
  static CubeDiagram build(int n, std::vector<AlgebraPtr> vertices,
                           std::vector<std::optional<Hom>> edges,
                           Validation check = Validation::Full);
  static CubeDiagram object(AlgebraPtr a);
  static CubeDiagram arrow(const Hom& f);
  // Square with top f: (∅ -> {1}), left g: (∅ -> {2}), right h, bottom k.
  static CubeDiagram square(const Hom& top, const Hom& left, const Hom& right,
                            const Hom& bottom);

  int dim() const { return dim_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const AlgebraPtr& vertex(Subset s) const { return vertices_[s]; }
  const Hom& edge(Subset s, int d) const;
  const AlgebraPtr& initial() const { return vertices_.front(); }
  const AlgebraPtr& terminal() const { return vertices_.back(); }
  Subset full_subset() const { return static_cast<Subset>(vertices_.size() - 1); }
  Variety variety() const { return initial()->variety(); }
  // Composite along the edges from `from` up to `to` (from ⊆ to).
  Hom path(Subset from, Subset to) const;

 private:
  CubeDiagram() = default;
  int dim_ = 0;
  std::vector<AlgebraPtr> vertices_;
  std::vector<Hom> edges_;  // S * n + d - 1; entries with d ∈ S are empty
};

// Same algebras (by table) and same edge values.
bool same_cube(const CubeDiagram& a, const CubeDiagram& b);

enum class Side { Domain, Codomain };

/// The (n-1)-cube with direction d absent (Domain) or present (Codomain).
CubeDiagram face(const CubeDiagram& c, int d, Side side);

/// A cube seen as a morphism, in direction d, between its two d-faces.
struct ArrowView {
  CubeDiagram domain;
  CubeDiagram codomain;
  std::vector<Hom> components;  // indexed by subsets of the face
};

ArrowView as_arrow(const CubeDiagram& c, int d);
/// Inverse of as_arrow: inserts direction d between the two faces.
CubeDiagram from_arrow(const CubeDiagram& domain, const CubeDiagram& codomain,
                       const std::vector<Hom>& components, int d,
                       Validation check = Validation::Full);
/// The cube whose components in direction d are identities on `face`.
CubeDiagram identity_arrow(const CubeDiagram& face, int d);

/// Pastes c1 and c2 along direction d. Throws InputError unless the
/// codomain d-face of c1 equals the domain d-face of c2.
CubeDiagram compose_cubes(const CubeDiagram& c1, const CubeDiagram& c2, int d);

/// Result of pushing a cube forward along per-vertex units.
struct MappedCube {
  CubeDiagram image;       // the induced n-cube
  CubeDiagram connecting;  // (n+1)-cube, direction 1 = the units
};

/// Each unit must be a surjection out of the corresponding vertex; the
/// image edges are the induced maps. Throws InputError when an edge does not
/// descend along the units.
MappedCube map_vertices(const CubeDiagram& c, const std::vector<Hom>& units);

/// Moves direction `from` to position `to`, shifting the others.
CubeDiagram move_direction(const CubeDiagram& c, int from, int to);

}  // namespace qgal
