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

#include <optional>
#include <string>
#include <vector>

#include "qgal/diagram.hpp"

namespace qgal {

/// Outcome of a higher-extension test. On failure, `part` names what is not
/// surjective ("edge", "comparison"), `path` lists the (direction, side)
/// steps taken to reach the failing sub-cube, and `vertex` is the bitstring
/// of the failing component inside it.
struct ExtensionVerdict {
  bool is_extension = true;
  std::string part;
  std::vector<std::string> path;
  std::string vertex;
};

/// The square's comparison map into the pullback of its two edges into the
/// terminal vertex. The pullback's left factor is vertex({d}).
struct ComparisonMap {
  Pullback pullback;
  Hom comparison;
};
ComparisonMap comparison_hom(const CubeDiagram& square, int d = 1);

/// Component-wise pullback of two cubes f: X -> Z and g: Y -> Z seen as
/// arrows in direction d.
struct CubePullback {
  CubeDiagram apex;             // the (n-1)-cube X ×_Z Y
  std::vector<Hom> to_left;     // components apex -> X
  std::vector<Hom> to_right;    // components apex -> Y
  std::vector<Pullback> parts;  // the vertexwise fibre products
};
CubePullback pullback_faces(const ArrowView& f, const ArrowView& g);

/// Views the cube as a square in directions (d, e) of (n-2)-cubes and
/// returns the comparison (n-1)-cube from the initial corner into the
/// component-wise pullback; direction 1 of the result is the comparison.
CubeDiagram comparison_cube(const CubeDiagram& c, int d, int e);

/// Inductive test using the square in directions (d, e). n = 0 is always an
/// extension, n = 1 means surjective.
ExtensionVerdict check_extension(const CubeDiagram& c, int d = 1, int e = 2);

ExtensionVerdict is_double_extension(const CubeDiagram& square);

/// Decides with directions (1, 2), then re-decides with every other ordered
/// pair and throws PropertyViolation if any disagree.
ExtensionVerdict is_nfold_extension(const CubeDiagram& c);

/// Pullback of f along g, both n-cubes seen as arrows in direction d with
/// the same codomain face. The result is an (n+1)-cube whose direction 1 is
/// the pullback leg: its 1-domain face is g*(f) and its 1-codomain face is
/// f (old directions shift up by one). At least one of f, g must be an
/// n-fold extension; otherwise InputError.
CubeDiagram cube_pullback(const CubeDiagram& f, const CubeDiagram& g, int d);

struct KernelPairCube {
  CubeDiagram eq;      // (n-1)-cube of vertexwise kernel pairs
  CubeDiagram first;   // n-cube eq -> dom(σ) in direction d
  CubeDiagram second;  // n-cube eq -> dom(σ) in direction d
  std::optional<CubeDiagram> cube;  // cube_pullback(σ, σ, d), when σ is an extension
};
KernelPairCube kernel_pair_cube(const CubeDiagram& sigma, int d);

/// Vertexwise coequaliser of two parallel cubes (same faces, direction d).
/// `connecting` has the quotient maps as direction 1.
MappedCube pointwise_coequalizer(const CubeDiagram& first, const CubeDiagram& second,
                                 int d);

/// For a cube seen as a square (z in direction z_dir, φ in direction phi_dir)
/// whose z-leg on the φ-codomain side is the identity away from the initial
/// vertex: the pushout of the initial components and its comparison into
/// the given corner.
struct InitialPushout {
  AlgebraPtr pushout;
  Hom to_pushout;   // B∧ -> pushout
  Hom comparison;   // pushout -> B̄∧
  bool is_pushout;  // comparison is an isomorphism
};
InitialPushout initial_pushout(const CubeDiagram& c, int z_dir, int phi_dir);

}  // namespace qgal
