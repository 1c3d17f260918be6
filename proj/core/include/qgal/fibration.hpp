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
#include <unordered_map>
#include <vector>

#include "qgal/extension.hpp"

namespace qgal {

/// Limit of the cube with its initial vertex removed. Elements are families
/// over the depth-one vertices that agree at every depth-two vertex.
struct PuncturedLimit {
  AlgebraPtr apex;
  std::vector<Hom> cone;                     // apex -> vertex({d}), d = 1..n
  std::vector<std::vector<Elem>> families;   // element i of apex as a family

  /// Index of the family in the apex, or -1 if it is not compatible.
  std::int64_t find(const std::vector<Elem>& family) const;

  std::vector<std::uint64_t> strides;  // mixed-radix key of a family
  std::unordered_map<std::uint64_t, Elem> index;
};
PuncturedLimit punctured_limit(const CubeDiagram& c);

struct DFVerdict {
  bool is_df = false;
  bool is_extension = false;
  std::size_t limit_size = 0;
  std::optional<Hom> comparison;  // initial vertex -> limit apex
  ExtensionVerdict extension;
};

/// Limit-cone test: the cube is an extension and its initial vertex is the
/// limit of the rest.
DFVerdict is_discrete_fibration(const CubeDiagram& c);

/// Recursive test through the comparison cube in directions (d, e), without
/// cross-checking.
bool df_by_recursion(const CubeDiagram& c, int d = 1, int e = 2);

/// Recursive test, cross-checked against the limit-cone test. Throws
/// PropertyViolation if they disagree.
bool is_df_recursive(const CubeDiagram& c, int d = 1, int e = 2);

/// Pulls the discrete fibration `df` (an arrow in direction d) back along
/// `along`. Returns the (n+1)-cube from cube_pullback; its 1-domain face is
/// the pulled-back fibration, asserted to be one.
CubeDiagram df_pullback(const CubeDiagram& df, int d, const CubeDiagram& along);

}  // namespace qgal
