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

#include "qgal/extension.hpp"

namespace qgal {

struct Catalog;

enum class StructureKind { QuandlePi0, RackPi0, GroupAb };

/// One of the concrete Galois structures. Level 0 reflects algebras onto
/// trivial quandles/racks or abelian groups; level 1 reflects extensions
/// onto coverings by dividing out the centralisation congruence.
struct GaloisStructure {
  StructureKind kind = StructureKind::QuandlePi0;
  int level = 0;

  Variety variety() const;
  std::string name() const;  // "quandle-pi0" | "rack-pi0" | "group-ab"
  GaloisStructure at_level(int l) const { return {kind, l}; }
  // Throws InputError on an unknown name or a level outside 0..2.
  static GaloisStructure parse(const std::string& name, int level = 0);
};

struct Reflection {
  AlgebraPtr object;
  Hom unit;
};

/// Orbit congruence (quandles, racks) or commutator congruence (groups).
Congruence reflection_congruence(const GaloisStructure& g, const AlgebraPtr& a);
Reflection reflect0(const GaloisStructure& g, const AlgebraPtr& a);
/// Membership in the base subcategory: x ◁ y = x, or commutativity.
bool in_base(const GaloisStructure& g, const FiniteAlgebra& a);
/// Applies the level-0 reflector at every vertex; `connecting` has the
/// units as direction 1.
MappedCube reflect_cube0(const GaloisStructure& g, const CubeDiagram& c);

enum class CoveringStatus { Yes, No, Unknown };
std::string to_string(CoveringStatus s);

struct CoveringVerdict {
  CoveringStatus status = CoveringStatus::Unknown;
  std::string reason;
  std::vector<Elem> counterexample;    // oracle witnesses, e.g. (a, a', x)
  std::optional<CubeDiagram> witness;  // splitting extension or similar
  std::size_t bound = 0;               // for Unknown from bounded searches

  bool yes() const { return status == CoveringStatus::Yes; }
  bool no() const { return status == CoveringStatus::No; }
  bool unknown() const { return status == CoveringStatus::Unknown; }
};

/// Smallest congruence on the domain of f whose quotient makes the induced
/// map a covering: translation agreement for quandles and racks, [ker f, A]
/// for groups.
Congruence centralization_congruence(const GaloisStructure& g, const Hom& f);

struct ExtReflection {
  Hom covering;      // F₁(f): A/C -> B
  CubeDiagram unit;  // square, direction 1 = (A -> A/C, id_B), direction 2 = f
};
/// Asserts that F₁(f) passes the covering oracle and that C ⊆ ker f.
ExtReflection reflect_ext(const GaloisStructure& g, const Hom& f);

/// Level-1 reflection of a square seen as an arrow in direction d between
/// two extensions: every edge in the other direction is centralised.
/// `connecting` has the units as direction 1.
MappedCube reflect_square1(const GaloisStructure& g, const CubeDiagram& square, int d);

/// The reflection cube of an (level+1)-cube seen in direction d (ignored at
/// level 0).
CubeDiagram reflection_cube(const GaloisStructure& g, const CubeDiagram& c, int d = 1);

/// Trivial covering: the reflection square is a pullback (at level 1, in
/// both components). Never Unknown.
CoveringVerdict is_trivial_covering(const GaloisStructure& g, const CubeDiagram& c, int d = 1);
CoveringVerdict is_trivial_covering(const GaloisStructure& g, const Hom& f);

/// Decision procedure of record. Quandles/racks at level 0; groups at
/// levels 0 and 1. Anything else is Unknown.
CoveringVerdict covering_oracle(const GaloisStructure& g, const CubeDiagram& c);
CoveringVerdict covering_oracle(const GaloisStructure& g, const Hom& f);

/// Both kernel-pair projections (in direction d) are trivial coverings.
CoveringVerdict is_normal_covering(const GaloisStructure& g, const CubeDiagram& c, int d = 1);

/// The pullback e*(c) of c along e (both arrows in direction d).
CubeDiagram pull_back_along(const CubeDiagram& c, const CubeDiagram& e, int d = 1);
bool verify_splitting(const GaloisStructure& g, const CubeDiagram& c, const CubeDiagram& e, int d = 1);

/// Tries e = c, then (level 0) surjections E -> cod(c) over catalog
/// entries E in catalog order, values in lexicographic order. Every
/// candidate has |E| <= bound. Never returns No.
CoveringVerdict covering_by_search(const GaloisStructure& g, const CubeDiagram& c,
                                   std::size_t bound, const Catalog* catalog = nullptr);

struct BirkhoffFailure {
  std::size_t index;
  ExtensionVerdict verdict;
};
struct BirkhoffReport {
  std::size_t checked = 0;
  std::vector<BirkhoffFailure> failures;
  bool pass() const { return failures.empty(); }
};
/// Every reflection cube of the corpus is an extension of one dimension up.
BirkhoffReport is_strongly_birkhoff(const GaloisStructure& g, const std::vector<CubeDiagram>& corpus);

}  // namespace qgal
