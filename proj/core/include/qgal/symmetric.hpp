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

#include "qgal/fibration.hpp"
#include "qgal/galois.hpp"

namespace qgal {

/// A span of discrete fibrations β ← τ → α. Both legs are (n+1)-cubes whose
/// direction 1 is the fibration: left goes τ → β, right goes τ → α.
struct SymmetricWitness {
  CubeDiagram alpha;
  CubeDiagram tau;
  CubeDiagram beta;
  CubeDiagram left;
  CubeDiagram right;
};

/// Base: every vertex of β lies in the base subcategory. Level: β is a
/// primitive covering one level down (for n = 1 the same as Base; for n = 2
/// the two 1-faces of β are coverings).
enum class WitnessForm { Base, Level };

struct WitnessCheck {
  bool ok = false;
  std::string failure;  // names the failing leg or condition
};

/// Checks shapes, both fibrations and the form condition on β. When the
/// span is accepted, re-derives that τ is a trivial covering in each arrow
/// view and that α passes the covering oracle (if one exists); either
/// failing throws PropertyViolation. `g` fixes the structure; its level is
/// taken from the cube dimension.
WitnessCheck verify_symmetric_witness(const GaloisStructure& g, const SymmetricWitness& w,
                                      WitnessForm form = WitnessForm::Base);

/// τ = e*(c) in direction d; right leg = the pullback cube; left leg = the
/// pointwise reflection of τ. If that reflection is not a fibration, τ is
/// replaced by the kernel pair of τ in each other direction in turn and the
/// right legs are composed. Throws InputError unless e splits c.
SymmetricWitness construct_witness_from_splitting(const GaloisStructure& g, const CubeDiagram& c,
                                                  const CubeDiagram& e, int d = 1);

struct WitnessBounds {
  std::size_t split_bound = 12;
  const Catalog* catalog = nullptr;
};

struct WitnessResult {
  CoveringVerdict verdict;  // Yes or Unknown, never No
  std::optional<SymmetricWitness> witness;
};

/// n = 1: search for a splitting and build the span from it. n = 2: split
/// by itself in each direction. Every returned witness has been verified.
WitnessResult find_symmetric_witness(const GaloisStructure& g, const CubeDiagram& alpha,
                                     const WitnessBounds& bounds = {});

enum class TrivialityStrategy { Canonical, Search };

struct TrivialityResult {
  CoveringVerdict verdict;
  std::optional<CubeDiagram> fibration;  // τ → β on success
};

/// Canonical: is the pointwise reflection cube a fibration. Search: every
/// fibration τ → β with β in the base is a vertexwise quotient of the
/// reflection, so all compatible families of congruences above the units
/// are tried; exhaustion is a certified No. More than `max_candidates`
/// families gives Unknown.
TrivialityResult is_symmetrically_trivial(const GaloisStructure& g, const CubeDiagram& tau,
                                          TrivialityStrategy strategy = TrivialityStrategy::Search,
                                          std::size_t max_candidates = 100000);

enum class SweepClass { AgreeYes, AgreeNo, OracleYesBoundExhausted, WitnessYesOracleNo, OracleUnknown };
std::string to_string(SweepClass c);

struct SweepInstance {
  std::size_t index = 0;
  CoveringStatus oracle = CoveringStatus::Unknown;
  CoveringStatus witness = CoveringStatus::Unknown;
  SweepClass cls = SweepClass::OracleUnknown;
  std::string note;
  std::optional<SymmetricWitness> span;
};

struct SweepReport {
  std::vector<SweepInstance> instances;
  std::size_t count(SweepClass c) const;
  std::size_t hard_failures() const { return count(SweepClass::WitnessYesOracleNo); }
  std::size_t exhaustions() const { return count(SweepClass::OracleYesBoundExhausted); }
};

/// Oracle verdict against witness search for every cube of the corpus.
/// `threads` = 0 uses the default parallelism.
SweepReport main_theorem_sweep(const GaloisStructure& g, const std::vector<CubeDiagram>& corpus,
                               const WitnessBounds& bounds, unsigned threads = 0);

}  // namespace qgal
