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
#include <functional>
#include <string>
#include <vector>

#include "qgal/diagram.hpp"

namespace qgal {

struct CatalogEntry {
  std::string id;  // "<order>-<serial>", serial from 1
  AlgebraPtr algebra;
};

/// Algebras of one variety up to isomorphism, sorted by order and then by
/// canonical table. Entries are stored in canonical labelling.
struct Catalog {
  Variety variety = Variety::Quandle;
  std::size_t max_order = 0;
  std::vector<CatalogEntry> entries;

  std::vector<AlgebraPtr> of_order(std::size_t n) const;
  std::vector<AlgebraPtr> up_to(std::size_t n) const;
  // Throws InputError if absent.
  const CatalogEntry& at(const std::string& id) const;
  // Id of the entry isomorphic to a, or empty.
  std::string identify(const FiniteAlgebra& a) const;
};

struct EnumerateOptions {
  // Nonzero: visit rows, columns and candidate values in an order shuffled
  // by this seed. The resulting catalog must not change.
  std::uint64_t search_seed = 0;
};

/// Quandles and racks up to order 6 by pruned backtracking; groups up to
/// order 15 from stored constructions. Throws InputError beyond the caps.
Catalog enumerate_algebras(Variety v, std::size_t max_order, const EnumerateOptions& opt = {});

/// Independent generate-and-filter: every column a permutation (fixing the
/// diagonal for quandles), filtered by self-distributivity, deduplicated by
/// brute-force isomorphism search. Orders up to 4.
std::vector<AlgebraPtr> naive_quandles(std::size_t order, bool racks = false);

/// Every group of order at most 15 up to isomorphism, from explicit
/// constructions.
std::vector<AlgebraPtr> small_groups(std::size_t max_order);
AlgebraPtr dihedral_group(std::size_t n);   // order 2n
AlgebraPtr dicyclic_group(std::size_t n);   // order 4n
AlgebraPtr alternating_group4();

/// All homomorphisms A -> B in lexicographic order of value arrays.
std::vector<Hom> enumerate_homs(const AlgebraPtr& a, const AlgebraPtr& b);
std::vector<Hom> enumerate_surjections(const AlgebraPtr& a, const AlgebraPtr& b);

/// The congruence lattice, by closing principal congruences under joins.
/// Sorted by class vector.
std::vector<Congruence> all_congruences(const AlgebraPtr& a);

/// Congruences of one algebra with their inclusion order precomputed.
struct CongruenceLattice {
  AlgebraPtr algebra;
  std::vector<Congruence> elements;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: elements[i] ⊆ elements[j]
  std::vector<Quotient> quotients;     // shared quotient per element
  std::size_t discrete = 0;            // index of Δ
};
CongruenceLattice congruence_lattice(const AlgebraPtr& a);

/// Grid of surjections: a diagram over {0..extent_i - 1}^k in which every
/// vertex is a quotient of the corner 0. `theta` indexes the lattice.
struct Grid {
  std::vector<int> extents;
  std::vector<std::size_t> theta;  // row-major over the grid points
};

/// Every monotone assignment of congruences to grid points with Δ at the
/// corner, in deterministic order. fn returns false to stop.
void for_each_grid(const CongruenceLattice& lat, const std::vector<int>& extents,
                   const std::function<bool(const Grid&)>& fn);

/// Cube on grid points {base + ε·step}: coordinate i of point S is
/// base[i] + (S has direction i+1 ? 1 : 0) for the listed axes.
CubeDiagram grid_cube(const CongruenceLattice& lat, const Grid& g, const std::vector<int>& base,
                      const std::vector<int>& axes);

/// All n-fold extensions whose initial vertex is a catalog entry of order
/// at most `budget`, one per monotone congruence family, in catalog order.
/// fn returns false to stop.
void enumerate_extension_cubes(const Catalog& cat, int n, std::size_t budget,
                               const std::function<bool(const CubeDiagram&)>& fn);

}  // namespace qgal
