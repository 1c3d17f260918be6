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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qgal/errors.hpp"

namespace qgal {

using Elem = std::uint32_t;

enum class Variety { Quandle, Rack, Group };

std::string to_string(Variety v);
Variety variety_from_string(const std::string& s);

struct AxiomFailure {
  std::string axiom;
  std::vector<Elem> witness;
};

struct ValidationReport {
  bool ok = true;
  std::vector<AxiomFailure> failures;
};

/// Checks the variety axioms of a square operation table. Throws InputError
/// when the table is not square or has an out-of-range entry.
ValidationReport validate_algebra(const std::vector<std::vector<Elem>>& table,
                                  Variety variety);

/// A finite algebra on the carrier {0, ..., size-1}.
///
/// Racks and quandles store the table of x ◁ y; the inverse operation
/// x ◁⁻¹ y is derived by inverting right translations. Groups store the
/// multiplication table; identity and inverses are derived. Instances are
/// immutable once constructed.
class FiniteAlgebra {
 public:
  /// Validates and throws InputError listing the first violated axiom.
  static FiniteAlgebra make(Variety variety,
                            const std::vector<std::vector<Elem>>& table);
  /// Flat row-major table, trusted (used for quotients and fibre products
  /// whose axioms hold by construction).
  static FiniteAlgebra from_trusted(Variety variety, std::size_t size,
                                    std::vector<Elem> flat);

  Variety variety() const { return variety_; }
  std::size_t size() const { return size_; }

  // x ◁ y for racks, x · y for groups.
  Elem op(Elem x, Elem y) const { return table_[x * size_ + y]; }
  // x ◁⁻¹ y for racks, x · y⁻¹ for groups.
  Elem inv_op(Elem x, Elem y) const { return inv_table_[x * size_ + y]; }
  Elem identity() const { return identity_; }
  Elem inverse(Elem x) const { return inverse_[x]; }

  const std::vector<Elem>& table() const { return table_; }
  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.variety_ == b.variety_ && a.size_ == b.size_ &&
           a.table_ == b.table_;
  }

 private:
  FiniteAlgebra(Variety variety, std::size_t size, std::vector<Elem> flat);

  Variety variety_;
  std::size_t size_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_table_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

AlgebraPtr make_algebra(Variety variety,
                        const std::vector<std::vector<Elem>>& table);
AlgebraPtr share(FiniteAlgebra a);

// Pointer identity or equal tables.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Fixtures used throughout: trivial quandle T_n (x ◁ y = x), dihedral
// quandle R_n (x ◁ y = 2y - x mod n), cyclic group C_n.
AlgebraPtr trivial_quandle(std::size_t n);
AlgebraPtr trivial_rack(std::size_t n);
AlgebraPtr dihedral_quandle(std::size_t n);
AlgebraPtr cyclic_group(std::size_t n);
AlgebraPtr trivial_group();
// The one-element algebra of the variety.
AlgebraPtr terminal_algebra(Variety v);
AlgebraPtr product(const AlgebraPtr& a, const AlgebraPtr& b);

/// A homomorphism, stored as its value array.
struct Hom {
  AlgebraPtr dom;
  AlgebraPtr cod;
  std::vector<Elem> values;

  /// Throws InputError unless values define a homomorphism dom -> cod.
  static Hom make(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elem> values);
  static Hom unchecked(AlgebraPtr dom, AlgebraPtr cod,
                       std::vector<Elem> values);
  static Hom identity(const AlgebraPtr& a);
  static Hom to_terminal(const AlgebraPtr& a, const AlgebraPtr& terminal);

  Elem operator()(Elem x) const { return values[x]; }
};

/// Throws InputError on length or range mismatch, or variety mismatch.
bool is_homomorphism(const AlgebraPtr& dom, const AlgebraPtr& cod,
                     std::span<const Elem> values);
bool is_homomorphism(const Hom& h);
bool is_surjection(const Hom& h);
bool is_injection(const Hom& h);
bool is_isomorphism(const Hom& h);
// g ∘ f
Hom compose(const Hom& g, const Hom& f);
bool same_hom(const Hom& a, const Hom& b);

/// A partition of the carrier, stored as a class index per element.
/// Classes are numbered in order of first occurrence.
class Congruence {
 public:
  /// Throws InputError if the partition is not closed under the operations.
  static Congruence make(AlgebraPtr algebra, std::vector<Elem> classes);
  static Congruence unchecked(AlgebraPtr algebra, std::vector<Elem> classes);
  static Congruence discrete(AlgebraPtr algebra);
  static Congruence full(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t num_classes() const { return num_classes_; }
  Elem class_of(Elem x) const { return classes_[x]; }
  const std::vector<Elem>& classes() const { return classes_; }
  bool related(Elem x, Elem y) const { return classes_[x] == classes_[y]; }

  // this ⊆ other as relations.
  bool refines(const Congruence& other) const;

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.classes_ == b.classes_;
  }

 private:
  Congruence(AlgebraPtr algebra, std::vector<Elem> classes);

  AlgebraPtr algebra_;
  std::vector<Elem> classes_;
  std::size_t num_classes_ = 0;
};

bool is_congruence(const FiniteAlgebra& a, std::span<const Elem> classes);

using ElemPair = std::pair<Elem, Elem>;

/// Smallest congruence containing the seed pairs.
Congruence congruence_closure(const AlgebraPtr& a,
                              std::span<const ElemPair> seed);
Congruence join(const Congruence& a, const Congruence& b);
Congruence meet(const Congruence& a, const Congruence& b);

struct Quotient {
  AlgebraPtr algebra;
  Hom projection;
};

Quotient quotient(const Congruence& c);

/// Fibre product {(a, b) : f(a) = g(b)} with its projections. `pairs`
/// decodes element i of the apex.
struct Pullback {
  AlgebraPtr algebra;
  Hom to_left;   // onto dom(f)
  Hom to_right;  // onto dom(g)
  std::vector<ElemPair> pairs;
};

Pullback pullback(const Hom& f, const Hom& g);

/// The unique hom from the pullback of (f, g) induced by a cone (l, r).
Hom pullback_comparison(const Pullback& p, const Hom& l, const Hom& r);

Quotient coequalizer(const Hom& f, const Hom& g);
Congruence kernel_congruence(const Hom& f);
Pullback kernel_pair(const Hom& f);

/// Given a surjection q: A -> Q and h: A -> B constant on the fibres of q,
/// returns the induced Q -> B. Throws InputError if h does not factor.
Hom factor_through(const Hom& q, const Hom& h);

/// Image of f as a subalgebra of cod(f), with the inclusion.
struct Image {
  AlgebraPtr algebra;
  Hom corestriction;  // dom -> image
  Hom inclusion;      // image -> cod
};
Image image(const Hom& f);

struct CanonicalForm {
  Variety variety;
  std::size_t size;
  std::vector<Elem> table;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Lexicographically least relabelled table. Elements are first split by
/// an isomorphism invariant and only label orders consistent with that
/// split are searched.
CanonicalForm canonical_form(const FiniteAlgebra& a);
/// Relabelling `perm` (old -> new) that realises the canonical form.
std::vector<Elem> canonical_labelling(const FiniteAlgebra& a);
AlgebraPtr relabel(const FiniteAlgebra& a, std::span<const Elem> perm);

std::optional<Hom> find_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace qgal
