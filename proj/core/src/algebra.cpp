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

#include "qgal/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <functional>
#include <sstream>

namespace qgal {

std::string to_string(Variety v) {
  switch (v) {
    case Variety::Quandle:
      return "quandle";
    case Variety::Rack:
      return "rack";
    case Variety::Group:
      return "group";
  }
  return "?";
}

Variety variety_from_string(const std::string& s) {
  if (s == "quandle") return Variety::Quandle;
  if (s == "rack") return Variety::Rack;
  if (s == "group") return Variety::Group;
  throw InputError("unknown variety '" + s + "'");
}

namespace {

std::string describe(const AxiomFailure& f) {
  std::ostringstream os;
  os << f.axiom << " (witness";
  for (auto w : f.witness) os << ' ' << w;
  os << ')';
  return os.str();
}

void check_shape(const std::vector<std::vector<Elem>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("empty operation table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw InputError("row " + std::to_string(i) + " has " +
                       std::to_string(table[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (auto v : table[i]) {
      if (v >= n) {
        throw InputError("entry " + std::to_string(v) + " in row " +
                         std::to_string(i) + " out of range");
      }
    }
  }
}

}  // namespace

ValidationReport validate_algebra(const std::vector<std::vector<Elem>>& t,
                                  Variety variety) {
  check_shape(t);
  const Elem n = static_cast<Elem>(t.size());
  ValidationReport report;
  auto fail = [&](std::string axiom, std::vector<Elem> w) {
    report.ok = false;
    report.failures.push_back({std::move(axiom), std::move(w)});
  };

  if (variety == Variety::Group) {
    std::optional<Elem> e;
    for (Elem c = 0; c < n && !e; ++c) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) ok = t[c][x] == x && t[x][c] == x;
      if (ok) e = c;
    }
    if (!e) {
      fail("identity", {});
    } else {
      for (Elem x = 0; x < n; ++x) {
        bool has = false;
        for (Elem y = 0; y < n && !has; ++y) has = t[x][y] == *e && t[y][x] == *e;
        if (!has) {
          fail("inverse", {x});
          break;
        }
      }
    }
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (t[t[x][y]][z] != t[x][t[y][z]]) {
            fail("associativity", {x, y, z});
            return report;
          }
    return report;
  }

  for (Elem y = 0; y < n; ++y) {
    std::vector<Elem> seen(n, n);
    for (Elem x = 0; x < n; ++x) {
      Elem v = t[x][y];
      if (seen[v] != n) {
        fail("right translation by " + std::to_string(y) + " not bijective",
             {y, seen[v], x});
        break;
      }
      seen[v] = x;
    }
  }
  if (variety == Variety::Quandle) {
    for (Elem x = 0; x < n; ++x)
      if (t[x][x] != x) {
        fail("idempotency", {x});
        break;
      }
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) {
          fail("self-distributivity", {x, y, z});
          return report;
        }
  return report;
}

FiniteAlgebra::FiniteAlgebra(Variety variety, std::size_t size,
                             std::vector<Elem> flat)
    : variety_(variety), size_(size), table_(std::move(flat)) {
  const std::size_t n = size_;
  inv_table_.assign(n * n, 0);
  inverse_.assign(n, 0);
  if (variety_ == Variety::Group) {
    for (Elem c = 0; c < n; ++c) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) ok = op(c, x) == x && op(x, c) == x;
      if (ok) {
        identity_ = c;
        break;
      }
    }
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (op(x, y) == identity_) inverse_[x] = y;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) inv_table_[x * n + y] = op(x, inverse_[y]);
  } else {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) inv_table_[op(x, y) * n + y] = x;
    for (Elem x = 0; x < n; ++x) inverse_[x] = x;
  }
}

FiniteAlgebra FiniteAlgebra::make(Variety variety,
                                  const std::vector<std::vector<Elem>>& table) {
  auto report = validate_algebra(table, variety);
  if (!report.ok) {
    throw InputError("not a " + to_string(variety) + ": " +
                     describe(report.failures.front()));
  }
  std::vector<Elem> flat;
  flat.reserve(table.size() * table.size());
  for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
  return FiniteAlgebra(variety, table.size(), std::move(flat));
}

FiniteAlgebra FiniteAlgebra::from_trusted(Variety variety, std::size_t size,
                                          std::vector<Elem> flat) {
  return FiniteAlgebra(variety, size, std::move(flat));
}

std::vector<std::vector<Elem>> FiniteAlgebra::rows() const {
  std::vector<std::vector<Elem>> out(size_);
  for (std::size_t i = 0; i < size_; ++i)
    out[i].assign(table_.begin() + i * size_, table_.begin() + (i + 1) * size_);
  return out;
}

AlgebraPtr make_algebra(Variety variety,
                        const std::vector<std::vector<Elem>>& table) {
  return std::make_shared<const FiniteAlgebra>(FiniteAlgebra::make(variety, table));
}

AlgebraPtr share(FiniteAlgebra a) {
  return std::make_shared<const FiniteAlgebra>(std::move(a));
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

AlgebraPtr from_rule(Variety v, std::size_t n, auto rule) {
  std::vector<Elem> flat(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) flat[x * n + y] = static_cast<Elem>(rule(x, y));
  return share(FiniteAlgebra::from_trusted(v, n, std::move(flat)));
}

}  // namespace

AlgebraPtr trivial_quandle(std::size_t n) {
  return from_rule(Variety::Quandle, n, [](Elem x, Elem) { return x; });
}

AlgebraPtr trivial_rack(std::size_t n) {
  return from_rule(Variety::Rack, n, [](Elem x, Elem) { return x; });
}

AlgebraPtr dihedral_quandle(std::size_t n) {
  return from_rule(Variety::Quandle, n,
                   [n](Elem x, Elem y) { return (2 * y + n - x) % n; });
}

AlgebraPtr cyclic_group(std::size_t n) {
  return from_rule(Variety::Group, n, [n](Elem x, Elem y) { return (x + y) % n; });
}

AlgebraPtr trivial_group() { return cyclic_group(1); }

AlgebraPtr terminal_algebra(Variety v) {
  return from_rule(v, 1, [](Elem, Elem) { return 0; });
}

AlgebraPtr product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->variety() != b->variety()) throw InputError("product of mixed varieties");
  const std::size_t m = b->size();
  return from_rule(a->variety(), a->size() * m, [&](Elem x, Elem y) {
    return a->op(x / m, y / m) * m + b->op(x % m, y % m);
  });
}

// Homomorphisms

bool is_homomorphism(const AlgebraPtr& dom, const AlgebraPtr& cod,
                     std::span<const Elem> values) {
  if (dom->variety() != cod->variety())
    throw InputError("homomorphism between different varieties");
  if (values.size() != dom->size())
    throw InputError("value array has length " + std::to_string(values.size()) +
                     ", expected " + std::to_string(dom->size()));
  for (auto v : values)
    if (v >= cod->size())
      throw InputError("value " + std::to_string(v) + " out of codomain range");
  const Elem n = static_cast<Elem>(dom->size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (values[dom->op(x, y)] != cod->op(values[x], values[y])) return false;
  return true;
}

bool is_homomorphism(const Hom& h) { return is_homomorphism(h.dom, h.cod, h.values); }

Hom Hom::make(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elem> values) {
  if (!is_homomorphism(dom, cod, values)) throw InputError("not a homomorphism");
  return Hom{std::move(dom), std::move(cod), std::move(values)};
}

Hom Hom::unchecked(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elem> values) {
  return Hom{std::move(dom), std::move(cod), std::move(values)};
}

Hom Hom::identity(const AlgebraPtr& a) {
  std::vector<Elem> v(a->size());
  std::iota(v.begin(), v.end(), Elem{0});
  return Hom{a, a, std::move(v)};
}

Hom Hom::to_terminal(const AlgebraPtr& a, const AlgebraPtr& terminal) {
  return Hom{a, terminal, std::vector<Elem>(a->size(), 0)};
}

bool is_surjection(const Hom& h) {
  std::vector<bool> hit(h.cod->size(), false);
  for (auto v : h.values) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_injection(const Hom& h) {
  std::vector<bool> hit(h.cod->size(), false);
  for (auto v : h.values) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_isomorphism(const Hom& h) {
  return h.dom->size() == h.cod->size() && is_injection(h);
}

Hom compose(const Hom& g, const Hom& f) {
  if (!same_algebra(f.cod, g.dom)) throw InputError("compose: codomain/domain mismatch");
  std::vector<Elem> v(f.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.values[f.values[i]];
  return Hom{f.dom, g.cod, std::move(v)};
}

bool same_hom(const Hom& a, const Hom& b) {
  return a.values == b.values && same_algebra(a.dom, b.dom) &&
         same_algebra(a.cod, b.cod);
}

// Congruences

namespace {

std::vector<Elem> normalise(std::span<const Elem> classes) {
  std::vector<Elem> out(classes.size());
  std::vector<Elem> remap;
  std::vector<std::pair<Elem, Elem>> seen;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == classes[i]; });
    if (it == seen.end()) {
      seen.emplace_back(classes[i], static_cast<Elem>(seen.size()));
      out[i] = seen.back().second;
    } else {
      out[i] = it->second;
    }
  }
  return out;
}

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Elem{0});
  }
  Elem find(Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

}  // namespace

Congruence::Congruence(AlgebraPtr algebra, std::vector<Elem> classes)
    : algebra_(std::move(algebra)), classes_(normalise(classes)) {
  num_classes_ = classes_.empty()
                     ? 0
                     : *std::max_element(classes_.begin(), classes_.end()) + 1;
}

bool is_congruence(const FiniteAlgebra& a, std::span<const Elem> cls) {
  if (cls.size() != a.size()) return false;
  const Elem n = static_cast<Elem>(a.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      if (cls[x] != cls[y]) continue;
      for (Elem c = 0; c < n; ++c) {
        if (cls[a.op(x, c)] != cls[a.op(y, c)]) return false;
        if (cls[a.op(c, x)] != cls[a.op(c, y)]) return false;
        if (cls[a.inv_op(x, c)] != cls[a.inv_op(y, c)]) return false;
        if (cls[a.inv_op(c, x)] != cls[a.inv_op(c, y)]) return false;
      }
    }
  return true;
}

Congruence Congruence::make(AlgebraPtr algebra, std::vector<Elem> classes) {
  if (classes.size() != algebra->size())
    throw InputError("partition length does not match carrier");
  if (!is_congruence(*algebra, classes)) throw InputError("partition is not a congruence");
  return Congruence(std::move(algebra), std::move(classes));
}

Congruence Congruence::unchecked(AlgebraPtr algebra, std::vector<Elem> classes) {
  return Congruence(std::move(algebra), std::move(classes));
}

Congruence Congruence::discrete(AlgebraPtr algebra) {
  std::vector<Elem> c(algebra->size());
  std::iota(c.begin(), c.end(), Elem{0});
  return Congruence(std::move(algebra), std::move(c));
}

Congruence Congruence::full(AlgebraPtr algebra) {
  std::vector<Elem> c(algebra->size(), 0);
  return Congruence(std::move(algebra), std::move(c));
}

bool Congruence::refines(const Congruence& other) const {
  // Classes are numbered by first occurrence, so each class of `this` maps to
  // at most one class of `other`.
  std::vector<Elem> image(num_classes_, static_cast<Elem>(-1));
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    Elem& slot = image[classes_[i]];
    if (slot == static_cast<Elem>(-1)) {
      slot = other.classes_[i];
    } else if (slot != other.classes_[i]) {
      return false;
    }
  }
  return true;
}

Congruence congruence_closure(const AlgebraPtr& a, std::span<const ElemPair> seed) {
  const Elem n = static_cast<Elem>(a->size());
  UnionFind uf(n);
  for (auto [x, y] : seed) {
    if (x >= n || y >= n) throw InputError("seed pair out of range");
    uf.unite(x, y);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < n; ++x) {
      Elem r = uf.find(x);
      if (r == x) continue;
      for (Elem c = 0; c < n; ++c) {
        changed |= uf.unite(a->op(x, c), a->op(r, c));
        changed |= uf.unite(a->op(c, x), a->op(c, r));
        changed |= uf.unite(a->inv_op(x, c), a->inv_op(r, c));
        changed |= uf.unite(a->inv_op(c, x), a->inv_op(c, r));
      }
    }
  }
  std::vector<Elem> cls(n);
  for (Elem x = 0; x < n; ++x) cls[x] = uf.find(x);
  return Congruence::unchecked(a, std::move(cls));
}

Congruence join(const Congruence& a, const Congruence& b) {
  std::vector<ElemPair> seed;
  const auto& A = a.algebra();
  for (Elem x = 0; x < A->size(); ++x) {
    seed.emplace_back(x, static_cast<Elem>(std::find(a.classes().begin(), a.classes().end(),
                                                     a.class_of(x)) -
                                           a.classes().begin()));
    seed.emplace_back(x, static_cast<Elem>(std::find(b.classes().begin(), b.classes().end(),
                                                     b.class_of(x)) -
                                           b.classes().begin()));
  }
  return congruence_closure(A, seed);
}

Congruence meet(const Congruence& a, const Congruence& b) {
  const std::size_t n = a.classes().size();
  std::vector<Elem> cls(n);
  for (std::size_t i = 0; i < n; ++i)
    cls[i] = static_cast<Elem>(a.class_of(i) * n + b.class_of(i));
  return Congruence::unchecked(a.algebra(), std::move(cls));
}

Quotient quotient(const Congruence& c) {
  const auto& A = c.algebra();
  const std::size_t k = c.num_classes();
  std::vector<Elem> rep(k);
  for (Elem x = static_cast<Elem>(A->size()); x-- > 0;) rep[c.class_of(x)] = x;
  std::vector<Elem> flat(k * k);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) flat[i * k + j] = c.class_of(A->op(rep[i], rep[j]));
  auto q = share(FiniteAlgebra::from_trusted(A->variety(), k, std::move(flat)));
  return {q, Hom{A, q, c.classes()}};
}

Pullback pullback(const Hom& f, const Hom& g) {
  if (!same_algebra(f.cod, g.cod)) throw InputError("pullback: codomain mismatch");
  const std::size_t na = f.dom->size(), nb = g.dom->size();
  std::vector<ElemPair> pairs;
  std::vector<Elem> index(na * nb, static_cast<Elem>(-1));
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < nb; ++b)
      if (f.values[a] == g.values[b]) {
        index[a * nb + b] = static_cast<Elem>(pairs.size());
        pairs.emplace_back(a, b);
      }
  const std::size_t k = pairs.size();
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Elem a = f.dom->op(pairs[i].first, pairs[j].first);
      Elem b = g.dom->op(pairs[i].second, pairs[j].second);
      flat[i * k + j] = index[a * nb + b];
    }
  auto p = share(FiniteAlgebra::from_trusted(f.dom->variety(), k, std::move(flat)));
  std::vector<Elem> l(k), r(k);
  for (std::size_t i = 0; i < k; ++i) {
    l[i] = pairs[i].first;
    r[i] = pairs[i].second;
  }
  return {p, Hom{p, f.dom, std::move(l)}, Hom{p, g.dom, std::move(r)}, std::move(pairs)};
}

Hom pullback_comparison(const Pullback& p, const Hom& l, const Hom& r) {
  if (!same_algebra(l.dom, r.dom)) throw InputError("cone legs have different domains");
  std::vector<Elem> v(l.dom->size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    ElemPair want{l.values[x], r.values[x]};
    auto it = std::lower_bound(p.pairs.begin(), p.pairs.end(), want);
    if (it == p.pairs.end() || *it != want) throw InputError("cone does not commute");
    v[x] = static_cast<Elem>(it - p.pairs.begin());
  }
  return Hom{l.dom, p.algebra, std::move(v)};
}

Quotient coequalizer(const Hom& f, const Hom& g) {
  if (!same_algebra(f.dom, g.dom) || !same_algebra(f.cod, g.cod))
    throw InputError("coequalizer: maps are not parallel");
  std::vector<ElemPair> seed;
  for (std::size_t x = 0; x < f.values.size(); ++x)
    seed.emplace_back(f.values[x], g.values[x]);
  return quotient(congruence_closure(f.cod, seed));
}

Congruence kernel_congruence(const Hom& f) {
  return Congruence::unchecked(f.dom, f.values);
}

Pullback kernel_pair(const Hom& f) { return pullback(f, f); }

Hom factor_through(const Hom& q, const Hom& h) {
  if (!same_algebra(q.dom, h.dom)) throw InputError("factor_through: domain mismatch");
  const Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> v(q.cod->size(), unset);
  for (std::size_t x = 0; x < q.values.size(); ++x) {
    Elem& slot = v[q.values[x]];
    if (slot == unset) {
      slot = h.values[x];
    } else if (slot != h.values[x]) {
      throw InputError("map is not constant on the fibres of the quotient");
    }
  }
  if (std::find(v.begin(), v.end(), unset) != v.end())
    throw InputError("factor_through: quotient map is not surjective");
  return Hom{q.cod, h.cod, std::move(v)};
}

Image image(const Hom& f) {
  std::vector<Elem> elems(f.values.begin(), f.values.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const std::size_t k = elems.size();
  std::vector<Elem> pos(f.cod->size(), 0);
  for (std::size_t i = 0; i < k; ++i) pos[elems[i]] = static_cast<Elem>(i);
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = pos[f.cod->op(elems[i], elems[j])];
  auto im = share(FiniteAlgebra::from_trusted(f.cod->variety(), k, std::move(flat)));
  std::vector<Elem> co(f.values.size());
  for (std::size_t x = 0; x < co.size(); ++x) co[x] = pos[f.values[x]];
  return {im, Hom{f.dom, im, std::move(co)}, Hom{im, f.cod, std::move(elems)}};
}

// Canonical forms

namespace {

std::vector<Elem> element_invariant(const FiniteAlgebra& a, Elem x) {
  const Elem n = static_cast<Elem>(a.size());
  std::vector<Elem> inv;
  if (a.variety() == Variety::Group) {
    Elem order = 1;
    for (Elem p = x; p != a.identity(); p = a.op(p, x)) ++order;
    Elem central = 0, roots = 0;
    for (Elem y = 0; y < n; ++y) {
      central += a.op(x, y) == a.op(y, x);
      roots += a.op(y, y) == x;
    }
    inv = {order, central, roots};
  } else {
    // Cycle type of the right translation by x, plus fixed-point counts.
    std::vector<Elem> cycles;
    std::vector<bool> seen(n, false);
    for (Elem s = 0; s < n; ++s) {
      if (seen[s]) continue;
      Elem len = 0;
      for (Elem p = s; !seen[p]; p = a.op(p, x)) {
        seen[p] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    Elem stab = 0;
    for (Elem y = 0; y < n; ++y) stab += a.op(x, y) == x;
    inv = {a.op(x, x) == x ? 1u : 0u, stab};
    inv.insert(inv.end(), cycles.begin(), cycles.end());
  }
  return inv;
}

struct CanonSearch {
  const FiniteAlgebra& a;
  Elem n;
  std::vector<std::size_t> block_of_label;  // label -> block id
  std::vector<std::size_t> block_of_elem;   // element -> block id
  std::vector<std::pair<Elem, Elem>> cells;  // shell order
  std::vector<Elem> new_of_old, old_of_new;
  std::vector<Elem> best_table;  // in cell order
  std::vector<Elem> best_perm;
  bool have_best = false;

  static constexpr Elem kUnset = static_cast<Elem>(-1);

  explicit CanonSearch(const FiniteAlgebra& alg) : a(alg), n(static_cast<Elem>(alg.size())) {
    std::vector<std::vector<Elem>> inv(n);
    for (Elem x = 0; x < n; ++x) inv[x] = element_invariant(a, x);
    std::vector<std::vector<Elem>> keys(inv);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    block_of_elem.resize(n);
    std::vector<std::size_t> counts(keys.size(), 0);
    for (Elem x = 0; x < n; ++x) {
      block_of_elem[x] =
          std::lower_bound(keys.begin(), keys.end(), inv[x]) - keys.begin();
      ++counts[block_of_elem[x]];
    }
    for (std::size_t b = 0; b < keys.size(); ++b)
      block_of_label.insert(block_of_label.end(), counts[b], b);
    for (Elem k = 0; k < n; ++k) {
      for (Elem i = 0; i < k; ++i) {
        cells.emplace_back(i, k);
        cells.emplace_back(k, i);
      }
      cells.emplace_back(k, k);
    }
    new_of_old.assign(n, kUnset);
    old_of_new.assign(n, kUnset);
  }

  // -1 current prefix is worse than best (prune), 0 undecided, 1 better.
  int compare_prefix(Elem assigned) const {
    if (!have_best) return 1;
    const std::size_t ncells = static_cast<std::size_t>(assigned) * assigned;
    for (std::size_t c = 0; c < ncells; ++c) {
      auto [i, j] = cells[c];
      Elem v = new_of_old[a.op(old_of_new[i], old_of_new[j])];
      Elem b = best_table[c];
      if (v == kUnset) {
        // Eventual label is at least `assigned`.
        if (b < assigned) return -1;
        return 0;
      }
      if (v < b) return 1;
      if (v > b) return -1;
    }
    return 0;
  }

  void record() {
    std::vector<Elem> t(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto [i, j] = cells[c];
      t[c] = new_of_old[a.op(old_of_new[i], old_of_new[j])];
    }
    if (!have_best || t < best_table) {
      best_table = std::move(t);
      best_perm = new_of_old;
      have_best = true;
    }
  }

  void search(Elem k) {
    if (k == n) {
      record();
      return;
    }
    for (Elem x = 0; x < n; ++x) {
      if (new_of_old[x] != kUnset || block_of_elem[x] != block_of_label[k]) continue;
      new_of_old[x] = k;
      old_of_new[k] = x;
      if (compare_prefix(k + 1) >= 0) search(k + 1);
      new_of_old[x] = kUnset;
      old_of_new[k] = kUnset;
    }
  }
};

}  // namespace

std::vector<Elem> canonical_labelling(const FiniteAlgebra& a) {
  CanonSearch s(a);
  s.search(0);
  return s.best_perm;
}

AlgebraPtr relabel(const FiniteAlgebra& a, std::span<const Elem> perm) {
  const std::size_t n = a.size();
  std::vector<Elem> flat(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) flat[perm[x] * n + perm[y]] = perm[a.op(x, y)];
  return share(FiniteAlgebra::from_trusted(a.variety(), n, std::move(flat)));
}

CanonicalForm canonical_form(const FiniteAlgebra& a) {
  auto perm = canonical_labelling(a);
  auto r = relabel(a, perm);
  return {a.variety(), a.size(), r->table()};
}

std::optional<Hom> find_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->size() != b->size() || a->variety() != b->variety()) return std::nullopt;
  const Elem n = static_cast<Elem>(a->size());
  std::vector<Elem> map(n, static_cast<Elem>(-1));
  std::vector<bool> used(n, false);
  // Assign in order. At step k check every product whose arguments and
  // result are all assigned and involve k; a product whose result is not
  // yet assigned must land on an unused image.
  auto consistent = [&](Elem k) {
    for (Elem x = 0; x <= k; ++x)
      for (Elem y = 0; y <= k; ++y) {
        const Elem r = a->op(x, y);
        const Elem img = b->op(map[x], map[y]);
        if (r <= k) {
          if ((x == k || y == k || r == k) && map[r] != img) return false;
        } else if (x == k || y == k) {
          for (Elem z = 0; z <= k; ++z)
            if (map[z] == img) return false;
        }
      }
    return true;
  };
  std::function<bool(Elem)> rec = [&](Elem k) -> bool {
    if (k == n) return true;
    for (Elem v = 0; v < n; ++v) {
      if (used[v]) continue;
      map[k] = v;
      used[v] = true;
      if (consistent(k) && rec(k + 1)) return true;
      used[v] = false;
      map[k] = static_cast<Elem>(-1);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return Hom{a, b, map};
}

}  // namespace qgal
