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

#include "qgal/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qgal/errors.hpp"
#include "qgal/extension.hpp"

namespace qgal {

std::vector<AlgebraPtr> Catalog::of_order(std::size_t n) const {
  std::vector<AlgebraPtr> out;
  for (const auto& e : entries)
    if (e.algebra->size() == n) out.push_back(e.algebra);
  return out;
}

std::vector<AlgebraPtr> Catalog::up_to(std::size_t n) const {
  std::vector<AlgebraPtr> out;
  for (const auto& e : entries)
    if (e.algebra->size() <= n) out.push_back(e.algebra);
  return out;
}

const CatalogEntry& Catalog::at(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw InputError("no catalog entry " + id);
}

std::string Catalog::identify(const FiniteAlgebra& a) const {
  if (a.variety() != variety) return {};
  const auto cf = canonical_form(a);
  for (const auto& e : entries)
    if (e.algebra->size() == a.size() && canonical_form(*e.algebra) == cf) return e.id;
  return {};
}

namespace {

constexpr int kUnset = -1;

// Backtracking over rack tables, one column at a time, each column a
// permutation. Self-distributivity is checked on every fully known
// instance after each cell.
class RackSearch {
 public:
  RackSearch(std::size_t n, bool quandle, std::uint64_t seed) : n_(n), quandle_(quandle) {
    cols_.resize(n);
    rows_.resize(n);
    vals_.resize(n);
    std::iota(cols_.begin(), cols_.end(), 0);
    std::iota(rows_.begin(), rows_.end(), 0);
    std::iota(vals_.begin(), vals_.end(), 0);
    if (seed) {
      std::mt19937_64 rng(seed);
      std::shuffle(cols_.begin(), cols_.end(), rng);
      std::shuffle(rows_.begin(), rows_.end(), rng);
      std::shuffle(vals_.begin(), vals_.end(), rng);
    }
    t_.assign(n * n, kUnset);
    used_.assign(n * n, false);
    if (quandle)
      for (std::size_t y = 0; y < n; ++y) {
        t_[y * n + y] = static_cast<int>(y);
        used_[y * n + y] = true;
      }
  }

  std::set<CanonicalForm> run(Variety v) {
    v_ = v;
    rec(0);
    return std::move(found_);
  }

 private:
  int at(int x, int y) const { return t_[x * n_ + y]; }

  bool consistent() const {
    const int n = static_cast<int>(n_);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int u = at(a, b);
        if (u == kUnset) continue;
        for (int c = 0; c < n; ++c) {
          const int l = at(u, c);
          if (l == kUnset) continue;
          const int r1 = at(a, c), r2 = at(b, c);
          if (r1 == kUnset || r2 == kUnset) continue;
          const int r = at(r1, r2);
          if (r != kUnset && r != l) return false;
        }
      }
    return true;
  }

  void rec(std::size_t cell) {
    if (cell == n_ * n_) {
      std::vector<Elem> flat(t_.begin(), t_.end());
      auto a = FiniteAlgebra::from_trusted(v_, n_, std::move(flat));
      found_.insert(canonical_form(a));
      return;
    }
    const int y = cols_[cell / n_];
    const int x = rows_[cell % n_];
    if (t_[x * n_ + y] != kUnset) {
      rec(cell + 1);
      return;
    }
    for (int v : vals_) {
      if (used_[v * n_ + y]) continue;  // column y already hits v
      if (quandle_ && v == y) continue;
      t_[x * n_ + y] = v;
      used_[v * n_ + y] = true;
      if (consistent()) rec(cell + 1);
      used_[v * n_ + y] = false;
      t_[x * n_ + y] = kUnset;
    }
  }

  std::size_t n_;
  bool quandle_;
  Variety v_ = Variety::Quandle;
  std::vector<int> cols_, rows_, vals_;
  std::vector<int> t_;
  std::vector<bool> used_;  // used_[v * n + y]: value v appears in column y
  std::set<CanonicalForm> found_;
};

AlgebraPtr from_form(const CanonicalForm& f) {
  return share(FiniteAlgebra::from_trusted(f.variety, f.size, f.table));
}

bool brute_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size()) return false;
  std::vector<Elem> perm(a.size());
  std::iota(perm.begin(), perm.end(), Elem{0});
  do {
    bool ok = true;
    for (Elem x = 0; x < a.size() && ok; ++x)
      for (Elem y = 0; y < a.size() && ok; ++y) ok = perm[a.op(x, y)] == b.op(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::vector<AlgebraPtr> naive_quandles(std::size_t n, bool racks) {
  if (n == 0 || n > 4) throw InputError("naive generator supports orders 1..4");
  const Variety v = racks ? Variety::Rack : Variety::Quandle;
  // Candidate columns per y.
  std::vector<std::vector<std::vector<Elem>>> columns(n);
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  do {
    for (Elem y = 0; y < n; ++y)
      if (racks || perm[y] == y) columns[y].push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<AlgebraPtr> reps;
  std::vector<std::size_t> pick(n, 0);
  std::vector<Elem> flat(n * n);
  while (true) {
    for (Elem y = 0; y < n; ++y)
      for (Elem x = 0; x < n; ++x) flat[x * n + y] = columns[y][pick[y]][x];
    bool sd = true;
    for (Elem x = 0; x < n && sd; ++x)
      for (Elem y = 0; y < n && sd; ++y)
        for (Elem z = 0; z < n && sd; ++z)
          sd = flat[flat[x * n + y] * n + z] == flat[flat[x * n + z] * n + flat[y * n + z]];
    if (sd) {
      auto a = share(FiniteAlgebra::from_trusted(v, n, flat));
      bool fresh = true;
      for (const auto& r : reps)
        if (brute_isomorphic(*r, *a)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(a);
    }
    std::size_t k = 0;
    while (k < n && ++pick[k] == columns[k].size()) pick[k++] = 0;
    if (k == n) break;
  }
  return reps;
}

AlgebraPtr dihedral_group(std::size_t n) {
  // r^i s^a encoded as i + n a.
  const std::size_t m = 2 * n;
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t i = x % n, a = x / n, j = y % n, b = y / n;
      const std::size_t k = a ? (i + n - j) % n : (i + j) % n;
      t[x][y] = static_cast<Elem>(k + n * ((a + b) % 2));
    }
  return make_algebra(Variety::Group, t);
}

AlgebraPtr dicyclic_group(std::size_t n) {
  // a^i x^j encoded as i + 2n j, with a^{2n} = 1, x^2 = a^n, x a x^{-1} = a^{-1}.
  const std::size_t h = 2 * n, m = 4 * n;
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      const std::size_t i = u % h, j = u / h, k = v % h, l = v / h;
      std::size_t e = j ? (i + h - k) % h : (i + k) % h;
      std::size_t f = j + l;
      if (f == 2) {
        e = (e + n) % h;
        f = 0;
      }
      t[u][v] = static_cast<Elem>(e + h * f);
    }
  return make_algebra(Variety::Group, t);
}

AlgebraPtr alternating_group4() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
    if (inv % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::array<int, 4> c{};
      for (int i = 0; i < 4; ++i) c[i] = perms[x][perms[y][i]];
      t[x][y] = static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return make_algebra(Variety::Group, t);
}

std::vector<AlgebraPtr> small_groups(std::size_t max_order) {
  if (max_order > 15) throw InputError("stored groups go up to order 15");
  auto C = [](std::size_t n) { return cyclic_group(n); };
  std::vector<AlgebraPtr> all = {
      C(1),
      C(2),
      C(3),
      C(4), product(C(2), C(2)),
      C(5),
      C(6), dihedral_group(3),
      C(7),
      C(8), product(C(4), C(2)), product(product(C(2), C(2)), C(2)), dihedral_group(4), dicyclic_group(2),
      C(9), product(C(3), C(3)),
      C(10), dihedral_group(5),
      C(11),
      C(12), product(C(6), C(2)), dihedral_group(6), dicyclic_group(3), alternating_group4(),
      C(13),
      C(14), dihedral_group(7),
      C(15),
  };
  std::vector<AlgebraPtr> out;
  for (auto& g : all)
    if (g->size() <= max_order) out.push_back(g);
  return out;
}

Catalog enumerate_algebras(Variety v, std::size_t max_order, const EnumerateOptions& opt) {
  Catalog cat;
  cat.variety = v;
  cat.max_order = max_order;
  std::vector<CanonicalForm> forms;
  if (v == Variety::Group) {
    for (const auto& g : small_groups(max_order)) forms.push_back(canonical_form(*g));
  } else {
    if (max_order > 6) throw InputError("quandle and rack catalogs go up to order 6");
    for (std::size_t n = 1; n <= max_order; ++n) {
      RackSearch s(n, v == Variety::Quandle, opt.search_seed);
      for (auto& f : s.run(v)) forms.push_back(f);
    }
  }
  std::sort(forms.begin(), forms.end(), [](const CanonicalForm& a, const CanonicalForm& b) {
    return a.size != b.size ? a.size < b.size : a.table < b.table;
  });
  std::size_t serial = 0, last = 0;
  for (const auto& f : forms) {
    serial = f.size == last ? serial + 1 : 1;
    last = f.size;
    cat.entries.push_back({std::to_string(f.size) + "-" + std::to_string(serial), from_form(f)});
  }
  return cat;
}

std::vector<Hom> enumerate_homs(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->variety() != b->variety()) throw InputError("enumerate_homs: variety mismatch");
  const Elem n = static_cast<Elem>(a->size()), m = static_cast<Elem>(b->size());
  std::vector<Hom> out;
  std::vector<Elem> h(n);
  auto ok = [&](Elem k) {
    for (Elem x = 0; x <= k; ++x)
      for (Elem y = 0; y <= k; ++y) {
        const Elem r = a->op(x, y);
        if (r > k) continue;
        if (x != k && y != k && r != k) continue;
        if (h[r] != b->op(h[x], h[y])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, Elem k) -> void {
    if (k == n) {
      out.push_back(Hom::unchecked(a, b, h));
      return;
    }
    for (Elem v = 0; v < m; ++v) {
      h[k] = v;
      if (ok(k)) self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Hom> enumerate_surjections(const AlgebraPtr& a, const AlgebraPtr& b) {
  std::vector<Hom> out;
  if (a->size() < b->size()) return out;
  for (auto& h : enumerate_homs(a, b))
    if (is_surjection(h)) out.push_back(std::move(h));
  return out;
}

std::vector<Congruence> all_congruences(const AlgebraPtr& a) {
  std::set<std::vector<Elem>> seen;
  std::vector<Congruence> found;
  auto add = [&](Congruence c) {
    if (seen.insert(c.classes()).second) found.push_back(std::move(c));
  };
  add(Congruence::discrete(a));
  for (Elem x = 0; x < a->size(); ++x)
    for (Elem y = x + 1; y < a->size(); ++y) {
      std::vector<ElemPair> seed{{x, y}};
      add(congruence_closure(a, seed));
    }
  const std::size_t principal = found.size();
  // Every congruence is a join of principal ones.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 1; j < principal; ++j) add(join(found[i], found[j]));
  std::sort(found.begin(), found.end(),
            [](const Congruence& x, const Congruence& y) { return x.classes() < y.classes(); });
  return found;
}

CongruenceLattice congruence_lattice(const AlgebraPtr& a) {
  CongruenceLattice lat;
  lat.algebra = a;
  lat.elements = all_congruences(a);
  const std::size_t k = lat.elements.size();
  lat.leq.assign(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) lat.leq[i][j] = lat.elements[i].refines(lat.elements[j]);
    if (lat.elements[i].num_classes() == a->size()) lat.discrete = i;
    auto q = quotient(lat.elements[i]);
    if (i == lat.discrete && lat.elements[i].num_classes() == a->size()) {
      // Keep the corner itself so cubes start at the catalog algebra.
      q = {a, Hom::identity(a)};
    }
    lat.quotients.push_back(std::move(q));
  }
  return lat;
}

void for_each_grid(const CongruenceLattice& lat, const std::vector<int>& extents,
                   const std::function<bool(const Grid&)>& fn) {
  const std::size_t k = extents.size();
  std::vector<std::size_t> stride(k, 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    stride[i] = total;
    total *= static_cast<std::size_t>(extents[i]);
  }
  Grid g{extents, std::vector<std::size_t>(total, lat.discrete)};
  const std::size_t L = lat.elements.size();
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (stop) return;
    if (v == total) {
      if (!fn(g)) stop = true;
      return;
    }
    for (std::size_t c = 0; c < L && !stop; ++c) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const std::size_t coord = (v / stride[i]) % extents[i];
        if (coord > 0) ok = lat.leq[g.theta[v - stride[i]]][c];
      }
      if (!ok) continue;
      g.theta[v] = c;
      self(self, v + 1);
    }
  };
  if (total == 1) {
    fn(g);
    return;
  }
  rec(rec, 1);
}

CubeDiagram grid_cube(const CongruenceLattice& lat, const Grid& g, const std::vector<int>& base,
                      const std::vector<int>& axes) {
  const int n = static_cast<int>(axes.size());
  const std::size_t k = g.extents.size();
  auto index = [&](Subset s) {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < k; ++i) {
      int coord = base[i];
      for (int d = 1; d <= n; ++d)
        if (axes[d - 1] == static_cast<int>(i) && has_direction(s, d)) ++coord;
      idx += stride * static_cast<std::size_t>(coord);
      stride *= static_cast<std::size_t>(g.extents[i]);
    }
    return idx;
  };
  const Subset full = (Subset{1} << n) - 1;
  std::vector<AlgebraPtr> vs;
  std::vector<std::size_t> th;
  for (Subset s = 0; s <= full; ++s) {
    th.push_back(g.theta[index(s)]);
    vs.push_back(lat.quotients[th.back()].algebra);
  }
  std::vector<std::optional<Hom>> es(vs.size() * n);
  for (Subset s = 0; s <= full; ++s)
    for (int d = 1; d <= n; ++d) {
      if (has_direction(s, d)) continue;
      es[s * n + d - 1] = factor_through(lat.quotients[th[s]].projection,
                                         lat.quotients[th[with_direction(s, d)]].projection);
    }
  return CubeDiagram::build(n, std::move(vs), std::move(es), Validation::Trusted);
}

void enumerate_extension_cubes(const Catalog& cat, int n, std::size_t budget,
                               const std::function<bool(const CubeDiagram&)>& fn) {
  if (n < 0 || n > 3) throw InputError("enumerate_extension_cubes: n must be in 0..3");
  std::vector<int> axes(n), base(n, 0);
  std::iota(axes.begin(), axes.end(), 0);
  for (const auto& e : cat.entries) {
    if (e.algebra->size() > budget) continue;
    if (n == 0) {
      if (!fn(CubeDiagram::object(e.algebra))) return;
      continue;
    }
    auto lat = congruence_lattice(e.algebra);
    bool go = true;
    for_each_grid(lat, std::vector<int>(n, 2), [&](const Grid& g) {
      auto c = grid_cube(lat, g, base, axes);
      if (check_extension(c).is_extension) go = fn(c);
      return go;
    });
    if (!go) return;
  }
}

}  // namespace qgal
