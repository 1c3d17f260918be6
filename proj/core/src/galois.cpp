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

#include "qgal/galois.hpp"

#include "qgal/catalog.hpp"
#include "qgal/errors.hpp"

namespace qgal {

Variety GaloisStructure::variety() const {
  switch (kind) {
    case StructureKind::QuandlePi0: return Variety::Quandle;
    case StructureKind::RackPi0: return Variety::Rack;
    case StructureKind::GroupAb: return Variety::Group;
  }
  return Variety::Quandle;
}

std::string GaloisStructure::name() const {
  switch (kind) {
    case StructureKind::QuandlePi0: return "quandle-pi0";
    case StructureKind::RackPi0: return "rack-pi0";
    case StructureKind::GroupAb: return "group-ab";
  }
  return {};
}

GaloisStructure GaloisStructure::parse(const std::string& name, int level) {
  if (level < 0 || level > 2) throw InputError("level must be 0, 1 or 2");
  if (name == "quandle-pi0") return {StructureKind::QuandlePi0, level};
  if (name == "rack-pi0") return {StructureKind::RackPi0, level};
  if (name == "group-ab") return {StructureKind::GroupAb, level};
  throw InputError("unknown structure '" + name + "'");
}

std::string to_string(CoveringStatus s) {
  switch (s) {
    case CoveringStatus::Yes: return "yes";
    case CoveringStatus::No: return "no";
    case CoveringStatus::Unknown: return "unknown";
  }
  return {};
}

namespace {

void require_variety(const GaloisStructure& g, const FiniteAlgebra& a) {
  if (a.variety() != g.variety())
    throw InputError(g.name() + " applies to " + to_string(g.variety()) + "s, got a " +
                     to_string(a.variety()));
}

Elem commutator(const FiniteAlgebra& a, Elem x, Elem y) {
  // x y x^-1 y^-1
  return a.op(a.op(a.op(x, y), a.inverse(x)), a.inverse(y));
}

CoveringVerdict yes(std::string reason = {}) {
  CoveringVerdict v;
  v.status = CoveringStatus::Yes;
  v.reason = std::move(reason);
  return v;
}

CoveringVerdict no(std::string reason, std::vector<Elem> cx = {}) {
  CoveringVerdict v;
  v.status = CoveringStatus::No;
  v.reason = std::move(reason);
  v.counterexample = std::move(cx);
  return v;
}

CoveringVerdict unknown(std::string reason, std::size_t bound = 0) {
  CoveringVerdict v;
  v.reason = std::move(reason);
  v.bound = bound;
  return v;
}

void require_dim(const GaloisStructure& g, const CubeDiagram& c) {
  if (c.dim() != g.level + 1)
    throw InputError("level " + std::to_string(g.level) + " expects a " +
                     std::to_string(g.level + 1) + "-cube, got dimension " + std::to_string(c.dim()));
}

bool is_pullback_square(const CubeDiagram& sq) { return is_isomorphism(comparison_hom(sq).comparison); }

}  // namespace

Congruence reflection_congruence(const GaloisStructure& g, const AlgebraPtr& a) {
  require_variety(g, *a);
  std::vector<ElemPair> seed;
  for (Elem x = 0; x < a->size(); ++x)
    for (Elem y = 0; y < a->size(); ++y) {
      if (g.kind == StructureKind::GroupAb)
        seed.emplace_back(a->op(x, y), a->op(y, x));
      else
        seed.emplace_back(x, a->op(x, y));
    }
  return congruence_closure(a, seed);
}

Reflection reflect0(const GaloisStructure& g, const AlgebraPtr& a) {
  auto q = quotient(reflection_congruence(g, a));
  return {q.algebra, q.projection};
}

bool in_base(const GaloisStructure& g, const FiniteAlgebra& a) {
  require_variety(g, a);
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      if (g.kind == StructureKind::GroupAb) {
        if (a.op(x, y) != a.op(y, x)) return false;
      } else if (a.op(x, y) != x) {
        return false;
      }
    }
  return true;
}

MappedCube reflect_cube0(const GaloisStructure& g, const CubeDiagram& c) {
  std::vector<Hom> units;
  for (Subset s = 0; s <= c.full_subset(); ++s) units.push_back(reflect0(g, c.vertex(s)).unit);
  return map_vertices(c, units);
}

Congruence centralization_congruence(const GaloisStructure& g, const Hom& f) {
  const auto& a = f.dom;
  require_variety(g, *a);
  std::vector<ElemPair> seed;
  const Elem n = static_cast<Elem>(a->size());
  if (g.kind == StructureKind::GroupAb) {
    const Elem e = a->identity();
    for (Elem k = 0; k < n; ++k) {
      if (f(k) != f.cod->identity()) continue;
      for (Elem x = 0; x < n; ++x) seed.emplace_back(commutator(*a, k, x), e);
    }
  } else {
    for (Elem u = 0; u < n; ++u)
      for (Elem w = u + 1; w < n; ++w) {
        if (f(u) != f(w)) continue;
        for (Elem x = 0; x < n; ++x) {
          seed.emplace_back(a->op(x, u), a->op(x, w));
          seed.emplace_back(a->inv_op(x, u), a->inv_op(x, w));
        }
      }
  }
  return congruence_closure(a, seed);
}

ExtReflection reflect_ext(const GaloisStructure& g, const Hom& f) {
  if (!is_surjection(f)) throw InputError("reflect_ext needs a surjection");
  auto c = centralization_congruence(g, f);
  if (!c.refines(kernel_congruence(f)))
    throw PropertyViolation("centralisation congruence is not contained in the kernel");
  auto q = quotient(c);
  auto cov = factor_through(q.projection, f);
  const auto level0 = g.at_level(0);
  auto verdict = covering_oracle(level0, cov);
  if (verdict.no()) throw PropertyViolation("F1(f) fails the covering oracle: " + verdict.reason);
  auto unit = map_vertices(CubeDiagram::arrow(f), {q.projection, Hom::identity(f.cod)}).connecting;
  return {std::move(cov), std::move(unit)};
}

MappedCube reflect_square1(const GaloisStructure& g, const CubeDiagram& sq, int d) {
  if (sq.dim() != 2 || (d != 1 && d != 2)) throw InputError("reflect_square1 needs a square and d in {1,2}");
  const int e = 3 - d;
  std::vector<Hom> units;
  for (Subset s = 0; s < 4; ++s) {
    if (has_direction(s, e)) {
      units.push_back(Hom::identity(sq.vertex(s)));
    } else {
      auto q = quotient(centralization_congruence(g, sq.edge(s, e))).projection;
      units.push_back(std::move(q));
    }
  }
  return map_vertices(sq, units);
}

CubeDiagram reflection_cube(const GaloisStructure& g, const CubeDiagram& c, int d) {
  require_dim(g, c);
  if (g.level == 0) return reflect_cube0(g, c).connecting;
  if (g.level == 1) return reflect_square1(g, c, d).connecting;
  throw InputError("no reflector at level " + std::to_string(g.level));
}

CoveringVerdict is_trivial_covering(const GaloisStructure& g, const CubeDiagram& c, int d) {
  require_dim(g, c);
  require_variety(g, *c.initial());
  if (g.level == 0) {
    auto r = reflection_cube(g, c);
    if (is_pullback_square(r)) return yes("reflection square is a pullback");
    return no("reflection square is not a pullback");
  }
  if (g.level == 1) {
    // Pullback in the category of extensions: both components must be
    // pullbacks. Direction 1 of r is the unit, d + 1 the arrow, e + 1 the
    // extensions.
    auto r = reflection_cube(g, c, d);
    const int e = 3 - d;
    if (!is_pullback_square(face(r, e + 1, Side::Domain)))
      return no("reflection square is not a pullback on domains");
    if (!is_pullback_square(face(r, e + 1, Side::Codomain)))
      return no("reflection square is not a pullback on codomains");
    return yes("reflection square is a pullback");
  }
  throw InputError("no reflector at level " + std::to_string(g.level));
}

CoveringVerdict is_trivial_covering(const GaloisStructure& g, const Hom& f) {
  return is_trivial_covering(g, CubeDiagram::arrow(f));
}

CoveringVerdict covering_oracle(const GaloisStructure& g, const CubeDiagram& c) {
  require_dim(g, c);
  const auto& a = *c.initial();
  require_variety(g, a);
  const Elem n = static_cast<Elem>(a.size());
  if (g.level == 0) {
    const Hom& f = c.edge(0, 1);
    if (g.kind == StructureKind::GroupAb) {
      for (Elem k = 0; k < n; ++k) {
        if (f(k) != f.cod->identity()) continue;
        for (Elem x = 0; x < n; ++x)
          if (a.op(k, x) != a.op(x, k)) return no("kernel element is not central", {k, x});
      }
      return yes("kernel is central");
    }
    for (Elem u = 0; u < n; ++u)
      for (Elem w = u + 1; w < n; ++w) {
        if (f(u) != f(w)) continue;
        for (Elem x = 0; x < n; ++x)
          if (a.op(x, u) != a.op(x, w)) return no("translations disagree on a fibre", {u, w, x});
      }
    return yes("translations are constant on fibres");
  }
  if (g.level == 1 && g.kind == StructureKind::GroupAb) {
    const Hom& f = c.edge(0, 1);
    const Hom& h = c.edge(0, 2);
    std::vector<Elem> kf, kg, both;
    for (Elem x = 0; x < n; ++x) {
      const bool inf = f(x) == f.cod->identity(), ing = h(x) == h.cod->identity();
      if (inf) kf.push_back(x);
      if (ing) kg.push_back(x);
      if (inf && ing) both.push_back(x);
    }
    for (Elem x : kf)
      for (Elem y : kg)
        if (a.op(x, y) != a.op(y, x)) return no("[K_f, K_g] is nontrivial", {x, y});
    for (Elem x : both)
      for (Elem y = 0; y < n; ++y)
        if (a.op(x, y) != a.op(y, x)) return no("[K_f ∩ K_g, A] is nontrivial", {x, y});
    return yes("Janelidze conditions hold");
  }
  return unknown("no covering oracle for " + g.name() + " at level " + std::to_string(g.level));
}

CoveringVerdict covering_oracle(const GaloisStructure& g, const Hom& f) {
  return covering_oracle(g, CubeDiagram::arrow(f));
}

CoveringVerdict is_normal_covering(const GaloisStructure& g, const CubeDiagram& c, int d) {
  require_dim(g, c);
  auto kp = kernel_pair_cube(c, d);
  auto first = is_trivial_covering(g, kp.first, d);
  if (!first.yes()) return no("first kernel-pair projection is not a trivial covering");
  auto second = is_trivial_covering(g, kp.second, d);
  if (!second.yes()) return no("second kernel-pair projection is not a trivial covering");
  return yes("split by itself");
}

CubeDiagram pull_back_along(const CubeDiagram& c, const CubeDiagram& e, int d) {
  return face(cube_pullback(c, e, d), 1, Side::Domain);
}

bool verify_splitting(const GaloisStructure& g, const CubeDiagram& c, const CubeDiagram& e, int d) {
  require_dim(g, c);
  require_dim(g, e);
  if (!check_extension(e).is_extension) throw InputError("splitting candidate is not an extension");
  return is_trivial_covering(g, pull_back_along(c, e, d), d).yes();
}

CoveringVerdict covering_by_search(const GaloisStructure& g, const CubeDiagram& c, std::size_t bound,
                                   const Catalog* catalog) {
  require_dim(g, c);
  if (!check_extension(c).is_extension) throw InputError("covering_by_search needs an extension");
  const int d = 1;
  if (c.initial()->size() <= bound && verify_splitting(g, c, c, d)) {
    auto v = yes("split by itself");
    v.witness = c;
    return v;
  }
  if (g.level == 0 && catalog) {
    const auto& b = c.terminal();
    for (const auto& entry : catalog->entries) {
      const auto& e = entry.algebra;
      if (e->size() > bound || e->size() < b->size() || e->variety() != b->variety()) continue;
      for (auto& s : enumerate_surjections(e, b)) {
        auto arrow = CubeDiagram::arrow(s);
        if (verify_splitting(g, c, arrow, d)) {
          auto v = yes("split by a surjection from catalog entry " + entry.id);
          v.witness = std::move(arrow);
          return v;
        }
      }
    }
  }
  return unknown("no splitting found within bound", bound);
}

BirkhoffReport is_strongly_birkhoff(const GaloisStructure& g, const std::vector<CubeDiagram>& corpus) {
  BirkhoffReport rep;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ++rep.checked;
    auto v = is_nfold_extension(reflection_cube(g, corpus[i]));
    if (!v.is_extension) rep.failures.push_back({i, std::move(v)});
  }
  return rep;
}

}  // namespace qgal
