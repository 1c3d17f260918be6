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

#include "qgal/diagram.hpp"

#include <numeric>

namespace qgal {

Subset drop_direction(Subset s, int d) {
  const Subset low = s & ((1u << (d - 1)) - 1u);
  const Subset high = s >> d;
  return low | (high << (d - 1));
}

Subset insert_direction(Subset s, int d, bool member) {
  const Subset low = s & ((1u << (d - 1)) - 1u);
  const Subset high = s >> (d - 1);
  return low | (static_cast<Subset>(member) << (d - 1)) | (high << d);
}

std::string bitstring(Subset s, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int d = 1; d <= n; ++d)
    if (has_direction(s, d)) out[d - 1] = '1';
  return out;
}

Subset parse_bitstring(const std::string& bits) {
  Subset s = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s |= 1u << i;
    } else if (bits[i] != '0') {
      throw InputError("bad vertex bitstring '" + bits + "'");
    }
  }
  return s;
}

CubeDiagram CubeDiagram::build(int n, std::vector<AlgebraPtr> vertices,
                               std::vector<std::optional<Hom>> edges, Validation check) {
  const bool full = check == Validation::Full;
  if (n < 0 || n > 16) throw InputError("cube dimension out of range");
  const Subset count = 1u << n;
  if (vertices.size() != count) throw InputError("cube: wrong number of vertices");
  for (Subset s = 0; s < count; ++s) {
    if (!vertices[s]) throw InputError("cube: missing vertex " + bitstring(s, n));
    if (vertices[s]->variety() != vertices[0]->variety())
      throw InputError("cube: vertices of different varieties");
  }
  if (edges.size() != static_cast<std::size_t>(count) * n)
    throw InputError("cube: wrong number of edge slots");
  CubeDiagram c;
  c.dim_ = n;
  c.vertices_ = std::move(vertices);
  c.edges_.resize(edges.size());
  for (Subset s = 0; s < count; ++s)
    for (int d = 1; d <= n; ++d) {
      if (has_direction(s, d)) continue;
      auto& e = edges[s * n + d - 1];
      auto where = [&] { return bitstring(s, n) + "," + std::to_string(d); };
      if (!e) throw InputError("cube: missing edge " + where());
      if (e->values.size() != c.vertices_[s]->size())
        throw InputError("cube: edge " + where() + " has the wrong length");
      if (full) {
        if (!same_algebra(e->dom, c.vertices_[s]) ||
            !same_algebra(e->cod, c.vertices_[with_direction(s, d)]))
          throw InputError("cube: edge " + where() + " has the wrong endpoints");
        if (!is_homomorphism(*e)) throw InputError("cube: edge " + where() + " is not a homomorphism");
      }
      c.edges_[s * n + d - 1] = Hom{c.vertices_[s], c.vertices_[with_direction(s, d)],
                                    std::move(e->values)};
    }
  for (Subset s = 0; s < count; ++s)
    for (int d = 1; d <= n; ++d)
      for (int e = d + 1; e <= n; ++e) {
        if (has_direction(s, d) || has_direction(s, e)) continue;
        const Hom& a1 = c.edge(s, d);
        const Hom& a2 = c.edge(with_direction(s, d), e);
        const Hom& b1 = c.edge(s, e);
        const Hom& b2 = c.edge(with_direction(s, e), d);
        for (std::size_t x = 0; x < a1.values.size(); ++x)
          if (a2.values[a1.values[x]] != b2.values[b1.values[x]])
            throw InputError("cube: face at " + bitstring(s, n) + " in directions " +
                             std::to_string(d) + "," + std::to_string(e) +
                             " does not commute (element " + std::to_string(x) + ")");
      }
  return c;
}

CubeDiagram CubeDiagram::object(AlgebraPtr a) {
  return build(0, {std::move(a)}, {});
}

CubeDiagram CubeDiagram::arrow(const Hom& f) {
  return build(1, {f.dom, f.cod}, {f, std::nullopt});
}

CubeDiagram CubeDiagram::square(const Hom& top, const Hom& left, const Hom& right,
                                const Hom& bottom) {
  std::vector<std::optional<Hom>> edges(8);
  edges[0 * 2 + 0] = top;
  edges[0 * 2 + 1] = left;
  edges[1 * 2 + 1] = right;
  edges[2 * 2 + 0] = bottom;
  return build(2, {top.dom, top.cod, left.cod, right.cod}, std::move(edges));
}

const Hom& CubeDiagram::edge(Subset s, int d) const {
  if (d < 1 || d > dim_ || has_direction(s, d) || s > full_subset())
    throw InputError("cube: no edge at " + bitstring(s, dim_) + " in direction " +
                     std::to_string(d));
  return edges_[s * dim_ + d - 1];
}

Hom CubeDiagram::path(Subset from, Subset to) const {
  if ((from & ~to) != 0) throw InputError("cube: path against edge orientation");
  Hom h = Hom::identity(vertices_[from]);
  Subset at = from;
  for (int d = 1; d <= dim_; ++d) {
    if (has_direction(to, d) && !has_direction(from, d)) {
      h = compose(edge(at, d), h);
      at = with_direction(at, d);
    }
  }
  return h;
}

bool same_cube(const CubeDiagram& a, const CubeDiagram& b) {
  if (a.dim() != b.dim()) return false;
  for (Subset s = 0; s <= a.full_subset(); ++s) {
    if (!same_algebra(a.vertex(s), b.vertex(s))) return false;
    for (int d = 1; d <= a.dim(); ++d)
      if (!has_direction(s, d) && a.edge(s, d).values != b.edge(s, d).values) return false;
  }
  return true;
}

namespace {

void check_direction(const CubeDiagram& c, int d) {
  if (d < 1 || d > c.dim())
    throw InputError("direction " + std::to_string(d) + " out of range for a " +
                     std::to_string(c.dim()) + "-cube");
}

}  // namespace

CubeDiagram face(const CubeDiagram& c, int d, Side side) {
  check_direction(c, d);
  const int m = c.dim() - 1;
  const bool member = side == Side::Codomain;
  std::vector<AlgebraPtr> vs(1u << m);
  std::vector<std::optional<Hom>> es(vs.size() * m);
  for (Subset s = 0; s < vs.size(); ++s) {
    const Subset full = insert_direction(s, d, member);
    vs[s] = c.vertex(full);
    for (int e = 1; e <= m; ++e) {
      if (has_direction(s, e)) continue;
      es[s * m + e - 1] = c.edge(full, e < d ? e : e + 1);
    }
  }
  return CubeDiagram::build(m, std::move(vs), std::move(es), Validation::Trusted);
}

ArrowView as_arrow(const CubeDiagram& c, int d) {
  check_direction(c, d);
  ArrowView v{face(c, d, Side::Domain), face(c, d, Side::Codomain), {}};
  for (Subset s = 0; s <= v.domain.full_subset(); ++s)
    v.components.push_back(c.edge(insert_direction(s, d, false), d));
  return v;
}

CubeDiagram from_arrow(const CubeDiagram& domain, const CubeDiagram& codomain,
                       const std::vector<Hom>& components, int d, Validation check) {
  if (domain.dim() != codomain.dim()) throw InputError("from_arrow: face dimensions differ");
  const int n = domain.dim() + 1;
  if (d < 1 || d > n) throw InputError("from_arrow: direction out of range");
  if (components.size() != domain.num_vertices())
    throw InputError("from_arrow: wrong number of components");
  std::vector<AlgebraPtr> vs(1u << n);
  std::vector<std::optional<Hom>> es(vs.size() * n);
  for (Subset s = 0; s < vs.size(); ++s) {
    const bool member = has_direction(s, d);
    const Subset fs = drop_direction(s, d);
    const CubeDiagram& f = member ? codomain : domain;
    vs[s] = f.vertex(fs);
    for (int e = 1; e <= n; ++e) {
      if (has_direction(s, e)) continue;
      if (e == d) {
        es[s * n + e - 1] = components[fs];
      } else {
        es[s * n + e - 1] = f.edge(fs, e < d ? e : e - 1);
      }
    }
  }
  return CubeDiagram::build(n, std::move(vs), std::move(es), check);
}

CubeDiagram identity_arrow(const CubeDiagram& f, int d) {
  std::vector<Hom> comps;
  for (Subset s = 0; s <= f.full_subset(); ++s) comps.push_back(Hom::identity(f.vertex(s)));
  return from_arrow(f, f, comps, d, Validation::Trusted);
}

CubeDiagram compose_cubes(const CubeDiagram& c1, const CubeDiagram& c2, int d) {
  auto a1 = as_arrow(c1, d);
  auto a2 = as_arrow(c2, d);
  if (!same_cube(a1.codomain, a2.domain))
    throw InputError("compose_cubes: faces do not match in direction " + std::to_string(d));
  std::vector<Hom> comps;
  for (std::size_t i = 0; i < a1.components.size(); ++i)
    comps.push_back(compose(a2.components[i], a1.components[i]));
  return from_arrow(a1.domain, a2.codomain, comps, d, Validation::Trusted);
}

MappedCube map_vertices(const CubeDiagram& c, const std::vector<Hom>& units) {
  if (units.size() != c.num_vertices()) throw InputError("map_vertices: wrong number of units");
  const int n = c.dim();
  std::vector<AlgebraPtr> vs(units.size());
  for (Subset s = 0; s < vs.size(); ++s) {
    if (!same_algebra(units[s].dom, c.vertex(s)))
      throw InputError("map_vertices: unit domain does not match vertex " + bitstring(s, n));
    if (!is_surjection(units[s])) throw InputError("map_vertices: unit at " + bitstring(s, n) + " is not surjective");
    vs[s] = units[s].cod;
  }
  std::vector<std::optional<Hom>> es(vs.size() * n);
  for (Subset s = 0; s < vs.size(); ++s)
    for (int d = 1; d <= n; ++d) {
      if (has_direction(s, d)) continue;
      es[s * n + d - 1] =
          factor_through(units[s], compose(units[with_direction(s, d)], c.edge(s, d)));
    }
  // Induced maps along surjective units are homomorphisms and commute.
  auto image = CubeDiagram::build(n, std::move(vs), std::move(es), Validation::Trusted);
  auto connecting = from_arrow(c, image, units, 1, Validation::Trusted);
  return {std::move(image), std::move(connecting)};
}

CubeDiagram move_direction(const CubeDiagram& c, int from, int to) {
  check_direction(c, from);
  check_direction(c, to);
  const int n = c.dim();
  // new position of each old direction
  std::vector<int> order;
  for (int d = 1; d <= n; ++d)
    if (d != from) order.push_back(d);
  order.insert(order.begin() + (to - 1), from);  // order[newpos-1] = old
  std::vector<int> new_of_old(n + 1);
  for (int i = 0; i < n; ++i) new_of_old[order[i]] = i + 1;
  auto map_subset = [&](Subset old) {
    Subset s = 0;
    for (int d = 1; d <= n; ++d)
      if (has_direction(old, d)) s = with_direction(s, new_of_old[d]);
    return s;
  };
  std::vector<AlgebraPtr> vs(c.num_vertices());
  std::vector<std::optional<Hom>> es(vs.size() * n);
  for (Subset old = 0; old < vs.size(); ++old) {
    const Subset s = map_subset(old);
    vs[s] = c.vertex(old);
    for (int d = 1; d <= n; ++d)
      if (!has_direction(old, d)) es[s * n + new_of_old[d] - 1] = c.edge(old, d);
  }
  return CubeDiagram::build(n, std::move(vs), std::move(es), Validation::Trusted);
}

}  // namespace qgal
