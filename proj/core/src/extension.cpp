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

#include "qgal/extension.hpp"

#include <algorithm>
#include <numeric>

namespace qgal {

ComparisonMap comparison_hom(const CubeDiagram& sq, int d) {
  if (sq.dim() != 2) throw InputError("comparison_hom needs a square");
  if (d != 1 && d != 2) throw InputError("comparison_hom: direction out of range");
  const int e = 3 - d;
  const Subset vd = with_direction(0, d), ve = with_direction(0, e);
  auto pb = pullback(sq.edge(vd, e), sq.edge(ve, d));
  auto cmp = pullback_comparison(pb, sq.edge(0, d), sq.edge(0, e));
  return {std::move(pb), std::move(cmp)};
}

CubePullback pullback_faces(const ArrowView& f, const ArrowView& g) {
  if (!same_cube(f.codomain, g.codomain)) throw InputError("pullback: codomain faces differ");
  const CubeDiagram& x = f.domain;
  const CubeDiagram& y = g.domain;
  const int m = x.dim();
  std::vector<Pullback> parts;
  std::vector<Hom> to_left, to_right;
  std::vector<AlgebraPtr> vs;
  for (Subset s = 0; s <= x.full_subset(); ++s) {
    parts.push_back(pullback(f.components[s], g.components[s]));
    vs.push_back(parts.back().algebra);
    to_left.push_back(parts.back().to_left);
    to_right.push_back(parts.back().to_right);
  }
  std::vector<std::optional<Hom>> es(vs.size() * m);
  for (Subset s = 0; s < vs.size(); ++s)
    for (int e = 1; e <= m; ++e) {
      if (has_direction(s, e)) continue;
      const auto& p = parts[s];
      es[s * m + e - 1] = pullback_comparison(parts[with_direction(s, e)],
                                              compose(x.edge(s, e), p.to_left),
                                              compose(y.edge(s, e), p.to_right));
    }
  auto apex = CubeDiagram::build(m, std::move(vs), std::move(es), Validation::Trusted);
  for (Subset s = 0; s <= x.full_subset(); ++s) {
    to_left[s].dom = apex.vertex(s);
    to_right[s].dom = apex.vertex(s);
  }
  return {std::move(apex), std::move(to_left), std::move(to_right), std::move(parts)};
}

CubeDiagram comparison_cube(const CubeDiagram& c, int d, int e) {
  if (c.dim() < 2 || d == e || d < 1 || e < 1 || d > c.dim() || e > c.dim())
    throw InputError("comparison_cube: bad directions");
  const int e_in_d = e > d ? e - 1 : e;  // e inside a d-face
  const int d_in_e = d > e ? d - 1 : d;  // d inside an e-face
  auto f = as_arrow(face(c, d, Side::Codomain), e_in_d);  // X10 -> X11
  auto g = as_arrow(face(c, e, Side::Codomain), d_in_e);  // X01 -> X11
  auto to_x10 = as_arrow(face(c, e, Side::Domain), d_in_e);
  auto to_x01 = as_arrow(face(c, d, Side::Domain), e_in_d);
  auto pb = pullback_faces(f, g);
  std::vector<Hom> comps;
  for (Subset s = 0; s <= to_x10.domain.full_subset(); ++s)
    comps.push_back(pullback_comparison(pb.parts[s], to_x10.components[s],
                                        to_x01.components[s]));
  return from_arrow(to_x10.domain, pb.apex, comps, 1, Validation::Trusted);
}

ExtensionVerdict check_extension(const CubeDiagram& c, int d, int e) {
  const int n = c.dim();
  if (n == 0) return {};
  if (n == 1) {
    if (is_surjection(c.edge(0, 1))) return {};
    return {false, "edge", {}, "0"};
  }
  const std::pair<int, Side> faces[] = {
      {d, Side::Domain}, {d, Side::Codomain}, {e, Side::Domain}, {e, Side::Codomain}};
  for (auto [dir, side] : faces) {
    auto v = check_extension(face(c, dir, side));
    if (!v.is_extension) {
      v.path.insert(v.path.begin(), std::string(side == Side::Domain ? "dom" : "cod") + ":" +
                                        std::to_string(dir));
      return v;
    }
  }
  auto v = check_extension(comparison_cube(c, d, e));
  if (!v.is_extension) {
    if (n == 2) v.part = "comparison";
    v.path.insert(v.path.begin(), "cmp:" + std::to_string(d) + "," + std::to_string(e));
  }
  return v;
}

ExtensionVerdict is_double_extension(const CubeDiagram& square) {
  if (square.dim() != 2) throw InputError("is_double_extension needs a square");
  return is_nfold_extension(square);
}

ExtensionVerdict is_nfold_extension(const CubeDiagram& c) {
  const int n = c.dim();
  if (n < 2) return check_extension(c);
  auto base = check_extension(c, 1, 2);
  for (int d = 1; d <= n; ++d)
    for (int e = 1; e <= n; ++e) {
      if (d == e || (d == 1 && e == 2)) continue;
      auto v = check_extension(c, d, e);
      if (v.is_extension != base.is_extension)
        throw PropertyViolation("extension verdict depends on direction: (1,2) vs (" +
                                std::to_string(d) + "," + std::to_string(e) + ")");
    }
  return base;
}

CubeDiagram cube_pullback(const CubeDiagram& f, const CubeDiagram& g, int d) {
  if (f.dim() != g.dim()) throw InputError("cube_pullback: dimensions differ");
  auto af = as_arrow(f, d);
  auto ag = as_arrow(g, d);
  if (!same_cube(af.codomain, ag.codomain))
    throw InputError("cube_pullback: codomain mismatch");
  const bool f_ext = check_extension(f).is_extension;
  const bool g_ext = check_extension(g).is_extension;
  if (!f_ext && !g_ext)
    throw InputError("cube_pullback: neither leg is an extension");
  auto pb = pullback_faces(af, ag);
  auto pulled = from_arrow(pb.apex, ag.domain, pb.to_right, d, Validation::Trusted);
  std::vector<Hom> legs;
  for (Subset t = 0; t <= pulled.full_subset(); ++t) {
    const Subset s = drop_direction(t, d);
    legs.push_back(has_direction(t, d) ? ag.components[s] : pb.to_left[s]);
  }
  auto out = from_arrow(pulled, f, legs, 1, Validation::Trusted);
  if (g_ext && !check_extension(face(out, d + 1, Side::Domain)).is_extension)
    throw PropertyViolation("pullback of an extension is not an extension");
  if (f_ext && !check_extension(pulled).is_extension)
    throw PropertyViolation("pullback of an extension is not an extension");
  return out;
}

KernelPairCube kernel_pair_cube(const CubeDiagram& sigma, int d) {
  auto a = as_arrow(sigma, d);
  auto pb = pullback_faces(a, a);
  auto first = from_arrow(pb.apex, a.domain, pb.to_left, d, Validation::Trusted);
  auto second = from_arrow(pb.apex, a.domain, pb.to_right, d, Validation::Trusted);
  std::optional<CubeDiagram> cube;
  if (check_extension(sigma).is_extension) cube = cube_pullback(sigma, sigma, d);
  return {pb.apex, std::move(first), std::move(second), std::move(cube)};
}

MappedCube pointwise_coequalizer(const CubeDiagram& first, const CubeDiagram& second,
                                 int d) {
  auto a1 = as_arrow(first, d);
  auto a2 = as_arrow(second, d);
  if (!same_cube(a1.domain, a2.domain) || !same_cube(a1.codomain, a2.codomain))
    throw InputError("pointwise_coequalizer: cubes are not parallel");
  std::vector<Hom> units;
  for (std::size_t s = 0; s < a1.components.size(); ++s) {
    auto q = coequalizer(a1.components[s], a2.components[s]).projection;
    q.dom = a1.codomain.vertex(static_cast<Subset>(s));
    units.push_back(std::move(q));
  }
  return map_vertices(a1.codomain, units);
}

InitialPushout initial_pushout(const CubeDiagram& c, int z_dir, int phi_dir) {
  if (z_dir == phi_dir) throw InputError("initial_pushout: directions must differ");
  const int z_in_face = z_dir > phi_dir ? z_dir - 1 : z_dir;
  auto zb = as_arrow(face(c, phi_dir, Side::Codomain), z_in_face);
  auto za = as_arrow(face(c, phi_dir, Side::Domain), z_in_face);
  for (std::size_t s = 1; s < zb.components.size(); ++s) {
    const Hom& h = zb.components[s];
    std::vector<Elem> id(h.dom->size());
    std::iota(id.begin(), id.end(), Elem{0});
    if (!same_algebra(h.dom, h.cod) || h.values != id)
      throw InputError("initial_pushout: leg is not the identity away from the initial vertex");
  }
  const Hom& s_a = za.components[0];
  const Hom& s_b = zb.components[0];
  const Hom& phi = c.edge(0, phi_dir);
  std::vector<Elem> first_in_class(s_a.cod->size(), static_cast<Elem>(-1));
  std::vector<ElemPair> seed;
  for (Elem x = 0; x < s_a.dom->size(); ++x) {
    Elem& f = first_in_class[s_a.values[x]];
    if (f == static_cast<Elem>(-1)) f = x;
    seed.emplace_back(phi.values[x], phi.values[f]);
  }
  auto q = quotient(congruence_closure(phi.cod, seed));
  auto cmp = factor_through(q.projection, s_b);
  const bool iso = is_isomorphism(cmp);
  return {q.algebra, q.projection, std::move(cmp), iso};
}

}  // namespace qgal
