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

#include "qgal/fibration.hpp"


namespace qgal {

namespace {

std::uint64_t key_of(const std::vector<std::uint64_t>& strides, const std::vector<Elem>& fam) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < fam.size(); ++i) k += strides[i] * fam[i];
  return k;
}

}  // namespace

std::int64_t PuncturedLimit::find(const std::vector<Elem>& family) const {
  auto it = index.find(key_of(strides, family));
  return it == index.end() ? -1 : static_cast<std::int64_t>(it->second);
}

PuncturedLimit punctured_limit(const CubeDiagram& c) {
  const int n = c.dim();
  const Variety v = c.variety();
  if (n == 0) {
    PuncturedLimit out{terminal_algebra(v), {}, {{}}, {}, {}};
    out.index.emplace(0, 0);
    return out;
  }
  // Backtrack over families, checking agreement at {d,e} as soon as both
  // coordinates are fixed.
  std::vector<std::vector<Elem>> families;
  std::vector<Elem> cur(n);
  auto rec = [&](auto&& self, int d) -> void {
    if (d > n) {
      families.push_back(cur);
      return;
    }
    const Subset sd = with_direction(0, d);
    const std::size_t sz = c.vertex(sd)->size();
    for (Elem x = 0; x < sz; ++x) {
      bool ok = true;
      for (int e = 1; e < d && ok; ++e)
        ok = c.edge(sd, e)(x) == c.edge(with_direction(0, e), d)(cur[e - 1]);
      if (!ok) continue;
      cur[d - 1] = x;
      self(self, d + 1);
    }
  };
  rec(rec, 1);
  if (families.empty()) throw InputError("punctured limit is empty");

  std::vector<std::uint64_t> strides(n);
  std::uint64_t radix = 1;
  for (int d = 1; d <= n; ++d) {
    strides[d - 1] = radix;
    radix *= c.vertex(with_direction(0, d))->size();
  }
  std::unordered_map<std::uint64_t, Elem> index;
  index.reserve(families.size() * 2);
  for (Elem i = 0; i < families.size(); ++i) index.emplace(key_of(strides, families[i]), i);
  const std::size_t m = families.size();
  std::vector<Elem> table(m * m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      std::uint64_t k = 0;
      for (int d = 1; d <= n; ++d)
        k += strides[d - 1] * c.vertex(with_direction(0, d))->op(families[i][d - 1], families[j][d - 1]);
      auto it = index.find(k);
      if (it == index.end()) throw PropertyViolation("punctured limit not closed under the operation");
      table[i * m + j] = it->second;
    }
  auto apex = share(FiniteAlgebra::from_trusted(v, m, std::move(table)));
  std::vector<Hom> cone;
  for (int d = 1; d <= n; ++d) {
    std::vector<Elem> vals(m);
    for (Elem i = 0; i < m; ++i) vals[i] = families[i][d - 1];
    cone.push_back(Hom::unchecked(apex, c.vertex(with_direction(0, d)), std::move(vals)));
  }
  return {apex, std::move(cone), std::move(families), std::move(strides), std::move(index)};
}

DFVerdict is_discrete_fibration(const CubeDiagram& c) {
  DFVerdict out;
  out.extension = is_nfold_extension(c);
  out.is_extension = out.extension.is_extension;
  auto lim = punctured_limit(c);
  out.limit_size = lim.apex->size();
  const int n = c.dim();
  const auto& a = c.initial();
  std::vector<Elem> vals(a->size());
  std::vector<Elem> fam(n);
  for (Elem x = 0; x < a->size(); ++x) {
    for (int d = 1; d <= n; ++d) fam[d - 1] = c.edge(0, d)(x);
    const auto i = lim.find(fam);
    if (i < 0) throw PropertyViolation("initial vertex does not map into the punctured limit");
    vals[x] = static_cast<Elem>(i);
  }
  out.comparison = Hom::unchecked(a, lim.apex, std::move(vals));
  out.is_df = out.is_extension && is_isomorphism(*out.comparison);
  return out;
}

bool df_by_recursion(const CubeDiagram& c, int d, int e) {
  const int n = c.dim();
  if (n == 0) return true;
  if (!check_extension(c).is_extension) return false;
  if (n == 1) return is_isomorphism(c.edge(0, 1));
  return df_by_recursion(comparison_cube(c, d, e), 1, 2);
}

bool is_df_recursive(const CubeDiagram& c, int d, int e) {
  const bool rec = df_by_recursion(c, d, e);
  const bool direct = is_discrete_fibration(c).is_df;
  if (rec != direct)
    throw PropertyViolation("recursive and limit-cone fibration tests disagree in directions (" +
                            std::to_string(d) + "," + std::to_string(e) + ")");
  return rec;
}

CubeDiagram df_pullback(const CubeDiagram& df, int d, const CubeDiagram& along) {
  if (!is_discrete_fibration(df).is_df) throw InputError("df_pullback: first cube is not a discrete fibration");
  if (!check_extension(along).is_extension) throw InputError("df_pullback: pulling back along a non-extension");
  auto out = cube_pullback(df, along, d);
  if (!is_discrete_fibration(face(out, 1, Side::Domain)).is_df)
    throw PropertyViolation("pullback of a discrete fibration is not a discrete fibration");
  return out;
}

}  // namespace qgal
