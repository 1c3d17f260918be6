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

#include "qgal/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <sstream>

#include "qgal/errors.hpp"
#include "qgal/parallel.hpp"

namespace qgal {

void CheckTally::fail(std::string what) {
  ++checked;
  ++failures;
  if (examples.size() < 5) examples.push_back(std::move(what));
}

void CheckTally::merge(const CheckTally& o) {
  checked += o.checked;
  failures += o.failures;
  unknown += o.unknown;
  for (const auto& e : o.examples)
    if (examples.size() < 5) examples.push_back(e);
}

namespace {

using Tallies = std::vector<CheckTally>;

enum class Outcome { Skip, Pass, Fail, Undecided };

Outcome ok(bool b) { return b ? Outcome::Pass : Outcome::Fail; }

// Runs one check, turning a thrown violation into a recorded failure.
template <class F, class L>
void run_check(CheckTally& t, L&& label, F&& f) {
  Outcome o;
  std::string why;
  try {
    o = f();
  } catch (const PropertyViolation& e) {
    o = Outcome::Fail;
    why = e.what();
  } catch (const InputError& e) {
    o = Outcome::Fail;
    why = std::string("input error: ") + e.what();
  }
  switch (o) {
    case Outcome::Skip: break;
    case Outcome::Pass: t.pass(); break;
    case Outcome::Undecided: t.undecided(); break;
    case Outcome::Fail: t.fail(why.empty() ? label() : label() + ": " + why); break;
  }
}

Tallies make_tallies(const std::vector<std::string>& names) {
  Tallies t;
  for (const auto& n : names) t.push_back(CheckTally{n, 0, 0, 0, {}});
  return t;
}

std::string grid_label(const CatalogEntry& e, const Grid& g) {
  std::string s = e.id + " [";
  for (std::size_t i = 0; i < g.theta.size(); ++i) s += (i ? "," : "") + std::to_string(g.theta[i]);
  return s + "]";
}

using AlgebraJob = std::function<void(const CatalogEntry&, const CongruenceLattice&, Tallies&)>;

// One job per catalog entry up to the order cap, merged in catalog order.
Tallies over_catalog(const Catalog& cat, std::size_t order_max, const std::vector<std::string>& names,
                     unsigned threads, const AlgebraJob& job) {
  std::vector<const CatalogEntry*> es;
  for (const auto& e : cat.entries)
    if (e.algebra->size() <= order_max) es.push_back(&e);
  auto parts = parallel_map(
      es.size(),
      [&](std::size_t i) {
        Tallies t = make_tallies(names);
        auto lat = congruence_lattice(es[i]->algebra);
        job(*es[i], lat, t);
        return t;
      },
      threads);
  Tallies out = make_tallies(names);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < out.size(); ++i) out[i].merge(p[i]);
  return out;
}

std::vector<int> iota_axes(int n) {
  std::vector<int> a(n);
  for (int i = 0; i < n; ++i) a[i] = i;
  return a;
}

// Four-dimensional grids grow past 10^6 configurations beyond this.
bool small_for_4d(const CatalogEntry& e, const CongruenceLattice& lat) {
  return e.algebra->size() <= 4 && lat.elements.size() <= 5;
}

bool is_ext(const CubeDiagram& c) { return check_extension(c).is_extension; }
bool is_df(const CubeDiagram& c) { return is_discrete_fibration(c).is_df; }

// Composable pair along `axis` of a grid whose extent there is 3.
struct Composable {
  CubeDiagram first, second, composite;
};
Composable composable(const CongruenceLattice& lat, const Grid& g, int axis) {
  const int n = static_cast<int>(g.extents.size());
  std::vector<int> base(n, 0), axes(n);
  // Direction 1 of each cube is the long axis.
  axes[0] = axis;
  for (int i = 0, k = 1; i < n; ++i)
    if (i != axis) axes[k++] = i;
  auto a = grid_cube(lat, g, base, axes);
  base[axis] = 1;
  auto b = grid_cube(lat, g, base, axes);
  return {a, b, compose_cubes(a, b, 1)};
}

// Congruence indices of the vertices of a grid sub-cube. Direction d moves
// along axes[d-1] by steps[d-1].
using Thetas = std::vector<std::size_t>;
Thetas cube_thetas(const Grid& g, const std::vector<int>& base, const std::vector<int>& axes,
                   const std::vector<int>& steps) {
  const int n = static_cast<int>(axes.size());
  Thetas th;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < g.extents.size(); ++i) {
      int coord = base[i];
      for (int d = 1; d <= n; ++d)
        if (axes[d - 1] == static_cast<int>(i) && has_direction(s, d)) coord += steps[d - 1];
      idx += stride * static_cast<std::size_t>(coord);
      stride *= static_cast<std::size_t>(g.extents[i]);
    }
    th.push_back(g.theta[idx]);
  }
  return th;
}

// Sub-cubes identified by their congruences, with the extension and
// fibration tests memoised. Grids revisit the same sub-cubes many times.
class CubeCache {
 public:
  struct Info {
    bool ext = false;
    bool df = false;
  };

  explicit CubeCache(const CongruenceLattice& lat) : lat_(lat) {}

  CubeDiagram cube(const Thetas& th) const {
    int n = 0;
    while ((std::size_t{1} << n) < th.size()) ++n;
    std::vector<AlgebraPtr> vs;
    for (auto t : th) vs.push_back(lat_.quotients[t].algebra);
    std::vector<std::optional<Hom>> es(th.size() * n);
    for (Subset s = 0; s < th.size(); ++s)
      for (int d = 1; d <= n; ++d)
        if (!has_direction(s, d))
          es[s * n + d - 1] =
              factor_through(lat_.quotients[th[s]].projection, lat_.quotients[th[with_direction(s, d)]].projection);
    return CubeDiagram::build(n, std::move(vs), std::move(es), Validation::Trusted);
  }

  const Info& info(const Thetas& th) {
    std::string key(th.begin(), th.end());  // lattices stay below 256 elements
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto v = is_discrete_fibration(cube(th));
    return memo_.emplace(std::move(key), Info{v.is_extension, v.is_df}).first->second;
  }

  // Both legs must be arrows between extensions of one dimension lower.
  template <class Cospan>
  bool legs_between_extensions(const Cospan& cs) {
    return info(face_of(cs.alpha, 1, Side::Domain)).ext && info(face_of(cs.e, 1, Side::Domain)).ext &&
           info(face_of(cs.e, 1, Side::Codomain)).ext;
  }

  // False if this (α, e) pair was seen before; grids repeat cospans.
  bool fresh_pair(const Thetas& a, const Thetas& b) {
    std::string key(a.begin(), a.end());
    key.push_back('|');
    key.append(b.begin(), b.end());
    return pairs_.insert(std::move(key)).second;
  }

  static Thetas face_of(const Thetas& th, int d, Side side) {
    Thetas out;
    for (Subset s = 0; s < th.size(); ++s)
      if (has_direction(s, d) == (side == Side::Codomain)) out.push_back(th[s]);
    return out;
  }

 private:
  const CongruenceLattice& lat_;
  std::unordered_map<std::string, Info> memo_;
  std::unordered_set<std::string> pairs_;
};

// Composable pair along `axis` of a grid whose extent there is 3, and the
// composite; direction 1 of each cube is the long axis.
struct ComposableThetas {
  Thetas first, second, composite;
};
ComposableThetas composable_thetas(const Grid& g, int axis) {
  const int n = static_cast<int>(g.extents.size());
  std::vector<int> base(n, 0), axes(n), steps(n, 1);
  axes[0] = axis;
  for (int i = 0, k = 1; i < n; ++i)
    if (i != axis) axes[k++] = i;
  ComposableThetas out;
  out.first = cube_thetas(g, base, axes, steps);
  steps[0] = 2;
  out.composite = cube_thetas(g, base, axes, steps);
  steps[0] = 1;
  base[axis] = 1;
  out.second = cube_thetas(g, base, axes, steps);
  return out;
}

// Two arrows (direction 1) into a common codomain face, cut out of a grid
// with all extents 2: α runs along axis 1 at axis 0 = 1, e runs along
// axis 0 at axis 1 = 1.
struct CospanThetas {
  Thetas alpha, e;
};
CospanThetas cospan_thetas(const Grid& g) {
  const int n = static_cast<int>(g.extents.size());
  std::vector<int> base(n, 0), axes, steps(n - 1, 1);
  base[0] = 1;
  axes.push_back(1);
  for (int i = 2; i < n; ++i) axes.push_back(i);
  CospanThetas out;
  out.alpha = cube_thetas(g, base, axes, steps);
  base[0] = 0;
  base[1] = 1;
  axes[0] = 0;
  out.e = cube_thetas(g, base, axes, steps);
  return out;
}

// ---------------------------------------------------------------------------
// Suites over congruence grids.

Tallies calculus_lemmas(const SuiteConfig& cfg, const Catalog& cat) {
  return over_catalog(
      cat, cfg.order_max,
      {"weak-right-cancellation", "composite-pullback", "pullback-preserves-extensions",
       "pullbacks-reflect-extensions", "barr-kock", "barr-kock-pullback", "barr-kock-coequalizer"},
      cfg.threads, [&](const CatalogEntry& entry, const CongruenceLattice& lat, Tallies& t) {
        CubeCache cache(lat);
        // Squares and 3-cubes pasted along direction 1.
        for (int n : {2, 3}) {
          std::vector<int> ext(n, 2);
          ext[0] = 3;
          for_each_grid(lat, ext, [&](const Grid& g) {
            auto label = [&] { return grid_label(entry, g); };
            auto th = composable_thetas(g, 0);
            const auto a = cache.info(th.first), b = cache.info(th.second), c = cache.info(th.composite);
            const bool faces = cache.info(CubeCache::face_of(th.first, 1, Side::Domain)).ext &&
                               cache.info(CubeCache::face_of(th.first, 1, Side::Codomain)).ext;
            run_check(t[0], label, [&] {
              if (!faces || !c.ext) return Outcome::Skip;
              return ok(b.ext);
            });
            run_check(t[1], label, [&] {
              if (!a.ext || !b.ext || !c.df) return Outcome::Skip;
              return ok(a.df && b.df);
            });
            return true;
          });
        }
        // Pullbacks along extensions, for arrows of 1-cubes and of squares.
        for (int n : {3, 4}) {
          if (n == 4 && !small_for_4d(entry, lat)) break;
          for_each_grid(lat, std::vector<int>(n, 2), [&](const Grid& g) {
            auto label = [&] { return grid_label(entry, g); };
            auto cs = cospan_thetas(g);
            if (!cache.info(cs.e).ext || !cache.legs_between_extensions(cs) || !cache.fresh_pair(cs.alpha, cs.e))
              return true;
            const bool alpha_ext = cache.info(cs.alpha).ext;
            std::optional<CubeDiagram> pb;
            run_check(t[2], label, [&] {
              pb = pull_back_along(cache.cube(cs.alpha), cache.cube(cs.e), 1);
              return alpha_ext ? ok(is_ext(*pb)) : Outcome::Skip;
            });
            if (pb)
              run_check(t[3], label, [&] {
                if (!is_ext(*pb)) return Outcome::Skip;
                return ok(alpha_ext);
              });
            return true;
          });
        }
        // Barr-Kock on squares and 3-cubes in every direction.
        for (int n : {2, 3}) {
          for_each_grid(lat, std::vector<int>(n, 2), [&](const Grid& g) {
            auto label = [&] { return grid_label(entry, g); };
            auto sigma = grid_cube(lat, g, std::vector<int>(n, 0), iota_axes(n));
            for (int d = 1; d <= n; ++d) {
              auto lbl = [&] { return label() + " d=" + std::to_string(d); };
              auto kp = kernel_pair_cube(sigma, d);
              run_check(t[4], lbl, [&] {
                const bool s = is_ext(sigma);
                return ok(s == is_ext(kp.first) && s == is_ext(kp.second));
              });
              run_check(t[5], lbl, [&] { return ok(is_df(sigma) == is_df(kp.first)); });
              run_check(t[6], lbl, [&] {
                if (!is_ext(sigma)) return Outcome::Skip;
                auto co = pointwise_coequalizer(kp.first, kp.second, d);
                auto arrow = as_arrow(sigma, d);
                auto units = as_arrow(co.connecting, 1);
                for (std::size_t s = 0; s < arrow.components.size(); ++s)
                  if (!(kernel_congruence(units.components[s]) == kernel_congruence(arrow.components[s])))
                    return Outcome::Fail;
                return Outcome::Pass;
              });
            }
            return true;
          });
        }
      });
}

Tallies direction_independence(const SuiteConfig& cfg, const Catalog& cat) {
  return over_catalog(cat, cfg.order_max, {"direction-independence"}, cfg.threads,
                      [&](const CatalogEntry& entry, const CongruenceLattice& lat, Tallies& t) {
                        for (int n = 2; n <= 3; ++n)
                          for_each_grid(lat, std::vector<int>(n, 2), [&](const Grid& g) {
                            auto c = grid_cube(lat, g, std::vector<int>(n, 0), iota_axes(n));
                            run_check(t[0], [&] { return grid_label(entry, g); }, [&] {
                              const bool ref = check_extension(c, 1, 2).is_extension;
                              for (int d = 1; d <= n; ++d)
                                for (int e = 1; e <= n; ++e)
                                  if (d != e && check_extension(c, d, e).is_extension != ref) return Outcome::Fail;
                              return ok(is_nfold_extension(c).is_extension == ref);
                            });
                            return true;
                          });
                      });
}

Tallies df_equivalence(const SuiteConfig& cfg, const Catalog& cat) {
  return over_catalog(cat, cfg.order_max, {"df-recursive-agreement"}, cfg.threads,
                      [&](const CatalogEntry& entry, const CongruenceLattice& lat, Tallies& t) {
                        for (int n = 2; n <= 3; ++n)
                          for_each_grid(lat, std::vector<int>(n, 2), [&](const Grid& g) {
                            auto c = grid_cube(lat, g, std::vector<int>(n, 0), iota_axes(n));
                            if (!is_ext(c)) return true;
                            run_check(t[0], [&] { return grid_label(entry, g); }, [&] {
                              const bool direct = is_df(c);
                              for (int d = 1; d <= n; ++d)
                                for (int e = 1; e <= n; ++e)
                                  if (d != e && df_by_recursion(c, d, e) != direct) return Outcome::Fail;
                              return Outcome::Pass;
                            });
                            return true;
                          });
                      });
}

Tallies df_closure(const SuiteConfig& cfg, const Catalog& cat) {
  return over_catalog(
      cat, cfg.order_max, {"df-composition", "df-pullback-stability", "pullback-of-extensions-is-df"}, cfg.threads,
      [&](const CatalogEntry& entry, const CongruenceLattice& lat, Tallies& t) {
        CubeCache cache(lat);
        for (int n : {2, 3})
          for (int axis = 0; axis < n; ++axis) {
            std::vector<int> ext(n, 2);
            ext[axis] = 3;
            for_each_grid(lat, ext, [&](const Grid& g) {
              auto th = composable_thetas(g, axis);
              if (!cache.info(th.first).df || !cache.info(th.second).df) return true;
              run_check(t[0], [&] { return grid_label(entry, g); }, [&] {
                return ok(is_df(compose_cubes(cache.cube(th.first), cache.cube(th.second), 1)));
              });
              return true;
            });
          }
        for (int n : {3, 4}) {
          if (n == 4 && !small_for_4d(entry, lat)) break;
          for_each_grid(lat, std::vector<int>(n, 2), [&](const Grid& g) {
            auto label = [&] { return grid_label(entry, g); };
            auto cs = cospan_thetas(g);
            if (!cache.info(cs.e).ext || !cache.legs_between_extensions(cs) || !cache.fresh_pair(cs.alpha, cs.e))
              return true;
            const auto alpha = cache.info(cs.alpha);
            run_check(t[1], label, [&] {
              if (!alpha.df) return Outcome::Skip;
              auto pb = df_pullback(cache.cube(cs.alpha), 1, cache.cube(cs.e));
              return ok(is_df(face(pb, 1, Side::Domain)));
            });
            run_check(t[2], label, [&] {
              if (!alpha.ext) return Outcome::Skip;
              return ok(is_df(cube_pullback(cache.cube(cs.alpha), cache.cube(cs.e), 1)));
            });
            return true;
          });
        }
      });
}

// Surjections out of each entry, as 1-cubes.
void for_each_surjection(const CongruenceLattice& lat, const std::function<void(const CubeDiagram&, const Grid&)>& fn) {
  for_each_grid(lat, {2}, [&](const Grid& g) {
    fn(grid_cube(lat, g, {0}, {0}), g);
    return true;
  });
}

Tallies birkhoff(const SuiteConfig& cfg, const Catalog& cat) {
  const auto g0 = cfg.structure.at_level(0);
  return over_catalog(cat, cfg.order_max, {"reflection-square-double-extension", "reflection-square-pushout"},
                      cfg.threads, [&](const CatalogEntry& entry, const CongruenceLattice& lat, Tallies& t) {
                        for_each_surjection(lat, [&](const CubeDiagram& f, const Grid& g) {
                          auto label = [&] { return grid_label(entry, g); };
                          auto rs = reflect_cube0(g0, f).connecting;
                          run_check(t[0], label, [&] { return ok(is_strongly_birkhoff(g0, {f}).pass()); });
                          run_check(t[1], label, [&] { return ok(initial_pushout(rs, 1, 2).is_pushout); });
                        });
                      });
}

Outcome implies(const CoveringVerdict& a, const CoveringVerdict& b) {
  if (!a.yes()) return a.unknown() ? Outcome::Undecided : Outcome::Skip;
  if (b.unknown()) return Outcome::Undecided;
  return ok(b.yes());
}

Tallies factorisation(const SuiteConfig& cfg, const Catalog& cat) {
  const auto g0 = cfg.structure.at_level(0);
  return over_catalog(
      cat, cfg.order_max, {"trivial-implies-covering", "trivial-factors", "covering-factors"}, cfg.threads,
      [&](const CatalogEntry& entry, const CongruenceLattice& lat, Tallies& t) {
        for_each_surjection(lat, [&](const CubeDiagram& f, const Grid& g) {
          run_check(t[0], [&] { return grid_label(entry, g); },
                    [&] { return implies(is_trivial_covering(g0, f, 1), covering_oracle(g0, f)); });
        });
        for_each_grid(lat, {3}, [&](const Grid& g) {
          auto label = [&] { return grid_label(entry, g); };
          auto cp = composable(lat, g, 0);
          run_check(t[1], label, [&] {
            if (!is_trivial_covering(g0, cp.composite, 1).yes()) return Outcome::Skip;
            return ok(is_trivial_covering(g0, cp.first, 1).yes() && is_trivial_covering(g0, cp.second, 1).yes());
          });
          run_check(t[2], label, [&] {
            auto v = covering_oracle(g0, cp.composite);
            if (v.unknown()) return Outcome::Undecided;
            if (!v.yes()) return Outcome::Skip;
            return ok(covering_oracle(g0, cp.first).yes() && covering_oracle(g0, cp.second).yes());
          });
          return true;
        });
      });
}

Tallies quotient_stability(const SuiteConfig& cfg, const Catalog& cat) {
  const auto g0 = cfg.structure.at_level(0);
  return over_catalog(cat, cfg.order_max, {"quotient-stability"}, cfg.threads,
                      [&](const CatalogEntry& entry, const CongruenceLattice& lat, Tallies& t) {
                        for_each_grid(lat, {2, 2}, [&](const Grid& g) {
                          auto sq = grid_cube(lat, g, {0, 0}, {0, 1});
                          if (!is_ext(sq)) return true;
                          for (int d = 1; d <= 2; ++d)
                            run_check(t[0], [&] { return grid_label(entry, g) + " d=" + std::to_string(d); }, [&] {
                              return implies(covering_oracle(g0, face(sq, d, Side::Domain)),
                                             covering_oracle(g0, face(sq, d, Side::Codomain)));
                            });
                          return true;
                        });
                      });
}

Tallies covering_pullback(const SuiteConfig& cfg, const Catalog& cat) {
  const auto g0 = cfg.structure.at_level(0);
  return over_catalog(
      cat, cfg.order_max, {"covering-pullback-agreement", "trivial-covering-pullback"}, cfg.threads,
      [&](const CatalogEntry& entry, const CongruenceLattice& lat, Tallies& t) {
        for_each_grid(lat, {2, 2}, [&](const Grid& g) {
          auto sq = grid_cube(lat, g, {0, 0}, {0, 1});
          if (!is_df(sq)) return true;
          // The d-domain face is the pullback of the d-codomain face.
          for (int d = 1; d <= 2; ++d) {
            auto label = [&] { return grid_label(entry, g) + " d=" + std::to_string(d); };
            auto top = face(sq, d, Side::Domain), bottom = face(sq, d, Side::Codomain);
            run_check(t[0], label, [&] {
              auto a = covering_oracle(g0, top), b = covering_oracle(g0, bottom);
              if (a.unknown() || b.unknown()) return Outcome::Undecided;
              return ok(a.status == b.status);
            });
            run_check(t[1], label, [&] {
              return implies(is_trivial_covering(g0, bottom, 1), is_trivial_covering(g0, top, 1));
            });
          }
          return true;
        });
      });
}

Tallies centralisation(const SuiteConfig& cfg, const Catalog& cat) {
  const auto g0 = cfg.structure.at_level(0);
  return over_catalog(
      cat, cfg.order_max, {"reflector-is-covering", "reflector-minimality"}, cfg.threads,
      [&](const CatalogEntry& entry, const CongruenceLattice& lat, Tallies& t) {
        for_each_surjection(lat, [&](const CubeDiagram& fc, const Grid& g) {
          auto label = [&] { return grid_label(entry, g); };
          const Hom& f = fc.edge(0, 1);
          run_check(t[0], label, [&] {
            auto r = reflect_ext(g0, f);
            return ok(covering_oracle(g0, r.covering).yes());
          });
          run_check(t[1], label, [&] {
            auto c = centralization_congruence(g0, f);
            auto k = kernel_congruence(f);
            if (!c.refines(k)) return Outcome::Fail;
            for (std::size_t i = 0; i < lat.elements.size(); ++i) {
              const auto& d = lat.elements[i];
              if (!d.refines(k)) continue;
              auto induced = factor_through(lat.quotients[i].projection, f);
              if (covering_oracle(g0, induced).yes() && !c.refines(d)) return Outcome::Fail;
            }
            return Outcome::Pass;
          });
        });
      });
}

Tallies symmetry(const SuiteConfig& cfg, const Catalog& cat) {
  const auto g0 = cfg.structure.at_level(0);
  const auto g1 = cfg.structure.at_level(1);
  return over_catalog(
      cat, cfg.order_max, {"symmetrically-trivial-is-trivial", "transposition-invariance"}, cfg.threads,
      [&](const CatalogEntry& entry, const CongruenceLattice& lat, Tallies& t) {
        for_each_grid(lat, {2, 2}, [&](const Grid& g) {
          auto sq = grid_cube(lat, g, {0, 0}, {0, 1});
          if (!is_ext(sq)) return true;
          auto label = [&] { return grid_label(entry, g); };
          run_check(t[0], label, [&] {
            auto r = is_symmetrically_trivial(g0, sq, TrivialityStrategy::Search, cfg.triviality_budget);
            if (r.verdict.unknown()) return Outcome::Undecided;
            if (!r.verdict.yes()) return Outcome::Skip;
            return ok(is_trivial_covering(g1, sq, 1).yes() && is_trivial_covering(g1, sq, 2).yes());
          });
          run_check(t[1], label, [&] {
            auto a = covering_oracle(g1, sq);
            auto b = covering_oracle(g1, move_direction(sq, 2, 1));
            if (a.unknown() && b.unknown()) return Outcome::Skip;  // no oracle at this level
            return ok(a.status == b.status);
          });
          return true;
        });
      });
}

// ---------------------------------------------------------------------------
// Catalog and main theorem.

const std::vector<std::size_t>& known_counts(Variety v) {
  // Isomorphism classes by order, starting at order 1.
  static const std::vector<std::size_t> quandles{1, 1, 3, 7, 22, 73};
  static const std::vector<std::size_t> racks{1, 2, 6, 19, 74, 353};
  static const std::vector<std::size_t> groups{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1};
  return v == Variety::Group ? groups : v == Variety::Rack ? racks : quandles;
}

Tallies catalog_suite(const SuiteConfig& cfg, Json& orders) {
  Tallies t = make_tallies({"known-counts", "naive-agreement", "seed-independence", "pairwise-non-isomorphic"});
  const Variety v = cfg.structure.variety();
  auto cat = enumerate_algebras(v, cfg.order_max);
  std::optional<Catalog> shuffled;
  if (v != Variety::Group) shuffled = enumerate_algebras(v, cfg.order_max, {0x9e3779b97f4a7c15ull});
  orders = Json::array();
  for (std::size_t k = 1; k <= cfg.order_max; ++k) {
    auto here = cat.of_order(k);
    Json row{{"order", k}, {"count", here.size()}};
    auto label = [&] { return "order " + std::to_string(k); };
    const auto& known = known_counts(v);
    if (k <= known.size()) {
      row["expected"] = known[k - 1];
      run_check(t[0], label, [&] { return ok(here.size() == known[k - 1]); });
    }
    if (v != Variety::Group && k <= 4) {
      const auto naive = naive_quandles(k, v == Variety::Rack).size();
      row["naive"] = naive;
      run_check(t[1], label, [&] { return ok(naive == here.size()); });
    }
    if (shuffled) {
      auto other = shuffled->of_order(k);
      bool same = other.size() == here.size();
      for (std::size_t i = 0; same && i < here.size(); ++i) same = *other[i] == *here[i];
      row["seed_agrees"] = same;
      run_check(t[2], label, [&] { return ok(same); });
    }
    run_check(t[3], label, [&] {
      for (std::size_t i = 0; i < here.size(); ++i)
        for (std::size_t j = i + 1; j < here.size(); ++j)
          if (find_isomorphism(here[i], here[j])) return Outcome::Fail;
      return Outcome::Pass;
    });
    orders.push_back(std::move(row));
  }
  return t;
}

std::size_t variety_cap(Variety v) { return v == Variety::Group ? 15 : 6; }

SuiteResult finish(const std::string& name, const SuiteConfig& cfg, const Tallies& t, Json extra);

SuiteResult main_theorem(const SuiteConfig& cfg) {
  const int n = cfg.dim;
  if (n < 1 || n > 2) throw InputError("main-theorem: --dim must be 1 or 2");
  const Variety v = cfg.structure.variety();
  auto cat = enumerate_algebras(v, cfg.order_max);
  std::vector<CubeDiagram> corpus;
  std::vector<std::string> labels;
  for (const auto& e : cat.entries) {
    auto lat = congruence_lattice(e.algebra);
    for_each_grid(lat, std::vector<int>(n, 2), [&](const Grid& g) {
      auto c = grid_cube(lat, g, std::vector<int>(n, 0), iota_axes(n));
      if (is_ext(c)) {
        corpus.push_back(std::move(c));
        labels.push_back(grid_label(e, g));
      }
      return true;
    });
  }
  const std::size_t search_max = std::min(variety_cap(v), std::min(cfg.search_catalog_max, cfg.split_bound));
  auto search = enumerate_algebras(v, search_max);
  auto rep = main_theorem_sweep(cfg.structure, corpus, {cfg.split_bound, &search}, cfg.threads);

  Tallies t = make_tallies({"oracle-witness-agreement"});
  const bool spans = cfg.witnesses;
  Json instances = Json::array();
  std::map<std::string, std::size_t> counts;
  for (auto c : {SweepClass::AgreeYes, SweepClass::AgreeNo, SweepClass::OracleYesBoundExhausted,
                 SweepClass::WitnessYesOracleNo, SweepClass::OracleUnknown})
    counts[to_string(c)] = rep.count(c);
  for (const auto& inst : rep.instances) {
    const auto& label = labels[inst.index];
    switch (inst.cls) {
      case SweepClass::AgreeYes:
      case SweepClass::AgreeNo: t[0].pass(); break;
      case SweepClass::OracleYesBoundExhausted:
      case SweepClass::OracleUnknown: t[0].undecided(); break;
      case SweepClass::WitnessYesOracleNo: t[0].fail(label + ": " + inst.note); break;
    }
    Json sizes = Json::array();
    const auto& a = corpus[inst.index];
    for (Subset s = 0; s <= a.full_subset(); ++s) sizes.push_back(a.vertex(s)->size());
    Json j{{"index", inst.index},      {"source", label},
           {"sizes", sizes},           {"oracle", to_string(inst.oracle)},
           {"witness", to_string(inst.witness)}, {"class", to_string(inst.cls)},
           {"note", inst.note}};
    if (inst.span && spans) j["span"] = to_json(*inst.span);
    instances.push_back(std::move(j));
  }
  Json extra{{"dim", n}, {"split_bound", cfg.split_bound}, {"search_catalog_max", search_max},
             {"counts", counts}, {"instances", std::move(instances)}};
  return finish("main-theorem", cfg, t, std::move(extra));
}

SuiteResult finish(const std::string& name, const SuiteConfig& cfg, const Tallies& t, Json extra) {
  SuiteResult r;
  r.suite = name;
  Json checks = Json::array();
  for (const auto& c : t) {
    checks.push_back(Json{{"name", c.name}, {"checked", c.checked}, {"failures", c.failures},
                          {"unknown", c.unknown}, {"examples", c.examples}});
    r.checked += c.checked;
    r.failures += c.failures;
    r.unknown += c.unknown;
  }
  r.report = Json{{"suite", name},
                  {"structure", cfg.structure.name()},
                  {"level", cfg.structure.level},
                  {"order_max", cfg.order_max},
                  {"checks", std::move(checks)},
                  {"summary", {{"checked", r.checked}, {"failures", r.failures}, {"unknown", r.unknown}}}};
  for (auto& [k, v] : extra.items()) r.report[k] = v;
  return r;
}

using GridSuite = Tallies (*)(const SuiteConfig&, const Catalog&);

struct SuiteEntry {
  const char* name;
  std::size_t default_order;        // quandles and racks
  std::size_t default_group_order;  // groups
  GridSuite run;                    // null for the special suites
};

const std::vector<SuiteEntry>& suite_table() {
  static const std::vector<SuiteEntry> s{
      {"catalog", 5, 15, nullptr},
      {"calculus-lemmas", 4, 8, calculus_lemmas},
      {"direction-independence", 4, 8, direction_independence},
      {"df-equivalence", 4, 8, df_equivalence},
      {"df-closure", 4, 8, df_closure},
      {"birkhoff", 4, 8, birkhoff},
      {"factorisation", 4, 8, factorisation},
      {"quotient-stability", 4, 8, quotient_stability},
      {"covering-pullback", 4, 8, covering_pullback},
      {"centralisation", 5, 8, centralisation},
      {"symmetry", 4, 8, symmetry},
      {"main-theorem", 4, 8, nullptr},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suite_table()) n.push_back(s.name);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  auto it = std::find_if(suite_table().begin(), suite_table().end(), [&](const SuiteEntry& s) { return name == s.name; });
  if (it == suite_table().end()) throw InputError("unknown suite '" + name + "'");
  SuiteConfig cfg = config;
  const Variety v = cfg.structure.variety();
  if (cfg.order_max == 0) cfg.order_max = v == Variety::Group ? it->default_group_order : it->default_order;
  if (cfg.order_max > variety_cap(v))
    throw InputError("order " + std::to_string(cfg.order_max) + " exceeds the catalog cap " +
                     std::to_string(variety_cap(v)));
  if (cfg.split_bound == 0) throw InputError("split bound must be positive");
  if (name == "catalog") {
    Json orders;
    auto t = catalog_suite(cfg, orders);
    return finish(name, cfg, t, Json{{"orders", std::move(orders)}});
  }
  if (name == "main-theorem") return main_theorem(cfg);
  auto cat = enumerate_algebras(v, cfg.order_max);
  return finish(name, cfg, it->run(cfg, cat), Json::object());
}

std::string render_report(const Json& r) {
  if (!r.is_object()) throw InputError("report must be a JSON object");
  if (r.empty()) return "0 instances\n";
  if (!r.contains("suite") || !r["suite"].is_string() || !r.contains("summary") || !r["summary"].is_object())
    throw InputError("not a suite report");
  std::ostringstream out;
  auto num = [](const Json& j, const char* k) -> std::size_t {
    if (!j.contains(k)) return 0;
    if (!j[k].is_number_unsigned() && !j[k].is_number_integer()) throw InputError(std::string("bad field ") + k);
    return j[k].get<std::size_t>();
  };
  try {
    out << "suite " << r["suite"].get<std::string>();
    if (r.contains("structure")) out << " (" << r["structure"].get<std::string>();
    if (r.contains("order_max")) out << ", order <= " << num(r, "order_max");
    if (r.contains("dim")) out << ", dim " << num(r, "dim");
    if (r.contains("structure")) out << ")";
    out << "\n";
    if (r.contains("checks"))
      for (const auto& c : r["checks"]) {
        out << "  " << c.at("name").get<std::string>() << ": " << num(c, "checked") << " checked, "
            << num(c, "failures") << " failures, " << num(c, "unknown") << " unknown\n";
        for (const auto& e : c.value("examples", Json::array())) out << "    ! " << e.get<std::string>() << "\n";
      }
    if (r.contains("orders"))
      for (const auto& o : r["orders"]) {
        out << "  order " << num(o, "order") << ": " << num(o, "count");
        if (o.contains("expected")) out << " (expected " << num(o, "expected") << ")";
        out << "\n";
      }
    if (r.contains("counts"))
      for (const auto& [k, v] : r["counts"].items()) out << "  " << k << ": " << v.get<std::size_t>() << "\n";
    if (r.contains("instances"))
      for (const auto& i : r["instances"]) {
        const auto cls = i.value("class", std::string());
        if (cls == "witness-yes-oracle-no" || cls == "oracle-yes-bound-exhausted")
          out << "  ! #" << num(i, "index") << " " << i.value("source", std::string()) << ": " << cls << " ("
              << i.value("note", std::string()) << ")\n";
      }
    const auto& s = r["summary"];
    const auto f = num(s, "failures");
    out << num(s, "checked") << " instances, " << f << " failures, " << num(s, "unknown") << " unknown\n";
    if (f) out << "FAILED: " << f << " property violation" << (f == 1 ? "" : "s") << "\n";
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return out.str();
}

}  // namespace qgal
