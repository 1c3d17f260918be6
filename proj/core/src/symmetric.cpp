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

#include "qgal/symmetric.hpp"

#include "qgal/catalog.hpp"
#include "qgal/errors.hpp"
#include "qgal/parallel.hpp"

namespace qgal {

namespace {

void check_shapes(const SymmetricWitness& w) {
  const int n = w.alpha.dim();
  if (w.tau.dim() != n || w.beta.dim() != n || w.left.dim() != n + 1 || w.right.dim() != n + 1)
    throw InputError("witness: dimensions do not match");
  if (!same_cube(face(w.left, 1, Side::Domain), w.tau)) throw InputError("witness: left leg does not start at tau");
  if (!same_cube(face(w.left, 1, Side::Codomain), w.beta)) throw InputError("witness: left leg does not end at beta");
  if (!same_cube(face(w.right, 1, Side::Domain), w.tau)) throw InputError("witness: right leg does not start at tau");
  if (!same_cube(face(w.right, 1, Side::Codomain), w.alpha))
    throw InputError("witness: right leg does not end at alpha");
}

// τ and its right leg into α; the left leg is found by reflecting τ,
// passing to kernel pairs when the reflection is not a fibration.
std::optional<SymmetricWitness> build_span(const GaloisStructure& g, const CubeDiagram& alpha, CubeDiagram right) {
  const int n = alpha.dim();
  CubeDiagram tau = face(right, 1, Side::Domain);
  for (int round = 0; round <= n; ++round) {
    auto m = reflect_cube0(g, tau);
    if (is_discrete_fibration(m.connecting).is_df)
      return SymmetricWitness{alpha, tau, m.image, m.connecting, right};
    if (round == n) break;
    const int d = round + 1;
    auto step = cube_pullback(tau, tau, d);
    right = compose_cubes(step, right, 1);
    tau = face(step, 1, Side::Domain);
  }
  return std::nullopt;
}

}  // namespace

WitnessCheck verify_symmetric_witness(const GaloisStructure& g, const SymmetricWitness& w, WitnessForm form) {
  check_shapes(w);
  const int n = w.alpha.dim();
  if (!is_discrete_fibration(w.left).is_df) return {false, "left leg is not a discrete fibration"};
  if (!is_discrete_fibration(w.right).is_df) return {false, "right leg is not a discrete fibration"};
  const auto base = g.at_level(0);
  if (form == WitnessForm::Base || n == 1) {
    for (Subset s = 0; s <= w.beta.full_subset(); ++s)
      if (!in_base(base, *w.beta.vertex(s)))
        return {false, "beta vertex " + bitstring(s, n) + " is not in the base"};
  } else {
    if (n != 2) throw InputError("level-form witnesses are supported for n = 2");
    for (Side side : {Side::Domain, Side::Codomain})
      if (!covering_oracle(base, face(w.beta, 1, side)).yes())
        return {false, "beta is not a primitive covering"};
  }
  if (n <= 2) {
    const auto lower = g.at_level(n - 1);
    for (int d = 1; d <= n; ++d)
      if (!is_trivial_covering(lower, w.tau, d).yes())
        throw PropertyViolation("accepted tau is not a trivial covering in direction " + std::to_string(d));
    if (covering_oracle(lower, w.alpha).no())
      throw PropertyViolation("accepted symmetric witness for an extension the oracle rejects");
  }
  return {true, {}};
}

SymmetricWitness construct_witness_from_splitting(const GaloisStructure& g, const CubeDiagram& c,
                                                  const CubeDiagram& e, int d) {
  const auto lower = g.at_level(c.dim() - 1);
  if (!verify_splitting(lower, c, e, d)) throw InputError("construct_witness: e does not split c");
  auto w = build_span(g, c, cube_pullback(c, e, d));
  if (!w) throw PropertyViolation("no fibration from the split pullback into the base");
  return *w;
}

WitnessResult find_symmetric_witness(const GaloisStructure& g, const CubeDiagram& alpha, const WitnessBounds& bounds) {
  const int n = alpha.dim();
  if (n < 1 || n > 2) throw InputError("find_symmetric_witness supports n = 1 and n = 2");
  if (!check_extension(alpha).is_extension) throw InputError("find_symmetric_witness needs an extension");
  const auto lower = g.at_level(n - 1);
  WitnessResult out;
  auto accept = [&](SymmetricWitness w, std::string how) {
    auto chk = verify_symmetric_witness(g, w);
    if (!chk.ok) throw PropertyViolation("constructed witness rejected: " + chk.failure);
    out.verdict.status = CoveringStatus::Yes;
    out.verdict.reason = std::move(how);
    out.witness = std::move(w);
  };
  if (n == 1) {
    auto s = covering_by_search(lower, alpha, bounds.split_bound, bounds.catalog);
    if (s.yes()) {
      accept(construct_witness_from_splitting(g, alpha, *s.witness, 1), s.reason);
      return out;
    }
  } else {
    for (int d = 1; d <= n; ++d) {
      if (alpha.initial()->size() > bounds.split_bound) break;
      if (!verify_splitting(lower, alpha, alpha, d)) continue;
      if (auto w = build_span(g, alpha, cube_pullback(alpha, alpha, d))) {
        accept(std::move(*w), "split by itself in direction " + std::to_string(d));
        return out;
      }
    }
  }
  out.verdict.status = CoveringStatus::Unknown;
  out.verdict.reason = "no witness within bound";
  out.verdict.bound = bounds.split_bound;
  return out;
}

TrivialityResult is_symmetrically_trivial(const GaloisStructure& g, const CubeDiagram& tau,
                                          TrivialityStrategy strategy, std::size_t max_candidates) {
  TrivialityResult out;
  const int n = tau.dim();
  auto canon = reflect_cube0(g, tau);
  if (is_discrete_fibration(canon.connecting).is_df) {
    out.verdict.status = CoveringStatus::Yes;
    out.verdict.reason = "pointwise reflection is a fibration";
    out.fibration = canon.connecting;
    return out;
  }
  if (strategy == TrivialityStrategy::Canonical) {
    out.verdict.status = n <= 1 ? CoveringStatus::No : CoveringStatus::Unknown;
    out.verdict.reason = "pointwise reflection is not a fibration";
    return out;
  }
  // Candidate congruences per vertex: those above the unit's kernel.
  const Subset full = tau.full_subset();
  std::vector<std::vector<Congruence>> cand(full + 1);
  for (Subset s = 0; s <= full; ++s) {
    auto k = reflection_congruence(g, tau.vertex(s));
    for (auto& c : all_congruences(tau.vertex(s)))
      if (k.refines(c)) cand[s].push_back(std::move(c));
  }
  std::vector<std::size_t> pick(full + 1, 0);
  std::size_t tried = 0;
  bool found = false, capped = false;
  auto compatible = [&](Subset s) {
    const auto& cs = cand[s][pick[s]];
    for (int d = 1; d <= n; ++d) {
      if (!has_direction(s, d)) continue;
      const Subset from = s & ~(Subset{1} << (d - 1));
      const auto& cf = cand[from][pick[from]];
      const Hom& h = tau.edge(from, d);
      for (Elem x = 0; x < h.dom->size(); ++x)
        for (Elem y = x + 1; y < h.dom->size(); ++y)
          if (cf.related(x, y) && !cs.related(h(x), h(y))) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, Subset s) -> void {
    if (found || capped) return;
    if (s > full) {
      if (++tried > max_candidates) {
        capped = true;
        return;
      }
      std::vector<Hom> units;
      for (Subset t = 0; t <= full; ++t) units.push_back(quotient(cand[t][pick[t]]).projection);
      auto m = map_vertices(tau, units);
      if (is_discrete_fibration(m.connecting).is_df) {
        found = true;
        out.fibration = m.connecting;
      }
      return;
    }
    for (pick[s] = 0; pick[s] < cand[s].size() && !found && !capped; ++pick[s])
      if (compatible(s)) self(self, s + 1);
  };
  rec(rec, 0);
  if (found) {
    out.verdict.status = CoveringStatus::Yes;
    out.verdict.reason = "fibration onto a quotient of the reflection";
  } else if (capped) {
    out.verdict.status = CoveringStatus::Unknown;
    out.verdict.reason = "candidate budget exhausted";
    out.verdict.bound = max_candidates;
  } else {
    out.verdict.status = CoveringStatus::No;
    out.verdict.reason = "no fibration into the base exists";
  }
  return out;
}

std::string to_string(SweepClass c) {
  switch (c) {
    case SweepClass::AgreeYes: return "agree-yes";
    case SweepClass::AgreeNo: return "agree-no";
    case SweepClass::OracleYesBoundExhausted: return "oracle-yes-bound-exhausted";
    case SweepClass::WitnessYesOracleNo: return "witness-yes-oracle-no";
    case SweepClass::OracleUnknown: return "oracle-unknown";
  }
  return {};
}

std::size_t SweepReport::count(SweepClass c) const {
  std::size_t k = 0;
  for (const auto& i : instances) k += i.cls == c;
  return k;
}

SweepReport main_theorem_sweep(const GaloisStructure& g, const std::vector<CubeDiagram>& corpus,
                               const WitnessBounds& bounds, unsigned threads) {
  SweepReport rep;
  rep.instances = parallel_map(
      corpus.size(),
      [&](std::size_t i) {
        SweepInstance inst;
        inst.index = i;
        const auto& alpha = corpus[i];
        inst.oracle = covering_oracle(g.at_level(alpha.dim() - 1), alpha).status;
        try {
          auto r = find_symmetric_witness(g, alpha, bounds);
          inst.witness = r.verdict.status;
          inst.note = r.verdict.reason;
          inst.span = std::move(r.witness);
        } catch (const PropertyViolation& e) {
          inst.witness = CoveringStatus::Yes;
          inst.cls = SweepClass::WitnessYesOracleNo;
          inst.note = e.what();
          return inst;
        }
        const bool wy = inst.witness == CoveringStatus::Yes;
        switch (inst.oracle) {
          case CoveringStatus::Yes:
            inst.cls = wy ? SweepClass::AgreeYes : SweepClass::OracleYesBoundExhausted;
            break;
          case CoveringStatus::No:
            inst.cls = wy ? SweepClass::WitnessYesOracleNo : SweepClass::AgreeNo;
            break;
          case CoveringStatus::Unknown:
            inst.cls = SweepClass::OracleUnknown;
            break;
        }
        return inst;
      },
      threads);
  return rep;
}

}  // namespace qgal
