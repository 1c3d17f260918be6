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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every criterion runs the corresponding sweep in full.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qgal/io.hpp"
#include "qgal/suites.hpp"

namespace {

using namespace qgal;

const GaloisStructure kQuandles{StructureKind::QuandlePi0, 0};
const GaloisStructure kGroups{StructureKind::GroupAb, 0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SuiteResult sweep(const std::string& suite, const GaloisStructure& g, std::size_t order, int dim = 1) {
  SuiteConfig cfg;
  cfg.structure = g;
  cfg.order_max = order;
  cfg.dim = dim;
  cfg.witnesses = dim == 1;
  return run_suite(suite, cfg);
}

std::size_t check_count(const SuiteResult& r, const std::string& name) {
  for (const auto& c : r.report["checks"])
    if (c["name"] == name) return c["checked"].get<std::size_t>();
  return 0;
}

// Clean means zero failures, zero undecided, and every listed check ran.
void require_clean(Outcome& o, const SuiteResult& r, const std::vector<std::string>& checks) {
  std::ostringstream s;
  s << r.suite << "/" << r.report["structure"].get<std::string>() << ": " << r.checked << " checked, " << r.failures
    << " failures, " << r.unknown << " unknown";
  if (r.failures || r.unknown) o.pass = false;
  for (const auto& c : checks)
    if (check_count(r, c) == 0) {
      o.pass = false;
      s << " [" << c << " never ran]";
    }
  for (const auto& c : r.report["checks"])
    for (const auto& e : c["examples"]) s << "\n      ! " << c["name"].get<std::string>() << ": " << e.get<std::string>();
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += s.str();
}

void require_time(Outcome& o, double secs, double limit) {
  std::ostringstream s;
  s << "; " << secs << " s (limit " << limit << " s)";
  o.detail += s.str();
  if (secs >= limit) o.pass = false;
}

Outcome catalog_correctness() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto r = sweep("catalog", kQuandles, 5);
  require_clean(o, r, {"known-counts", "naive-agreement", "seed-independence", "pairwise-non-isomorphic"});
  std::string counts;
  for (const auto& row : r.report["orders"]) counts += (counts.empty() ? "" : ",") + std::to_string(row["count"].get<int>());
  o.detail += "; counts " + counts;
  if (counts != "1,1,3,7,22") o.pass = false;
  require_time(o, seconds_since(t0), 60);
  return o;
}

Outcome calculus_lemmas() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::string> checks{"weak-right-cancellation", "pullback-preserves-extensions", "pullbacks-reflect-extensions", "barr-kock",
                                        "barr-kock-pullback", "barr-kock-coequalizer", "composite-pullback"};
  require_clean(o, sweep("calculus-lemmas", kQuandles, 4), checks);
  require_clean(o, sweep("calculus-lemmas", kGroups, 8), checks);
  require_time(o, seconds_since(t0), 600);
  return o;
}

Outcome direction_independence() {
  Outcome o;
  require_clean(o, sweep("direction-independence", kQuandles, 4), {"direction-independence"});
  require_clean(o, sweep("direction-independence", kGroups, 8), {"direction-independence"});
  return o;
}

Outcome df_equivalence() {
  Outcome o;
  for (const auto& g : {kQuandles, kGroups}) {
    const std::size_t n = g.variety() == Variety::Group ? 8 : 4;
    require_clean(o, sweep("df-equivalence", g, n), {"df-recursive-agreement"});
    require_clean(o, sweep("df-closure", g, n), {"df-composition", "df-pullback-stability"});
  }
  return o;
}

Outcome strong_birkhoff() {
  Outcome o;
  require_clean(o, sweep("birkhoff", kQuandles, 4), {"reflection-square-double-extension"});
  require_clean(o, sweep("birkhoff", kGroups, 8), {"reflection-square-double-extension"});
  return o;
}

Outcome level_zero_coverings() {
  Outcome o;
  require_clean(o, sweep("factorisation", kQuandles, 4),
                {"trivial-implies-covering", "trivial-factors", "covering-factors"});
  require_clean(o, sweep("quotient-stability", kQuandles, 4), {"quotient-stability"});
  require_clean(o, sweep("covering-pullback", kQuandles, 4), {"covering-pullback-agreement"});
  return o;
}

Outcome centralisation() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  require_clean(o, sweep("centralisation", kQuandles, 5), {"reflector-is-covering", "reflector-minimality"});
  require_time(o, seconds_since(t0), 900);
  return o;
}

void require_main_theorem(Outcome& o, const SuiteResult& r) {
  require_clean(o, r, {"oracle-witness-agreement"});
  const auto& c = r.report["counts"];
  o.detail += "; agree-yes " + std::to_string(c["agree-yes"].get<int>()) + ", agree-no " +
              std::to_string(c["agree-no"].get<int>());
  if (c["agree-yes"] == 0 || c["agree-no"] == 0) o.pass = false;
  if (c["witness-yes-oracle-no"] != 0 || c["oracle-yes-bound-exhausted"] != 0) o.pass = false;
}

Outcome main_theorem_dim1() {
  Outcome o;
  require_main_theorem(o, sweep("main-theorem", kQuandles, 4, 1));
  return o;
}

Outcome main_theorem_dim2() {
  Outcome o;
  require_main_theorem(o, sweep("main-theorem", kGroups, 8, 2));
  return o;
}

Outcome symmetry() {
  Outcome o;
  require_clean(o, sweep("symmetry", kQuandles, 4), {"symmetrically-trivial-is-trivial"});
  require_clean(o, sweep("symmetry", kGroups, 8), {"symmetrically-trivial-is-trivial", "transposition-invariance"});
  return o;
}

#ifdef QGAL_CLI
std::string run_cli(const std::string& threads, const std::string& args, const std::string& out) {
  const std::string cmd = "QGAL_THREADS=" + threads + " \"" QGAL_CLI "\" " + args + " -o \"" + out + "\" > /dev/null";
  if (std::system(cmd.c_str()) != 0) return {};
  return read_text_file(out);
}
#endif

Outcome determinism() {
  Outcome o;
#ifdef QGAL_CLI
  const std::vector<std::string> runs{"sweep main-theorem --structure quandle-pi0 --order-max 4 --dim 1",
                                      "sweep symmetry --structure group-ab --order-max 8",
                                      "sweep df-equivalence --structure quandle-pi0 --order-max 4"};
  const auto dir = std::filesystem::temp_directory_path();
  for (const auto& args : runs) {
    std::vector<std::string> outs;
    for (const char* t : {"1", "2", "5"})
      outs.push_back(run_cli(t, args, (dir / ("qgal_acceptance_" + std::string(t) + ".json")).string()));
    const bool same = !outs[0].empty() && outs[0] == outs[1] && outs[0] == outs[2];
    o.detail += (o.detail.empty() ? "" : "; ") + args + (same ? ": identical" : ": DIFFERENT");
    if (!same) o.pass = false;
  }
  for (const char* t : {"1", "2", "5"}) std::filesystem::remove(dir / ("qgal_acceptance_" + std::string(t) + ".json"));
#else
  o.pass = false;
  o.detail = "built without the command-line tool";
#endif
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"catalog correctness", catalog_correctness},
      {"calculus lemmas", calculus_lemmas},
      {"direction independence", direction_independence},
      {"discrete fibration equivalence and closure", df_equivalence},
      {"strong Birkhoff", strong_birkhoff},
      {"level-0 covering theory", level_zero_coverings},
      {"centralisation reflector", centralisation},
      {"symmetric coverings, dimension 1", main_theorem_dim1},
      {"symmetric coverings, dimension 2", main_theorem_dim2},
      {"symmetric triviality and transposition", symmetry},
      {"determinism across thread counts", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail
              << std::endl;
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
