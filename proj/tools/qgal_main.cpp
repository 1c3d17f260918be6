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

// qgal: catalogs, single checks, reflections and property sweeps.
//
// Exit codes: 0 clean (a decided No is a clean check), 1 property
// violation, 2 undecided or bound exhausted, 3 input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgal/errors.hpp"
#include "qgal/io.hpp"
#include "qgal/parallel.hpp"
#include "qgal/suites.hpp"

namespace {

using namespace qgal;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUnknown = 2;
constexpr int kInputError = 3;

struct Options {
  std::string structure = "quandle-pi0";
  int level = 0;
  std::size_t order_max = 0;
  int dim = 1;
  std::size_t bound = 12;
  std::size_t search_max = 6;
  int direction = 1;
  unsigned threads = 0;
  bool witnesses = false;
  std::string output;
  std::string catalog;
  std::string what;
  std::string suite;
  std::vector<std::string> files;
};

unsigned thread_count(const Options& o) {
  if (std::getenv("QGAL_THREADS")) return default_threads();
  return o.threads;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.output, text);
  }
}

int status_code(CoveringStatus s) { return s == CoveringStatus::Unknown ? kUnknown : kPass; }

Json verdict(bool yes) { return yes ? "yes" : "no"; }

int run_gen(const Options& o) {
  auto g = GaloisStructure::parse(o.structure, o.level);
  const std::size_t n = o.order_max ? o.order_max : (g.variety() == Variety::Group ? 8 : 4);
  emit(o, format_catalog(enumerate_algebras(g.variety(), n)));
  return kPass;
}

int run_check(const Options& o) {
  if (o.files.empty()) throw InputError("check: no input files");
  std::optional<Catalog> cat;
  if (!o.catalog.empty()) cat = parse_catalog(read_text_file(o.catalog));
  const Catalog* cp = cat ? &*cat : nullptr;
  Json results = Json::array();
  int code = kPass;
  for (const auto& f : o.files) {
    Json r{{"file", f}};
    if (o.what == "axioms") {
      auto t = parse_alg_table(read_text_file(f));
      auto rep = validate_algebra(t.rows, t.variety);
      r["variety"] = to_string(t.variety);
      r["verdict"] = verdict(rep.ok);
      Json fails = Json::array();
      for (const auto& a : rep.failures) fails.push_back(Json{{"axiom", a.axiom}, {"witness", a.witness}});
      r["failures"] = fails;
      results.push_back(std::move(r));
      continue;
    }
    auto c = read_cube_file(f, cp);
    auto g = GaloisStructure::parse(o.structure, o.level);
    if (g.variety() != c.initial()->variety())
      throw InputError(f + ": cube variety does not match --structure " + o.structure);
    if (o.what == "extension") {
      auto v = check_extension(c);
      r.update(to_json(v));
      r["verdict"] = verdict(v.is_extension);
    } else if (o.what == "df") {
      auto v = is_discrete_fibration(c);
      r.update(to_json(v));
      r["verdict"] = verdict(v.is_df);
    } else if (o.what == "trivial" || o.what == "covering" || o.what == "normal") {
      // The cube's dimension fixes the level unless --level says otherwise.
      auto gl = o.level ? g : g.at_level(c.dim() - 1);
      CoveringVerdict v = o.what == "trivial"  ? is_trivial_covering(gl, c, o.direction)
                          : o.what == "normal" ? is_normal_covering(gl, c, o.direction)
                                               : covering_oracle(gl, c);
      r.update(to_json(v));
      code = std::max(code, status_code(v.status));
    } else if (o.what == "symmetric") {
      std::size_t max = std::min<std::size_t>(g.variety() == Variety::Group ? 15 : 6, std::min(o.search_max, o.bound));
      auto search = enumerate_algebras(g.variety(), max);
      auto w = find_symmetric_witness(g, c, {o.bound, &search});
      r.update(to_json(w.verdict));
      if (w.witness) r["span"] = to_json(*w.witness);
      code = std::max(code, status_code(w.verdict.status));
    } else {
      throw InputError("check: unknown property '" + o.what + "'");
    }
    results.push_back(std::move(r));
  }
  emit(o, dump(results.size() == 1 ? results[0] : results));
  return code;
}

int run_reflect(const Options& o) {
  if (o.files.size() != 1) throw InputError("reflect: expected one input file");
  const auto& f = o.files[0];
  Json out;
  if (o.what == "pi0" || o.what == "ab") {
    auto a = read_alg_file(f);
    const bool group = a->variety() == Variety::Group;
    if (group != (o.what == "ab")) throw InputError("reflect: " + o.what + " does not apply to a " + to_string(a->variety()));
    GaloisStructure g{group ? StructureKind::GroupAb : a->variety() == Variety::Rack ? StructureKind::RackPi0
                                                                                       : StructureKind::QuandlePi0,
                      0};
    auto r = reflect0(g, a);
    out = Json{{"object", algebra_to_json(*r.object)}, {"unit", r.unit.values}};
  } else if (o.what == "F1") {
    auto c = read_cube_file(f);
    if (c.dim() != 1) throw InputError("reflect F1: expected a 1-cube");
    auto g = GaloisStructure::parse(o.structure, 0);
    if (g.variety() != c.initial()->variety()) throw InputError("reflect F1: variety does not match --structure");
    auto r = reflect_ext(g, c.edge(0, 1));
    out = Json{{"covering", cube_to_json(CubeDiagram::arrow(r.covering))}, {"unit", cube_to_json(r.unit)}};
  } else {
    throw InputError("reflect: expected pi0, ab or F1");
  }
  emit(o, dump(out));
  return kPass;
}

int run_sweep(const Options& o) {
  SuiteConfig cfg;
  cfg.structure = GaloisStructure::parse(o.structure, o.level);
  cfg.order_max = o.order_max;
  cfg.dim = o.dim;
  cfg.split_bound = o.bound;
  cfg.search_catalog_max = o.search_max;
  cfg.witnesses = o.witnesses || o.dim == 1;
  cfg.threads = thread_count(o);
  auto r = run_suite(o.suite, cfg);
  const auto text = dump(r.report);
  if (o.output.empty()) {
    std::cout << text;
    std::cerr << render_report(r.report);
  } else {
    write_text_file(o.output, text);
    std::cout << render_report(r.report);
  }
  return r.exit_code();
}

int run_report(const Options& o) {
  if (o.files.size() != 1) throw InputError("report: expected one report file");
  Json j;
  try {
    j = Json::parse(read_text_file(o.files[0]));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
  emit(o, render_report(j));
  const auto failures = j.contains("summary") ? j["summary"].value("failures", std::size_t{0}) : 0;
  return failures ? kViolation : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Higher extensions, coverings and discrete fibrations over finite quandles, racks and groups"};
  app.require_subcommand(1);
  auto add_structure = [&](CLI::App* s) {
    s->add_option("--structure", o.structure, "quandle-pi0 | rack-pi0 | group-ab");
    s->add_option("--level", o.level, "Galois structure level (0, 1 or 2)")->check(CLI::Range(0, 2));
  };
  auto add_output = [&](CLI::App* s) { s->add_option("-o,--output", o.output, "write the result here"); };

  auto* gen = app.add_subcommand("gen", "generate a catalog file");
  add_structure(gen);
  add_output(gen);
  gen->add_option("--order-max", o.order_max, "largest order")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "check a property of .alg or cube.json files");
  check->add_option("property", o.what, "axioms | extension | df | trivial | covering | normal | symmetric")
      ->required()
      ->check(CLI::IsMember({"axioms", "extension", "df", "trivial", "covering", "normal", "symmetric"}));
  check->add_option("files", o.files, "input files")->required();
  add_structure(check);
  add_output(check);
  check->add_option("--bound", o.bound, "split bound for searches")->check(CLI::PositiveNumber);
  check->add_option("--search-max", o.search_max, "largest catalog order used by searches")
      ->check(CLI::PositiveNumber);
  check->add_option("--direction", o.direction, "arrow direction for trivial and normal")->check(CLI::Range(1, 8));
  check->add_option("--catalog", o.catalog, "catalog file resolving vertex ids in cubes");

  auto* reflect = app.add_subcommand("reflect", "apply a reflector");
  reflect->add_option("reflector", o.what, "pi0 | ab | F1")->required()->check(CLI::IsMember({"pi0", "ab", "F1"}));
  reflect->add_option("file", o.files, ".alg file (pi0, ab) or 1-cube (F1)")->required();
  add_structure(reflect);
  add_output(reflect);

  auto* sweep = app.add_subcommand("sweep", "run a named property sweep");
  sweep->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  add_structure(sweep);
  add_output(sweep);
  sweep->add_option("--order-max", o.order_max, "largest catalog order")->check(CLI::PositiveNumber);
  sweep->add_option("--dim", o.dim, "extension dimension (main-theorem)")->check(CLI::Range(1, 2));
  sweep->add_option("--bound", o.bound, "split bound")->check(CLI::PositiveNumber);
  sweep->add_option("--search-max", o.search_max, "largest catalog order used by searches")
      ->check(CLI::PositiveNumber);
  sweep->add_flag("--witnesses", o.witnesses, "embed witness spans at every dimension");
  sweep->add_option("--threads", o.threads, "worker threads (QGAL_THREADS takes precedence)");

  auto* report = app.add_subcommand("report", "render a sweep report as text");
  report->add_option("file", o.files, "report JSON")->required();
  add_output(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }
  try {
    if (gen->parsed()) return run_gen(o);
    if (check->parsed()) return run_check(o);
    if (reflect->parsed()) return run_reflect(o);
    if (sweep->parsed()) return run_sweep(o);
    return run_report(o);
  } catch (const InputError& e) {
    std::cerr << "qgal: " << e.what() << "\n";
    return kInputError;
  } catch (const PropertyViolation& e) {
    std::cerr << "qgal: property violation: " << e.what() << "\n";
    return kViolation;
  }
}
