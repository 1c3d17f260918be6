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

#include "qgal/io.hpp"

#include <fstream>
#include <sstream>

#include "qgal/errors.hpp"

namespace qgal {

namespace {

// Strips comments and blank lines; returns whitespace-separated tokens.
std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    for (std::string t; ls >> t;) out.push_back(std::move(t));
  }
  return out;
}

bool is_index(const Json& v) { return v.is_number_integer() && v.get<long long>() >= 0; }

long long to_int(const std::string& t) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer, got '" + t + "'");
  }
  if (used != t.size()) throw InputError("expected an integer, got '" + t + "'");
  return v;
}

std::vector<std::vector<Elem>> table_from_json(const Json& t) {
  if (!t.is_array()) throw InputError("algebra table must be an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (const auto& r : t) {
    if (!r.is_array()) throw InputError("algebra table row must be an array");
    auto& row = rows.emplace_back();
    for (const auto& v : r) {
      if (!is_index(v)) throw InputError("algebra table entries must be non-negative integers");
      row.push_back(v.get<Elem>());
    }
  }
  return rows;
}

}  // namespace

std::string format_alg(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << to_string(a.variety()) << ' ' << a.size() << '\n';
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) out << (y ? " " : "") << a.op(x, y);
    out << '\n';
  }
  return out.str();
}

AlgTable parse_alg_table(std::string_view text) {
  auto t = tokens(text);
  if (t.size() < 2) throw InputError(".alg: missing header line");
  const Variety v = variety_from_string(t[0]);
  const long long n = to_int(t[1]);
  if (n < 1 || n > 4096) throw InputError(".alg: bad order " + t[1]);
  const auto size = static_cast<std::size_t>(n);
  if (t.size() != 2 + size * size)
    throw InputError(".alg: expected " + std::to_string(size * size) + " table entries, got " +
                     std::to_string(t.size() - 2));
  std::vector<std::vector<Elem>> rows(size, std::vector<Elem>(size));
  for (std::size_t i = 0; i < size * size; ++i) {
    const long long e = to_int(t[2 + i]);
    if (e < 0 || e >= n) throw InputError(".alg: entry " + t[2 + i] + " out of range");
    rows[i / size][i % size] = static_cast<Elem>(e);
  }
  return {v, std::move(rows)};
}

AlgebraPtr parse_alg(std::string_view text) {
  auto t = parse_alg_table(text);
  return make_algebra(t.variety, t.rows);
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write " + p.string());
  out << text;
  if (!out) throw InputError("write failed for " + p.string());
}

AlgebraPtr read_alg_file(const std::filesystem::path& p) { return parse_alg(read_text_file(p)); }

std::string format_catalog(const Catalog& c) {
  std::string out;
  for (const auto& e : c.entries) out += "# id: " + e.id + "\n" + format_alg(*e.algebra);
  return out;
}

Catalog parse_catalog(std::string_view text) {
  Catalog cat;
  std::istringstream in{std::string(text)};
  std::string line, id, body;
  bool have_variety = false;
  auto flush = [&] {
    if (id.empty()) {
      if (!tokens(body).empty()) throw InputError("catalog: record without an id header");
      return;
    }
    auto a = parse_alg(body);
    if (have_variety && a->variety() != cat.variety) throw InputError("catalog: mixed varieties");
    cat.variety = a->variety();
    have_variety = true;
    cat.max_order = std::max(cat.max_order, a->size());
    for (const auto& e : cat.entries)
      if (e.id == id) throw InputError("catalog: duplicate id " + id);
    cat.entries.push_back({id, std::move(a)});
  };
  while (std::getline(in, line)) {
    if (line.rfind("# id:", 0) == 0) {
      flush();
      std::istringstream ls(line.substr(5));
      id.clear();
      ls >> id;
      if (id.empty()) throw InputError("catalog: empty id");
      body.clear();
    } else {
      body += line + "\n";
    }
  }
  flush();
  return cat;
}

Json algebra_to_json(const FiniteAlgebra& a) {
  return Json{{"variety", to_string(a.variety())}, {"table", a.rows()}};
}

AlgebraPtr algebra_from_json(const Json& j, const AlgebraResolver& r) {
  if (j.is_string()) {
    const auto ref = j.get<std::string>();
    if (r.catalog) return r.catalog->at(ref).algebra;
    return read_alg_file(r.base_dir / ref);
  }
  if (!j.is_object() || !j.contains("variety") || !j.contains("table"))
    throw InputError("algebra must be a reference or {variety, table}");
  if (!j["variety"].is_string()) throw InputError("algebra variety must be a string");
  return make_algebra(variety_from_string(j["variety"].get<std::string>()), table_from_json(j["table"]));
}

Json cube_to_json(const CubeDiagram& c) {
  const int n = c.dim();
  Json v = Json::object(), e = Json::object();
  for (Subset s = 0; s <= c.full_subset(); ++s) {
    v[bitstring(s, n)] = algebra_to_json(*c.vertex(s));
    for (int d = 1; d <= n; ++d)
      if (!has_direction(s, d)) e[bitstring(s, n) + "," + std::to_string(d)] = c.edge(s, d).values;
  }
  return Json{{"dim", n}, {"vertices", v}, {"edges", e}};
}

CubeDiagram cube_from_json(const Json& j, const AlgebraResolver& r) {
  try {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
      throw InputError("cube: missing integer 'dim'");
    const int n = j["dim"].get<int>();
    if (n < 0 || n > 8) throw InputError("cube: dim out of range");
    const Subset full = (Subset{1} << n) - 1;
    const auto& jv = j.at("vertices");
    std::vector<AlgebraPtr> verts(full + 1);
    for (Subset s = 0; s <= full; ++s) {
      const auto key = bitstring(s, n);
      if (!jv.contains(key)) throw InputError("cube: missing vertex " + key);
      verts[s] = algebra_from_json(jv[key], r);
    }
    if (jv.size() != verts.size()) throw InputError("cube: unexpected vertex keys");
    std::vector<std::optional<Hom>> edges(static_cast<std::size_t>(full + 1) * n);
    const Json empty = Json::object();
    const auto& je = n ? j.at("edges") : empty;
    std::size_t seen = 0;
    for (Subset s = 0; s <= full; ++s)
      for (int d = 1; d <= n; ++d) {
        if (has_direction(s, d)) continue;
        const auto key = bitstring(s, n) + "," + std::to_string(d);
        if (!je.contains(key)) throw InputError("cube: missing edge " + key);
        const auto& arr = je[key];
        if (!arr.is_array()) throw InputError("cube: edge " + key + " must be an array");
        std::vector<Elem> vals;
        for (const auto& x : arr) {
          if (!is_index(x)) throw InputError("cube: edge " + key + " has a bad value");
          vals.push_back(x.get<Elem>());
        }
        edges[static_cast<std::size_t>(s) * n + (d - 1)] =
            Hom::make(verts[s], verts[with_direction(s, d)], std::move(vals));
        ++seen;
      }
    if (je.size() != seen) throw InputError("cube: unexpected edge keys");
    return CubeDiagram::build(n, std::move(verts), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("cube: ") + e.what());
  }
}

CubeDiagram read_cube_file(const std::filesystem::path& p, const Catalog* catalog) {
  Json j;
  try {
    j = Json::parse(read_text_file(p));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(p.string() + ": " + e.what());
  }
  return cube_from_json(j, {catalog, p.parent_path()});
}

Json hom_to_json(const Hom& h) {
  return Json{{"dom", algebra_to_json(*h.dom)}, {"cod", algebra_to_json(*h.cod)}, {"values", h.values}};
}

Json to_json(const ExtensionVerdict& v) {
  Json j{{"is_extension", v.is_extension}};
  if (!v.is_extension) {
    j["part"] = v.part;
    j["path"] = v.path;
    j["vertex"] = v.vertex;
  }
  return j;
}

Json to_json(const DFVerdict& v) {
  Json j{{"is_df", v.is_df}, {"is_extension", v.is_extension}, {"limit_size", v.limit_size}};
  if (v.comparison) j["comparison"] = v.comparison->values;
  if (!v.is_extension) j["extension"] = to_json(v.extension);
  return j;
}

Json to_json(const CoveringVerdict& v) {
  Json j{{"verdict", to_string(v.status)}, {"reason", v.reason}};
  if (!v.counterexample.empty()) j["counterexample"] = v.counterexample;
  if (v.witness) j["witness"] = cube_to_json(*v.witness);
  if (v.unknown() && v.bound) j["bound"] = v.bound;
  return j;
}

Json to_json(const SymmetricWitness& w) {
  return Json{{"alpha", cube_to_json(w.alpha)}, {"tau", cube_to_json(w.tau)}, {"beta", cube_to_json(w.beta)},
              {"left", cube_to_json(w.left)}, {"right", cube_to_json(w.right)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qgal
