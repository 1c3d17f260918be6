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

// Text and JSON serialisation: .alg tables, catalog files, cube.json and
// verdict reports.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qgal/catalog.hpp"
#include "qgal/fibration.hpp"
#include "qgal/galois.hpp"
#include "qgal/symmetric.hpp"

namespace qgal {

using Json = nlohmann::json;

/// `quandle n` | `rack n` | `group n`, then n rows. Lines starting with
/// '#' and blank lines are ignored on input.
std::string format_alg(const FiniteAlgebra& a);
AlgebraPtr parse_alg(std::string_view text);

/// The header and table without checking the variety axioms.
struct AlgTable {
  Variety variety;
  std::vector<std::vector<Elem>> rows;
};
AlgTable parse_alg_table(std::string_view text);

std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, const std::string& text);
AlgebraPtr read_alg_file(const std::filesystem::path& p);

/// Concatenated records, each preceded by `# id: <order>-<serial>`.
std::string format_catalog(const Catalog& c);
Catalog parse_catalog(std::string_view text);

/// Vertex references in cube.json: a catalog id ("3-2") when a catalog is
/// given, otherwise a path to an .alg file relative to `base_dir`.
struct AlgebraResolver {
  const Catalog* catalog = nullptr;
  std::filesystem::path base_dir;
};

Json algebra_to_json(const FiniteAlgebra& a);
AlgebraPtr algebra_from_json(const Json& j, const AlgebraResolver& r = {});

/// {"dim", "vertices": {bits: algebra}, "edges": {"bits,d": values}}.
/// Edges are keyed by their source vertex and direction.
Json cube_to_json(const CubeDiagram& c);
CubeDiagram cube_from_json(const Json& j, const AlgebraResolver& r = {});
CubeDiagram read_cube_file(const std::filesystem::path& p, const Catalog* catalog = nullptr);

Json hom_to_json(const Hom& h);
Json to_json(const ExtensionVerdict& v);
Json to_json(const DFVerdict& v);
Json to_json(const CoveringVerdict& v);
Json to_json(const SymmetricWitness& w);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace qgal
