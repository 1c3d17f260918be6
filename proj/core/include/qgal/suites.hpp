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

// Named property sweeps over catalog corpora. Reports are JSON and contain
// no timing, so equal configurations give byte-identical output.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qgal/io.hpp"

namespace qgal {

struct SuiteConfig {
  GaloisStructure structure;
  std::size_t order_max = 0;  // 0 picks the suite default for the variety
  int dim = 1;                // main-theorem only
  std::size_t split_bound = 12;
  std::size_t search_catalog_max = 6;  // catalog used by covering searches
  std::size_t triviality_budget = 2000;
  bool witnesses = true;  // embed witness spans in main-theorem reports
  unsigned threads = 0;
};

struct CheckTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t unknown = 0;
  std::vector<std::string> examples;  // first few failures

  void pass() { ++checked; }
  void fail(std::string what);
  void undecided() { ++checked, ++unknown; }
  void merge(const CheckTally& other);
};

struct SuiteResult {
  std::string suite;
  Json report;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t unknown = 0;

  /// 0 clean, 1 property violation, 2 unknowns or exhausted bounds.
  int exit_code() const { return failures ? 1 : unknown ? 2 : 0; }
};

const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite or a configuration it cannot run.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

/// Plain-text summary of a suite report. Throws InputError if the JSON does
/// not look like a report.
std::string render_report(const Json& report);

}  // namespace qgal
