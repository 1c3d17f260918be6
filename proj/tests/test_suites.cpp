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

#include <gtest/gtest.h>

#include "qgal/errors.hpp"
#include "qgal/suites.hpp"

namespace qgal {
namespace {

SuiteConfig small(StructureKind k, std::size_t order) {
  SuiteConfig cfg;
  cfg.structure = GaloisStructure{k, 0};
  cfg.order_max = order;
  return cfg;
}

const Json& check(const SuiteResult& r, const std::string& name) {
  for (const auto& c : r.report["checks"])
    if (c["name"] == name) return c;
  throw std::runtime_error("no check " + name);
}

TEST(Suites, NamesAreRunnable) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 12u);
  for (const auto& n : names) {
    auto r = run_suite(n, small(StructureKind::QuandlePi0, 3));
    EXPECT_EQ(r.suite, n);
    EXPECT_EQ(r.failures, 0u) << n << "\n" << render_report(r.report);
    EXPECT_EQ(r.exit_code(), r.unknown ? 2 : 0) << n;
  }
}

TEST(Suites, CatalogCountsQuandles) {
  auto r = run_suite("catalog", small(StructureKind::QuandlePi0, 4));
  ASSERT_EQ(r.report["orders"].size(), 4u);
  std::vector<int> counts;
  for (const auto& row : r.report["orders"]) counts.push_back(row["count"].get<int>());
  EXPECT_EQ(counts, (std::vector<int>{1, 1, 3, 7}));
  EXPECT_GT(check(r, "naive-agreement")["checked"].get<int>(), 0);
}

TEST(Suites, CatalogCountsRacks) {
  auto r = run_suite("catalog", small(StructureKind::RackPi0, 4));
  std::vector<int> counts;
  for (const auto& row : r.report["orders"]) counts.push_back(row["count"].get<int>());
  EXPECT_EQ(counts, (std::vector<int>{1, 2, 6, 19}));
}

TEST(Suites, MainTheoremSmallQuandles) {
  auto r = run_suite("main-theorem", small(StructureKind::QuandlePi0, 3));
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.unknown, 0u);
  const auto& counts = r.report["counts"];
  EXPECT_GT(counts["agree-yes"].get<int>(), 0);
  EXPECT_GT(counts["agree-no"].get<int>(), 0);
  for (const auto& inst : r.report["instances"])
    if (inst["class"] == "agree-yes") EXPECT_TRUE(inst.contains("span"));
}

TEST(Suites, WitnessesCanBeOmitted) {
  auto cfg = small(StructureKind::QuandlePi0, 3);
  cfg.witnesses = false;
  auto r = run_suite("main-theorem", cfg);
  for (const auto& inst : r.report["instances"]) EXPECT_FALSE(inst.contains("span"));
}

TEST(Suites, ReportHasNoTimingAndIsThreadIndependent) {
  auto a = small(StructureKind::GroupAb, 6);
  auto b = a;
  a.threads = 1;
  b.threads = 4;
  EXPECT_EQ(dump(run_suite("df-equivalence", a).report), dump(run_suite("df-equivalence", b).report));
}

TEST(Suites, BadConfigurations) {
  EXPECT_THROW(run_suite("no-such-suite", small(StructureKind::QuandlePi0, 3)), InputError);
  EXPECT_THROW(run_suite("catalog", small(StructureKind::QuandlePi0, 9)), InputError);
  EXPECT_THROW(run_suite("catalog", small(StructureKind::GroupAb, 16)), InputError);
  auto cfg = small(StructureKind::GroupAb, 4);
  cfg.dim = 5;
  EXPECT_THROW(run_suite("main-theorem", cfg), InputError);
}

TEST(Suites, TallyExamplesAreCapped) {
  CheckTally t{"x", 0, 0, 0, {}};
  for (int i = 0; i < 20; ++i) t.fail("bad " + std::to_string(i));
  EXPECT_EQ(t.checked, 20u);
  EXPECT_EQ(t.failures, 20u);
  EXPECT_EQ(t.examples.size(), 5u);
  EXPECT_EQ(t.examples.front(), "bad 0");
  CheckTally u{"x", 0, 0, 0, {}};
  u.undecided();
  t.merge(u);
  EXPECT_EQ(t.checked, 21u);
  EXPECT_EQ(t.unknown, 1u);
}

TEST(Render, Summaries) {
  EXPECT_NE(render_report(Json::object()).find("0 instances"), std::string::npos);
  auto r = run_suite("birkhoff", small(StructureKind::QuandlePi0, 3));
  auto text = render_report(r.report);
  EXPECT_NE(text.find("birkhoff"), std::string::npos);
  EXPECT_NE(text.find(std::to_string(r.checked) + " instances, 0 failures"), std::string::npos) << text;
  EXPECT_EQ(text.find("FAILED"), std::string::npos);

  auto broken = r.report;
  broken["checks"][0]["failures"] = 1;
  broken["checks"][0]["examples"] = Json::array({"something"});
  broken["summary"]["failures"] = 1;
  EXPECT_NE(render_report(broken).find("FAILED"), std::string::npos) << render_report(broken);
  EXPECT_THROW(render_report(Json::array({1, 2})), InputError);
  EXPECT_THROW(render_report(Json{{"checks", 3}}), InputError);
}

}  // namespace
}  // namespace qgal
