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

#include <benchmark/benchmark.h>

#include "qgal/catalog.hpp"
#include "qgal/fibration.hpp"
#include "qgal/galois.hpp"
#include "qgal/suites.hpp"
#include "qgal/symmetric.hpp"

namespace {

using namespace qgal;

void BM_EnumerateQuandles(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_algebras(Variety::Quandle, n));
}
BENCHMARK(BM_EnumerateQuandles)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateGroups(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_algebras(Variety::Group, n));
}
BENCHMARK(BM_EnumerateGroups)->Arg(8)->Arg(15)->Unit(benchmark::kMillisecond);

std::vector<CubeDiagram> corpus(Variety v, std::size_t order, int dim) {
  const auto cat = enumerate_algebras(v, order);
  std::vector<CubeDiagram> out;
  enumerate_extension_cubes(cat, dim, order, [&](const CubeDiagram& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

// Limit-cone fibration test over every extension square of the corpus.
void BM_DiscreteFibration(benchmark::State& state) {
  const auto cubes = corpus(state.range(0) ? Variety::Group : Variety::Quandle, state.range(0) ? 8 : 4, 2);
  for (auto _ : state)
    for (const auto& c : cubes) benchmark::DoNotOptimize(is_discrete_fibration(c).is_df);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cubes.size()));
}
BENCHMARK(BM_DiscreteFibration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CoveringOracle(benchmark::State& state) {
  const auto arrows = corpus(Variety::Quandle, 5, 1);
  const GaloisStructure g{StructureKind::QuandlePi0, 0};
  for (auto _ : state)
    for (const auto& c : arrows) benchmark::DoNotOptimize(covering_oracle(g, c).status);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(arrows.size()));
}
BENCHMARK(BM_CoveringOracle)->Unit(benchmark::kMillisecond);

void BM_SymmetricWitness(benchmark::State& state) {
  const auto arrows = corpus(Variety::Quandle, 4, 1);
  const GaloisStructure g{StructureKind::QuandlePi0, 0};
  const auto search = enumerate_algebras(Variety::Quandle, 6);
  WitnessBounds bounds;
  bounds.catalog = &search;
  for (auto _ : state)
    for (const auto& c : arrows) benchmark::DoNotOptimize(find_symmetric_witness(g, c, bounds).verdict.status);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(arrows.size()));
}
BENCHMARK(BM_SymmetricWitness)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state, const char* suite) {
  SuiteConfig cfg;
  cfg.structure = GaloisStructure{StructureKind::QuandlePi0, 0};
  cfg.order_max = 3;
  cfg.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(suite, cfg).checked);
}
BENCHMARK_CAPTURE(BM_Sweep, df_equivalence, "df-equivalence")->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, main_theorem, "main-theorem")->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
