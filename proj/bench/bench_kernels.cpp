/*
   Copyright 2026 The wtg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference loops against the OpenMP kernels on the same inputs.
// Arg(0) is the serial path, Arg(1) the parallel one.

#include <benchmark/benchmark.h>

#include "wtg/fixtures.hpp"
#include "wtg/invariants.hpp"
#include "wtg/kernels.hpp"
#include "wtg/weight.hpp"

namespace {

using namespace wtg;

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

const Multigraph& wide_graph() {
  static const Multigraph g = fixtures::random_graphs(7, 1, 18, 18).front().graph;
  return g;
}

void BM_ComponentTable(benchmark::State& state) {
  const Multigraph& g = wide_graph();
  for (auto _ : state) benchmark::DoNotOptimize(component_table(g, mode(state)));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << g.edge_count()));
}

void BM_BucketFold(benchmark::State& state) {
  const Multigraph& g = wide_graph();
  const int n = g.edge_count();
  const auto keys = component_table(g, Execution::Serial);
  const auto ext = extension_table(WeightFn::ones(n, 2), Execution::Serial);
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = (i * 5) % n;
  const FoldWeights w{ext, image, true, true};
  for (auto _ : state) benchmark::DoNotOptimize(bucket_fold(keys, g.vertex_count() + 1, w, mode(state)));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void BM_LabelSumTable(benchmark::State& state) {
  const int m = 8;
  WeightFn f(m, 3);
  int i = 0;
  for (auto bits : f.subsets()) f.set(SubsetMask(m, bits), Rational(i++ % 7 - 3));
  const auto ext = extension_table(f, Execution::Serial);
  for (auto _ : state) benchmark::DoNotOptimize(label_sum_table(m, ext, mode(state)));
}

void BM_ExtensionTable(benchmark::State& state) {
  const WeightFn f = WeightFn::ones(18, 3);
  for (auto _ : state) benchmark::DoNotOptimize(extension_table(f, mode(state)));
}

void BM_ClosedFormChromatic(benchmark::State& state) {
  const Multigraph g = fixtures::figure2_g1();
  const WeightFn f = WeightFn::ones(10, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(invariant_closed_form(g, f, InvariantKind::Chromatic, mode(state)).polynomial);
}

BENCHMARK(BM_ComponentTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BucketFold)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LabelSumTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtensionTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedFormChromatic)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
