/*
 * Copyright 2026 The rankopt Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <cstdint>

#include "bench.hpp"
#include "rankopt/inference.hpp"
#include "rankopt/loss.hpp"

namespace {

using rankopt::tools::BenchAlgo;

constexpr std::int64_t kPositives = 32;

void RunInference(benchmark::State& state, BenchAlgo algo,
                  const rankopt::RankLoss& loss) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto instance = rankopt::tools::MakeBenchInstance(kPositives, n, 0);
  const rankopt::LossContext ctx(loss, kPositives,
                                 static_cast<std::int64_t>(n));
  std::uint64_t comparisons = 0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto result = rankopt::tools::RunAlgo(algo, instance, ctx, seed++);
    comparisons += result.comparisons;
    benchmark::DoNotOptimize(result.objective);
  }
  state.counters["cmp_per_n"] = benchmark::Counter(
      static_cast<double>(comparisons) /
      static_cast<double>(state.iterations() * n));
  state.SetComplexityN(state.range(0));
}

void BM_OptRanksAp(benchmark::State& state) {
  RunInference(state, BenchAlgo::kOptRanks,
               rankopt::RankLoss::AveragePrecision());
}

void BM_SortBaselineAp(benchmark::State& state) {
  RunInference(state, BenchAlgo::kSortBaseline,
               rankopt::RankLoss::AveragePrecision());
}

void BM_OptRanksNdcg(benchmark::State& state) {
  RunInference(state, BenchAlgo::kOptRanks, rankopt::RankLoss::Ndcg());
}

void BM_SortBaselineNdcg(benchmark::State& state) {
  RunInference(state, BenchAlgo::kSortBaseline, rankopt::RankLoss::Ndcg());
}

// Median of medians pivots; kept to show the cost of the worst-case bound.
void BM_OptRanksMedianOfMediansAp(benchmark::State& state) {
  RunInference(state, BenchAlgo::kOptRanksMedianOfMedians,
               rankopt::RankLoss::AveragePrecision());
}

}  // namespace

BENCHMARK(BM_OptRanksAp)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)
    ->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_SortBaselineAp)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)
    ->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_OptRanksNdcg)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SortBaselineNdcg)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptRanksMedianOfMediansAp)
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 18)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
