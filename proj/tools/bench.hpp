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

// Scaling benchmark shared by the CLI, the microbenchmarks and the
// acceptance suite.

#ifndef RANKOPT_TOOLS_BENCH_HPP_
#define RANKOPT_TOOLS_BENCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rankopt/inference.hpp"
#include "rankopt/instance.hpp"
#include "rankopt/loss.hpp"

namespace rankopt::tools {

enum class BenchAlgo { kOptRanks, kOptRanksMedianOfMedians, kSortBaseline };

BenchAlgo ParseBenchAlgo(const std::string& name);
std::string BenchAlgoName(BenchAlgo algo);

// Positive scores ~ N(1, 1), negative scores ~ N(0, 1), drawn from a
// stream seeded by (seed, p, n).
ScoredInstance MakeBenchInstance(std::size_t num_positive,
                                 std::size_t num_negative, std::uint64_t seed);

InferenceResult RunAlgo(BenchAlgo algo, const ScoredInstance& instance,
                        const LossContext& ctx, std::uint64_t seed);

struct BenchConfig {
  std::string loss = "ap";
  std::vector<std::size_t> p_list = {32};
  std::vector<std::size_t> n_list = {1024, 4096, 16384};
  std::vector<BenchAlgo> algos = {BenchAlgo::kOptRanks,
                                  BenchAlgo::kSortBaseline};
  // Grid pairs every p with every n; zip pairs them position by position.
  bool zip = false;
  int repeats = 3;
  std::uint64_t seed = 0;
  // Report wall_ns as 0 so the output is byte-stable.
  bool deterministic = false;

  void Validate() const;
};

// Fills p_list, n_list and pairing for one of the sweeps "total" (1:10
// positive to negative ratio), "negatives" (p fixed at 32) or "positives"
// (n fixed at 2^18).
void ApplyPreset(const std::string& preset, BenchConfig& config);

struct BenchRow {
  BenchAlgo algo;
  std::size_t p;
  std::size_t n;
  int repeat;
  std::int64_t wall_ns;
  std::uint64_t comparisons;
  double objective;
};

struct BenchPoint {
  BenchAlgo algo;
  std::size_t p;
  std::size_t n;
  // Lower medians over the repeats.
  std::int64_t median_wall_ns;
  std::uint64_t median_comparisons;
  double objective;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchPoint> points;
  // Largest relative objective disagreement between algorithms on the same
  // instance.
  double max_objective_gap = 0.0;
};

BenchReport RunBench(const BenchConfig& config);

// CSV with header algo,loss,p,n,repeat,wall_ns,comparisons.
void WriteBenchCsv(std::ostream& out, const BenchConfig& config,
                   const BenchReport& report);

}  // namespace rankopt::tools

#endif  // RANKOPT_TOOLS_BENCH_HPP_
