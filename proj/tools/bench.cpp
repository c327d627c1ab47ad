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

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <tuple>

#include "rankopt/error.hpp"

namespace rankopt::tools {
namespace {

template <typename T>
T LowerMedian(std::vector<T> values) {
  const auto middle = values.begin() +
                      static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), middle, values.end());
  return *middle;
}

std::vector<std::pair<std::size_t, std::size_t>> Pairs(
    const BenchConfig& config) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (config.zip) {
    for (std::size_t k = 0; k < config.p_list.size(); ++k) {
      pairs.emplace_back(config.p_list[k], config.n_list[k]);
    }
    return pairs;
  }
  for (const auto p : config.p_list) {
    for (const auto n : config.n_list) pairs.emplace_back(p, n);
  }
  return pairs;
}

}  // namespace

BenchAlgo ParseBenchAlgo(const std::string& name) {
  if (name == "qs") return BenchAlgo::kOptRanks;
  if (name == "qs-mom") return BenchAlgo::kOptRanksMedianOfMedians;
  if (name == "sort") return BenchAlgo::kSortBaseline;
  throw ContractError("unknown algorithm '" + name +
                      "' (expected qs, qs-mom or sort)");
}

std::string BenchAlgoName(BenchAlgo algo) {
  switch (algo) {
    case BenchAlgo::kOptRanks:
      return "qs";
    case BenchAlgo::kOptRanksMedianOfMedians:
      return "qs-mom";
    case BenchAlgo::kSortBaseline:
      return "sort";
  }
  return "unknown";
}

ScoredInstance MakeBenchInstance(std::size_t num_positive,
                                 std::size_t num_negative,
                                 std::uint64_t seed) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(num_positive),
                    static_cast<std::uint64_t>(num_negative)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  std::vector<double> positives(num_positive);
  std::vector<double> negatives(num_negative);
  for (auto& score : positives) score = 1.0 + gaussian(rng);
  for (auto& score : negatives) score = gaussian(rng);
  return ScoredInstance::Preprocess(positives, negatives);
}

InferenceResult RunAlgo(BenchAlgo algo, const ScoredInstance& instance,
                        const LossContext& ctx, std::uint64_t seed) {
  InferenceOptions options;
  options.seed = seed;
  switch (algo) {
    case BenchAlgo::kOptRanks:
      return OptRanks(instance, ctx, options);
    case BenchAlgo::kOptRanksMedianOfMedians:
      options.selection = SelectionMode::kMedianOfMedians;
      return OptRanks(instance, ctx, options);
    case BenchAlgo::kSortBaseline:
      return SortBaseline(instance, ctx, options);
  }
  throw ContractError("unknown algorithm");
}

void BenchConfig::Validate() const {
  if (p_list.empty() || n_list.empty()) {
    throw ContractError("p and n lists must be nonempty");
  }
  if (zip && p_list.size() != n_list.size()) {
    throw ContractError("zip pairing needs p and n lists of equal length");
  }
  for (const auto p : p_list) {
    if (p < 1) throw ContractError("p values must be >= 1");
  }
  for (const auto n : n_list) {
    if (n < 1) throw ContractError("n values must be >= 1");
  }
  if (algos.empty()) throw ContractError("algorithm list is empty");
  if (repeats < 1) throw ContractError("repeats must be >= 1");
  RankLoss::FromName(loss);
}

void ApplyPreset(const std::string& preset, BenchConfig& config) {
  config.p_list.clear();
  config.n_list.clear();
  if (preset == "total") {
    config.zip = true;
    for (int k = 12; k <= 20; k += 2) {
      const std::size_t total = std::size_t{1} << k;
      const std::size_t p = total / 11;
      config.p_list.push_back(p);
      config.n_list.push_back(total - p);
    }
  } else if (preset == "negatives") {
    config.zip = false;
    config.p_list = {32};
    for (int k = 10; k <= 20; k += 2) {
      config.n_list.push_back(std::size_t{1} << k);
    }
  } else if (preset == "positives") {
    config.zip = false;
    config.n_list = {std::size_t{1} << 18};
    for (int k = 2; k <= 12; k += 2) {
      config.p_list.push_back(std::size_t{1} << k);
    }
  } else {
    throw ContractError("unknown preset '" + preset +
                        "' (expected total, negatives or positives)");
  }
}

BenchReport RunBench(const BenchConfig& config) {
  config.Validate();
  const RankLoss loss = RankLoss::FromName(config.loss);
  BenchReport report;
  for (const auto& [p, n] : Pairs(config)) {
    const ScoredInstance instance = MakeBenchInstance(p, n, config.seed);
    const LossContext ctx(loss, static_cast<std::int64_t>(p),
                          static_cast<std::int64_t>(n));
    std::map<BenchAlgo, std::vector<std::int64_t>> times;
    std::map<BenchAlgo, std::vector<std::uint64_t>> counts;
    std::map<BenchAlgo, double> objectives;
    // Repeats of one configuration run back to back on this thread.
    for (int repeat = 0; repeat < config.repeats; ++repeat) {
      for (const auto algo : config.algos) {
        const auto start = std::chrono::steady_clock::now();
        const InferenceResult result = RunAlgo(
            algo, instance, ctx,
            config.seed + static_cast<std::uint64_t>(repeat));
        const auto stop = std::chrono::steady_clock::now();
        const std::int64_t wall_ns =
            config.deterministic
                ? 0
                : std::chrono::duration_cast<std::chrono::nanoseconds>(stop -
                                                                       start)
                      .count();
        report.rows.push_back({algo, p, n, repeat, wall_ns,
                               result.comparisons, result.objective});
        times[algo].push_back(wall_ns);
        counts[algo].push_back(result.comparisons);
        if (repeat == 0) objectives[algo] = result.objective;
      }
    }
    const double reference = objectives.begin()->second;
    for (const auto algo : config.algos) {
      report.points.push_back({algo, p, n, LowerMedian(times[algo]),
                               LowerMedian(counts[algo]), objectives[algo]});
      const double gap = std::abs(objectives[algo] - reference) /
                         std::max(1.0, std::abs(reference));
      report.max_objective_gap = std::max(report.max_objective_gap, gap);
    }
  }
  return report;
}

void WriteBenchCsv(std::ostream& out, const BenchConfig& config,
                   const BenchReport& report) {
  out << "algo,loss,p,n,repeat,wall_ns,comparisons\n";
  for (const auto& row : report.rows) {
    out << BenchAlgoName(row.algo) << ',' << config.loss << ',' << row.p
        << ',' << row.n << ',' << row.repeat << ',' << row.wall_ns << ','
        << row.comparisons << '\n';
  }
}

}  // namespace rankopt::tools
