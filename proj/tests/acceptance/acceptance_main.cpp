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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "rankopt/dataset_io.hpp"
#include "rankopt/error.hpp"
#include "rankopt/inference.hpp"
#include "rankopt/learner.hpp"
#include "rankopt/loss.hpp"
#include "rankopt/oracle.hpp"
#include "support/oracles.hpp"

namespace rankopt {
namespace {

using testing::RefLoss;

// Collects the reasons a criterion failed.
class Check {
 public:
  void Expect(bool condition, const std::string& what) {
    if (!condition && failures_.size() < 5) failures_.push_back(what);
    ok_ = ok_ && condition;
  }
  void Note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return ok_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string Format(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

std::vector<double> Descending(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

// ------------------------------------------------------------ criterion 1

void WorkedExamples(Check& check) {
  const LossContext ap(RankLoss::AveragePrecision(), 4, 4);
  const LossContext ndcg(RankLoss::Ndcg(), 4, 4);
  const InterleavingVector ranks({3, 4, 5, 5});
  const double expected_ap = 7.0 / 48.0;
  const double expected_ndcg =
      1.0 - (1.0 + 1.0 / std::log2(3.0) + 1.0 / std::log2(5.0) +
             1.0 / std::log2(7.0)) /
                (1.0 + 1.0 / std::log2(3.0) + 0.5 + 1.0 / std::log2(5.0));
  const double got_ap = ApLoss(ranks, ap);
  const double got_ndcg = NdcgLoss(ranks, ndcg);
  check.Expect(ToSignPattern(ranks, 4) == "++-+-+--", "sign pattern");
  check.Expect(std::abs(got_ap - expected_ap) <= 1e-12,
               "AP loss " + Format(got_ap));
  check.Expect(std::abs(got_ndcg - expected_ndcg) <= 1e-12,
               "NDCG loss " + Format(got_ndcg));
  check.Expect(std::abs(ApLossOfPattern("++-+-+--") - expected_ap) <= 1e-12,
               "AP loss of pattern");
  check.Expect(std::abs(testing::RefApLoss("++-+-+--") - expected_ap) <= 1e-12,
               "reference AP loss");
  check.Expect(std::abs(testing::RefNdcgLoss("++-+-+--", RefLoss::kNdcg) -
                        expected_ndcg) <= 1e-12,
               "reference NDCG loss");
  check.Note("AP " + Format(got_ap) + ", NDCG " + Format(got_ndcg));
}

// ------------------------------------------------------------ criterion 2

// opt[j] must reach the maximum of f_j and be the largest index that does.
bool IsMaxArgmax(RefLoss loss, const std::vector<double>& positives_desc,
                 const std::vector<double>& negatives_desc,
                 const InterleavingVector& opt) {
  const int p = static_cast<int>(positives_desc.size());
  const int n = static_cast<int>(negatives_desc.size());
  for (int j = 1; j <= n; ++j) {
    std::vector<double> f(static_cast<std::size_t>(p) + 2);
    double best = -1e300;
    for (int i = 1; i <= p + 1; ++i) {
      f[i] = testing::RefF(loss, positives_desc, negatives_desc[j - 1], n, j, i);
      best = std::max(best, f[i]);
    }
    const int chosen = opt[static_cast<std::size_t>(j - 1)];
    if (f[chosen] < best - 1e-12) return false;
    for (int i = chosen + 1; i <= p + 1; ++i) {
      if (f[i] >= best - 1e-12) return false;
    }
  }
  return true;
}

void OracleEquivalence(Check& check) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick_p(1, 5);
  std::uniform_int_distribution<int> pick_n(1, 9);
  int instances = 0;
  for (const RefLoss kind : {RefLoss::kAp, RefLoss::kNdcg}) {
    const RankLoss loss = testing::ToRankLoss(kind);
    for (int trial = 0; trial < 500; ++trial) {
      const int p = pick_p(rng);
      const int n = pick_n(rng);
      const auto pos = testing::UniformScores(rng, p);
      const auto neg = testing::UniformScores(rng, n);
      const auto instance = ScoredInstance::Preprocess(pos, neg);
      const LossContext ctx(loss, p, n);
      InferenceOptions options;
      options.seed = static_cast<std::uint64_t>(trial);
      const auto qs = OptRanks(instance, ctx, options);
      InferenceOptions mom_options = options;
      mom_options.selection = SelectionMode::kMedianOfMedians;
      const auto mom = OptRanks(instance, ctx, mom_options);
      const auto sorted = SortBaseline(instance, ctx, options);
      const auto brute = BruteForcePattern(instance, ctx);
      const auto reference = testing::RefEnumerate(pos, neg, kind);
      const std::string where = loss.name() + " trial " +
                                std::to_string(trial);
      for (const auto* result : {&qs, &mom, &sorted}) {
        check.Expect(std::abs(result->objective - brute.objective) <= 1e-9,
                     where + ": objective differs from brute force");
        check.Expect(result->opt.IsMonotone(), where + ": not monotone");
      }
      check.Expect(std::abs(brute.objective - reference.objective) <= 1e-9,
                   where + ": brute force differs from enumeration");
      check.Expect(IsMaxArgmax(kind, Descending(pos), Descending(neg), qs.opt),
                   where + ": not the per-negative max-argmax");
      check.Expect(qs.opt == PerNegativeArgmax(instance, ctx),
                   where + ": differs from PerNegativeArgmax");
      ++instances;
    }
  }
  int permutations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int total = 2 + trial % 6;
    const int p = 1 + static_cast<int>(rng() % (total - 1));
    const int n = total - p;
    const RefLoss kind = trial % 2 == 0 ? RefLoss::kAp : RefLoss::kNdcg;
    const auto instance = ScoredInstance::Preprocess(
        testing::UniformScores(rng, p), testing::UniformScores(rng, n));
    const LossContext ctx(testing::ToRankLoss(kind), p, n);
    const auto full = BruteForcePermutation(instance, ctx);
    const auto qs = OptRanks(instance, ctx);
    check.Expect(std::abs(full.objective - qs.objective) <= 1e-9,
                 "permutation trial " + std::to_string(trial) +
                     ": objective differs");
    check.Expect(full.sorted_maximizer_exists,
                 "permutation trial " + std::to_string(trial) +
                     ": no score-sorted maximizer");
    ++permutations;
  }
  check.Note(std::to_string(instances) + " pattern instances, " +
             std::to_string(permutations) + " permutation instances");
}

// ------------------------------------------------------------ criterion 3

void Suitability(Check& check) {
  int grid_failures_convex = 0;
  int grid_failures_nonconvex = 0;
  for (int p = 1; p <= 50; ++p) {
    for (int n = 1; n <= 50; ++n) {
      if (!CheckJMonotone(LossContext(RankLoss::AveragePrecision(), p, n))) {
        ++grid_failures_convex;
      }
      if (!CheckJMonotone(LossContext(RankLoss::Ndcg(), p, n))) {
        ++grid_failures_convex;
      }
      if (!CheckJMonotone(LossContext(
              testing::ToRankLoss(RefLoss::kNdcgNonConvex), p, n))) {
        ++grid_failures_nonconvex;
      }
    }
  }
  check.Expect(grid_failures_convex == 0,
               std::to_string(grid_failures_convex) +
                   " AP/NDCG grid points fail j-monotonicity");
  check.Expect(grid_failures_nonconvex > 0,
               "non-convex discount passes j-monotonicity everywhere");

  // Independent check from the tail-sum form of delta on a smaller grid.
  bool reference_agrees = true;
  for (const RefLoss kind :
       {RefLoss::kAp, RefLoss::kNdcg, RefLoss::kNdcgNonConvex}) {
    for (int p = 1; p <= 12; ++p) {
      for (int n = 1; n <= 12; ++n) {
        bool monotone = true;
        for (int j = 1; j < n; ++j) {
          for (int i = 1; i <= p; ++i) {
            const double now = testing::RefDelta(kind, p, j, i + 1) -
                               testing::RefDelta(kind, p, j, i);
            const double next = testing::RefDelta(kind, p, j + 1, i + 1) -
                                testing::RefDelta(kind, p, j + 1, i);
            if (next < now - 1e-12) monotone = false;
          }
        }
        const LossContext ctx(testing::ToRankLoss(kind), p, n);
        if (monotone != CheckJMonotone(ctx)) reference_agrees = false;
      }
    }
  }
  check.Expect(reference_agrees,
               "library and reference disagree on j-monotonicity");

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 12);
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<Rank> ranks(static_cast<std::size_t>(n));
    for (auto& r : ranks) r = 1 + static_cast<Rank>(rng() % (p + 1));
    std::sort(ranks.begin(), ranks.end());
    const InterleavingVector vector(ranks);
    const std::string pattern = ToSignPattern(vector, p);
    for (const RefLoss kind : {RefLoss::kAp, RefLoss::kNdcg}) {
      const LossContext ctx(testing::ToRankLoss(kind), p, n);
      const double decomposed = DecomposedLoss(ctx, vector);
      check.Expect(std::abs(decomposed - RankLossValue(vector, ctx)) <= 1e-9 &&
                       std::abs(decomposed - testing::RefLossValue(
                                                 pattern, kind)) <= 1e-9,
                   "decomposition mismatch on " + pattern);
    }
  }
  check.Note("non-convex discount fails on " +
             std::to_string(grid_failures_nonconvex) + "/2500 grid points");
}

// ------------------------------------------------------------ criterion 4

void Counterexample(Check& check) {
  const std::vector<double> pos = {0.25};
  const std::vector<double> neg = {0.15, 0.05};
  const auto instance = ScoredInstance::Preprocess(pos, neg);
  const RankLoss loss = testing::ToRankLoss(RefLoss::kNdcgNonConvex);
  const LossContext ctx(loss, 1, 2);
  check.Expect(!loss.qs_suitable(), "non-convex loss marked suitable");
  bool refused = false;
  try {
    OptRanks(instance, ctx);
  } catch (const UnsuitableLossError&) {
    refused = true;
  }
  check.Expect(refused, "greedy solver ran without the oracle check");
  const auto argmax = PerNegativeArgmax(instance, ctx);
  check.Expect(argmax == InterleavingVector({2, 1}),
               "per-negative argmax is not (2, 1)");
  check.Expect(!argmax.IsMonotone(), "per-negative argmax is monotone");
  const Rank ref_1 =
      testing::RefMaxArgmax(RefLoss::kNdcgNonConvex, pos, 0.15, 2, 1);
  const Rank ref_2 =
      testing::RefMaxArgmax(RefLoss::kNdcgNonConvex, pos, 0.05, 2, 2);
  check.Expect(ref_1 == 2 && ref_2 == 1, "reference argmax is not (2, 1)");
  InferenceOptions options;
  options.oracle_checked = true;
  const auto checked = OptRanks(instance, ctx, options);
  check.Expect(checked.greedy_check.has_value() &&
                   !checked.greedy_check->monotone,
               "oracle-checked run did not report non-monotonicity");
  const auto brute = BruteForcePattern(instance, ctx);
  const auto reference = testing::RefEnumerate(pos, neg, RefLoss::kNdcgNonConvex);
  check.Expect(std::abs(brute.objective - reference.objective) <= 1e-12,
               "brute force misses the optimum");
  check.Expect(brute.best.IsMonotone(), "brute force optimum not monotone");
  check.Note("per-negative argmax (" + std::to_string(argmax[0]) + ", " +
             std::to_string(argmax[1]) + "), brute force " +
             RunLengthSummary(brute.best));
}

// ------------------------------------------------------------ criterion 5

void Scaling(Check& check) {
  tools::BenchConfig config;
  config.loss = "ap";
  config.p_list = {32};
  config.n_list.clear();
  for (int k = 10; k <= 20; k += 2) {
    config.n_list.push_back(std::size_t{1} << k);
  }
  config.algos = {tools::BenchAlgo::kOptRanks, tools::BenchAlgo::kSortBaseline};
  config.repeats = 5;
  config.seed = 1;
  const tools::BenchReport report = tools::RunBench(config);
  std::vector<double> qs_ratio;
  std::vector<double> sort_ratio;
  std::int64_t qs_ns = 0;
  std::int64_t sort_ns = 0;
  for (const auto& point : report.points) {
    const double ratio = static_cast<double>(point.median_comparisons) /
                         static_cast<double>(point.n);
    if (point.algo == tools::BenchAlgo::kOptRanks) {
      qs_ratio.push_back(ratio);
      if (point.n == config.n_list.back()) qs_ns = point.median_wall_ns;
    } else {
      sort_ratio.push_back(ratio);
      if (point.n == config.n_list.back()) sort_ns = point.median_wall_ns;
    }
  }
  const auto [qs_min, qs_max] =
      std::minmax_element(qs_ratio.begin(), qs_ratio.end());
  const double qs_spread = *qs_max / *qs_min - 1.0;
  const double sort_growth = sort_ratio.back() / sort_ratio.front();
  check.Expect(report.max_objective_gap <= 1e-9, "objectives disagree");
  check.Expect(qs_spread <= 0.20,
               "opt_ranks comparisons/n spread " + Format(qs_spread));
  check.Expect(sort_growth >= 1.5,
               "sort comparisons/n growth " + Format(sort_growth));
  check.Expect(qs_ns < sort_ns, "opt_ranks not faster at the largest n");
  check.Note("qs cmp/n " + Format(*qs_min) + ".." + Format(*qs_max) +
             " (spread " + Format(qs_spread) + "), sort growth " +
             Format(sort_growth) + ", wall at 2^20 " +
             Format(static_cast<double>(qs_ns) / 1e6) + " ms vs " +
             Format(static_cast<double>(sort_ns) / 1e6) + " ms");
}

// ------------------------------------------------------------ criterion 6

void Gradients(Check& check) {
  std::mt19937_64 rng(606);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  const double h = 1e-6;
  double worst = 0.0;
  for (int point = 0; point < 50; ++point) {
    SyntheticSpec spec;
    spec.num_positive = 10;
    spec.num_negative = 40;
    spec.dimension = 5;
    spec.separation = 2.0;
    spec.seed = static_cast<std::uint64_t>(point);
    const Dataset dataset = GenerateSynthetic(spec).dataset;
    LinearModel model = LinearModel::Zero(spec.dimension);
    for (auto& w : model.weights) w = gaussian(rng);
    const RankLoss loss =
        point % 2 == 0 ? RankLoss::AveragePrecision() : RankLoss::Ndcg();
    const auto gradient = SemiGradient(model, dataset, loss);
    for (std::size_t d = 0; d < gradient.size(); ++d) {
      LinearModel up = model;
      LinearModel down = model;
      up.weights[d] += h;
      down.weights[d] -= h;
      const double fd = (HingeObjective(up, dataset, loss) -
                         HingeObjective(down, dataset, loss)) /
                        (2.0 * h);
      // Relative error, measured against 1e-3 for near-zero components.
      const double error = std::abs(fd - gradient[d]) /
                           std::max(1e-3, std::abs(gradient[d]));
      worst = std::max(worst, error);
    }
    check.Expect(FiniteDifferenceError(model, dataset, loss, h) <= 1e-4,
                 "library check at point " + std::to_string(point));
  }
  check.Expect(worst <= 1e-4, "worst relative error " + Format(worst));
  check.Note("worst relative error " + Format(worst) + " over 50 points");
}

// ------------------------------------------------------------ criterion 7

void TrainingProperty(Check& check) {
  double ap_ranked = 0.0;
  double ap_zero_one = 0.0;
  double ndcg_ranked = 0.0;
  double ndcg_zero_one = 0.0;
  constexpr int kSeeds = 5;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const auto s = static_cast<std::uint64_t>(seed);
    const Dataset train = GenerateImbalancedOverlap({20, 400, 2 * s});
    const Dataset test = GenerateImbalancedOverlap({20, 400, 2 * s + 1});
    TrainConfig config;
    config.epochs = 300;
    config.learning_rate = 2.0;
    config.l2_lambda = 0.0;
    config.seed = s;
    config.loss = TrainingLoss::kAveragePrecision;
    const auto ap_model = Train(train, config).model;
    config.loss = TrainingLoss::kNdcg;
    const auto ndcg_model = Train(train, config).model;
    config.loss = TrainingLoss::kZeroOne;
    const auto zero_one_model = Train(train, config).model;
    ap_ranked += EvalMetric(ap_model, test, Metric::kAveragePrecision);
    ap_zero_one += EvalMetric(zero_one_model, test, Metric::kAveragePrecision);
    ndcg_ranked += EvalMetric(ndcg_model, test, Metric::kNdcg);
    ndcg_zero_one += EvalMetric(zero_one_model, test, Metric::kNdcg);
  }
  ap_ranked /= kSeeds;
  ap_zero_one /= kSeeds;
  ndcg_ranked /= kSeeds;
  ndcg_zero_one /= kSeeds;
  check.Expect(ap_ranked >= ap_zero_one, "AP-trained model ranks worse");
  check.Expect(ndcg_ranked >= ndcg_zero_one, "NDCG-trained model ranks worse");
  check.Note("test AP " + Format(ap_ranked) + " vs " + Format(ap_zero_one) +
             ", test NDCG " + Format(ndcg_ranked) + " vs " +
             Format(ndcg_zero_one));
}

// ------------------------------------------------------------ criterion 8

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Runs the CLI binary with stdout captured to `stdout_path`.
int RunBinary(const std::string& args, const std::filesystem::path& stdout_path) {
  const std::string command = std::string("\"") + RANKOPT_CLI_PATH + "\" " +
                              args + " > \"" + stdout_path.string() +
                              "\" 2>/dev/null";
  return std::system(command.c_str());
}

void Determinism(Check& check) {
  const auto root =
      std::filesystem::temp_directory_path() / "rankopt_acceptance";
  std::filesystem::remove_all(root);
  const auto dir = [&](int run) {
    return root / ("run" + std::to_string(run));
  };
  // Inputs shared by both runs.
  std::filesystem::create_directories(root / "inputs");
  const auto scores = (root / "inputs" / "scores.csv").string();
  const auto small = (root / "inputs" / "small.csv").string();
  const auto data = (root / "inputs" / "data.csv").string();
  RunBinary("gen --kind scores --n-pos 40 --n-neg 400 --seed 5 --out " +
                scores,
            root / "inputs" / "gen.json");
  RunBinary("gen --kind scores --n-pos 3 --n-neg 4 --seed 6 --out " + small,
            root / "inputs" / "gen_small.json");
  RunBinary("gen --kind imbalanced --n-pos 20 --n-neg 200 --seed 5 --out " +
                data,
            root / "inputs" / "gen_data.json");

  struct Command {
    std::string name;
    std::string args;
    // Output file written by the command, relative to the run directory.
    std::string product;
  };
  const std::vector<Command> commands = {
      {"gen_scores", "gen --kind scores --seed 9 --out {dir}/g1.csv", "g1.csv"},
      {"gen_separable", "gen --kind separable --seed 9 --out {dir}/g2.csv",
       "g2.csv"},
      {"gen_imbalanced", "gen --kind imbalanced --seed 9 --out {dir}/g3.csv",
       "g3.csv"},
      {"infer_qs", "infer --input " + scores + " --seed 3 --ranking", ""},
      {"infer_mom", "infer --input " + scores + " --seed 3 --verify-median", ""},
      {"infer_sort", "infer --input " + scores + " --seed 3 --algo sort", ""},
      {"infer_ndcg", "infer --loss ndcg --input " + scores + " --seed 3", ""},
      {"infer_brute", "infer --input " + small + " --seed 3 --algo brute", ""},
      {"infer_unsafe",
       "infer --loss ndcg-nonconvex --input " + small + " --seed 3 --unsafe",
       ""},
      {"oracle_check", "oracle-check --trials 100 --seed 3", ""},
      {"oracle_check_nc",
       "oracle-check --trials 100 --seed 3 --loss ndcg-nonconvex", ""},
      {"bench",
       "bench --p-list 8,32 --n-list 1024,4096 --algo-list qs,qs-mom,sort "
       "--seed 3 --deterministic --out {dir}/bench.csv",
       "bench.csv"},
      {"train", "train --data " + data +
                    " --epochs 40 --lr 2 --seed 3 --fd-check --out "
                    "{dir}/model.json",
       "model.json"},
      {"train_zero_one", "train --loss zero-one --data " + data +
                             " --epochs 40 --seed 3 --out {dir}/zo.json",
       "zo.json"},
      {"eval", "eval --model {dir}/model.json --data " + data +
                   " --metric ndcg --seed 3",
       ""},
  };
  for (int run = 1; run <= 2; ++run) {
    std::filesystem::create_directories(dir(run));
    for (const auto& command : commands) {
      std::string args = command.args;
      for (auto at = args.find("{dir}"); at != std::string::npos;
           at = args.find("{dir}")) {
        args.replace(at, 5, dir(run).string());
      }
      RunBinary(args, dir(run) / (command.name + ".out"));
    }
  }
  int compared = 0;
  for (const auto& command : commands) {
    const auto first = Slurp(dir(1) / (command.name + ".out"));
    const auto second = Slurp(dir(2) / (command.name + ".out"));
    // Reports name their output paths, which differ between run dirs.
    auto normalize = [&](std::string text, int run) {
      const std::string from = dir(run).string();
      for (auto at = text.find(from); at != std::string::npos;
           at = text.find(from)) {
        text.replace(at, from.size(), "{dir}");
      }
      return text;
    };
    check.Expect(!first.empty(), command.name + " printed nothing");
    check.Expect(normalize(first, 1) == normalize(second, 2),
                 command.name + " report differs between runs");
    if (!command.product.empty()) {
      const auto a = Slurp(dir(1) / command.product);
      const auto b = Slurp(dir(2) / command.product);
      check.Expect(!a.empty() && a == b,
                   command.name + " output file differs between runs");
    }
    ++compared;
  }
  check.Note(std::to_string(compared) + " commands compared");
  if (check.ok()) std::filesystem::remove_all(root);
}

}  // namespace
}  // namespace rankopt

int main() {
  struct Criterion {
    int number;
    const char* title;
    void (*run)(rankopt::Check&);
  };
  const Criterion criteria[] = {
      {1, "worked examples", rankopt::WorkedExamples},
      {2, "oracle equivalence", rankopt::OracleEquivalence},
      {3, "suitability checks", rankopt::Suitability},
      {4, "counterexample", rankopt::Counterexample},
      {5, "complexity scaling", rankopt::Scaling},
      {6, "gradient correctness", rankopt::Gradients},
      {7, "training property", rankopt::TrainingProperty},
      {8, "determinism", rankopt::Determinism},
  };
  bool all_passed = true;
  for (const auto& criterion : criteria) {
    rankopt::Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    std::printf("%s %d %s (%.2fs)", check.ok() ? "PASS" : "FAIL",
                criterion.number, criterion.title, seconds);
    for (const auto& note : check.notes()) std::printf("; %s", note.c_str());
    std::printf("\n");
    for (const auto& failure : check.failures()) {
      std::printf("    %s\n", failure.c_str());
    }
    std::fflush(stdout);
    all_passed = all_passed && check.ok();
  }
  return all_passed ? 0 : 1;
}
