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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "bench.hpp"
#include "rankopt/dataset_io.hpp"
#include "rankopt/error.hpp"
#include "rankopt/inference.hpp"
#include "rankopt/learner.hpp"
#include "rankopt/oracle.hpp"

namespace rankopt::tools {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kObjectiveTolerance = 1e-9;

void Emit(std::ostream& out, const Json& report) {
  out << report.dump(2) << '\n';
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw ContractError("cannot write '" + path + "'");
  return file;
}

Json RanksJson(const InterleavingVector& ranks) {
  return Json(ranks.ranks());
}

// ---------------------------------------------------------------- infer

struct InferArgs {
  std::string loss = "ap";
  std::string input;
  std::string algo = "qs";
  bool verify_median = false;
  bool unsafe = false;
  bool ranking = false;
  std::uint64_t seed = 0;
};

Json RankingJson(const ScoreFile& file, const InterleavingVector& ranks) {
  const auto& instance = file.instance;
  const auto negatives = instance.SortedNegatives();
  const auto positive_ids = instance.positive_ids();
  Json ranking = Json::array();
  std::size_t j = 0;
  for (std::size_t i = 0; i <= positive_ids.size(); ++i) {
    while (j < negatives.size() &&
           static_cast<std::size_t>(ranks[j]) == i + 1) {
      ranking.push_back(file.ids[negatives[j].id]);
      ++j;
    }
    if (i < positive_ids.size()) ranking.push_back(file.ids[positive_ids[i]]);
  }
  return ranking;
}

int RunInfer(const InferArgs& args, std::ostream& out, std::ostream& err) {
  const RankLoss loss = RankLoss::FromName(args.loss);
  if (!loss.qs_suitable() && args.algo != "brute" && !args.unsafe) {
    err << "error: loss '" << args.loss
        << "' is not suitable for --algo " << args.algo
        << "; use --algo brute, or pass --unsafe to run the greedy solver "
           "with an exhaustive cross-check\n";
    return kExitValidation;
  }
  const ScoreFile file = ReadScoreFile(args.input);
  const auto& instance = file.instance;
  const LossContext ctx(loss, static_cast<std::int64_t>(instance.num_positive()),
                        static_cast<std::int64_t>(instance.num_negative()));

  Json report;
  report["command"] = "infer";
  report["loss"] = loss.name();
  report["algo"] = args.algo;
  report["seed"] = args.seed;
  report["p"] = instance.num_positive();
  report["n"] = instance.num_negative();

  InterleavingVector opt;
  int exit_code = kExitOk;
  if (args.algo == "brute") {
    const auto oracle = BruteForcePattern(instance, ctx);
    opt = oracle.best;
    report["objective"] = oracle.objective;
    report["loss_value"] = RankLossValue(opt, ctx);
    report["comparisons"] = 0;
    report["patterns_evaluated"] = oracle.patterns_evaluated;
  } else {
    InferenceOptions options;
    options.seed = args.seed;
    options.selection = args.verify_median ? SelectionMode::kMedianOfMedians
                                           : SelectionMode::kRandomized;
    options.oracle_checked = !loss.qs_suitable();
    const InferenceResult result = args.algo == "qs"
                                       ? OptRanks(instance, ctx, options)
                                       : SortBaseline(instance, ctx, options);
    opt = result.opt;
    report["selection"] =
        args.verify_median ? "median-of-medians" : "randomized";
    report["objective"] = result.objective;
    report["loss_value"] = result.loss_at_opt;
    report["comparisons"] = result.comparisons;
    report["scan_steps"] = result.scan_steps;
    if (result.greedy_check) {
      const auto& check = *result.greedy_check;
      Json greedy;
      greedy["per_negative_argmax"] = RanksJson(check.per_negative_argmax);
      greedy["per_negative_argmax_monotone"] = check.monotone;
      if (check.oracle_objective) {
        greedy["oracle_objective"] = *check.oracle_objective;
      } else {
        greedy["oracle_objective"] = nullptr;
      }
      greedy["objective_matches"] = check.objective_matches;
      report["greedy_check"] = greedy;
      if (!check.objective_matches) exit_code = kExitOracleMismatch;
    }
  }
  report["monotone"] = opt.IsMonotone();
  report["opt_summary"] = RunLengthSummary(opt);
  report["opt"] = RanksJson(opt);
  if (args.ranking) report["ranking"] = RankingJson(file, opt);
  Emit(out, report);
  return exit_code;
}

// --------------------------------------------------------- oracle-check

struct OracleCheckArgs {
  int trials = 500;
  int max_p = 5;
  int max_n = 9;
  std::uint64_t seed = 0;
  std::vector<std::string> losses = {"ap", "ndcg"};
};

struct Tally {
  int trials = 0;
  int passed = 0;
  int objective_mismatches = 0;
  int monotonicity_violations = 0;
  int argmax_violations = 0;
  int per_negative_nonmonotone = 0;
  Json first_failure = nullptr;
};

Json TallyJson(const std::string& loss, const Tally& tally) {
  Json json;
  json["loss"] = loss;
  json["trials"] = tally.trials;
  json["passed"] = tally.passed;
  json["failed"] = tally.trials - tally.passed;
  json["objective_mismatches"] = tally.objective_mismatches;
  json["monotonicity_violations"] = tally.monotonicity_violations;
  json["argmax_violations"] = tally.argmax_violations;
  json["per_negative_nonmonotone"] = tally.per_negative_nonmonotone;
  json["first_failure"] = tally.first_failure;
  return json;
}

// Checks one random instance; returns the list of problems found.
std::vector<std::string> CheckTrial(const ScoredInstance& instance,
                                    const LossContext& ctx,
                                    std::uint64_t seed, Tally& tally) {
  std::vector<std::string> problems;
  const bool suitable = ctx.loss().qs_suitable();
  const auto oracle = BruteForcePattern(instance, ctx);

  InferenceOptions randomized;
  randomized.seed = seed;
  randomized.oracle_checked = !suitable;
  InferenceOptions verified = randomized;
  verified.selection = SelectionMode::kMedianOfMedians;

  const std::vector<std::pair<std::string, InferenceResult>> runs = {
      {"qs", OptRanks(instance, ctx, randomized)},
      {"qs-mom", OptRanks(instance, ctx, verified)},
      {"sort", SortBaseline(instance, ctx, randomized)},
  };
  const auto argmax = PerNegativeArgmax(instance, ctx);
  if (!argmax.IsMonotone()) {
    ++tally.per_negative_nonmonotone;
    problems.push_back("per-negative argmax is not monotone");
  }
  bool objective_bad = false;
  bool monotone_bad = false;
  bool argmax_bad = false;
  for (const auto& [name, result] : runs) {
    if (std::abs(result.objective - oracle.objective) > kObjectiveTolerance) {
      objective_bad = true;
      problems.push_back(name + " objective differs from the oracle");
    }
    if (!result.opt.IsMonotone()) {
      monotone_bad = true;
      problems.push_back(name + " vector is not monotone");
    }
    if (suitable && result.opt != argmax) {
      argmax_bad = true;
      problems.push_back(name + " vector is not the per-negative argmax");
    }
  }
  tally.objective_mismatches += objective_bad;
  tally.monotonicity_violations += monotone_bad;
  tally.argmax_violations += argmax_bad;
  return problems;
}

int RunOracleCheck(const OracleCheckArgs& args, std::ostream& out) {
  if (args.trials < 0) throw ContractError("--trials must be >= 0");
  if (args.max_p < 1 || args.max_n < 1) {
    throw ContractError("--max-p and --max-n must be >= 1");
  }
  const auto worst = InterleavingCount(args.max_p, args.max_n);
  if (worst > 1'000'000) {
    throw ContractError("--max-p/--max-n allow " + std::to_string(worst) +
                        " interleavings; the exhaustive oracle is limited to "
                        "1000000");
  }
  Json report;
  report["command"] = "oracle-check";
  report["seed"] = args.seed;
  report["trials"] = args.trials;
  report["max_p"] = args.max_p;
  report["max_n"] = args.max_n;
  Json results = Json::array();
  bool all_passed = true;
  for (std::size_t index = 0; index < args.losses.size(); ++index) {
    const RankLoss loss = RankLoss::FromName(args.losses[index]);
    std::seed_seq seq{args.seed, static_cast<std::uint64_t>(index)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> pick_p(1, args.max_p);
    std::uniform_int_distribution<int> pick_n(1, args.max_n);
    std::uniform_real_distribution<double> score(-1.0, 1.0);
    Tally tally;
    for (int trial = 0; trial < args.trials; ++trial) {
      const int p = pick_p(rng);
      const int n = pick_n(rng);
      std::vector<double> positives(static_cast<std::size_t>(p));
      std::vector<double> negatives(static_cast<std::size_t>(n));
      for (auto& s : positives) s = score(rng);
      for (auto& s : negatives) s = score(rng);
      const auto instance = ScoredInstance::Preprocess(positives, negatives);
      const LossContext ctx(loss, p, n);
      ++tally.trials;
      const auto problems = CheckTrial(
          instance, ctx, args.seed + static_cast<std::uint64_t>(trial), tally);
      if (problems.empty()) {
        ++tally.passed;
      } else if (tally.first_failure.is_null()) {
        tally.first_failure = {{"trial", trial},
                               {"p", p},
                               {"n", n},
                               {"positives", positives},
                               {"negatives", negatives},
                               {"problems", problems}};
      }
    }
    all_passed = all_passed && tally.passed == tally.trials;
    results.push_back(TallyJson(loss.name(), tally));
  }
  report["results"] = results;
  report["status"] = all_passed ? "pass" : "fail";
  Emit(out, report);
  return all_passed ? kExitOk : kExitOracleMismatch;
}

// ----------------------------------------------------------------- bench

struct BenchArgs {
  BenchConfig config;
  std::vector<std::string> algo_names = {"qs", "sort"};
  std::string pairing = "grid";
  std::string preset;
  std::string out_path;
};

int RunBenchCommand(BenchArgs args, std::ostream& out) {
  if (!args.preset.empty()) ApplyPreset(args.preset, args.config);
  else args.config.zip = args.pairing == "zip";
  args.config.algos.clear();
  for (const auto& name : args.algo_names) {
    args.config.algos.push_back(ParseBenchAlgo(name));
  }
  const BenchReport report = RunBench(args.config);
  if (!args.out_path.empty()) {
    auto csv = OpenOutput(args.out_path);
    WriteBenchCsv(csv, args.config, report);
  }
  Json summary;
  summary["command"] = "bench";
  summary["loss"] = args.config.loss;
  summary["seed"] = args.config.seed;
  summary["repeats"] = args.config.repeats;
  summary["pairing"] = args.config.zip ? "zip" : "grid";
  summary["deterministic"] = args.config.deterministic;
  summary["report"] = args.out_path;
  Json points = Json::array();
  for (const auto& point : report.points) {
    points.push_back(
        {{"algo", BenchAlgoName(point.algo)},
         {"p", point.p},
         {"n", point.n},
         {"median_wall_ns", point.median_wall_ns},
         {"median_comparisons", point.median_comparisons},
         {"comparisons_per_n", static_cast<double>(point.median_comparisons) /
                                   static_cast<double>(point.n)},
         {"objective", point.objective}});
  }
  summary["points"] = points;
  summary["max_objective_gap"] = report.max_objective_gap;
  const bool agree = report.max_objective_gap <= kObjectiveTolerance;
  summary["objectives_agree"] = agree;
  Emit(out, summary);
  return agree ? kExitOk : kExitOracleMismatch;
}

// ----------------------------------------------------------------- train

struct TrainArgs {
  std::string loss = "ap";
  std::string data;
  int epochs = 100;
  double learning_rate = 1.0;
  double lambda = 0.0;
  std::uint64_t seed = 0;
  bool fd_check = false;
  std::string out_path;
};

int RunTrain(const TrainArgs& args, std::ostream& out, std::ostream& err) {
  TrainConfig config;
  config.loss = ParseTrainingLoss(args.loss);
  config.epochs = args.epochs;
  config.learning_rate = args.learning_rate;
  config.l2_lambda = args.lambda;
  config.seed = args.seed;
  config.fd_check = args.fd_check;
  config.Validate();
  const Dataset dataset = ReadFeatureFile(args.data);

  Json report;
  report["command"] = "train";
  report["loss"] = TrainingLossName(config.loss);
  report["epochs"] = config.epochs;
  report["learning_rate"] = config.learning_rate;
  report["lambda"] = config.l2_lambda;
  report["seed"] = config.seed;
  TrainResult result;
  try {
    result = Train(dataset, config);
  } catch (const DivergenceError& e) {
    report["status"] = "diverged";
    report["error"] = e.what();
    report["regularized_objectives"] = e.objectives();
    Emit(out, report);
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  Json log = Json::array();
  for (const auto& record : result.log.epochs) {
    Json entry = {{"epoch", record.epoch},
                  {"objective", record.objective},
                  {"regularized_objective", record.regularized_objective},
                  {"step_size", record.step_size}};
    if (record.fd_max_error) entry["fd_max_error"] = *record.fd_max_error;
    log.push_back(entry);
  }
  report["status"] = "ok";
  report["log"] = log;
  report["final_objective"] = result.log.final_objective;
  report["best_epoch"] = result.log.best_epoch;
  report["weights"] = result.model.weights;
  report["model"] = args.out_path;
  if (!args.out_path.empty()) {
    WriteModel(args.out_path, {result.model, TrainingLossName(config.loss),
                               config.epochs, config.seed});
  }
  Emit(out, report);
  return kExitOk;
}

// ------------------------------------------------------------------ eval

struct EvalArgs {
  std::string model;
  std::string data;
  std::string metric = "ap";
};

int RunEval(const EvalArgs& args, std::ostream& out) {
  const Metric metric = ParseMetric(args.metric);
  const ModelDocument document = ReadModel(args.model);
  const Dataset dataset = ReadFeatureFile(args.data);
  Json report;
  report["command"] = "eval";
  report["metric"] = args.metric;
  report["value"] = EvalMetric(document.model, dataset, metric);
  report["num_samples"] = dataset.size();
  report["num_positive"] = dataset.num_positive();
  report["model_loss_kind"] = document.loss_kind;
  Emit(out, report);
  return kExitOk;
}

// ------------------------------------------------------------------- gen

struct GenArgs {
  std::string kind = "separable";
  std::size_t num_positive = 50;
  std::size_t num_negative = 500;
  std::size_t dimension = 10;
  double separation = 4.0;
  double noise = 1.0;
  std::uint64_t seed = 0;
  std::string out_path;
};

int RunGen(const GenArgs& args, std::ostream& out) {
  if (args.num_positive < 1 || args.num_negative < 1) {
    throw ContractError("--n-pos and --n-neg must be >= 1");
  }
  Json report;
  report["command"] = "gen";
  report["kind"] = args.kind;
  report["seed"] = args.seed;
  report["out"] = args.out_path;
  auto file = OpenOutput(args.out_path);
  if (args.kind == "scores") {
    std::mt19937_64 rng(args.seed);
    std::uniform_real_distribution<double> score(-1.0, 1.0);
    std::vector<std::string> ids;
    std::vector<bool> labels;
    std::vector<double> scores;
    for (std::size_t k = 0; k < args.num_positive + args.num_negative; ++k) {
      const bool positive = k < args.num_positive;
      ids.push_back((positive ? "p" : "n") +
                    std::to_string(positive ? k : k - args.num_positive));
      labels.push_back(positive);
      scores.push_back(score(rng));
    }
    WriteScoreFile(file, ids, labels, scores);
    report["num_positive"] = args.num_positive;
    report["num_negative"] = args.num_negative;
  } else if (args.kind == "separable") {
    SyntheticSpec spec;
    spec.num_positive = args.num_positive;
    spec.num_negative = args.num_negative;
    spec.dimension = args.dimension;
    spec.separation = args.separation;
    spec.noise_sigma = args.noise;
    spec.seed = args.seed;
    const SyntheticData data = GenerateSynthetic(spec);
    WriteFeatureFile(file, data.dataset);
    report["num_positive"] = data.dataset.num_positive();
    report["num_negative"] = data.dataset.num_negative();
    report["dimension"] = data.dataset.dimension();
    report["direction"] = data.direction;
  } else if (args.kind == "imbalanced") {
    ImbalancedSpec spec;
    spec.num_positive = args.num_positive;
    spec.num_negative = args.num_negative;
    spec.seed = args.seed;
    const Dataset dataset = GenerateImbalancedOverlap(spec);
    WriteFeatureFile(file, dataset);
    report["num_positive"] = dataset.num_positive();
    report["num_negative"] = dataset.num_negative();
    report["dimension"] = dataset.dimension();
  } else {
    throw ContractError("unknown kind '" + args.kind + "'");
  }
  Emit(out, report);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Loss-augmented inference and training for AP and NDCG",
               "rankopt"};
  app.require_subcommand(1);
  std::function<int()> action;

  InferArgs infer;
  auto* infer_cmd =
      app.add_subcommand("infer", "Find the most violating ranking");
  infer_cmd->add_option("--loss", infer.loss)
      ->check(CLI::IsMember({"ap", "ndcg", "ndcg-nonconvex"}));
  infer_cmd->add_option("--input", infer.input, "Score file")->required();
  infer_cmd->add_option("--algo", infer.algo)
      ->check(CLI::IsMember({"qs", "sort", "brute"}));
  infer_cmd->add_flag("--verify-median", infer.verify_median,
                      "Median of medians instead of randomized selection");
  infer_cmd->add_flag("--unsafe", infer.unsafe,
                      "Run the greedy solvers on an unsuitable loss, with an "
                      "exhaustive cross-check");
  infer_cmd->add_flag("--ranking", infer.ranking,
                      "Include the full ranking of sample ids");
  infer_cmd->add_option("--seed", infer.seed);
  infer_cmd->callback([&] { action = [&] { return RunInfer(infer, out, err); }; });

  OracleCheckArgs oracle;
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "Cross-check the solvers against exhaustive search");
  oracle_cmd->add_option("--trials", oracle.trials);
  oracle_cmd->add_option("--max-p", oracle.max_p);
  oracle_cmd->add_option("--max-n", oracle.max_n);
  oracle_cmd->add_option("--seed", oracle.seed);
  oracle_cmd->add_option("--loss", oracle.losses)
      ->delimiter(',')
      ->check(CLI::IsMember({"ap", "ndcg", "ndcg-nonconvex"}));
  oracle_cmd->callback([&] { action = [&] { return RunOracleCheck(oracle, out); }; });

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Scaling benchmark");
  bench_cmd->add_option("--loss", bench.config.loss)
      ->check(CLI::IsMember({"ap", "ndcg"}));
  bench_cmd->add_option("--p-list", bench.config.p_list)->delimiter(',');
  bench_cmd->add_option("--n-list", bench.config.n_list)->delimiter(',');
  bench_cmd->add_option("--algo-list", bench.algo_names)
      ->delimiter(',')
      ->check(CLI::IsMember({"qs", "qs-mom", "sort"}));
  bench_cmd->add_option("--pairing", bench.pairing)
      ->check(CLI::IsMember({"grid", "zip"}));
  bench_cmd->add_option("--preset", bench.preset,
                        "Sweep preset: total, negatives or positives")
      ->check(CLI::IsMember({"total", "negatives", "positives"}));
  bench_cmd->add_option("--repeats", bench.config.repeats);
  bench_cmd->add_option("--seed", bench.config.seed);
  bench_cmd->add_option("--out", bench.out_path, "CSV report path");
  bench_cmd->add_flag("--deterministic", bench.config.deterministic,
                      "Write wall_ns as 0 for byte-stable reports");
  bench_cmd->callback([&] { action = [&] { return RunBenchCommand(bench, out); }; });

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train a linear model");
  train_cmd->add_option("--loss", train.loss)
      ->check(CLI::IsMember({"ap", "ndcg", "zero-one"}));
  train_cmd->add_option("--data", train.data, "Feature file")->required();
  train_cmd->add_option("--epochs", train.epochs);
  train_cmd->add_option("--lr", train.learning_rate);
  train_cmd->add_option("--lambda", train.lambda);
  train_cmd->add_option("--seed", train.seed);
  train_cmd->add_flag("--fd-check", train.fd_check,
                      "Log the finite-difference gradient error per epoch");
  train_cmd->add_option("--out", train.out_path, "Model output path");
  train_cmd->callback([&] { action = [&] { return RunTrain(train, out, err); }; });

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a trained model");
  eval_cmd->add_option("--model", eval.model)->required();
  eval_cmd->add_option("--data", eval.data)->required();
  eval_cmd->add_option("--metric", eval.metric)
      ->check(CLI::IsMember({"ap", "ndcg"}));
  eval_cmd->add_option("--seed", [](const std::vector<std::string>&) {
    return true;
  }, "Accepted for uniformity; evaluation is deterministic");
  eval_cmd->callback([&] { action = [&] { return RunEval(eval, out); }; });

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate synthetic data");
  gen_cmd->add_option("--kind", gen.kind)
      ->check(CLI::IsMember({"separable", "imbalanced", "scores"}));
  gen_cmd->add_option("--n-pos", gen.num_positive);
  gen_cmd->add_option("--n-neg", gen.num_negative);
  gen_cmd->add_option("--dim", gen.dimension);
  gen_cmd->add_option("--separation", gen.separation);
  gen_cmd->add_option("--noise", gen.noise);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out_path)->required();
  gen_cmd->callback([&] { action = [&] { return RunGen(gen, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace rankopt::tools
