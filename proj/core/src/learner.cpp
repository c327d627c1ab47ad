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

#include "rankopt/learner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "rankopt/error.hpp"

namespace rankopt {
namespace {

constexpr double kDivergenceFactor = 10.0;

void CheckDimension(const LinearModel& model, const Dataset& dataset) {
  if (model.weights.size() != dataset.dimension()) {
    throw ContractError("model dimension " +
                        std::to_string(model.weights.size()) +
                        " does not match dataset dimension " +
                        std::to_string(dataset.dimension()));
  }
}

double SquaredNorm(const std::vector<double>& v) {
  return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

void AddScaled(std::vector<double>& target, std::span<const double> source,
               double scale) {
  for (std::size_t k = 0; k < target.size(); ++k) {
    target[k] += scale * source[k];
  }
}

double CentralDifferenceError(
    const LinearModel& model, const std::vector<double>& gradient, double h,
    const std::function<double(const LinearModel&)>& objective) {
  double worst = 0.0;
  LinearModel probe = model;
  for (std::size_t k = 0; k < model.weights.size(); ++k) {
    probe.weights[k] = model.weights[k] + h;
    const double plus = objective(probe);
    probe.weights[k] = model.weights[k] - h;
    const double minus = objective(probe);
    probe.weights[k] = model.weights[k];
    const double estimate = (plus - minus) / (2.0 * h);
    worst = std::max(worst, std::abs(estimate - gradient[k]) /
                                std::max(1e-3, std::abs(gradient[k])));
  }
  return worst;
}

// Shared descent loop; `evaluate` returns the unregularized objective and
// fills the gradient at the given model.
TrainResult Descend(
    const Dataset& dataset, const TrainConfig& config,
    const std::function<double(const LinearModel&, std::vector<double>&)>&
        evaluate,
    const std::function<double(const LinearModel&)>& objective_only) {
  config.Validate();
  TrainResult result{LinearModel::Zero(dataset.dimension()), {}};
  auto& weights = result.model.weights;
  std::vector<double> gradient;
  double initial = 0.0;
  // Subgradient steps are not monotone, so keep the best iterate seen.
  std::vector<double> best_weights = weights;
  double best = std::numeric_limits<double>::infinity();
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    EpochRecord record;
    record.epoch = epoch;
    record.objective = evaluate(result.model, gradient);
    record.regularized_objective =
        record.objective + 0.5 * config.l2_lambda * SquaredNorm(weights);
    if (epoch == 1) initial = record.regularized_objective;
    if (config.fd_check) {
      record.fd_max_error =
          CentralDifferenceError(result.model, gradient, 1e-6, objective_only);
    }
    if (!std::isfinite(record.regularized_objective) ||
        (initial > 0.0 &&
         record.regularized_objective > kDivergenceFactor * initial)) {
      result.log.epochs.push_back(record);
      std::vector<double> objectives;
      for (const auto& logged : result.log.epochs) {
        objectives.push_back(logged.regularized_objective);
      }
      throw DivergenceError(
          "training diverged at epoch " + std::to_string(epoch) +
          ": objective " + std::to_string(record.regularized_objective) +
          " exceeds " + std::to_string(kDivergenceFactor) + "x the initial " +
          std::to_string(initial),
          std::move(objectives));
    }
    if (record.regularized_objective < best) {
      best = record.regularized_objective;
      best_weights = weights;
      result.log.best_epoch = epoch;
    }
    record.step_size =
        config.learning_rate / std::sqrt(static_cast<double>(epoch));
    // Normalized step on the hinge term, then the exact proximal step for
    // (lambda / 2) ||w||^2. Ranking hinge gradients shrink by orders of
    // magnitude once most pairs are ordered, so raw steps stall.
    const double norm = std::sqrt(SquaredNorm(gradient));
    const double scale = norm > 0.0 ? record.step_size / norm : 0.0;
    const double shrink = 1.0 / (1.0 + record.step_size * config.l2_lambda);
    for (std::size_t k = 0; k < weights.size(); ++k) {
      weights[k] = (weights[k] - scale * gradient[k]) * shrink;
    }
    result.log.epochs.push_back(record);
  }
  const double last = objective_only(result.model);
  if (std::isfinite(last) &&
      last + 0.5 * config.l2_lambda * SquaredNorm(weights) < best) {
    result.log.best_epoch = config.epochs + 1;
    result.log.final_objective = last;
    return result;
  }
  weights = best_weights;
  result.log.final_objective = objective_only(result.model);
  return result;
}

}  // namespace

TrainingLoss ParseTrainingLoss(std::string_view name) {
  if (name == "ap") return TrainingLoss::kAveragePrecision;
  if (name == "ndcg") return TrainingLoss::kNdcg;
  if (name == "zero-one") return TrainingLoss::kZeroOne;
  throw ContractError("unknown training loss '" + std::string(name) + "'");
}

std::string TrainingLossName(TrainingLoss loss) {
  switch (loss) {
    case TrainingLoss::kAveragePrecision:
      return "ap";
    case TrainingLoss::kNdcg:
      return "ndcg";
    case TrainingLoss::kZeroOne:
      return "zero-one";
  }
  return "unknown";
}

RankLoss ToRankLoss(TrainingLoss loss) {
  switch (loss) {
    case TrainingLoss::kAveragePrecision:
      return RankLoss::AveragePrecision();
    case TrainingLoss::kNdcg:
      return RankLoss::Ndcg();
    case TrainingLoss::kZeroOne:
      break;
  }
  throw ContractError("zero-one loss is not a ranking loss");
}

void TrainConfig::Validate() const {
  if (epochs < 1) throw ContractError("epochs must be at least 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ContractError("learning rate must be positive");
  }
  if (!(l2_lambda >= 0.0) || !std::isfinite(l2_lambda)) {
    throw ContractError("l2 lambda must be nonnegative");
  }
}

std::vector<double> ScoreSamples(const LinearModel& model,
                                 const Dataset& dataset) {
  CheckDimension(model, dataset);
  std::vector<double> scores(dataset.size());
  for (std::size_t index = 0; index < dataset.size(); ++index) {
    scores[index] = model.Score(dataset[index].features);
  }
  return scores;
}

ScoredInstance ScoreDataset(const LinearModel& model, const Dataset& dataset) {
  const auto scores = ScoreSamples(model, dataset);
  std::vector<ScoredSample> positives;
  std::vector<ScoredSample> negatives;
  for (std::size_t index = 0; index < dataset.size(); ++index) {
    (dataset[index].positive ? positives : negatives)
        .push_back({scores[index], index});
  }
  return ScoredInstance::FromSamples(std::move(positives),
                                     std::move(negatives));
}

std::vector<std::size_t> PredictRanking(const LinearModel& model,
                                        const Dataset& dataset) {
  const auto scores = ScoreSamples(model, dataset);
  std::vector<std::size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });
  return order;
}

HingeEvaluation EvaluateHinge(const LinearModel& model, const Dataset& dataset,
                              const RankLoss& loss,
                              const InferenceOptions& options) {
  const ScoredInstance instance = ScoreDataset(model, dataset);
  const auto p = static_cast<std::int64_t>(instance.num_positive());
  const auto n = static_cast<std::int64_t>(instance.num_negative());
  const LossContext ctx(loss, p, n);

  HingeEvaluation evaluation;
  evaluation.most_violating = OptRanks(instance, ctx, options);
  const auto& opt = evaluation.most_violating.opt;

  // F(R*) = mean positive score - mean negative score.
  const auto positive_scores = instance.positive_scores();
  double ground_truth = 0.0;
  for (const double s : positive_scores) ground_truth += s;
  ground_truth /= static_cast<double>(p);
  double negative_mean = 0.0;
  for (const auto& s : instance.negatives()) negative_mean += s.score;
  ground_truth -= negative_mean / static_cast<double>(n);
  evaluation.objective = evaluation.most_violating.objective - ground_truth;

  const double norm = 1.0 / (static_cast<double>(p) * static_cast<double>(n));
  evaluation.gradient.assign(dataset.dimension(), 0.0);
  const auto positive_ranks = PositiveRanks(opt, p);
  for (std::int64_t i = 0; i < p; ++i) {
    const double violating =
        static_cast<double>(n + 2 - 2 * positive_ranks[i]) * norm;
    const double truth = 1.0 / static_cast<double>(p);
    AddScaled(evaluation.gradient,
              dataset[instance.positive_ids()[i]].features,
              violating - truth);
  }
  const auto& negative_ids = evaluation.most_violating.negative_ids;
  for (std::size_t j = 0; j < negative_ids.size(); ++j) {
    const double violating = static_cast<double>(p + 2 - 2 * opt[j]) * norm;
    const double truth = -1.0 / static_cast<double>(n);
    AddScaled(evaluation.gradient, dataset[negative_ids[j]].features,
              violating - truth);
  }
  return evaluation;
}

double HingeObjective(const LinearModel& model, const Dataset& dataset,
                      const RankLoss& loss, const InferenceOptions& options) {
  return EvaluateHinge(model, dataset, loss, options).objective;
}

std::vector<double> SemiGradient(const LinearModel& model,
                                 const Dataset& dataset, const RankLoss& loss,
                                 const InferenceOptions& options) {
  return EvaluateHinge(model, dataset, loss, options).gradient;
}

double FiniteDifferenceError(const LinearModel& model, const Dataset& dataset,
                             const RankLoss& loss, double h) {
  const auto gradient = SemiGradient(model, dataset, loss);
  return CentralDifferenceError(
      model, gradient, h, [&](const LinearModel& probe) {
        return HingeObjective(probe, dataset, loss);
      });
}

double ZeroOneHinge(const LinearModel& model, const Dataset& dataset) {
  const auto scores = ScoreSamples(model, dataset);
  double total = 0.0;
  for (std::size_t index = 0; index < dataset.size(); ++index) {
    const double y = dataset[index].positive ? 1.0 : -1.0;
    total += std::max(0.0, 1.0 - y * scores[index]);
  }
  return total / static_cast<double>(dataset.size());
}

std::vector<double> ZeroOneGradient(const LinearModel& model,
                                    const Dataset& dataset) {
  const auto scores = ScoreSamples(model, dataset);
  std::vector<double> gradient(dataset.dimension(), 0.0);
  const double scale = 1.0 / static_cast<double>(dataset.size());
  for (std::size_t index = 0; index < dataset.size(); ++index) {
    const double y = dataset[index].positive ? 1.0 : -1.0;
    if (y * scores[index] < 1.0) {
      AddScaled(gradient, dataset[index].features, -y * scale);
    }
  }
  return gradient;
}

TrainResult Train(const Dataset& dataset, const TrainConfig& config) {
  if (config.loss == TrainingLoss::kZeroOne) {
    return TrainZeroOne(dataset, config);
  }
  const RankLoss loss = ToRankLoss(config.loss);
  InferenceOptions options;
  options.seed = config.seed;
  return Descend(
      dataset, config,
      [&](const LinearModel& model, std::vector<double>& gradient) {
        auto evaluation = EvaluateHinge(model, dataset, loss, options);
        gradient = std::move(evaluation.gradient);
        return evaluation.objective;
      },
      [&](const LinearModel& model) {
        return HingeObjective(model, dataset, loss, options);
      });
}

TrainResult TrainZeroOne(const Dataset& dataset, const TrainConfig& config) {
  return Descend(
      dataset, config,
      [&](const LinearModel& model, std::vector<double>& gradient) {
        gradient = ZeroOneGradient(model, dataset);
        return ZeroOneHinge(model, dataset);
      },
      [&](const LinearModel& model) { return ZeroOneHinge(model, dataset); });
}

Metric ParseMetric(std::string_view name) {
  if (name == "ap") return Metric::kAveragePrecision;
  if (name == "ndcg") return Metric::kNdcg;
  throw ContractError("unknown metric '" + std::string(name) + "'");
}

double EvalMetric(const LinearModel& model, const Dataset& dataset,
                  Metric metric) {
  const auto order = PredictRanking(model, dataset);
  std::string pattern;
  pattern.reserve(order.size());
  for (const auto index : order) {
    pattern.push_back(dataset[index].positive ? '+' : '-');
  }
  const RankLoss loss = metric == Metric::kAveragePrecision
                            ? RankLoss::AveragePrecision()
                            : RankLoss::Ndcg();
  return 1.0 - LossOfPattern(pattern, loss);
}

}  // namespace rankopt
