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

// Linear ranking models trained on the structured hinge bound
//
//   J(w) = max_R [loss(R) + F(R; w)] - F(R*; w)
//
// with R* the ground truth (all positives first). The maximizing ranking
// comes from OptRanks; the semi-gradient is grad F(R_bar) - grad F(R*),
// which for a linear score reduces to sum_x (c_bar(x) - c*(x)) x with the
// per-sample ranking coefficients c.

#ifndef RANKOPT_LEARNER_HPP_
#define RANKOPT_LEARNER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankopt/dataset.hpp"
#include "rankopt/inference.hpp"
#include "rankopt/instance.hpp"
#include "rankopt/loss.hpp"

namespace rankopt {

enum class TrainingLoss { kAveragePrecision, kNdcg, kZeroOne };

TrainingLoss ParseTrainingLoss(std::string_view name);
std::string TrainingLossName(TrainingLoss loss);
RankLoss ToRankLoss(TrainingLoss loss);

struct TrainConfig {
  TrainingLoss loss = TrainingLoss::kAveragePrecision;
  int epochs = 100;
  // Each epoch moves the weights a distance learning_rate / sqrt(t) along
  // the normalized semi-gradient before the L2 shrink.
  double learning_rate = 1.0;
  double l2_lambda = 0.0;
  std::uint64_t seed = 0;
  // Compare the semi-gradient with central differences every epoch.
  bool fd_check = false;

  void Validate() const;
};

struct EpochRecord {
  int epoch = 0;
  // Hinge objective at the start of the epoch, without the regularizer.
  double objective = 0.0;
  double regularized_objective = 0.0;
  double step_size = 0.0;
  std::optional<double> fd_max_error;
};

struct TrainingLog {
  std::vector<EpochRecord> epochs;
  // Hinge objective of the returned model, without the regularizer.
  double final_objective = 0.0;
  // Epoch whose starting weights were returned; epochs + 1 means the weights
  // after the last step.
  int best_epoch = 0;
};

struct TrainResult {
  LinearModel model;
  TrainingLog log;
};

// phi(x; w) for every sample, in dataset order.
std::vector<double> ScoreSamples(const LinearModel& model,
                                 const Dataset& dataset);

// Instance whose sample ids are dataset positions.
ScoredInstance ScoreDataset(const LinearModel& model, const Dataset& dataset);

// Dataset positions by descending score, ties by position.
std::vector<std::size_t> PredictRanking(const LinearModel& model,
                                        const Dataset& dataset);

struct HingeEvaluation {
  double objective = 0.0;
  std::vector<double> gradient;
  InferenceResult most_violating;
};

// J(w) and its semi-gradient from a single inference call.
HingeEvaluation EvaluateHinge(const LinearModel& model, const Dataset& dataset,
                              const RankLoss& loss,
                              const InferenceOptions& options = {});

double HingeObjective(const LinearModel& model, const Dataset& dataset,
                      const RankLoss& loss,
                      const InferenceOptions& options = {});

std::vector<double> SemiGradient(const LinearModel& model,
                                 const Dataset& dataset, const RankLoss& loss,
                                 const InferenceOptions& options = {});

// Largest |central difference - semi-gradient| / max(1e-3, |semi-gradient|)
// over the coordinates, step h.
double FiniteDifferenceError(const LinearModel& model, const Dataset& dataset,
                             const RankLoss& loss, double h = 1e-6);

// (1/n) sum_x max(0, 1 - y_x phi(x; w)), y = +1 / -1.
double ZeroOneHinge(const LinearModel& model, const Dataset& dataset);
std::vector<double> ZeroOneGradient(const LinearModel& model,
                                    const Dataset& dataset);

// Full-batch subgradient descent from w = 0 with a proximal L2 step.
// Dispatches to TrainZeroOne for TrainingLoss::kZeroOne. Throws
// DivergenceError once the regularized objective exceeds ten times its
// initial value.
TrainResult Train(const Dataset& dataset, const TrainConfig& config);
TrainResult TrainZeroOne(const Dataset& dataset, const TrainConfig& config);

enum class Metric { kAveragePrecision, kNdcg };

Metric ParseMetric(std::string_view name);

// 1 - loss of the predicted ranking.
double EvalMetric(const LinearModel& model, const Dataset& dataset,
                  Metric metric);

}  // namespace rankopt

#endif  // RANKOPT_LEARNER_HPP_
