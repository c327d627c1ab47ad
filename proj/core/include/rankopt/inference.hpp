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

// Loss-augmented inference: find the ranking R maximizing
//
//   loss(R) + F(R),   F(R) = 1/(P N) sum_{x in P, y in N} R_xy (s_x - s_y)
//
// Some maximizer keeps both classes in descending score order, so only the
// interleaving vector r has to be found. The objective splits into
// sum_j f_j(r_j) with
//
//   f_j(i+1) - f_j(i) = 2 (s+_i - s*_j) / (N P) + delta_j(i+1) - delta_j(i)
//
// where s+ are the positives and s* the negatives, both sorted descending.
// For a loss whose discrete derivative is nondecreasing in j, the largest
// maximizer of each f_j is nondecreasing in j, which OptRanks exploits by
// solving for the median negative and recursing on both halves with the
// rank interval split at its optimum.

#ifndef RANKOPT_INFERENCE_HPP_
#define RANKOPT_INFERENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rankopt/instance.hpp"
#include "rankopt/interleaving.hpp"
#include "rankopt/loss.hpp"
#include "rankopt/selection.hpp"

namespace rankopt {

// One rank scan performed by a solver: negative j (1-based position in s*)
// searched over [l_pos, r_pos] and settled on `result`.
struct ScanRecord {
  std::size_t j;
  std::int64_t l_pos;
  std::int64_t r_pos;
  Rank result;
};

struct InferenceOptions {
  SelectionMode selection = SelectionMode::kRandomized;
  std::uint64_t seed = 0;
  // Accept losses without the j-monotone derivative, and attach a
  // GreedyCheck to the result.
  bool oracle_checked = false;
  // Upper bound on patterns for the exhaustive comparison in a GreedyCheck.
  std::uint64_t oracle_pattern_limit = 1'000'000;
  std::vector<ScanRecord>* scan_trace = nullptr;
};

// Diagnostics produced in oracle-checked mode.
struct GreedyCheck {
  // Largest maximizer of each f_j over the full range [1, P+1], computed
  // independently per negative.
  InterleavingVector per_negative_argmax;
  bool monotone = true;
  // Exhaustive optimum over all interleavings, when within the limit.
  std::optional<double> oracle_objective;
  // False when the oracle found a strictly better objective (> 1e-9).
  bool objective_matches = true;
};

struct InferenceResult {
  InterleavingVector opt;
  double objective = 0.0;
  double loss_at_opt = 0.0;
  // RanksAbove comparisons between negatives.
  std::uint64_t comparisons = 0;
  // f_j discrete-derivative evaluations.
  std::uint64_t scan_steps = 0;
  // Negative ids in the solver's final arrangement; the negative with id
  // negative_ids[j] has interleaving rank opt[j].
  std::vector<std::size_t> negative_ids;
  std::optional<GreedyCheck> greedy_check;
};

// f_j(i+1) - f_j(i) for 1 <= i <= P.
double FDerivative(const LossContext& ctx,
                   std::span<const double> positive_scores, double s_star_j,
                   std::int64_t j, std::int64_t i);

// Largest i in [l_pos, r_pos] maximizing f_j, by one pass over the discrete
// derivative. Requires 1 <= l_pos <= r_pos <= P + 1.
Rank OptRankScan(const LossContext& ctx,
                 std::span<const double> positive_scores, double s_star_j,
                 std::int64_t j, std::int64_t l_pos, std::int64_t r_pos);

// Divide-and-conquer solver. Works on its own copy of the negatives.
// Throws UnsuitableLossError for a loss that is not QS-suitable unless
// options.oracle_checked is set.
InferenceResult OptRanks(ScoredInstance instance, const LossContext& ctx,
                         const InferenceOptions& options = {});

// Sorts all negatives, then scans each over [opt_{j-1}, P+1].
InferenceResult SortBaseline(ScoredInstance instance, const LossContext& ctx,
                             const InferenceOptions& options = {});

// F for positives sorted descending and negatives arranged so that
// negative_scores[j] belongs to a negative of rank ranks[j] (any order
// within a block of equal ranks). Uses the per-sample coefficients
//   c+_i = (N + 2 - 2 r+_i) / (P N),   c-_j = (P + 2 - 2 r_j) / (P N).
double DiscriminantValue(std::span<const double> positive_scores,
                         std::span<const double> negative_scores,
                         const InterleavingVector& ranks);

// loss(r) + F(r) for an arbitrary instance; sorts a copy of the negatives.
double ObjectiveValue(const ScoredInstance& instance, const LossContext& ctx,
                      const InterleavingVector& ranks);

// Per-negative largest maximizer of f_j over [1, P+1], ignoring
// monotonicity. For a QS-suitable loss this equals the optimum.
InterleavingVector PerNegativeArgmax(const ScoredInstance& instance,
                                     const LossContext& ctx);

}  // namespace rankopt

#endif  // RANKOPT_INFERENCE_HPP_
