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

#include "rankopt/inference.hpp"

#include <algorithm>
#include <string>

#include "rankopt/error.hpp"
#include "rankopt/oracle.hpp"

namespace rankopt {
namespace {

constexpr double kObjectiveTolerance = 1e-9;

// Evaluates f_j discrete derivatives against a fixed sorted positive array.
class RankScanner {
 public:
  RankScanner(const LossContext& ctx, std::span<const double> positive_scores)
      : ctx_(ctx),
        positive_scores_(positive_scores),
        scale_(2.0 / (static_cast<double>(ctx.num_negative()) *
                      static_cast<double>(ctx.num_positive()))) {}

  double Derivative(double s_star_j, std::int64_t j, std::int64_t i) const {
    return scale_ * (positive_scores_[static_cast<std::size_t>(i - 1)] -
                     s_star_j) +
           ctx_.DeltaDerivativeUnchecked(j, i);
  }

  // Largest maximizer over [l_pos, r_pos]; the running value starts at
  // f_j(l_pos) = 0 and only s+_{l_pos} .. s+_{r_pos - 1} are read.
  Rank Scan(double s_star_j, std::int64_t j, std::int64_t l_pos,
            std::int64_t r_pos) {
    double value = 0.0;
    double best_value = 0.0;
    std::int64_t best = l_pos;
    for (std::int64_t i = l_pos; i < r_pos; ++i) {
      value += Derivative(s_star_j, j, i);
      if (value >= best_value) {
        best_value = value;
        best = i + 1;
      }
    }
    steps_ += static_cast<std::uint64_t>(r_pos - l_pos);
    return static_cast<Rank>(best);
  }

  std::uint64_t steps() const { return steps_; }

 private:
  const LossContext& ctx_;
  std::span<const double> positive_scores_;
  double scale_;
  std::uint64_t steps_ = 0;
};

void CheckInstance(const ScoredInstance& instance, const LossContext& ctx) {
  if (static_cast<std::int64_t>(instance.num_positive()) !=
          ctx.num_positive() ||
      static_cast<std::int64_t>(instance.num_negative()) !=
          ctx.num_negative()) {
    throw ContractError("loss context sized for " +
                        std::to_string(ctx.num_positive()) + "+" +
                        std::to_string(ctx.num_negative()) +
                        " samples, instance has " +
                        std::to_string(instance.num_positive()) + "+" +
                        std::to_string(instance.num_negative()));
  }
}

void CheckLoss(const LossContext& ctx, const InferenceOptions& options) {
  if (!ctx.loss().qs_suitable() && !options.oracle_checked) {
    throw UnsuitableLossError(
        "loss '" + ctx.loss().name() +
        "' does not have a j-monotone discrete derivative; the greedy "
        "interleaving can be infeasible. Use the exhaustive solver or "
        "oracle-checked mode");
  }
}

template <typename Scores>
double DiscriminantImpl(std::span<const double> positive_scores,
                        const Scores& negative_score,
                        std::size_t num_negative,
                        const InterleavingVector& ranks) {
  const auto p = static_cast<std::int64_t>(positive_scores.size());
  const auto n = static_cast<std::int64_t>(num_negative);
  const double norm = 1.0 / (static_cast<double>(p) * static_cast<double>(n));
  double total = 0.0;
  const auto positive_ranks = PositiveRanks(ranks, p);
  for (std::int64_t i = 0; i < p; ++i) {
    const auto coefficient = static_cast<double>(
        n + 2 - 2 * positive_ranks[static_cast<std::size_t>(i)]);
    total += coefficient * positive_scores[static_cast<std::size_t>(i)];
  }
  for (std::size_t j = 0; j < num_negative; ++j) {
    const auto coefficient = static_cast<double>(p + 2 - 2 * ranks[j]);
    total += coefficient * negative_score(j);
  }
  return total * norm;
}

void FillResult(const ScoredInstance& arranged, const LossContext& ctx,
                InferenceResult& result) {
  const auto negatives = arranged.negatives();
  result.loss_at_opt = RankLossValue(result.opt, ctx);
  result.objective =
      DiscriminantImpl(arranged.positive_scores(),
                       [&](std::size_t j) { return negatives[j].score; },
                       negatives.size(), result.opt) +
      result.loss_at_opt;
  result.negative_ids.resize(negatives.size());
  for (std::size_t j = 0; j < negatives.size(); ++j) {
    result.negative_ids[j] = negatives[j].id;
  }
}

void AttachGreedyCheck(const ScoredInstance& original, const LossContext& ctx,
                       const InferenceOptions& options,
                       InferenceResult& result) {
  GreedyCheck check;
  check.per_negative_argmax = PerNegativeArgmax(original, ctx);
  check.monotone = check.per_negative_argmax.IsMonotone();
  const auto patterns = InterleavingCount(ctx.num_positive(), ctx.num_negative());
  if (patterns <= options.oracle_pattern_limit) {
    const auto oracle =
        BruteForcePattern(original, ctx, options.oracle_pattern_limit);
    check.oracle_objective = oracle.objective;
    check.objective_matches =
        result.objective >= oracle.objective - kObjectiveTolerance;
  }
  result.greedy_check = std::move(check);
}

}  // namespace

double FDerivative(const LossContext& ctx,
                   std::span<const double> positive_scores, double s_star_j,
                   std::int64_t j, std::int64_t i) {
  if (static_cast<std::int64_t>(positive_scores.size()) != ctx.num_positive()) {
    throw ContractError("positive score array does not match loss context");
  }
  if (j < 1 || j > ctx.num_negative() || i < 1 || i > ctx.num_positive()) {
    throw ContractError("f derivative index (j=" + std::to_string(j) +
                        ", i=" + std::to_string(i) + ") out of range");
  }
  return RankScanner(ctx, positive_scores).Derivative(s_star_j, j, i);
}

Rank OptRankScan(const LossContext& ctx,
                 std::span<const double> positive_scores, double s_star_j,
                 std::int64_t j, std::int64_t l_pos, std::int64_t r_pos) {
  if (static_cast<std::int64_t>(positive_scores.size()) != ctx.num_positive()) {
    throw ContractError("positive score array does not match loss context");
  }
  if (j < 1 || j > ctx.num_negative()) {
    throw ContractError("negative index " + std::to_string(j) +
                        " out of range");
  }
  if (l_pos < 1 || l_pos > r_pos || r_pos > ctx.num_positive() + 1) {
    throw ContractError("rank interval [" + std::to_string(l_pos) + ", " +
                        std::to_string(r_pos) + "] invalid for " +
                        std::to_string(ctx.num_positive()) + " positives");
  }
  return RankScanner(ctx, positive_scores).Scan(s_star_j, j, l_pos, r_pos);
}

InferenceResult OptRanks(ScoredInstance instance, const LossContext& ctx,
                         const InferenceOptions& options) {
  CheckInstance(instance, ctx);
  CheckLoss(ctx, options);
  std::optional<ScoredInstance> original;
  if (options.oracle_checked) original = instance;

  const std::size_t n = instance.num_negative();
  const auto top_rank = ctx.num_positive() + 1;
  auto negatives = instance.mutable_negatives();
  NegativeSelector selector(options.selection, options.seed);
  RankScanner scanner(ctx, instance.positive_scores());
  InferenceResult result;
  auto& opt = result.opt.mutable_ranks();
  opt.assign(n, 0);

  // Invariant for every frame: negatives[l_neg..r_neg] (1-based) are exactly
  // the elements of s* at those positions, in some order, and their optimal
  // ranks lie in [l_pos, r_pos].
  struct Frame {
    std::size_t l_neg;
    std::size_t r_neg;
    std::int64_t l_pos;
    std::int64_t r_pos;
  };
  std::vector<Frame> stack;
  stack.push_back({1, n, 1, top_rank});
  while (!stack.empty()) {
    const Frame frame = stack.back();
    stack.pop_back();
    if (frame.l_pos == frame.r_pos) {
      std::fill(opt.begin() + static_cast<std::ptrdiff_t>(frame.l_neg - 1),
                opt.begin() + static_cast<std::ptrdiff_t>(frame.r_neg),
                static_cast<Rank>(frame.l_pos));
      continue;
    }
    std::size_t m = selector.Median(negatives, frame.l_neg, frame.r_neg);
    m = selector.Select(negatives, m, frame.l_neg, frame.r_neg);
    const Rank opt_m = scanner.Scan(negatives[m - 1].score,
                                    static_cast<std::int64_t>(m), frame.l_pos,
                                    frame.r_pos);
    opt[m - 1] = opt_m;
    if (options.scan_trace != nullptr) {
      options.scan_trace->push_back({m, frame.l_pos, frame.r_pos, opt_m});
    }
    // Right first so the left half is solved first.
    if (m < frame.r_neg) stack.push_back({m + 1, frame.r_neg, opt_m, frame.r_pos});
    if (frame.l_neg < m) stack.push_back({frame.l_neg, m - 1, frame.l_pos, opt_m});
  }

  result.comparisons = selector.comparisons();
  result.scan_steps = scanner.steps();
  FillResult(instance, ctx, result);
  if (original) AttachGreedyCheck(*original, ctx, options, result);
  return result;
}

InferenceResult SortBaseline(ScoredInstance instance, const LossContext& ctx,
                             const InferenceOptions& options) {
  CheckInstance(instance, ctx);
  CheckLoss(ctx, options);
  std::optional<ScoredInstance> original;
  if (options.oracle_checked) original = instance;

  auto negatives = instance.mutable_negatives();
  std::uint64_t comparisons = 0;
  std::sort(negatives.begin(), negatives.end(),
            [&comparisons](const ScoredSample& a, const ScoredSample& b) {
              ++comparisons;
              return RanksAbove(a, b);
            });

  RankScanner scanner(ctx, instance.positive_scores());
  InferenceResult result;
  auto& opt = result.opt.mutable_ranks();
  opt.resize(negatives.size());
  const auto top_rank = ctx.num_positive() + 1;
  std::int64_t previous = 1;
  for (std::size_t j = 0; j < negatives.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j + 1);
    opt[j] = scanner.Scan(negatives[j].score, jj, previous, top_rank);
    if (options.scan_trace != nullptr) {
      options.scan_trace->push_back({j + 1, previous, top_rank, opt[j]});
    }
    previous = opt[j];
  }

  result.comparisons = comparisons;
  result.scan_steps = scanner.steps();
  FillResult(instance, ctx, result);
  if (original) AttachGreedyCheck(*original, ctx, options, result);
  return result;
}

double DiscriminantValue(std::span<const double> positive_scores,
                         std::span<const double> negative_scores,
                         const InterleavingVector& ranks) {
  if (positive_scores.empty() || negative_scores.empty()) {
    throw ContractError("discriminant needs both classes");
  }
  ranks.Validate(static_cast<std::int64_t>(positive_scores.size()),
                 static_cast<std::int64_t>(negative_scores.size()));
  return DiscriminantImpl(
      positive_scores, [&](std::size_t j) { return negative_scores[j]; },
      negative_scores.size(), ranks);
}

double ObjectiveValue(const ScoredInstance& instance, const LossContext& ctx,
                      const InterleavingVector& ranks) {
  CheckInstance(instance, ctx);
  ranks.Validate(ctx.num_positive(), ctx.num_negative());
  const auto sorted = instance.SortedNegatives();
  return DiscriminantImpl(
             instance.positive_scores(),
             [&](std::size_t j) { return sorted[j].score; }, sorted.size(),
             ranks) +
         RankLossValue(ranks, ctx);
}

InterleavingVector PerNegativeArgmax(const ScoredInstance& instance,
                                     const LossContext& ctx) {
  CheckInstance(instance, ctx);
  const auto sorted = instance.SortedNegatives();
  RankScanner scanner(ctx, instance.positive_scores());
  std::vector<Rank> ranks(sorted.size());
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    ranks[j] = scanner.Scan(sorted[j].score, static_cast<std::int64_t>(j + 1),
                            1, ctx.num_positive() + 1);
  }
  return InterleavingVector(std::move(ranks));
}

}  // namespace rankopt
