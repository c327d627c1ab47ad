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

// Rank-based losses (AP and NDCG) expressed through their per-negative
// decomposition.
//
// A loss is handled by the divide-and-conquer solver when it decomposes as
//
//   loss(r) = sum_j delta_j(r_j)
//
// over the negatives (j = 1 is the highest scored negative), when the discrete
// derivative delta_j(i+1) - delta_j(i) is nondecreasing in j, and when that
// derivative is O(1) to evaluate. Both losses anchor delta_j(P+1) = 0: a
// negative ranked below every positive costs nothing.
//
//   AP:   delta_j(i+1) - delta_j(i) = ((j-1)/(j+i-1) - j/(j+i)) / P
//   NDCG: delta_j(i+1) - delta_j(i) = (D(i+j) - D(i+j-1)) / C,
//         C = D(1) + ... + D(P)
//
// The NDCG derivative is j-monotone exactly when the discount D is convex.

#ifndef RANKOPT_LOSS_HPP_
#define RANKOPT_LOSS_HPP_

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankopt/interleaving.hpp"

namespace rankopt {

enum class DiscountKind {
  // D(i) = 1 / log2(1 + i).
  kLogConvex,
  // D(1) = D(2) = 1, D(i) = 1 / log2(i) for i > 2. Not convex at i = 1.
  kChakrabartiNonConvex,
};

class DiscountFunction {
 public:
  explicit DiscountFunction(DiscountKind kind = DiscountKind::kLogConvex)
      : kind_(kind) {}

  DiscountKind kind() const { return kind_; }
  bool convex() const { return kind_ == DiscountKind::kLogConvex; }

  // position >= 1.
  double operator()(std::int64_t position) const {
    const auto x = static_cast<double>(position);
    if (kind_ == DiscountKind::kChakrabartiNonConvex) {
      return position <= 2 ? 1.0 : 1.0 / std::log2(x);
    }
    return 1.0 / std::log2(1.0 + x);
  }

  friend bool operator==(const DiscountFunction&,
                         const DiscountFunction&) = default;

 private:
  DiscountKind kind_;
};

enum class LossKind { kAveragePrecision, kNdcg };

class RankLoss {
 public:
  static RankLoss AveragePrecision() {
    return RankLoss(LossKind::kAveragePrecision, DiscountFunction());
  }
  static RankLoss Ndcg(DiscountFunction discount = DiscountFunction()) {
    return RankLoss(LossKind::kNdcg, discount);
  }
  // "ap", "ndcg" or "ndcg-nonconvex".
  static RankLoss FromName(std::string_view name);

  LossKind kind() const { return kind_; }
  const DiscountFunction& discount() const { return discount_; }

  // AP always; NDCG only with a convex discount.
  bool qs_suitable() const {
    return kind_ == LossKind::kAveragePrecision || discount_.convex();
  }

  std::string name() const;

  friend bool operator==(const RankLoss&, const RankLoss&) = default;

 private:
  RankLoss(LossKind kind, DiscountFunction discount)
      : kind_(kind), discount_(discount) {}

  LossKind kind_;
  DiscountFunction discount_;
};

// Per-problem constants for a loss: class sizes and, for NDCG, the
// normalizer C and a table of discount values D(1..P+N+1). Immutable.
class LossContext {
 public:
  LossContext(const RankLoss& loss, std::int64_t num_positive,
              std::int64_t num_negative);

  const RankLoss& loss() const { return loss_; }
  std::int64_t num_positive() const { return num_positive_; }
  std::int64_t num_negative() const { return num_negative_; }

  // C = D(1) + ... + D(P); 0 for AP.
  double ndcg_norm() const { return ndcg_norm_; }

  double Discount(std::int64_t position) const {
    if (position < static_cast<std::int64_t>(discount_table_.size())) {
      return discount_table_[position];
    }
    return loss_.discount()(position);
  }

  // delta_j(i+1) - delta_j(i) without range checks; 1 <= j <= n, 1 <= i <= p.
  double DeltaDerivativeUnchecked(std::int64_t j, std::int64_t i) const {
    if (loss_.kind() == LossKind::kAveragePrecision) {
      const auto jd = static_cast<double>(j);
      const auto id = static_cast<double>(i);
      return ((jd - 1.0) / (jd + id - 1.0) - jd / (jd + id)) * inv_positive_;
    }
    return (Discount(i + j) - Discount(i + j - 1)) * inv_norm_;
  }

 private:
  RankLoss loss_;
  std::int64_t num_positive_;
  std::int64_t num_negative_;
  double inv_positive_;
  double ndcg_norm_ = 0.0;
  double inv_norm_ = 0.0;
  // Index 0 unused.
  std::vector<double> discount_table_;
};

// Direct definitions on an interleaving vector, O(P + N).
//   AP loss   = 1 - (1/P) sum_k k / (k + n_k)
//   NDCG loss = 1 - sum_k D(k + n_k) / C
// where n_k counts the negatives above the k-th positive.
double ApLoss(const InterleavingVector& ranks, const LossContext& ctx);
double NdcgLoss(const InterleavingVector& ranks, const LossContext& ctx);
double RankLossValue(const InterleavingVector& ranks, const LossContext& ctx);

// Direct definitions on an explicit +/- pattern (top to bottom).
double ApLossOfPattern(std::string_view pattern);
double NdcgLossOfPattern(std::string_view pattern,
                         const DiscountFunction& discount);
double LossOfPattern(std::string_view pattern, const RankLoss& loss);

// delta_j(i+1) - delta_j(i) with 1 <= j <= n and 1 <= i <= p.
double DeltaDerivative(const LossContext& ctx, std::int64_t j, std::int64_t i);

// delta_j(i) for 1 <= i <= p + 1, accumulated backwards from
// delta_j(p+1) = 0. O(p - i).
double DeltaValue(const LossContext& ctx, std::int64_t j, std::int64_t i);

// sum_j delta_j(r_j). O(N * P).
double DecomposedLoss(const LossContext& ctx, const InterleavingVector& ranks);

// True iff the discrete derivative is nondecreasing in j over the full
// (j, i) grid, up to `tolerance`. Exhaustive; meant for small contexts.
bool CheckJMonotone(const LossContext& ctx, double tolerance = 1e-12);

}  // namespace rankopt

#endif  // RANKOPT_LOSS_HPP_
