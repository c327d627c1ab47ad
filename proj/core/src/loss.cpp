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

#include "rankopt/loss.hpp"

#include <algorithm>

#include "rankopt/error.hpp"

namespace rankopt {
namespace {

// Larger problems evaluate D on the fly instead of caching it.
constexpr std::int64_t kMaxDiscountTable = std::int64_t{1} << 22;

void CheckDimensions(const InterleavingVector& ranks, const LossContext& ctx) {
  ranks.Validate(ctx.num_positive(), ctx.num_negative());
}

// n_k for k = 1..P, i.e. the number of negatives above the k-th positive.
template <typename Fn>
void ForEachPositive(const InterleavingVector& ranks, std::int64_t p, Fn&& fn) {
  const auto r = ranks.ranks();
  std::size_t above = 0;
  for (std::int64_t k = 1; k <= p; ++k) {
    while (above < r.size() && r[above] <= k) ++above;
    fn(k, static_cast<std::int64_t>(above));
  }
}

}  // namespace

RankLoss RankLoss::FromName(std::string_view name) {
  if (name == "ap") return AveragePrecision();
  if (name == "ndcg") return Ndcg();
  if (name == "ndcg-nonconvex") {
    return Ndcg(DiscountFunction(DiscountKind::kChakrabartiNonConvex));
  }
  throw ContractError("unknown loss '" + std::string(name) + "'");
}

std::string RankLoss::name() const {
  if (kind_ == LossKind::kAveragePrecision) return "ap";
  return discount_.convex() ? "ndcg" : "ndcg-nonconvex";
}

LossContext::LossContext(const RankLoss& loss, std::int64_t num_positive,
                         std::int64_t num_negative)
    : loss_(loss), num_positive_(num_positive), num_negative_(num_negative) {
  if (num_positive < 1 || num_negative < 1) {
    throw ContractError("loss context needs at least one positive and one "
                        "negative sample");
  }
  inv_positive_ = 1.0 / static_cast<double>(num_positive);
  if (loss.kind() == LossKind::kNdcg) {
    const std::int64_t table_size =
        std::min(num_positive + num_negative + 2, kMaxDiscountTable);
    discount_table_.resize(static_cast<std::size_t>(table_size));
    for (std::int64_t i = 1; i < table_size; ++i) {
      discount_table_[static_cast<std::size_t>(i)] = loss.discount()(i);
    }
    for (std::int64_t i = 1; i <= num_positive; ++i) ndcg_norm_ += Discount(i);
    inv_norm_ = 1.0 / ndcg_norm_;
  }
}

double ApLoss(const InterleavingVector& ranks, const LossContext& ctx) {
  CheckDimensions(ranks, ctx);
  double precision_sum = 0.0;
  ForEachPositive(ranks, ctx.num_positive(),
                  [&](std::int64_t k, std::int64_t above) {
                    precision_sum += static_cast<double>(k) /
                                     static_cast<double>(k + above);
                  });
  return 1.0 - precision_sum / static_cast<double>(ctx.num_positive());
}

double NdcgLoss(const InterleavingVector& ranks, const LossContext& ctx) {
  if (ctx.loss().kind() != LossKind::kNdcg) {
    throw ContractError("NDCG loss evaluated with a non-NDCG context");
  }
  CheckDimensions(ranks, ctx);
  double gain = 0.0;
  ForEachPositive(ranks, ctx.num_positive(),
                  [&](std::int64_t k, std::int64_t above) {
                    gain += ctx.Discount(k + above);
                  });
  return 1.0 - gain / ctx.ndcg_norm();
}

double RankLossValue(const InterleavingVector& ranks, const LossContext& ctx) {
  return ctx.loss().kind() == LossKind::kAveragePrecision ? ApLoss(ranks, ctx)
                                                          : NdcgLoss(ranks, ctx);
}

double ApLossOfPattern(std::string_view pattern) {
  double precision_sum = 0.0;
  std::int64_t positives = 0;
  for (std::size_t index = 0; index < pattern.size(); ++index) {
    if (pattern[index] == '+') {
      ++positives;
      precision_sum += static_cast<double>(positives) /
                       static_cast<double>(index + 1);
    } else if (pattern[index] != '-') {
      throw ContractError("malformed sign pattern");
    }
  }
  if (positives == 0) throw ContractError("pattern has no positives");
  return 1.0 - precision_sum / static_cast<double>(positives);
}

double NdcgLossOfPattern(std::string_view pattern,
                         const DiscountFunction& discount) {
  double gain = 0.0;
  double ideal = 0.0;
  std::int64_t positives = 0;
  for (std::size_t index = 0; index < pattern.size(); ++index) {
    if (pattern[index] == '+') {
      ++positives;
      gain += discount(static_cast<std::int64_t>(index + 1));
      ideal += discount(positives);
    } else if (pattern[index] != '-') {
      throw ContractError("malformed sign pattern");
    }
  }
  if (positives == 0) throw ContractError("pattern has no positives");
  return 1.0 - gain / ideal;
}

double LossOfPattern(std::string_view pattern, const RankLoss& loss) {
  return loss.kind() == LossKind::kAveragePrecision
             ? ApLossOfPattern(pattern)
             : NdcgLossOfPattern(pattern, loss.discount());
}

double DeltaDerivative(const LossContext& ctx, std::int64_t j, std::int64_t i) {
  if (j < 1 || j > ctx.num_negative() || i < 1 || i > ctx.num_positive()) {
    throw ContractError("discrete derivative index (j=" + std::to_string(j) +
                        ", i=" + std::to_string(i) + ") out of range");
  }
  return ctx.DeltaDerivativeUnchecked(j, i);
}

double DeltaValue(const LossContext& ctx, std::int64_t j, std::int64_t i) {
  if (j < 1 || j > ctx.num_negative() || i < 1 || i > ctx.num_positive() + 1) {
    throw ContractError("delta index (j=" + std::to_string(j) +
                        ", i=" + std::to_string(i) + ") out of range");
  }
  // delta_j(i) = -sum_{k=i}^{p} (delta_j(k+1) - delta_j(k)).
  double value = 0.0;
  for (std::int64_t k = ctx.num_positive(); k >= i; --k) {
    value -= ctx.DeltaDerivativeUnchecked(j, k);
  }
  return value;
}

double DecomposedLoss(const LossContext& ctx, const InterleavingVector& ranks) {
  CheckDimensions(ranks, ctx);
  double loss = 0.0;
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    loss += DeltaValue(ctx, static_cast<std::int64_t>(j + 1), ranks[j]);
  }
  return loss;
}

bool CheckJMonotone(const LossContext& ctx, double tolerance) {
  for (std::int64_t j = 1; j < ctx.num_negative(); ++j) {
    for (std::int64_t i = 1; i <= ctx.num_positive(); ++i) {
      if (ctx.DeltaDerivativeUnchecked(j + 1, i) <
          ctx.DeltaDerivativeUnchecked(j, i) - tolerance) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace rankopt
