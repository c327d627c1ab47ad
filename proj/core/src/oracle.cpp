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

#include "rankopt/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "rankopt/error.hpp"
#include "rankopt/inference.hpp"

namespace rankopt {
namespace {

constexpr double kTieTolerance = 1e-12;

void CheckInstance(const ScoredInstance& instance, const LossContext& ctx) {
  if (static_cast<std::int64_t>(instance.num_positive()) !=
          ctx.num_positive() ||
      static_cast<std::int64_t>(instance.num_negative()) !=
          ctx.num_negative()) {
    throw ContractError("loss context does not match instance sizes");
  }
}

// Advances to the next nondecreasing vector over [1, top] in lexicographic
// order. Returns false after the last one.
bool NextMonotone(std::vector<Rank>& ranks, Rank top) {
  std::size_t j = ranks.size();
  while (j > 0 && ranks[j - 1] == top) --j;
  if (j == 0) return false;
  const Rank bumped = ranks[j - 1] + 1;
  std::fill(ranks.begin() + static_cast<std::ptrdiff_t>(j - 1), ranks.end(),
            bumped);
  return true;
}

bool ClassSorted(const std::vector<RankedSample>& ordering) {
  double last_positive = std::numeric_limits<double>::infinity();
  double last_negative = std::numeric_limits<double>::infinity();
  for (const auto& sample : ordering) {
    double& last = sample.positive ? last_positive : last_negative;
    if (sample.score > last) return false;
    last = sample.score;
  }
  return true;
}

}  // namespace

std::uint64_t InterleavingCount(std::int64_t num_positive,
                                std::int64_t num_negative) {
  const std::int64_t k = std::min(num_positive, num_negative);
  const std::int64_t total = num_positive + num_negative;
  // Running product stays an exact binomial coefficient at every step;
  // dividing out the gcd first keeps the intermediate in range.
  std::uint64_t count = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const auto factor = static_cast<std::uint64_t>(total - k + i);
    const auto divisor = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(count, divisor);
    if (__builtin_mul_overflow(count / g, factor / (divisor / g), &count)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return count;
}

PatternOracleResult BruteForcePattern(const ScoredInstance& instance,
                                      const LossContext& ctx,
                                      std::uint64_t max_patterns) {
  CheckInstance(instance, ctx);
  const auto patterns = InterleavingCount(ctx.num_positive(), ctx.num_negative());
  if (patterns > max_patterns) {
    throw OracleLimitError(std::to_string(patterns) +
                           " interleavings exceed the oracle limit of " +
                           std::to_string(max_patterns));
  }
  const auto sorted = instance.SortedNegatives();
  std::vector<double> negative_scores(sorted.size());
  std::transform(sorted.begin(), sorted.end(), negative_scores.begin(),
                 [](const ScoredSample& s) { return s.score; });

  const auto top = static_cast<Rank>(ctx.num_positive() + 1);
  InterleavingVector candidate(std::vector<Rank>(sorted.size(), 1));
  PatternOracleResult result;
  result.objective = -std::numeric_limits<double>::infinity();
  do {
    const double value =
        DiscriminantValue(instance.positive_scores(), negative_scores,
                          candidate) +
        RankLossValue(candidate, ctx);
    ++result.patterns_evaluated;
    if (value >= result.objective) {
      result.objective = value;
      result.best = candidate;
    }
  } while (NextMonotone(candidate.mutable_ranks(), top));
  return result;
}

PermutationOracleResult BruteForcePermutation(const ScoredInstance& instance,
                                              const LossContext& ctx) {
  CheckInstance(instance, ctx);
  const std::size_t p = instance.num_positive();
  const std::size_t n = instance.num_negative();
  if (p + n > kMaxPermutationSamples) {
    throw OracleLimitError(std::to_string(p + n) +
                           " samples exceed the permutation oracle limit of " +
                           std::to_string(kMaxPermutationSamples));
  }
  std::vector<RankedSample> samples;
  for (std::size_t i = 0; i < p; ++i) {
    samples.push_back(
        {true, instance.positive_ids()[i], instance.positive_scores()[i]});
  }
  for (const auto& negative : instance.negatives()) {
    samples.push_back({false, negative.id, negative.score});
  }

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> position(samples.size());
  std::string pattern(samples.size(), ' ');
  const double norm = 1.0 / (static_cast<double>(p) * static_cast<double>(n));

  struct Scored {
    std::vector<RankedSample> ordering;
    double objective;
  };
  std::vector<Scored> evaluated;
  PermutationOracleResult result;
  result.objective = -std::numeric_limits<double>::infinity();
  do {
    for (std::size_t k = 0; k < order.size(); ++k) {
      position[order[k]] = k;
      pattern[k] = samples[order[k]].positive ? '+' : '-';
    }
    // F(R) = 1/(P N) sum_{x in P} sum_{y in N} R_xy (s_x - s_y).
    double discriminant = 0.0;
    for (std::size_t x = 0; x < p; ++x) {
      for (std::size_t y = p; y < samples.size(); ++y) {
        const double sign = position[x] < position[y] ? 1.0 : -1.0;
        discriminant += sign * (samples[x].score - samples[y].score);
      }
    }
    const double value =
        discriminant * norm + LossOfPattern(pattern, ctx.loss());
    std::vector<RankedSample> ordering;
    ordering.reserve(order.size());
    for (const auto index : order) ordering.push_back(samples[index]);
    if (value > result.objective) {
      result.objective = value;
      result.best_ordering = ordering;
    }
    evaluated.push_back({std::move(ordering), value});
    ++result.orderings_evaluated;
  } while (std::next_permutation(order.begin(), order.end()));

  result.sorted_maximizer_exists = std::any_of(
      evaluated.begin(), evaluated.end(), [&](const Scored& candidate) {
        return candidate.objective >= result.objective - kTieTolerance &&
               ClassSorted(candidate.ordering);
      });
  return result;
}

}  // namespace rankopt
