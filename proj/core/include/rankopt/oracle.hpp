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

// Exhaustive solvers used to check the fast ones.

#ifndef RANKOPT_ORACLE_HPP_
#define RANKOPT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rankopt/instance.hpp"
#include "rankopt/interleaving.hpp"
#include "rankopt/loss.hpp"

namespace rankopt {

// C(P + N, P), saturating at UINT64_MAX.
std::uint64_t InterleavingCount(std::int64_t num_positive,
                                std::int64_t num_negative);

struct PatternOracleResult {
  InterleavingVector best;
  double objective = 0.0;
  std::uint64_t patterns_evaluated = 0;
};

// Tries every nondecreasing interleaving vector with negatives in descending
// score order. Ties go to the lexicographically largest vector. Throws
// OracleLimitError above `max_patterns`.
PatternOracleResult BruteForcePattern(const ScoredInstance& instance,
                                      const LossContext& ctx,
                                      std::uint64_t max_patterns = 1'000'000);

struct RankedSample {
  bool positive;
  std::size_t id;
  double score;
};

struct PermutationOracleResult {
  std::vector<RankedSample> best_ordering;
  double objective = 0.0;
  // Some ordering within 1e-12 of the optimum has both classes in
  // nonincreasing score order.
  bool sorted_maximizer_exists = false;
  std::uint64_t orderings_evaluated = 0;
};

inline constexpr std::size_t kMaxPermutationSamples = 7;

// Tries all (P + N)! orderings, scoring each with the raw pairwise sum for F
// and the direct loss definition. Throws OracleLimitError above
// kMaxPermutationSamples samples.
PermutationOracleResult BruteForcePermutation(const ScoredInstance& instance,
                                              const LossContext& ctx);

}  // namespace rankopt

#endif  // RANKOPT_ORACLE_HPP_
