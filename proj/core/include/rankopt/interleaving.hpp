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

// Interleaving ranks and their +/- pattern form.
//
// For a proper ranking, the interleaving rank of a negative sample is one
// plus the number of positives ranked above it, so it lies in [1, P+1].
// Entry j (0-based storage, 1-based in the math) of an InterleavingVector is
// the interleaving rank of the j-th highest scored negative. Any
// nondecreasing vector induces a proper ranking; the sign pattern
// ("+" for a positive, "-" for a negative, read top to bottom) is in
// bijection with such vectors.

#ifndef RANKOPT_INTERLEAVING_HPP_
#define RANKOPT_INTERLEAVING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rankopt {

using Rank = std::int32_t;

class InterleavingVector {
 public:
  InterleavingVector() = default;
  explicit InterleavingVector(std::vector<Rank> ranks)
      : ranks_(std::move(ranks)) {}

  // Every negative below every positive.
  static InterleavingVector GroundTruth(std::int64_t num_positive,
                                        std::int64_t num_negative);

  std::span<const Rank> ranks() const { return ranks_; }
  std::vector<Rank>& mutable_ranks() { return ranks_; }
  std::size_t size() const { return ranks_.size(); }
  Rank operator[](std::size_t index) const { return ranks_[index]; }

  bool IsMonotone() const;

  // Throws ContractError unless the vector has `num_negative` entries, each
  // in [1, num_positive + 1], and is nondecreasing.
  void Validate(std::int64_t num_positive, std::int64_t num_negative) const;

  friend bool operator==(const InterleavingVector&,
                         const InterleavingVector&) = default;

 private:
  std::vector<Rank> ranks_;
};

// r+_i = 1 + |{j : r_j <= i}|, the interleaving rank of the i-th positive.
// Returned 0-based: element i-1 holds r+_i.
std::vector<std::int64_t> PositiveRanks(const InterleavingVector& ranks,
                                        std::int64_t num_positive);

std::string ToSignPattern(const InterleavingVector& ranks,
                          std::int64_t num_positive);

// Throws ContractError on characters other than '+' / '-'.
InterleavingVector FromSignPattern(std::string_view pattern);

// As above, and also requires the pattern to hold exactly the given counts.
InterleavingVector FromSignPattern(std::string_view pattern,
                                   std::int64_t num_positive,
                                   std::int64_t num_negative);

// Compact "rank x count" run-length form, e.g. "1x3 2x5 4x1".
std::string RunLengthSummary(const InterleavingVector& ranks);

}  // namespace rankopt

#endif  // RANKOPT_INTERLEAVING_HPP_
