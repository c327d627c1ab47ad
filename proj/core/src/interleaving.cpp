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

#include "rankopt/interleaving.hpp"

#include <algorithm>
#include <sstream>

#include "rankopt/error.hpp"

namespace rankopt {

InterleavingVector InterleavingVector::GroundTruth(std::int64_t num_positive,
                                                   std::int64_t num_negative) {
  return InterleavingVector(std::vector<Rank>(
      static_cast<std::size_t>(num_negative), static_cast<Rank>(num_positive + 1)));
}

bool InterleavingVector::IsMonotone() const {
  return std::is_sorted(ranks_.begin(), ranks_.end());
}

void InterleavingVector::Validate(std::int64_t num_positive,
                                  std::int64_t num_negative) const {
  if (static_cast<std::int64_t>(ranks_.size()) != num_negative) {
    throw ContractError("interleaving vector has " +
                        std::to_string(ranks_.size()) + " entries, expected " +
                        std::to_string(num_negative));
  }
  for (std::size_t j = 0; j < ranks_.size(); ++j) {
    if (ranks_[j] < 1 || ranks_[j] > num_positive + 1) {
      throw ContractError("interleaving rank " + std::to_string(ranks_[j]) +
                          " at position " + std::to_string(j + 1) +
                          " outside [1, " + std::to_string(num_positive + 1) +
                          "]");
    }
  }
  if (!IsMonotone()) {
    throw ContractError("interleaving vector is not nondecreasing");
  }
}

std::vector<std::int64_t> PositiveRanks(const InterleavingVector& ranks,
                                        std::int64_t num_positive) {
  std::vector<std::int64_t> result(static_cast<std::size_t>(num_positive));
  std::size_t j = 0;
  const auto r = ranks.ranks();
  for (std::int64_t i = 1; i <= num_positive; ++i) {
    while (j < r.size() && r[j] <= i) ++j;
    result[static_cast<std::size_t>(i - 1)] = 1 + static_cast<std::int64_t>(j);
  }
  return result;
}

std::string ToSignPattern(const InterleavingVector& ranks,
                          std::int64_t num_positive) {
  ranks.Validate(num_positive, static_cast<std::int64_t>(ranks.size()));
  std::string pattern;
  pattern.reserve(ranks.size() + static_cast<std::size_t>(num_positive));
  std::size_t j = 0;
  const auto r = ranks.ranks();
  for (std::int64_t i = 1; i <= num_positive + 1; ++i) {
    while (j < r.size() && r[j] == i) {
      pattern.push_back('-');
      ++j;
    }
    if (i <= num_positive) pattern.push_back('+');
  }
  return pattern;
}

InterleavingVector FromSignPattern(std::string_view pattern) {
  std::vector<Rank> ranks;
  Rank positives_seen = 0;
  for (const char c : pattern) {
    if (c == '+') {
      ++positives_seen;
    } else if (c == '-') {
      ranks.push_back(positives_seen + 1);
    } else {
      throw ContractError(std::string("sign pattern contains '") + c + "'");
    }
  }
  return InterleavingVector(std::move(ranks));
}

InterleavingVector FromSignPattern(std::string_view pattern,
                                   std::int64_t num_positive,
                                   std::int64_t num_negative) {
  const auto positives = std::count(pattern.begin(), pattern.end(), '+');
  const auto negatives = std::count(pattern.begin(), pattern.end(), '-');
  if (positives != num_positive || negatives != num_negative) {
    throw ContractError("sign pattern has " + std::to_string(positives) +
                        " positives and " + std::to_string(negatives) +
                        " negatives, expected " + std::to_string(num_positive) +
                        " and " + std::to_string(num_negative));
  }
  return FromSignPattern(pattern);
}

std::string RunLengthSummary(const InterleavingVector& ranks) {
  std::ostringstream out;
  const auto r = ranks.ranks();
  std::size_t start = 0;
  while (start < r.size()) {
    std::size_t end = start;
    while (end < r.size() && r[end] == r[start]) ++end;
    if (start != 0) out << ' ';
    out << r[start] << 'x' << (end - start);
    start = end;
  }
  return out.str();
}

}  // namespace rankopt
