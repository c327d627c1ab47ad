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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "rankopt/error.hpp"
#include "support/oracles.hpp"

namespace rankopt {
namespace {

TEST(InterleavingTest, AllNegativesFirst) {
  const InterleavingVector r({1, 1, 1});
  EXPECT_EQ(ToSignPattern(r, 2), "---++");
  EXPECT_EQ(FromSignPattern("---++"), r);
}

TEST(InterleavingTest, GroundTruthPutsNegativesLast) {
  const auto r = InterleavingVector::GroundTruth(3, 2);
  EXPECT_EQ(r, InterleavingVector({4, 4}));
  EXPECT_EQ(ToSignPattern(r, 3), "+++--");
  EXPECT_EQ(FromSignPattern("+++--"), r);
}

TEST(InterleavingTest, RoundTripRandomVectors) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const int p = std::uniform_int_distribution<int>(1, 8)(rng);
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<int> ranks(n);
    for (auto& rank : ranks) {
      rank = std::uniform_int_distribution<int>(1, p + 1)(rng);
    }
    std::sort(ranks.begin(), ranks.end());
    const InterleavingVector r(std::vector<Rank>(ranks.begin(), ranks.end()));
    const std::string pattern = ToSignPattern(r, p);
    ASSERT_EQ(pattern, testing::RefPattern(ranks, p));
    ASSERT_EQ(FromSignPattern(pattern, p, n), r);
    ASSERT_EQ(ToSignPattern(FromSignPattern(pattern), p), pattern);
  }
}

TEST(InterleavingTest, PositiveRanksCountNegativesAbove) {
  // ++-+-+--: r+_i is one plus the number of negatives above positive i.
  const InterleavingVector r({3, 4, 5, 5});
  const auto positive_ranks = PositiveRanks(r, 4);
  EXPECT_EQ(positive_ranks, (std::vector<std::int64_t>{1, 1, 2, 3}));
}

TEST(InterleavingTest, RejectsMalformedPatterns) {
  EXPECT_THROW(FromSignPattern("+x-"), ContractError);
  EXPECT_THROW(FromSignPattern("++-", 1, 2), ContractError);
}

TEST(InterleavingTest, ValidateChecksShapeRangeAndOrder) {
  EXPECT_NO_THROW(InterleavingVector({1, 2, 2}).Validate(2, 3));
  EXPECT_THROW(InterleavingVector({1, 2}).Validate(2, 3), ContractError);
  EXPECT_THROW(InterleavingVector({0, 2, 2}).Validate(2, 3), ContractError);
  EXPECT_THROW(InterleavingVector({1, 2, 4}).Validate(2, 3), ContractError);
  EXPECT_THROW(InterleavingVector({2, 1, 3}).Validate(2, 3), ContractError);
  EXPECT_FALSE(InterleavingVector({2, 1}).IsMonotone());
}

TEST(InterleavingTest, RunLengthSummary) {
  EXPECT_EQ(RunLengthSummary(InterleavingVector({1, 1, 1, 2, 4})),
            "1x3 2x1 4x1");
}

}  // namespace
}  // namespace rankopt
