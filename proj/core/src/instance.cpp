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

#include "rankopt/instance.hpp"

#include <algorithm>
#include <cmath>

#include "rankopt/error.hpp"

namespace rankopt {
namespace {

void CheckSamples(const std::vector<ScoredSample>& samples, const char* what) {
  if (samples.empty()) {
    throw ContractError(std::string("instance has no ") + what +
                        " samples; inference is undefined");
  }
  for (const auto& sample : samples) {
    if (!std::isfinite(sample.score)) {
      throw ContractError(std::string("non-finite ") + what + " score");
    }
  }
}

std::vector<ScoredSample> WithIndexIds(std::span<const double> scores) {
  std::vector<ScoredSample> samples;
  samples.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    samples.push_back({scores[i], i});
  }
  return samples;
}

}  // namespace

ScoredInstance ScoredInstance::Preprocess(std::span<const double> positives,
                                          std::span<const double> negatives) {
  return FromSamples(WithIndexIds(positives), WithIndexIds(negatives));
}

ScoredInstance ScoredInstance::FromSamples(std::vector<ScoredSample> positives,
                                           std::vector<ScoredSample> negatives) {
  CheckSamples(positives, "positive");
  CheckSamples(negatives, "negative");
  std::sort(positives.begin(), positives.end(), RanksAbove);
  ScoredInstance instance;
  instance.positive_scores_.reserve(positives.size());
  instance.positive_ids_.reserve(positives.size());
  for (const auto& sample : positives) {
    instance.positive_scores_.push_back(sample.score);
    instance.positive_ids_.push_back(sample.id);
  }
  instance.negatives_ = std::move(negatives);
  return instance;
}

std::vector<ScoredSample> ScoredInstance::SortedNegatives() const {
  std::vector<ScoredSample> sorted = negatives_;
  std::sort(sorted.begin(), sorted.end(), RanksAbove);
  return sorted;
}

}  // namespace rankopt
