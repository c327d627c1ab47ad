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

#include "rankopt/dataset.hpp"

#include <cmath>
#include <unordered_set>

#include "rankopt/error.hpp"

namespace rankopt {

Dataset::Dataset(std::vector<Sample> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw ContractError("dataset is empty");
  dimension_ = samples_.front().features.size();
  std::unordered_set<std::string> ids;
  for (const auto& sample : samples_) {
    if (sample.features.size() != dimension_) {
      throw ContractError("sample '" + sample.id + "' has " +
                          std::to_string(sample.features.size()) +
                          " features, expected " + std::to_string(dimension_));
    }
    for (const double value : sample.features) {
      if (!std::isfinite(value)) {
        throw ContractError("sample '" + sample.id + "' has a non-finite "
                            "feature");
      }
    }
    if (!ids.insert(sample.id).second) {
      throw ContractError("duplicate sample id '" + sample.id + "'");
    }
    if (sample.positive) ++num_positive_;
  }
  if (num_positive_ == 0) throw ContractError("missing positive class");
  if (num_positive_ == samples_.size()) {
    throw ContractError("missing negative class");
  }
}

double LinearModel::Score(std::span<const double> features) const {
  if (features.size() != weights.size()) {
    throw ContractError("model dimension " + std::to_string(weights.size()) +
                        " does not match feature dimension " +
                        std::to_string(features.size()));
  }
  double score = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    score += weights[k] * features[k];
  }
  return score;
}

}  // namespace rankopt
