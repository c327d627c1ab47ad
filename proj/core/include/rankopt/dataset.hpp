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

#ifndef RANKOPT_DATASET_HPP_
#define RANKOPT_DATASET_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rankopt {

struct Sample {
  std::string id;
  bool positive = false;
  std::vector<double> features;
};

// Labeled feature vectors of one dimension, with at least one sample of each
// class and unique ids. Sample order is significant: ties in score are
// broken by position.
class Dataset {
 public:
  Dataset() = default;
  // Throws ContractError when the invariants above do not hold.
  explicit Dataset(std::vector<Sample> samples);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return samples_.size(); }
  std::size_t num_positive() const { return num_positive_; }
  std::size_t num_negative() const { return samples_.size() - num_positive_; }
  std::span<const Sample> samples() const { return samples_; }
  const Sample& operator[](std::size_t index) const { return samples_[index]; }

 private:
  std::vector<Sample> samples_;
  std::size_t dimension_ = 0;
  std::size_t num_positive_ = 0;
};

struct LinearModel {
  std::vector<double> weights;

  static LinearModel Zero(std::size_t dimension) {
    return LinearModel{std::vector<double>(dimension, 0.0)};
  }

  double Score(std::span<const double> features) const;
};

}  // namespace rankopt

#endif  // RANKOPT_DATASET_HPP_
