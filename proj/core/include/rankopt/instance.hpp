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

#ifndef RANKOPT_INSTANCE_HPP_
#define RANKOPT_INSTANCE_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace rankopt {

// A score together with the identifier of the sample it came from.
struct ScoredSample {
  double score;
  std::size_t id;
};

// Strict total order used for every ranking decision: higher score first,
// equal scores broken by smaller id.
inline bool RanksAbove(const ScoredSample& a, const ScoredSample& b) {
  return a.score > b.score || (a.score == b.score && a.id < b.id);
}

// One loss-augmented inference problem.
//
// Positives are kept sorted by RanksAbove. Negatives are held in arbitrary
// order; the solvers rearrange their own copy in place. Sample ids map back
// to the caller's numbering.
class ScoredInstance {
 public:
  // Ids are the indices into the two input arrays. Throws ContractError if
  // either class is empty or a score is not finite.
  static ScoredInstance Preprocess(std::span<const double> positives,
                                   std::span<const double> negatives);

  static ScoredInstance FromSamples(std::vector<ScoredSample> positives,
                                    std::vector<ScoredSample> negatives);

  std::size_t num_positive() const { return positive_scores_.size(); }
  std::size_t num_negative() const { return negatives_.size(); }

  // Nonincreasing.
  std::span<const double> positive_scores() const { return positive_scores_; }
  std::span<const std::size_t> positive_ids() const { return positive_ids_; }

  std::span<const ScoredSample> negatives() const { return negatives_; }
  std::span<ScoredSample> mutable_negatives() { return negatives_; }

  // Negatives ordered by RanksAbove (the s* array), as a fresh copy.
  std::vector<ScoredSample> SortedNegatives() const;

 private:
  std::vector<double> positive_scores_;
  std::vector<std::size_t> positive_ids_;
  std::vector<ScoredSample> negatives_;
};

}  // namespace rankopt

#endif  // RANKOPT_INSTANCE_HPP_
