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

// Median and partition over a subarray of negatives, in the descending
// RanksAbove order. Ranges are 1-based and inclusive, as in the recursion
// that drives them.

#ifndef RANKOPT_SELECTION_HPP_
#define RANKOPT_SELECTION_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "rankopt/instance.hpp"

namespace rankopt {

enum class SelectionMode {
  // Quickselect with a seeded median-of-three random pivot. Expected linear
  // time.
  kRandomized,
  // Median of medians over groups of five. Worst-case linear time.
  kMedianOfMedians,
};

class NegativeSelector {
 public:
  explicit NegativeSelector(SelectionMode mode = SelectionMode::kRandomized,
                            std::uint64_t seed = 0);

  // Index m in [l, r] such that values[m] is the ceil((r-l+1)/2)-th element
  // of values[l..r] in RanksAbove order. Does not modify `values`.
  std::size_t Median(std::span<const ScoredSample> values, std::size_t l,
                     std::size_t r);

  // Partitions values[l..r] around the element at m: everything left of the
  // returned index ranks above it, everything right ranks below. Returns the
  // pivot's new index.
  std::size_t Select(std::span<ScoredSample> values, std::size_t m,
                     std::size_t l, std::size_t r);

  // Number of RanksAbove comparisons since construction.
  std::uint64_t comparisons() const { return comparisons_; }
  SelectionMode mode() const { return mode_; }

 private:
  bool Above(const ScoredSample& a, const ScoredSample& b) {
    ++comparisons_;
    // RanksAbove without short-circuiting, so partition loops compile to
    // conditional moves.
    return (a.score > b.score) | ((a.score == b.score) & (a.id < b.id));
  }

  // Partitions span[0..size) around span[pivot]; returns the pivot's index.
  std::size_t Partition(std::span<ScoredSample> values, std::size_t pivot);
  // Moves the k-th (0-based) element of `values` into position k.
  void QuickSelect(std::span<ScoredSample> values, std::size_t k);
  void MedianOfMediansSelect(std::span<ScoredSample> values, std::size_t k);
  void InsertionSort(std::span<ScoredSample> values);

  SelectionMode mode_;
  std::mt19937_64 rng_;
  std::uint64_t comparisons_ = 0;
  std::vector<ScoredSample> scratch_;
};

}  // namespace rankopt

#endif  // RANKOPT_SELECTION_HPP_
