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

#include "rankopt/selection.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rankopt/error.hpp"

namespace rankopt {
namespace {

constexpr std::size_t kSmallSelect = 10;

void CheckRange(std::size_t size, std::size_t l, std::size_t r) {
  if (l < 1 || l > r || r > size) {
    throw ContractError("invalid subarray [" + std::to_string(l) + ", " +
                        std::to_string(r) + "] of " + std::to_string(size) +
                        " elements");
  }
}

}  // namespace

NegativeSelector::NegativeSelector(SelectionMode mode, std::uint64_t seed)
    : mode_(mode), rng_(seed) {}

std::size_t NegativeSelector::Partition(std::span<ScoredSample> values,
                                        std::size_t pivot) {
  // Lomuto with conditional moves in place of the data-dependent branch.
  const std::size_t last = values.size() - 1;
  std::swap(values[pivot], values[last]);
  const ScoredSample pivot_value = values[last];
  std::size_t store = 0;
  for (std::size_t i = 0; i < last; ++i) {
    const ScoredSample current = values[i];
    const bool above = Above(current, pivot_value);
    // target = above ? store : i, as a mask so it cannot become a branch.
    const std::size_t mask = std::size_t{0} - static_cast<std::size_t>(above);
    const std::size_t target = i ^ ((i ^ store) & mask);
    values[i] = values[target];
    values[target] = current;
    store += above;
  }
  std::swap(values[store], values[last]);
  return store;
}

void NegativeSelector::InsertionSort(std::span<ScoredSample> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    const ScoredSample current = values[i];
    std::size_t j = i;
    while (j > 0 && Above(current, values[j - 1])) {
      values[j] = values[j - 1];
      --j;
    }
    values[j] = current;
  }
}

void NegativeSelector::QuickSelect(std::span<ScoredSample> values,
                                   std::size_t k) {
  std::size_t lo = 0;
  std::size_t hi = values.size() - 1;
  while (lo < hi) {
    // Pivot is the median of three uniformly drawn elements.
    std::uniform_int_distribution<std::size_t> pick(lo, hi);
    std::size_t a = pick(rng_);
    std::size_t b = pick(rng_);
    const std::size_t c = pick(rng_);
    if (Above(values[b], values[a])) std::swap(a, b);
    if (Above(values[c], values[b])) b = Above(values[c], values[a]) ? a : c;
    const std::size_t split =
        lo + Partition(values.subspan(lo, hi - lo + 1), b - lo);
    if (split == k) return;
    if (k < split) {
      hi = split - 1;
    } else {
      lo = split + 1;
    }
  }
}

void NegativeSelector::MedianOfMediansSelect(std::span<ScoredSample> values,
                                             std::size_t k) {
  while (values.size() > kSmallSelect) {
    const std::size_t n = values.size();
    const std::size_t groups = (n + 4) / 5;
    // Group medians are gathered at the front; each swap target lies in a
    // group that has already been processed.
    for (std::size_t g = 0; g < groups; ++g) {
      const std::size_t begin = 5 * g;
      const std::size_t len = std::min<std::size_t>(5, n - begin);
      auto group = values.subspan(begin, len);
      InsertionSort(group);
      std::swap(values[g], group[(len - 1) / 2]);
    }
    const std::size_t middle = (groups - 1) / 2;
    MedianOfMediansSelect(values.first(groups), middle);
    const std::size_t split = Partition(values, middle);
    if (split == k) return;
    if (k < split) {
      values = values.first(split);
    } else {
      values = values.subspan(split + 1);
      k -= split + 1;
    }
  }
  InsertionSort(values);
}

std::size_t NegativeSelector::Median(std::span<const ScoredSample> values,
                                     std::size_t l, std::size_t r) {
  CheckRange(values.size(), l, r);
  if (l == r) return l;
  const std::size_t len = r - l + 1;
  const std::size_t k = (len + 1) / 2 - 1;
  scratch_.assign(values.begin() + static_cast<std::ptrdiff_t>(l - 1),
                  values.begin() + static_cast<std::ptrdiff_t>(r));
  if (mode_ == SelectionMode::kRandomized) {
    QuickSelect(scratch_, k);
  } else {
    MedianOfMediansSelect(scratch_, k);
  }
  const ScoredSample target = scratch_[k];
  for (std::size_t index = l - 1; index < r; ++index) {
    if (values[index].id == target.id && values[index].score == target.score) {
      return index + 1;
    }
  }
  throw ContractError("median element vanished from subarray");
}

std::size_t NegativeSelector::Select(std::span<ScoredSample> values,
                                     std::size_t m, std::size_t l,
                                     std::size_t r) {
  CheckRange(values.size(), l, r);
  if (m < l || m > r) {
    throw ContractError("pivot index " + std::to_string(m) +
                        " outside subarray [" + std::to_string(l) + ", " +
                        std::to_string(r) + "]");
  }
  return l + Partition(values.subspan(l - 1, r - l + 1), m - l);
}

}  // namespace rankopt
