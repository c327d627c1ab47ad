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

// File formats.
//
// Score file (one inference problem), comma separated with a header:
//   id,label,score
//   a,1,0.73
//   b,0,0.12
//
// Feature file (training data), header names the feature columns:
//   id,label,f0,f1,...
//
// Labels are 1 (positive) or 0 (negative). Model files are JSON objects with
// the keys dimension, weights, loss_kind, trained_epochs and seed.

#ifndef RANKOPT_DATASET_IO_HPP_
#define RANKOPT_DATASET_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rankopt/dataset.hpp"
#include "rankopt/instance.hpp"

namespace rankopt {

struct ScoreFile {
  // Row ids; ScoredSample::id indexes into this vector.
  std::vector<std::string> ids;
  ScoredInstance instance;
};

ScoreFile ParseScoreFile(std::istream& in);
ScoreFile ReadScoreFile(const std::filesystem::path& path);
void WriteScoreFile(std::ostream& out, const std::vector<std::string>& ids,
                    const std::vector<bool>& labels,
                    const std::vector<double>& scores);

Dataset ParseFeatureFile(std::istream& in);
Dataset ReadFeatureFile(const std::filesystem::path& path);
void WriteFeatureFile(std::ostream& out, const Dataset& dataset);
void WriteFeatureFile(const std::filesystem::path& path,
                      const Dataset& dataset);

struct ModelDocument {
  LinearModel model;
  std::string loss_kind;
  int trained_epochs = 0;
  std::uint64_t seed = 0;
};

std::string SerializeModel(const ModelDocument& document);
ModelDocument DeserializeModel(const std::string& text);
void WriteModel(const std::filesystem::path& path,
                const ModelDocument& document);
ModelDocument ReadModel(const std::filesystem::path& path);

struct SyntheticSpec {
  std::size_t num_positive = 50;
  std::size_t num_negative = 500;
  std::size_t dimension = 10;
  // Distance between the class means along the hidden direction.
  double separation = 4.0;
  double noise_sigma = 1.0;
  std::uint64_t seed = 0;

  void Validate() const;
};

struct SyntheticData {
  Dataset dataset;
  // Unit vector along which the class means differ.
  std::vector<double> direction;
};

// Isotropic Gaussian noise around means +/- separation/2 along a random unit
// direction. Positives come first, ids "p<k>" / "n<k>".
SyntheticData GenerateSynthetic(const SyntheticSpec& spec);

struct ImbalancedSpec {
  std::size_t num_positive = 20;
  // Defaults to a 1:20 ratio.
  std::size_t num_negative = 400;
  std::uint64_t seed = 0;
};

// A two-feature problem plus a constant bias column, built so that ranking
// quality and classification accuracy pull in different directions. Most
// negatives form a cluster far below the positives along both features. The
// remaining tenth are decoys: widely spread and shifted along the first
// feature, so a direction that separates the far cluster well lifts some
// decoys above the positives. Sample order is shuffled.
Dataset GenerateImbalancedOverlap(const ImbalancedSpec& spec);

}  // namespace rankopt

#endif  // RANKOPT_DATASET_IO_HPP_
