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

#include "rankopt/dataset_io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rankopt/error.hpp"
#include "rankopt/learner.hpp"

namespace rankopt {
namespace {

std::size_t ParseErrorLine(const std::string& text) {
  std::istringstream in(text);
  try {
    ParseScoreFile(in);
  } catch (const ParseError& error) {
    return error.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(ScoreFileTest, ParsesTwoRows) {
  std::istringstream in("id,label,score\na,1,0.73\nb,0,0.12\n");
  const ScoreFile file = ParseScoreFile(in);
  EXPECT_EQ(file.ids, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(file.instance.num_positive(), 1u);
  ASSERT_EQ(file.instance.num_negative(), 1u);
  EXPECT_EQ(file.instance.positive_scores()[0], 0.73);
  EXPECT_EQ(file.instance.negatives()[0].score, 0.12);
  EXPECT_EQ(file.ids[file.instance.negatives()[0].id], "b");
}

TEST(ScoreFileTest, SkipsBlankLinesAndSpaces) {
  std::istringstream in("id,label,score\n\n a , 1 , 2\nb,0,1\n\n");
  const ScoreFile file = ParseScoreFile(in);
  EXPECT_EQ(file.ids, (std::vector<std::string>{"a", "b"}));
}

TEST(ScoreFileTest, MissingClass) {
  std::istringstream in("id,label,score\na,1,0.5\nb,1,0.2\n");
  try {
    ParseScoreFile(in);
    FAIL();
  } catch (const ParseError& error) {
    EXPECT_NE(std::string(error.what()).find("missing negative class"),
              std::string::npos);
  }
}

TEST(ScoreFileTest, ReportsLineNumbers) {
  EXPECT_EQ(ParseErrorLine("id,label,score\na,1,x\n"), 2u);
  EXPECT_EQ(ParseErrorLine("id,label,score\na,1,1\nb,2,1\n"), 3u);
  EXPECT_EQ(ParseErrorLine("id,label,score\na,1,1\nb,0\n"), 3u);
  EXPECT_EQ(ParseErrorLine("id,label,score\na,1,1\na,0,1\n"), 3u);
  EXPECT_EQ(ParseErrorLine("id,label,score\na,1,nan\n"), 2u);
  EXPECT_EQ(ParseErrorLine("name,label,score\n"), 1u);
  EXPECT_EQ(ParseErrorLine("id,label,value\na,1,1\nb,0,1\n"), 1u);
  EXPECT_EQ(ParseErrorLine(""), 0u);
}

TEST(ScoreFileTest, RoundTripsExactly) {
  const std::vector<std::string> ids = {"x", "y", "z"};
  const std::vector<bool> labels = {false, true, false};
  const std::vector<double> scores = {0.1, 1.0 / 3.0, -2.5e-17};
  std::ostringstream out;
  WriteScoreFile(out, ids, labels, scores);
  std::istringstream in(out.str());
  const ScoreFile file = ParseScoreFile(in);
  EXPECT_EQ(file.ids, ids);
  EXPECT_EQ(file.instance.positive_scores()[0], 1.0 / 3.0);
  const auto negatives = file.instance.SortedNegatives();
  EXPECT_EQ(negatives[0].score, 0.1);
  EXPECT_EQ(negatives[1].score, -2.5e-17);
}

TEST(FeatureFileTest, RoundTripsExactly) {
  SyntheticSpec spec;
  spec.num_positive = 5;
  spec.num_negative = 9;
  spec.dimension = 3;
  const Dataset dataset = GenerateSynthetic(spec).dataset;
  std::ostringstream out;
  WriteFeatureFile(out, dataset);
  std::istringstream in(out.str());
  const Dataset parsed = ParseFeatureFile(in);
  ASSERT_EQ(parsed.size(), dataset.size());
  ASSERT_EQ(parsed.dimension(), 3u);
  for (std::size_t k = 0; k < dataset.size(); ++k) {
    EXPECT_EQ(parsed[k].id, dataset[k].id);
    EXPECT_EQ(parsed[k].positive, dataset[k].positive);
    EXPECT_EQ(parsed[k].features, dataset[k].features);
  }
}

TEST(FeatureFileTest, RejectsMalformedRows) {
  std::istringstream ragged("id,label,f0,f1\na,1,1,2\nb,0,1\n");
  EXPECT_THROW(ParseFeatureFile(ragged), ParseError);
  std::istringstream one_class("id,label,f0\na,0,1\nb,0,2\n");
  EXPECT_THROW(ParseFeatureFile(one_class), ParseError);
}

TEST(ModelTest, RoundTripsThroughJson) {
  ModelDocument document;
  document.model.weights = {0.1, -1.0 / 7.0, 3e100};
  document.loss_kind = "ndcg";
  document.trained_epochs = 42;
  document.seed = 9;
  const ModelDocument parsed = DeserializeModel(SerializeModel(document));
  EXPECT_EQ(parsed.model.weights, document.model.weights);
  EXPECT_EQ(parsed.loss_kind, "ndcg");
  EXPECT_EQ(parsed.trained_epochs, 42);
  EXPECT_EQ(parsed.seed, 9u);
  EXPECT_EQ(SerializeModel(parsed), SerializeModel(document));
}

TEST(ModelTest, RejectsBadDocuments) {
  EXPECT_THROW(DeserializeModel("{"), ParseError);
  EXPECT_THROW(DeserializeModel("{\"dimension\": 2, \"weights\": [1]}"),
               ParseError);
  EXPECT_THROW(DeserializeModel("[]"), ParseError);
}

TEST(ModelTest, FilesRoundTrip) {
  const std::filesystem::path path =
      ::testing::TempDir() + "rankopt_model_round_trip.json";
  ModelDocument document;
  document.model.weights = {1.5, 2.5};
  document.loss_kind = "ap";
  WriteModel(path, document);
  EXPECT_EQ(ReadModel(path).model.weights, document.model.weights);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadModel(path), ParseError);
}

TEST(SyntheticTest, DeterministicAndShaped) {
  SyntheticSpec spec;
  spec.seed = 4;
  const SyntheticData first = GenerateSynthetic(spec);
  const SyntheticData second = GenerateSynthetic(spec);
  ASSERT_EQ(first.dataset.size(), 550u);
  EXPECT_EQ(first.dataset.num_positive(), 50u);
  EXPECT_EQ(first.dataset.dimension(), 10u);
  EXPECT_EQ(first.dataset[0].id, "p0");
  EXPECT_EQ(first.dataset[50].id, "n0");
  EXPECT_EQ(first.direction, second.direction);
  for (std::size_t k = 0; k < first.dataset.size(); ++k) {
    EXPECT_EQ(first.dataset[k].features, second.dataset[k].features);
  }
  const double norm = std::sqrt(std::inner_product(
      first.direction.begin(), first.direction.end(),
      first.direction.begin(), 0.0));
  EXPECT_NEAR(norm, 1.0, 1e-12);
}

TEST(SyntheticTest, HiddenDirectionRanksWell) {
  SyntheticSpec spec;
  spec.separation = 8.0;
  spec.seed = 5;
  const SyntheticData data = GenerateSynthetic(spec);
  const LinearModel model{data.direction};
  EXPECT_GE(EvalMetric(model, data.dataset, Metric::kAveragePrecision), 0.99);
}

TEST(SyntheticTest, RejectsBadSpecs) {
  SyntheticSpec spec;
  spec.num_negative = 0;
  EXPECT_THROW(GenerateSynthetic(spec), ContractError);
  spec.num_negative = 5;
  spec.dimension = 0;
  EXPECT_THROW(GenerateSynthetic(spec), ContractError);
}

TEST(ImbalancedTest, Shape) {
  const Dataset dataset = GenerateImbalancedOverlap({20, 400, 1});
  EXPECT_EQ(dataset.num_positive(), 20u);
  EXPECT_EQ(dataset.num_negative(), 400u);
  EXPECT_EQ(dataset.dimension(), 3u);
  bool shuffled = false;
  for (std::size_t k = 0; k < dataset.size(); ++k) {
    EXPECT_EQ(dataset[k].features[2], 1.0);
    if (k >= 20 && dataset[k].positive) shuffled = true;
  }
  EXPECT_TRUE(shuffled);
  const Dataset again = GenerateImbalancedOverlap({20, 400, 1});
  for (std::size_t k = 0; k < dataset.size(); ++k) {
    EXPECT_EQ(again[k].features, dataset[k].features);
  }
}

}  // namespace
}  // namespace rankopt
