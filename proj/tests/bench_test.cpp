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

#include "bench.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "rankopt/error.hpp"

namespace rankopt::tools {
namespace {

TEST(BenchPresetTest, Sweeps) {
  BenchConfig config;
  ApplyPreset("negatives", config);
  EXPECT_FALSE(config.zip);
  EXPECT_EQ(config.p_list, (std::vector<std::size_t>{32}));
  EXPECT_EQ(config.n_list.front(), 1024u);
  EXPECT_EQ(config.n_list.back(), std::size_t{1} << 20);

  ApplyPreset("total", config);
  EXPECT_TRUE(config.zip);
  ASSERT_EQ(config.p_list.size(), config.n_list.size());
  for (std::size_t k = 0; k < config.p_list.size(); ++k) {
    const std::size_t total = config.p_list[k] + config.n_list[k];
    EXPECT_EQ(total & (total - 1), 0u);
    EXPECT_EQ(config.p_list[k], total / 11);
  }

  ApplyPreset("positives", config);
  EXPECT_EQ(config.n_list, (std::vector<std::size_t>{std::size_t{1} << 18}));
  EXPECT_EQ(config.p_list.back(), 4096u);

  EXPECT_THROW(ApplyPreset("everything", config), ContractError);
}

TEST(BenchTest, ParsesAlgorithmNames) {
  for (const std::string name : {"qs", "qs-mom", "sort"}) {
    EXPECT_EQ(BenchAlgoName(ParseBenchAlgo(name)), name);
  }
  EXPECT_THROW(ParseBenchAlgo("bogo"), ContractError);
}

TEST(BenchTest, InstancesAreSeeded) {
  const auto a = MakeBenchInstance(8, 100, 1);
  const auto b = MakeBenchInstance(8, 100, 1);
  const auto c = MakeBenchInstance(8, 100, 2);
  EXPECT_TRUE(std::equal(a.positive_scores().begin(),
                         a.positive_scores().end(),
                         b.positive_scores().begin()));
  EXPECT_FALSE(std::equal(a.positive_scores().begin(),
                          a.positive_scores().end(),
                          c.positive_scores().begin()));
}

TEST(BenchTest, DeterministicReports) {
  BenchConfig config;
  config.p_list = {4, 16};
  config.n_list = {128, 512};
  config.algos = {BenchAlgo::kOptRanks, BenchAlgo::kOptRanksMedianOfMedians,
                  BenchAlgo::kSortBaseline};
  config.deterministic = true;
  const BenchReport first = RunBench(config);
  const BenchReport second = RunBench(config);
  std::ostringstream a;
  std::ostringstream b;
  WriteBenchCsv(a, config, first);
  WriteBenchCsv(b, config, second);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(first.rows.size(), 4u * 3u * 3u);
  EXPECT_EQ(first.points.size(), 4u * 3u);
  EXPECT_LE(first.max_objective_gap, 1e-9);
  for (const auto& row : first.rows) EXPECT_EQ(row.wall_ns, 0);
}

TEST(BenchTest, CsvLayout) {
  BenchConfig config;
  config.p_list = {2};
  config.n_list = {8};
  config.algos = {BenchAlgo::kSortBaseline};
  config.repeats = 1;
  config.deterministic = true;
  std::ostringstream out;
  WriteBenchCsv(out, config, RunBench(config));
  std::istringstream lines(out.str());
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "algo,loss,p,n,repeat,wall_ns,comparisons");
  EXPECT_EQ(row.rfind("sort,ap,2,8,0,0,", 0), 0u) << row;
}

TEST(BenchTest, ValidatesConfig) {
  BenchConfig config;
  config.repeats = 0;
  EXPECT_THROW(RunBench(config), ContractError);
  config = BenchConfig{};
  config.zip = true;
  EXPECT_THROW(RunBench(config), ContractError);
  config = BenchConfig{};
  config.n_list = {0};
  EXPECT_THROW(RunBench(config), ContractError);
}

}  // namespace
}  // namespace rankopt::tools
