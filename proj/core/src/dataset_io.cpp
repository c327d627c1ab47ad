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

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "rankopt/error.hpp"

namespace rankopt {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

double ParseDouble(std::string_view text, std::size_t line) {
  text = Trim(text);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ParseError("cannot parse number '" + std::string(text) + "'", line);
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite number '" + std::string(text) + "'", line);
  }
  return value;
}

bool ParseLabel(std::string_view text, std::size_t line) {
  text = Trim(text);
  if (text == "1") return true;
  if (text == "0") return false;
  throw ParseError("label must be 1 or 0, got '" + std::string(text) + "'",
                   line);
}

// Reads the rows of a comma-separated document with a header. `on_row`
// receives the split fields and the 1-based line number.
template <typename RowFn>
std::vector<std::string> ReadTable(std::istream& in, RowFn&& on_row) {
  std::string line;
  std::size_t line_number = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) continue;
    const auto fields = SplitFields(trimmed);
    if (header.empty()) {
      for (const auto field : fields) header.emplace_back(Trim(field));
      if (header.size() < 3 || header[0] != "id" || header[1] != "label") {
        throw ParseError("header must start with 'id,label,'", line_number);
      }
      continue;
    }
    if (fields.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) +
                           " fields, found " + std::to_string(fields.size()),
                       line_number);
    }
    on_row(fields, line_number);
  }
  if (header.empty()) throw ParseError("document is empty", 0);
  return header;
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  return in;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'", 0);
  return out;
}

void WriteNumber(std::ostream& out, double value) {
  out << std::setprecision(std::numeric_limits<double>::max_digits10)
      << value;
}

}  // namespace

ScoreFile ParseScoreFile(std::istream& in) {
  ScoreFile file;
  std::vector<ScoredSample> positives;
  std::vector<ScoredSample> negatives;
  std::unordered_set<std::string> seen;
  const auto header = ReadTable(
      in, [&](const std::vector<std::string_view>& fields, std::size_t line) {
        std::string id(Trim(fields[0]));
        if (!seen.insert(id).second) {
          throw ParseError("duplicate id '" + id + "'", line);
        }
        const bool positive = ParseLabel(fields[1], line);
        const double score = ParseDouble(fields[2], line);
        (positive ? positives : negatives).push_back({score, file.ids.size()});
        file.ids.push_back(std::move(id));
      });
  if (header.size() != 3 || header[2] != "score") {
    throw ParseError("score file header must be 'id,label,score'", 1);
  }
  if (positives.empty()) throw ParseError("missing positive class", 0);
  if (negatives.empty()) throw ParseError("missing negative class", 0);
  file.instance =
      ScoredInstance::FromSamples(std::move(positives), std::move(negatives));
  return file;
}

ScoreFile ReadScoreFile(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ParseScoreFile(in);
}

void WriteScoreFile(std::ostream& out, const std::vector<std::string>& ids,
                    const std::vector<bool>& labels,
                    const std::vector<double>& scores) {
  if (ids.size() != labels.size() || ids.size() != scores.size()) {
    throw ContractError("score file columns differ in length");
  }
  out << "id,label,score\n";
  for (std::size_t row = 0; row < ids.size(); ++row) {
    out << ids[row] << ',' << (labels[row] ? 1 : 0) << ',';
    WriteNumber(out, scores[row]);
    out << '\n';
  }
}

Dataset ParseFeatureFile(std::istream& in) {
  std::vector<Sample> samples;
  std::unordered_set<std::string> seen;
  ReadTable(in, [&](const std::vector<std::string_view>& fields,
                    std::size_t line) {
    Sample sample;
    sample.id = std::string(Trim(fields[0]));
    if (!seen.insert(sample.id).second) {
      throw ParseError("duplicate id '" + sample.id + "'", line);
    }
    sample.positive = ParseLabel(fields[1], line);
    sample.features.reserve(fields.size() - 2);
    for (std::size_t k = 2; k < fields.size(); ++k) {
      sample.features.push_back(ParseDouble(fields[k], line));
    }
    samples.push_back(std::move(sample));
  });
  bool any_positive = false;
  bool any_negative = false;
  for (const auto& sample : samples) {
    (sample.positive ? any_positive : any_negative) = true;
  }
  if (!any_positive) throw ParseError("missing positive class", 0);
  if (!any_negative) throw ParseError("missing negative class", 0);
  return Dataset(std::move(samples));
}

Dataset ReadFeatureFile(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ParseFeatureFile(in);
}

void WriteFeatureFile(std::ostream& out, const Dataset& dataset) {
  out << "id,label";
  for (std::size_t k = 0; k < dataset.dimension(); ++k) out << ",f" << k;
  out << '\n';
  for (const auto& sample : dataset.samples()) {
    out << sample.id << ',' << (sample.positive ? 1 : 0);
    for (const double value : sample.features) {
      out << ',';
      WriteNumber(out, value);
    }
    out << '\n';
  }
}

void WriteFeatureFile(const std::filesystem::path& path,
                      const Dataset& dataset) {
  auto out = OpenForWrite(path);
  WriteFeatureFile(out, dataset);
}

std::string SerializeModel(const ModelDocument& document) {
  nlohmann::ordered_json json;
  json["dimension"] = document.model.weights.size();
  json["weights"] = document.model.weights;
  json["loss_kind"] = document.loss_kind;
  json["trained_epochs"] = document.trained_epochs;
  json["seed"] = document.seed;
  return json.dump(2) + "\n";
}

ModelDocument DeserializeModel(const std::string& text) {
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("model document is not valid JSON: ") +
                         e.what(),
                     0);
  }
  ModelDocument document;
  try {
    const auto dimension = json.at("dimension").get<std::size_t>();
    document.model.weights = json.at("weights").get<std::vector<double>>();
    document.loss_kind = json.at("loss_kind").get<std::string>();
    document.trained_epochs = json.at("trained_epochs").get<int>();
    document.seed = json.at("seed").get<std::uint64_t>();
    if (dimension != document.model.weights.size()) {
      throw ParseError("model dimension " + std::to_string(dimension) +
                           " does not match " +
                           std::to_string(document.model.weights.size()) +
                           " weights",
                       0);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model document: ") + e.what(), 0);
  }
  return document;
}

void WriteModel(const std::filesystem::path& path,
                const ModelDocument& document) {
  auto out = OpenForWrite(path);
  out << SerializeModel(document);
}

ModelDocument ReadModel(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return DeserializeModel(buffer.str());
}

void SyntheticSpec::Validate() const {
  if (num_positive < 1 || num_negative < 1) {
    throw ContractError("synthetic data needs at least one sample per class");
  }
  if (dimension < 1) throw ContractError("synthetic dimension must be >= 1");
  if (!(noise_sigma >= 0.0)) throw ContractError("noise sigma must be >= 0");
}

SyntheticData GenerateSynthetic(const SyntheticSpec& spec) {
  spec.Validate();
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gaussian(0.0, 1.0);

  std::vector<double> direction(spec.dimension);
  double norm = 0.0;
  while (norm == 0.0) {
    for (auto& value : direction) value = gaussian(rng);
    for (const double value : direction) norm += value * value;
  }
  norm = std::sqrt(norm);
  for (auto& value : direction) value /= norm;

  std::vector<Sample> samples;
  samples.reserve(spec.num_positive + spec.num_negative);
  auto draw = [&](bool positive, std::size_t k) {
    Sample sample;
    sample.id = (positive ? "p" : "n") + std::to_string(k);
    sample.positive = positive;
    const double offset = (positive ? 0.5 : -0.5) * spec.separation;
    sample.features.resize(spec.dimension);
    for (std::size_t d = 0; d < spec.dimension; ++d) {
      sample.features[d] =
          offset * direction[d] + spec.noise_sigma * gaussian(rng);
    }
    samples.push_back(std::move(sample));
  };
  for (std::size_t k = 0; k < spec.num_positive; ++k) draw(true, k);
  for (std::size_t k = 0; k < spec.num_negative; ++k) draw(false, k);
  return {Dataset(std::move(samples)), std::move(direction)};
}

Dataset GenerateImbalancedOverlap(const ImbalancedSpec& spec) {
  if (spec.num_positive < 1 || spec.num_negative < 1) {
    throw ContractError("fixture needs at least one sample per class");
  }
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  std::vector<Sample> samples;
  auto add = [&](const std::string& id, bool positive, double mean0,
                 double sd0, double mean1, double sd1) {
    samples.push_back({id, positive,
                       {mean0 + sd0 * gaussian(rng),
                        mean1 + sd1 * gaussian(rng), 1.0}});
  };
  // One negative in ten is a decoy; the rest form the far cluster.
  const std::size_t decoys = std::max<std::size_t>(1, spec.num_negative / 10);
  for (std::size_t k = 0; k < spec.num_positive; ++k) {
    add("p" + std::to_string(k), true, 0.0, 0.5, 0.0, 0.5);
  }
  for (std::size_t k = 0; k < spec.num_negative; ++k) {
    if (k < decoys) {
      add("n" + std::to_string(k), false, 1.5, 1.5, -1.0, 1.5);
    } else {
      add("n" + std::to_string(k), false, -3.0, 1.0, -3.0, 1.0);
    }
  }
  // Equal scores fall back to file order, so do not leave the classes in
  // blocks.
  std::shuffle(samples.begin(), samples.end(), rng);
  return Dataset(std::move(samples));
}

}  // namespace rankopt
