// Copyright 2026 The bonmf Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bonmf/data_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace bonmf {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    fields.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

// Assigns 0..c-1 to raw labels in ascending order.
std::pair<std::vector<int>, int> encode_labels(const std::vector<std::string>& raw) {
  const bool numeric = std::all_of(raw.begin(), raw.end(),
                                   [](const std::string& s) { return to_double(s).has_value(); });
  std::vector<std::string> distinct = raw;
  if (numeric) {
    std::sort(distinct.begin(), distinct.end(), [](const std::string& a, const std::string& b) {
      return *to_double(a) < *to_double(b);
    });
    distinct.erase(std::unique(distinct.begin(), distinct.end(),
                               [](const std::string& a, const std::string& b) {
                                 return *to_double(a) == *to_double(b);
                               }),
                   distinct.end());
  } else {
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  }
  std::vector<int> ids;
  ids.reserve(raw.size());
  for (const auto& label : raw) {
    const auto it = numeric ? std::find_if(distinct.begin(), distinct.end(),
                                           [&](const std::string& d) {
                                             return *to_double(d) == *to_double(label);
                                           })
                            : std::lower_bound(distinct.begin(), distinct.end(), label);
    ids.push_back(static_cast<int>(it - distinct.begin()));
  }
  return {std::move(ids), static_cast<int>(distinct.size())};
}

LabeledDataset finish(MatrixXd X, const std::vector<std::string>& raw_labels,
                      const DatasetSpec& spec) {
  if (X.cols() == 0) throw ParseError("dataset has no samples", 0);
  if (spec.shift_nonneg && (X.array() < 0.0).any()) {
    for (Index f = 0; f < X.rows(); ++f) {
      const double low = X.row(f).minCoeff();
      if (low < 0.0) X.row(f).array() -= low;
    }
  }
  if ((X.array() < 0.0).any()) {
    throw NonNegativityError(
        "dataset has negative features; enable shift_nonneg to shift them to zero");
  }
  if (spec.scale_max) {
    for (Index f = 0; f < X.rows(); ++f) {
      const double high = X.row(f).maxCoeff();
      if (high > 0.0) X.row(f) /= high;
    }
  }
  auto [labels, classes] = encode_labels(raw_labels);
  LabeledDataset ds{DataMatrix(std::move(X)), std::move(labels), classes};
  ds.validate();
  return ds;
}

}  // namespace

DatasetFormat parse_format(const std::string& name) {
  if (name == "csv") return DatasetFormat::kCsv;
  if (name == "libsvm") return DatasetFormat::kLibsvm;
  throw std::invalid_argument("unknown dataset format '" + name + "'");
}

std::string format_name(DatasetFormat format) {
  return format == DatasetFormat::kCsv ? "csv" : "libsvm";
}

LabeledDataset read_csv(std::istream& in, const DatasetSpec& spec) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> raw_labels;
  std::string line;
  std::size_t line_number = 0;
  std::size_t width = 0;
  bool header_pending = spec.has_header;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    const auto fields = split(line, spec.delimiter);
    if (fields.size() < 2) throw ParseError("expected at least one feature and a label", line_number);
    if (width == 0) width = fields.size();
    if (fields.size() != width) throw ParseError("inconsistent column count", line_number);
    const std::size_t label_at =
        spec.label_column < 0 ? width - 1 : static_cast<std::size_t>(spec.label_column);
    if (label_at >= width) throw ParseError("label column out of range", line_number);

    std::vector<double> features;
    features.reserve(width - 1);
    for (std::size_t c = 0; c < width; ++c) {
      if (c == label_at) continue;
      const auto value = to_double(fields[c]);
      if (!value) {
        throw ParseError("cannot parse '" + std::string(fields[c]) + "' as a number",
                         line_number);
      }
      features.push_back(*value);
    }
    raw_labels.emplace_back(fields[label_at]);
    rows.push_back(std::move(features));
  }
  MatrixXd X(static_cast<Index>(width == 0 ? 0 : width - 1), static_cast<Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t f = 0; f < rows[j].size(); ++f)
      X(static_cast<Index>(f), static_cast<Index>(j)) = rows[j][f];
  }
  return finish(std::move(X), raw_labels, spec);
}

LabeledDataset read_libsvm(std::istream& in, const DatasetSpec& spec) {
  std::vector<std::vector<std::pair<Index, double>>> samples;
  std::vector<std::string> raw_labels;
  Index max_index = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view content = line;
    if (const auto hash = content.find('#'); hash != std::string_view::npos)
      content = content.substr(0, hash);
    const auto tokens = split_whitespace(content);
    if (tokens.empty()) continue;
    raw_labels.emplace_back(tokens.front());
    std::vector<std::pair<Index, double>> entries;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const auto colon = tokens[t].find(':');
      if (colon == std::string_view::npos)
        throw ParseError("expected index:value, got '" + std::string(tokens[t]) + "'", line_number);
      long long index = 0;
      const auto key = tokens[t].substr(0, colon);
      const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
      if (ec != std::errc() || ptr != key.data() + key.size() || index < 1)
        throw ParseError("bad feature index '" + std::string(key) + "'", line_number);
      const auto value = to_double(tokens[t].substr(colon + 1));
      if (!value) throw ParseError("bad feature value in '" + std::string(tokens[t]) + "'", line_number);
      entries.emplace_back(static_cast<Index>(index - 1), *value);
      max_index = std::max(max_index, static_cast<Index>(index));
    }
    samples.push_back(std::move(entries));
  }
  if (max_index == 0 && !samples.empty()) throw ParseError("no features in file", line_number);
  MatrixXd X = MatrixXd::Zero(max_index, static_cast<Index>(samples.size()));
  for (std::size_t j = 0; j < samples.size(); ++j) {
    for (const auto& [f, v] : samples[j]) X(f, static_cast<Index>(j)) = v;
  }
  return finish(std::move(X), raw_labels, spec);
}

LabeledDataset load_dataset(const DatasetSpec& spec) {
  std::ifstream in(spec.path);
  if (!in) throw std::runtime_error("cannot open dataset '" + spec.path + "'");
  return spec.format == DatasetFormat::kCsv ? read_csv(in, spec) : read_libsvm(in, spec);
}

void write_csv(std::ostream& out, const LabeledDataset& ds, char delimiter) {
  char buffer[64];
  for (Index j = 0; j < ds.samples(); ++j) {
    for (Index f = 0; f < ds.features(); ++f) {
      const auto result = std::to_chars(buffer, buffer + sizeof buffer, ds.data(f, j));
      out.write(buffer, result.ptr - buffer);
      out.put(delimiter);
    }
    out << ds.labels[static_cast<std::size_t>(j)] << '\n';
  }
}

void save_csv(const std::string& path, const LabeledDataset& ds, char delimiter) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_csv(out, ds, delimiter);
}

LabeledDataset subset(const LabeledDataset& ds, const std::vector<Index>& columns) {
  MatrixXd X(ds.features(), static_cast<Index>(columns.size()));
  std::vector<int> labels;
  labels.reserve(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    X.col(static_cast<Index>(c)) = ds.data.col(columns[c]);
    labels.push_back(ds.labels[static_cast<std::size_t>(columns[c])]);
  }
  return LabeledDataset{DataMatrix(std::move(X)), std::move(labels), ds.class_count};
}

namespace {

std::size_t train_count(double fraction, std::size_t n) {
  // The small offset keeps products like 0.8 * 10 from rounding up past 8.
  return static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
}

}  // namespace

std::pair<std::vector<Index>, std::vector<Index>> split_indices(const LabeledDataset& ds,
                                                               double train_fraction,
                                                               std::uint64_t seed,
                                                               bool stratified) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw std::invalid_argument("train_fraction must lie in (0, 1)");
  const auto n = static_cast<std::size_t>(ds.samples());
  std::mt19937_64 rng(seed);
  std::vector<Index> train, test;
  if (!stratified) {
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t cut = train_count(train_fraction, n);
    train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(cut));
    test.assign(order.begin() + static_cast<std::ptrdiff_t>(cut), order.end());
  } else {
    std::map<int, std::vector<Index>> by_class;
    for (std::size_t j = 0; j < n; ++j) by_class[ds.labels[j]].push_back(static_cast<Index>(j));
    for (auto& [label, members] : by_class) {
      std::shuffle(members.begin(), members.end(), rng);
      const std::size_t cut = train_count(train_fraction, members.size());
      train.insert(train.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(cut));
      test.insert(test.end(), members.begin() + static_cast<std::ptrdiff_t>(cut), members.end());
    }
  }
  if (train.empty() || test.empty())
    throw std::invalid_argument("train/test split leaves an empty part");
  return {std::move(train), std::move(test)};
}

std::pair<LabeledDataset, LabeledDataset> train_test_split(const LabeledDataset& ds,
                                                           double train_fraction,
                                                           std::uint64_t seed,
                                                           bool stratified) {
  const auto [train, test] = split_indices(ds, train_fraction, seed, stratified);
  return {subset(ds, train), subset(ds, test)};
}

}  // namespace bonmf
