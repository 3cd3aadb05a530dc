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

#ifndef BONMF_DATA_IO_HPP_
#define BONMF_DATA_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "bonmf/classify.hpp"

namespace bonmf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class DatasetFormat { kCsv, kLibsvm };

DatasetFormat parse_format(const std::string& name);
std::string format_name(DatasetFormat format);

struct DatasetSpec {
  std::string path;
  DatasetFormat format = DatasetFormat::kCsv;
  // CSV only: zero-based label column, or -1 for the last column.
  int label_column = -1;
  char delimiter = ',';
  bool has_header = false;
  // Subtract each feature's minimum when any feature is negative.
  bool shift_nonneg = false;
  // Divide each feature by its maximum (features that are all zero are left alone).
  bool scale_max = false;
};

// Reads a labeled dataset. Samples become columns. Labels are re-encoded to
// 0..c-1 in ascending order (numeric order if every label is a number).
LabeledDataset load_dataset(const DatasetSpec& spec);
LabeledDataset read_csv(std::istream& in, const DatasetSpec& spec);
LabeledDataset read_libsvm(std::istream& in, const DatasetSpec& spec);

// Writes features then the label as the last column, no header, with the
// shortest decimal form that reads back to the same double.
void write_csv(std::ostream& out, const LabeledDataset& ds, char delimiter = ',');
void save_csv(const std::string& path, const LabeledDataset& ds, char delimiter = ',');

// Shuffled split; the first ceil(train_fraction * n) shuffled samples train.
// With `stratified`, the rule is applied within each class instead.
std::pair<LabeledDataset, LabeledDataset> train_test_split(const LabeledDataset& ds,
                                                           double train_fraction,
                                                           std::uint64_t seed,
                                                           bool stratified = false);

// Index form of the split, exposed for partition checks.
std::pair<std::vector<Index>, std::vector<Index>> split_indices(const LabeledDataset& ds,
                                                               double train_fraction,
                                                               std::uint64_t seed,
                                                               bool stratified = false);

LabeledDataset subset(const LabeledDataset& ds, const std::vector<Index>& columns);

}  // namespace bonmf

#endif  // BONMF_DATA_IO_HPP_
