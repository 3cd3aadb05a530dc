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

#ifndef BONMF_EXPERIMENT_HPP_
#define BONMF_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bonmf/classify.hpp"
#include "bonmf/data_io.hpp"
#include "bonmf/nmf.hpp"

namespace bonmf {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Method { kOnmf, kNmf, kBonmf, kOnmfCos, kZhang };

Method parse_method(const std::string& name);
std::string method_name(Method method);
// Parses a comma-separated list, e.g. "bonmf,nmf".
std::vector<Method> parse_methods(const std::string& list);

enum class ReportFormat { kJson, kCsv, kMarkdown };

ReportFormat parse_report_format(const std::string& name);
std::string report_format_name(ReportFormat format);

struct ExperimentConfig {
  DatasetSpec dataset;
  std::vector<Method> methods;
  int trials = 30;
  // 0 means "use the number of classes".
  int rank = 0;
  double train_fraction = 0.8;
  bool stratified = false;
  FactorizeOptions options;
  // Iterations of the coefficient encoder used by the NMF/ONMF classifiers.
  int encode_iterations = 50;
  std::uint64_t base_seed = 0;
  int jobs = 1;
  std::string out_dir;
  std::vector<ReportFormat> emit{ReportFormat::kMarkdown};

  void validate() const;
};

// Flat "key = value" text, '#' starts a comment. Keys: dataset, format,
// label_column, delimiter, has_header, shift_nonneg, scale_max, methods,
// trials, rank, train_frac, stratified, max_iters, tol, epsilon, seed,
// encode_iters, jobs, out, emit.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);
// Applies one key/value pair; shared by the config file and CLI overrides.
void apply_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

struct TrialRecord {
  int trial = 0;
  Method method = Method::kBonmf;
  bool ok = false;
  std::string error;
  double train_seconds = 0.0;
  double classify_seconds = 0.0;
  double accuracy = 0.0;
  int iterations = 0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct MethodSummary {
  Method method = Method::kBonmf;
  int completed = 0;
  int failed = 0;
  double train_mean = 0.0, train_stddev = 0.0;
  double classify_mean = 0.0, classify_stddev = 0.0;
  double accuracy_mean = 0.0, accuracy_stddev = 0.0;

  friend bool operator==(const MethodSummary&, const MethodSummary&) = default;
};

struct TrialReport {
  std::string dataset;
  std::vector<MethodSummary> summaries;
  std::vector<TrialRecord> records;

  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

// Result of training and testing one method on one split.
struct MethodOutcome {
  double train_seconds = 0.0;
  double classify_seconds = 0.0;
  std::vector<int> predictions;
  int iterations = 0;
};

MethodOutcome evaluate_method(Method method, const LabeledDataset& train,
                              const LabeledDataset& test, Index rank,
                              const FactorizeOptions& options, int encode_iterations = 50);

// Means and sample standard deviations over the successful records.
std::vector<MethodSummary> summarize(const std::vector<Method>& methods,
                                     const std::vector<TrialRecord>& records);

TrialReport run_experiment(const ExperimentConfig& cfg, const LabeledDataset& data);

// Loads cfg.dataset, runs, and writes manifest.json plus report.<ext> for
// each requested format when cfg.out_dir is set.
TrialReport run_experiment(const ExperimentConfig& cfg);

std::string emit_report(const TrialReport& report, ReportFormat format);
TrialReport report_from_json(const std::string& text);

// Copy with every timing field zeroed, for comparisons across runs.
TrialReport without_timings(TrialReport report);

std::string manifest_json(const ExperimentConfig& cfg);

}  // namespace bonmf

#endif  // BONMF_EXPERIMENT_HPP_
