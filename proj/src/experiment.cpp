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

#include "bonmf/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <optional>
#include <thread>
#include <tuple>

#include "bonmf/binary_orthogonal.hpp"
#include "bonmf/onmf.hpp"
#include "bonmf/semi_binary.hpp"

namespace bonmf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string trim_copy(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> items;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim_copy(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("'" + key + "' expects true or false, got '" + value + "'");
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T parsed{};
  if (!(in >> parsed) || !(in >> std::ws).eof())
    throw ConfigError("'" + key + "' expects a number, got '" + value + "'");
  return parsed;
}

std::vector<int> predict_all(const LabeledDataset& test, const auto& classify_one) {
  std::vector<int> predictions;
  predictions.reserve(static_cast<std::size_t>(test.samples()));
  for (Index j = 0; j < test.samples(); ++j) predictions.push_back(classify_one(test.data.col(j)));
  return predictions;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "bonmf") return Method::kBonmf;
  if (name == "nmf") return Method::kNmf;
  if (name == "onmf") return Method::kOnmf;
  if (name == "onmf-cos") return Method::kOnmfCos;
  if (name == "zhang") return Method::kZhang;
  throw ConfigError("unknown method '" + name + "'");
}

std::string method_name(Method method) {
  switch (method) {
    case Method::kBonmf: return "bonmf";
    case Method::kNmf: return "nmf";
    case Method::kOnmf: return "onmf";
    case Method::kOnmfCos: return "onmf-cos";
    case Method::kZhang: return "zhang";
  }
  return "?";
}

std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> methods;
  for (const auto& name : split_list(list)) {
    const Method m = parse_method(name);
    if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
  }
  return methods;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw ConfigError("unknown report format '" + name + "'");
}

std::string report_format_name(ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return "json";
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kMarkdown: return "markdown";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (methods.empty()) throw ConfigError("no methods selected");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (rank < 0) throw ConfigError("rank must be >= 1 or 'classes'");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw ConfigError("train_frac must lie in (0, 1)");
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
  if (encode_iterations < 0) throw ConfigError("encode_iters must be >= 0");
  try {
    options.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void apply_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string value = trim_copy(raw);
  if (key == "dataset") {
    cfg.dataset.path = value;
  } else if (key == "format") {
    try {
      cfg.dataset.format = parse_format(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "label_column") {
    cfg.dataset.label_column = value == "last" ? -1 : parse_number<int>(key, value);
  } else if (key == "delimiter") {
    if (value == "tab" || value == "\\t") {
      cfg.dataset.delimiter = '\t';
    } else if (value.size() == 1) {
      cfg.dataset.delimiter = value[0];
    } else {
      throw ConfigError("delimiter must be a single character");
    }
  } else if (key == "has_header") {
    cfg.dataset.has_header = parse_bool(key, value);
  } else if (key == "shift_nonneg") {
    cfg.dataset.shift_nonneg = parse_bool(key, value);
  } else if (key == "scale_max") {
    cfg.dataset.scale_max = parse_bool(key, value);
  } else if (key == "methods") {
    cfg.methods = parse_methods(value);
  } else if (key == "trials") {
    cfg.trials = parse_number<int>(key, value);
  } else if (key == "rank") {
    cfg.rank = value == "classes" ? 0 : parse_number<int>(key, value);
    if (value != "classes" && cfg.rank < 1) throw ConfigError("rank must be >= 1 or 'classes'");
  } else if (key == "train_frac") {
    cfg.train_fraction = parse_number<double>(key, value);
  } else if (key == "stratified") {
    cfg.stratified = parse_bool(key, value);
  } else if (key == "max_iters") {
    cfg.options.max_iterations = parse_number<int>(key, value);
  } else if (key == "tol") {
    cfg.options.tolerance = parse_number<double>(key, value);
  } else if (key == "epsilon") {
    cfg.options.epsilon_guard = parse_number<double>(key, value);
  } else if (key == "seed") {
    cfg.base_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "encode_iters") {
    cfg.encode_iterations = parse_number<int>(key, value);
  } else if (key == "jobs") {
    cfg.jobs = parse_number<int>(key, value);
  } else if (key == "out") {
    cfg.out_dir = value;
  } else if (key == "emit") {
    cfg.emit.clear();
    for (const auto& name : split_list(value)) cfg.emit.push_back(parse_report_format(name));
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim_copy(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_number) + ": expected key = value");
    apply_config_value(cfg, trim_copy(line.substr(0, eq)), line.substr(eq + 1));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in);
}

MethodOutcome evaluate_method(Method method, const LabeledDataset& train,
                              const LabeledDataset& test, Index rank,
                              const FactorizeOptions& options, int encode_iterations) {
  MethodOutcome outcome;
  const auto train_start = Clock::now();
  switch (method) {
    case Method::kBonmf: {
      BonmfModel model = factorize_bonmf(train.data, rank, options);
      model.cluster_labels = build_label_map(model.assignments, train.labels);
      const BonmfClassifier classifier(model);
      outcome.train_seconds = seconds_since(train_start);
      outcome.iterations = model.trace.iterations_run;
      const auto start = Clock::now();
      outcome.predictions = predict_all(test, [&](const auto& x) { return classifier.classify(x); });
      outcome.classify_seconds = seconds_since(start);
      break;
    }
    case Method::kZhang: {
      // The multi-hot H has no single cluster per sample, so the model is
      // labeled and queried through cosine assignment to its basis.
      SemiBinaryModel fit = factorize_zhang(train.data, rank, options);
      BonmfModel model{fit.basis, update_h_cosine(train.data, fit.basis), fit.trace, {}};
      model.cluster_labels = build_label_map(model.assignments, train.labels);
      const BonmfClassifier classifier(model);
      outcome.train_seconds = seconds_since(train_start);
      outcome.iterations = fit.trace.iterations_run;
      const auto start = Clock::now();
      outcome.predictions = predict_all(test, [&](const auto& x) { return classifier.classify(x); });
      outcome.classify_seconds = seconds_since(start);
      break;
    }
    case Method::kNmf: {
      const NmfModel model = factorize_nmf(train.data, rank, options);
      const CoefficientClassifier classifier(model.basis, model.coefficients, train,
                                             encode_iterations);
      outcome.train_seconds = seconds_since(train_start);
      outcome.iterations = model.trace.iterations_run;
      const auto start = Clock::now();
      outcome.predictions = predict_all(test, [&](const auto& x) { return classifier.nmf_angle(x); });
      outcome.classify_seconds = seconds_since(start);
      break;
    }
    case Method::kOnmf:
    case Method::kOnmfCos: {
      const OnmfModel model = factorize_onmf(train.data, rank, options);
      const CoefficientClassifier classifier(model.basis, model.coefficients, train,
                                             encode_iterations);
      outcome.train_seconds = seconds_since(train_start);
      outcome.iterations = model.trace.iterations_run;
      const auto start = Clock::now();
      if (method == Method::kOnmf) {
        outcome.predictions =
            predict_all(test, [&](const auto& x) { return classifier.coefficient_argmax(x); });
      } else {
        outcome.predictions =
            predict_all(test, [&](const auto& x) { return classifier.onmf_cosine(x); });
      }
      outcome.classify_seconds = seconds_since(start);
      break;
    }
  }
  return outcome;
}

std::vector<MethodSummary> summarize(const std::vector<Method>& methods,
                                     const std::vector<TrialRecord>& records) {
  auto mean_and_stddev = [](const std::vector<double>& xs) -> std::pair<double, double> {
    if (xs.empty()) return {0.0, 0.0};
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) return {mean, 0.0};
    double sq = 0.0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    return {mean, std::sqrt(sq / static_cast<double>(xs.size() - 1))};
  };

  std::vector<MethodSummary> summaries;
  for (Method method : methods) {
    MethodSummary s;
    s.method = method;
    std::vector<double> tt, ct, ac;
    for (const auto& r : records) {
      if (r.method != method) continue;
      if (!r.ok) {
        ++s.failed;
        continue;
      }
      ++s.completed;
      tt.push_back(r.train_seconds);
      ct.push_back(r.classify_seconds);
      ac.push_back(r.accuracy);
    }
    std::tie(s.train_mean, s.train_stddev) = mean_and_stddev(tt);
    std::tie(s.classify_mean, s.classify_stddev) = mean_and_stddev(ct);
    std::tie(s.accuracy_mean, s.accuracy_stddev) = mean_and_stddev(ac);
    summaries.push_back(s);
  }
  return summaries;
}

TrialReport run_experiment(const ExperimentConfig& cfg, const LabeledDataset& data) {
  cfg.validate();
  data.validate();
  const Index rank = cfg.rank > 0 ? cfg.rank : data.class_count;
  if (rank < 1) throw ConfigError("rank resolves to zero");

  const auto trials = static_cast<std::size_t>(cfg.trials);
  std::vector<std::vector<TrialRecord>> per_trial(trials);

  auto run_trial = [&](std::size_t t) {
    const std::uint64_t seed = cfg.base_seed + t;
    std::vector<TrialRecord> records;
    std::optional<std::pair<LabeledDataset, LabeledDataset>> split;
    std::string split_error;
    try {
      split = train_test_split(data, cfg.train_fraction, seed, cfg.stratified);
    } catch (const std::exception& e) {
      split_error = e.what();
    }
    FactorizeOptions options = cfg.options;
    options.seed = seed;
    for (Method method : cfg.methods) {
      TrialRecord record;
      record.trial = static_cast<int>(t);
      record.method = method;
      if (!split) {
        record.error = split_error;
        records.push_back(record);
        continue;
      }
      try {
        const MethodOutcome outcome = evaluate_method(method, split->first, split->second, rank,
                                                      options, cfg.encode_iterations);
        record.ok = true;
        record.train_seconds = outcome.train_seconds;
        record.classify_seconds = outcome.classify_seconds;
        record.accuracy = accuracy(outcome.predictions, split->second.labels);
        record.iterations = outcome.iterations;
      } catch (const std::exception& e) {
        record.error = e.what();
      }
      records.push_back(record);
    }
    per_trial[t] = std::move(records);
  };

  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), trials);
  if (workers <= 1) {
    for (std::size_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < trials; t = next++) run_trial(t);
      });
    }
  }

  TrialReport report;
  report.dataset = cfg.dataset.path.empty()
                       ? std::string("in-memory")
                       : std::filesystem::path(cfg.dataset.path).filename().string();
  for (auto& records : per_trial)
    report.records.insert(report.records.end(), records.begin(), records.end());
  report.summaries = summarize(cfg.methods, report.records);
  return report;
}

TrialReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const LabeledDataset data = load_dataset(cfg.dataset);
  TrialReport report = run_experiment(cfg, data);
  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    const std::filesystem::path dir(cfg.out_dir);
    std::ofstream(dir / "manifest.json") << manifest_json(cfg) << '\n';
    for (ReportFormat format : cfg.emit) {
      const char* ext = format == ReportFormat::kJson  ? "report.json"
                        : format == ReportFormat::kCsv ? "report.csv"
                                                       : "report.md";
      std::ofstream(dir / ext) << emit_report(report, format);
    }
  }
  return report;
}

}  // namespace bonmf
