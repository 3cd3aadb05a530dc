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

#include <iomanip>
#include <sstream>

#include "bonmf/experiment.hpp"
#include "json.hpp"

namespace bonmf {

using nlohmann::json;

namespace {

json summary_to_json(const MethodSummary& s) {
  return {{"method", method_name(s.method)},
          {"completed", s.completed},
          {"failed", s.failed},
          {"train_mean", s.train_mean},
          {"train_stddev", s.train_stddev},
          {"classify_mean", s.classify_mean},
          {"classify_stddev", s.classify_stddev},
          {"accuracy_mean", s.accuracy_mean},
          {"accuracy_stddev", s.accuracy_stddev}};
}

json record_to_json(const TrialRecord& r) {
  return {{"trial", r.trial},
          {"method", method_name(r.method)},
          {"ok", r.ok},
          {"error", r.error},
          {"train_seconds", r.train_seconds},
          {"classify_seconds", r.classify_seconds},
          {"accuracy", r.accuracy},
          {"iterations", r.iterations}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render_markdown(const TrialReport& report) {
  std::ostringstream out;
  out << "| Name | |";
  for (const auto& s : report.summaries) out << ' ' << method_name(s.method) << " |";
  out << "\n|---|---|";
  for (std::size_t i = 0; i < report.summaries.size(); ++i) out << "---|";
  out << '\n';
  out << std::fixed;
  auto row = [&](const std::string& name, const std::string& metric, auto value, int digits) {
    out << "| " << name << " | " << metric << " |";
    for (const auto& s : report.summaries) {
      if (s.completed == 0) {
        out << " n/a |";
      } else {
        out << ' ' << std::setprecision(digits) << value(s) << " |";
      }
    }
    out << '\n';
  };
  row(report.dataset, "TT (s)", [](const MethodSummary& s) { return s.train_mean; }, 3);
  row("", "CT (s)", [](const MethodSummary& s) { return s.classify_mean; }, 3);
  row("", "AC (%)", [](const MethodSummary& s) { return 100.0 * s.accuracy_mean; }, 2);
  return out.str();
}

std::string render_csv(const TrialReport& report) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "trial,method,ok,train_seconds,classify_seconds,accuracy,iterations,error\n";
  for (const auto& r : report.records) {
    out << r.trial << ',' << method_name(r.method) << ',' << (r.ok ? "true" : "false") << ','
        << r.train_seconds << ',' << r.classify_seconds << ',' << r.accuracy << ','
        << r.iterations << ',' << csv_field(r.error) << '\n';
  }
  return out.str();
}

}  // namespace

std::string emit_report(const TrialReport& report, ReportFormat format) {
  if (report.summaries.empty()) throw std::invalid_argument("emit_report: empty report");
  switch (format) {
    case ReportFormat::kJson: {
      json doc;
      doc["dataset"] = report.dataset;
      doc["methods"] = json::array();
      for (const auto& s : report.summaries) doc["methods"].push_back(summary_to_json(s));
      doc["trials"] = json::array();
      for (const auto& r : report.records) doc["trials"].push_back(record_to_json(r));
      return doc.dump(2) + "\n";
    }
    case ReportFormat::kCsv:
      return render_csv(report);
    case ReportFormat::kMarkdown:
      return render_markdown(report);
  }
  throw std::invalid_argument("emit_report: unknown format");
}

TrialReport report_from_json(const std::string& text) {
  const json doc = json::parse(text);
  TrialReport report;
  report.dataset = doc.at("dataset").get<std::string>();
  for (const auto& m : doc.at("methods")) {
    MethodSummary s;
    s.method = parse_method(m.at("method").get<std::string>());
    s.completed = m.at("completed").get<int>();
    s.failed = m.at("failed").get<int>();
    s.train_mean = m.at("train_mean").get<double>();
    s.train_stddev = m.at("train_stddev").get<double>();
    s.classify_mean = m.at("classify_mean").get<double>();
    s.classify_stddev = m.at("classify_stddev").get<double>();
    s.accuracy_mean = m.at("accuracy_mean").get<double>();
    s.accuracy_stddev = m.at("accuracy_stddev").get<double>();
    report.summaries.push_back(s);
  }
  for (const auto& t : doc.at("trials")) {
    TrialRecord r;
    r.trial = t.at("trial").get<int>();
    r.method = parse_method(t.at("method").get<std::string>());
    r.ok = t.at("ok").get<bool>();
    r.error = t.at("error").get<std::string>();
    r.train_seconds = t.at("train_seconds").get<double>();
    r.classify_seconds = t.at("classify_seconds").get<double>();
    r.accuracy = t.at("accuracy").get<double>();
    r.iterations = t.at("iterations").get<int>();
    report.records.push_back(r);
  }
  return report;
}

TrialReport without_timings(TrialReport report) {
  for (auto& s : report.summaries) {
    s.train_mean = s.train_stddev = 0.0;
    s.classify_mean = s.classify_stddev = 0.0;
  }
  for (auto& r : report.records) r.train_seconds = r.classify_seconds = 0.0;
  return report;
}

std::string manifest_json(const ExperimentConfig& cfg) {
  json methods = json::array();
  for (Method m : cfg.methods) methods.push_back(method_name(m));
  json emit = json::array();
  for (ReportFormat f : cfg.emit) emit.push_back(report_format_name(f));
  json doc{
      {"dataset",
       {{"path", cfg.dataset.path},
        {"format", format_name(cfg.dataset.format)},
        {"label_column", cfg.dataset.label_column},
        {"delimiter", std::string(1, cfg.dataset.delimiter)},
        {"has_header", cfg.dataset.has_header},
        {"shift_nonneg", cfg.dataset.shift_nonneg},
        {"scale_max", cfg.dataset.scale_max}}},
      {"methods", methods},
      {"trials", cfg.trials},
      {"rank", cfg.rank == 0 ? json("classes") : json(cfg.rank)},
      {"train_frac", cfg.train_fraction},
      {"stratified", cfg.stratified},
      {"max_iters", cfg.options.max_iterations},
      {"tol", cfg.options.tolerance},
      {"epsilon", cfg.options.epsilon_guard},
      {"encode_iters", cfg.encode_iterations},
      {"base_seed", cfg.base_seed},
      {"trial_seeds", "base_seed + trial index"},
      {"jobs", cfg.jobs},
      {"emit", emit}};
  return doc.dump(2);
}

}  // namespace bonmf
