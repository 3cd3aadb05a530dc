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

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bonmf/data_io.hpp"
#include "bonmf/experiment.hpp"
#include "bonmf/synth.hpp"

namespace {

constexpr int kConfigErrorExit = 2;
constexpr int kAllFailedExit = 3;

struct RunArgs {
  std::string config;
  std::map<std::string, std::string> overrides;
};

int run_command(const RunArgs& args) {
  using namespace bonmf;
  ExperimentConfig cfg;
  try {
    if (!args.config.empty()) cfg = load_config(args.config);
    for (const auto& [key, value] : args.overrides) apply_config_value(cfg, key, value);
    cfg.validate();
    if (cfg.dataset.path.empty()) throw ConfigError("no dataset given");
  } catch (const std::exception& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return kConfigErrorExit;
  }

  TrialReport report;
  try {
    report = run_experiment(cfg);
  } catch (const std::exception& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return kConfigErrorExit;
  }

  std::cout << emit_report(report, ReportFormat::kMarkdown);
  int completed = 0;
  for (const auto& s : report.summaries) completed += s.completed;
  for (const auto& r : report.records)
    if (!r.ok) std::cerr << "trial " << r.trial << ' ' << method_name(r.method) << ": " << r.error << '\n';
  return completed == 0 ? kAllFailedExit : EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary orthogonal NMF benchmark"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run repeated train/test trials");
  run->add_option("--config,-c", run_args.config, "key = value config file")->check(CLI::ExistingFile);
  // Each override maps onto one config key.
  const std::pair<const char*, const char*> keys[] = {
      {"--dataset", "dataset"},   {"--format", "format"},       {"--methods", "methods"},
      {"--trials", "trials"},     {"--rank", "rank"},           {"--train-frac", "train_frac"},
      {"--max-iters", "max_iters"}, {"--tol", "tol"},           {"--seed", "seed"},
      {"--jobs", "jobs"},         {"--out", "out"},             {"--emit", "emit"},
      {"--label-column", "label_column"}, {"--encode-iters", "encode_iters"}};
  std::map<std::string, std::string> raw;
  for (const auto& [flag, key] : keys) run->add_option(flag, raw[key], std::string("override ") + key);
  bool stratified = false;
  bool shift = false;
  run->add_flag("--stratified", stratified, "stratified split");
  run->add_flag("--shift-nonneg", shift, "shift features to be non-negative");

  std::string kind = "blocks";
  bonmf::Index m = 20, n = 200, k = 4;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string output;
  auto* synth = app.add_subcommand("synth", "Write a synthetic block dataset as CSV");
  synth->add_option("--kind", kind, "blocks or noisy-blocks")->capture_default_str();
  synth->add_option("--m", m, "features")->capture_default_str();
  synth->add_option("--n", n, "samples")->capture_default_str();
  synth->add_option("--k", k, "classes")->capture_default_str();
  synth->add_option("--noise", noise, "noise level")->capture_default_str();
  synth->add_option("--seed", seed, "random seed")->capture_default_str();
  synth->add_option("--output,-o", output, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigErrorExit;
  }

  if (*run) {
    for (const auto& [key, value] : raw)
      if (!value.empty()) run_args.overrides[key] = value;
    if (stratified) run_args.overrides["stratified"] = "true";
    if (shift) run_args.overrides["shift_nonneg"] = "true";
    return run_command(run_args);
  }

  try {
    const auto ds = bonmf::synth_dataset(bonmf::parse_synth_kind(kind), m, n, k, noise, seed);
    bonmf::save_csv(output, ds);
  } catch (const std::exception& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return kConfigErrorExit;
  }
  return EXIT_SUCCESS;
}
