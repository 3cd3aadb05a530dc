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

#include "bonmf/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bonmf {

using nlohmann::json;

std::string serialize_model(const BonmfModel& model) {
  const MatrixXd& W = model.basis.values();
  std::vector<double> row_major;
  row_major.reserve(static_cast<std::size_t>(W.size()));
  for (Index i = 0; i < W.rows(); ++i)
    for (Index a = 0; a < W.cols(); ++a) row_major.push_back(W(i, a));
  json doc;
  doc["m"] = W.rows();
  doc["k"] = W.cols();
  doc["W"] = row_major;
  doc["assignments"] = model.assignments.clusters();
  doc["cluster_labels"] = model.cluster_labels;
  doc["iterations_run"] = model.trace.iterations_run;
  doc["objective"] = model.trace.objective_per_iteration;
  return doc.dump();
}

BonmfModel deserialize_model(const std::string& text) {
  const json doc = json::parse(text);
  const Index m = doc.at("m").get<Index>();
  const Index k = doc.at("k").get<Index>();
  const auto values = doc.at("W").get<std::vector<double>>();
  if (m < 1 || k < 1 || static_cast<Index>(values.size()) != m * k)
    throw DimensionError("model: W has " + std::to_string(values.size()) +
                         " entries, expected " + shape_string(m, k));
  MatrixXd W(m, k);
  for (Index i = 0; i < m; ++i)
    for (Index a = 0; a < k; ++a) W(i, a) = values[static_cast<std::size_t>(i * k + a)];

  BonmfModel model{BasisMatrix(std::move(W)),
                   BinaryAssignment(doc.at("assignments").get<std::vector<BinaryAssignment::Cluster>>(), k),
                   {},
                   doc.at("cluster_labels").get<std::vector<int>>()};
  if (!model.cluster_labels.empty() && static_cast<Index>(model.cluster_labels.size()) != k)
    throw DimensionError("model: cluster_labels length differs from k");
  model.trace.iterations_run = doc.value("iterations_run", 0);
  model.trace.objective_per_iteration = doc.value("objective", std::vector<double>{});
  return model;
}

void save_model(const std::string& path, const BonmfModel& model) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_model(model) << '\n';
}

BonmfModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return deserialize_model(buffer.str());
}

}  // namespace bonmf
