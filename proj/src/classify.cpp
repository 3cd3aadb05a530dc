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

#include "bonmf/classify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bonmf {

namespace {

std::vector<double> norms_of(const MatrixXd& M) {
  const VectorXd n = column_norms(M);
  return {n.data(), n.data() + n.size()};
}

Index argmax_lowest(const Eigen::Ref<const VectorXd>& v) {
  Index best = 0;
  for (Index j = 1; j < v.size(); ++j) {
    if (v(j) > v(best)) best = j;
  }
  return best;
}

int most_frequent(const std::vector<int>& counts) {
  return static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

}  // namespace

void LabeledDataset::validate() const {
  if (static_cast<Index>(labels.size()) != data.cols())
    throw DimensionError("dataset: label count does not match sample count");
  for (int label : labels) {
    if (label < 0 || label >= class_count)
      throw std::invalid_argument("dataset: label outside [0, class_count)");
  }
}

ClusterLabelMap build_label_map(const BinaryAssignment& assignments,
                                const std::vector<int>& labels) {
  if (assignments.size() != static_cast<Index>(labels.size()))
    throw DimensionError("build_label_map: assignment and label lengths differ");
  const int classes =
      labels.empty() ? 1 : *std::max_element(labels.begin(), labels.end()) + 1;
  const auto k = static_cast<std::size_t>(assignments.k());
  std::vector<std::vector<int>> votes(k, std::vector<int>(static_cast<std::size_t>(classes), 0));
  std::vector<int> overall(static_cast<std::size_t>(classes), 0);
  for (Index j = 0; j < assignments.size(); ++j) {
    const int label = labels[static_cast<std::size_t>(j)];
    if (label < 0) throw std::invalid_argument("build_label_map: negative label");
    ++votes[static_cast<std::size_t>(assignments[j])][static_cast<std::size_t>(label)];
    ++overall[static_cast<std::size_t>(label)];
  }
  const int fallback = most_frequent(overall);
  ClusterLabelMap map(k);
  for (std::size_t a = 0; a < k; ++a) {
    const bool empty = std::all_of(votes[a].begin(), votes[a].end(), [](int c) { return c == 0; });
    map[a] = empty ? fallback : most_frequent(votes[a]);
  }
  return map;
}

BonmfClassifier::BonmfClassifier(const BonmfModel& model)
    : basis_(model.basis.values()),
      basis_norms_(norms_of(model.basis.values())),
      labels_(model.cluster_labels) {
  if (static_cast<Index>(labels_.size()) != basis_.cols())
    throw std::logic_error("BonmfClassifier: model has no cluster label map");
}

int BonmfClassifier::classify(const Eigen::Ref<const VectorXd>& x, ClassifyStats* stats) const {
  std::int64_t evaluations = 0;
  const auto cluster = nearest_basis_column(x, x.norm(), basis_, basis_norms_, &evaluations);
  if (stats) {
    stats->similarity_evaluations += evaluations;
    if (!cluster) ++stats->zero_norm_inputs;
  }
  return labels_[static_cast<std::size_t>(cluster.value_or(0))];
}

int classify_bonmf(const Eigen::Ref<const VectorXd>& x, const BonmfModel& model,
                   ClassifyStats* stats) {
  return BonmfClassifier(model).classify(x, stats);
}

CoefficientClassifier::CoefficientClassifier(const BasisMatrix& W,
                                             const DenseCoefficients& train_coefficients,
                                             const LabeledDataset& train, int inner_iterations)
    : basis_(W.values()),
      basis_norms_(norms_of(W.values())),
      encoder_(W, inner_iterations),
      train_coefficients_(train_coefficients.values()),
      coefficient_norms_(norms_of(train_coefficients.values())),
      train_data_(train.data.values()),
      train_norms_(norms_of(train.data.values())),
      train_labels_(train.labels) {
  if (train_coefficients.rows() != W.cols() || train_coefficients.cols() != train.samples() ||
      W.rows() != train.features())
    throw DimensionError("CoefficientClassifier: incompatible shapes");
  train.validate();
  members_.resize(static_cast<std::size_t>(W.cols()));
  for (Index j = 0; j < train_coefficients_.cols(); ++j)
    members_[static_cast<std::size_t>(argmax_lowest(train_coefficients_.col(j)))].push_back(j);
  everyone_.resize(static_cast<std::size_t>(train.samples()));
  std::iota(everyone_.begin(), everyone_.end(), Index{0});
}

int CoefficientClassifier::nearest_member(const Eigen::Ref<const VectorXd>& x,
                                          const std::vector<Index>& pool) const {
  Index best = pool.front();
  double best_distance = std::numeric_limits<double>::infinity();
  for (Index j : pool) {
    const double distance = (train_data_.col(j) - x).squaredNorm();
    if (distance < best_distance) {
      best = j;
      best_distance = distance;
    }
  }
  return train_labels_[static_cast<std::size_t>(best)];
}

int CoefficientClassifier::most_similar_member(const Eigen::Ref<const VectorXd>& x,
                                               double x_norm, const std::vector<Index>& pool,
                                               ClassifyStats* stats) const {
  Index best = pool.front();
  double best_similarity = -std::numeric_limits<double>::infinity();
  for (Index j : pool) {
    const double norm = train_norms_[static_cast<std::size_t>(j)];
    if (norm == 0.0) continue;
    const double similarity = train_data_.col(j).dot(x) / (norm * x_norm);
    if (similarity > best_similarity) {
      best = j;
      best_similarity = similarity;
    }
  }
  if (stats) stats->similarity_evaluations += static_cast<std::int64_t>(pool.size());
  return train_labels_[static_cast<std::size_t>(best)];
}

int CoefficientClassifier::coefficient_argmax(const Eigen::Ref<const VectorXd>& x) const {
  const VectorXd h = encoder_.encode(x);
  const auto& pool = members_[static_cast<std::size_t>(argmax_lowest(h))];
  return nearest_member(x, pool.empty() ? everyone_ : pool);
}

int CoefficientClassifier::onmf_cosine(const Eigen::Ref<const VectorXd>& x,
                                       ClassifyStats* stats) const {
  std::int64_t evaluations = 0;
  const double x_norm = x.norm();
  const auto cluster = nearest_basis_column(x, x_norm, basis_, basis_norms_, &evaluations);
  if (stats) {
    stats->similarity_evaluations += evaluations;
    if (!cluster) ++stats->zero_norm_inputs;
  }
  const auto& pool = members_[static_cast<std::size_t>(cluster.value_or(0))];
  const auto& candidates = pool.empty() ? everyone_ : pool;
  // A zero-norm input has no angle to anything; the first candidate wins.
  if (!cluster) return train_labels_[static_cast<std::size_t>(candidates.front())];
  return most_similar_member(x, x_norm, candidates, stats);
}

int CoefficientClassifier::nmf_angle(const Eigen::Ref<const VectorXd>& x,
                                     ClassifyStats* stats) const {
  const VectorXd h = encoder_.encode(x);
  const double h_norm = h.norm();
  if (h_norm == 0.0) {
    if (stats) ++stats->zero_norm_inputs;
    return train_labels_.front();
  }
  Index best = 0;
  double best_similarity = -std::numeric_limits<double>::infinity();
  for (Index j = 0; j < train_coefficients_.cols(); ++j) {
    const double norm = coefficient_norms_[static_cast<std::size_t>(j)];
    if (norm == 0.0) continue;
    const double similarity = train_coefficients_.col(j).dot(h) / (norm * h_norm);
    if (similarity > best_similarity) {
      best = j;
      best_similarity = similarity;
    }
  }
  if (stats) stats->similarity_evaluations += train_coefficients_.cols();
  return train_labels_[static_cast<std::size_t>(best)];
}

int classify_coefficient_argmax(const Eigen::Ref<const VectorXd>& x,
                                const CoefficientClassifier& model) {
  return model.coefficient_argmax(x);
}

int classify_angle_nearest(const Eigen::Ref<const VectorXd>& x,
                           const CoefficientClassifier& model, AngleScheme scheme) {
  return scheme == AngleScheme::kOnmfCosine ? model.onmf_cosine(x) : model.nmf_angle(x);
}

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth) {
  if (predicted.size() != truth.size())
    throw DimensionError("accuracy: prediction and truth lengths differ");
  if (truth.empty()) throw std::invalid_argument("accuracy: empty label sequence");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) hits += predicted[i] == truth[i];
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

}  // namespace bonmf
