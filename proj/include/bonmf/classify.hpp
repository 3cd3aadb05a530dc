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

#ifndef BONMF_CLASSIFY_HPP_
#define BONMF_CLASSIFY_HPP_

#include <cstdint>
#include <vector>

#include "bonmf/binary_orthogonal.hpp"
#include "bonmf/matrix.hpp"
#include "bonmf/onmf.hpp"

namespace bonmf {

struct LabeledDataset {
  DataMatrix data;
  std::vector<int> labels;
  int class_count = 0;

  Index samples() const { return data.cols(); }
  Index features() const { return data.rows(); }
  // Throws if labels do not match the data or fall outside [0, class_count).
  void validate() const;
};

using ClusterLabelMap = std::vector<int>;

// Majority label per cluster (lowest label on ties). Empty clusters get the
// most frequent label overall.
ClusterLabelMap build_label_map(const BinaryAssignment& assignments,
                                const std::vector<int>& labels);

struct ClassifyStats {
  std::int64_t similarity_evaluations = 0;
  std::int64_t zero_norm_inputs = 0;
};

// Precomputes basis column norms so each call costs exactly k dot products
// of length m.
class BonmfClassifier {
 public:
  explicit BonmfClassifier(const BonmfModel& model);

  int classify(const Eigen::Ref<const VectorXd>& x, ClassifyStats* stats = nullptr) const;

 private:
  MatrixXd basis_;
  std::vector<double> basis_norms_;
  ClusterLabelMap labels_;
};

int classify_bonmf(const Eigen::Ref<const VectorXd>& x, const BonmfModel& model,
                   ClassifyStats* stats = nullptr);

// The baseline classifiers that need the training coefficients.
// Training samples are grouped by the argmax of their coefficient column.
class CoefficientClassifier {
 public:
  CoefficientClassifier(const BasisMatrix& W, const DenseCoefficients& train_coefficients,
                        const LabeledDataset& train, int inner_iterations = 50);

  // ONMF default: encode, argmax -> cluster, Euclidean-nearest member's label.
  // Falls back to the nearest training sample when the cluster is empty.
  int coefficient_argmax(const Eigen::Ref<const VectorXd>& x) const;

  // ONMF+cos: cluster by cosine to the basis columns, then the member with
  // the largest cosine to x gives the label.
  int onmf_cosine(const Eigen::Ref<const VectorXd>& x, ClassifyStats* stats = nullptr) const;

  // NMF scheme: encode, then the training coefficient column with the
  // largest cosine to the encoding gives the label.
  int nmf_angle(const Eigen::Ref<const VectorXd>& x, ClassifyStats* stats = nullptr) const;

  const std::vector<std::vector<Index>>& members() const { return members_; }

 private:
  int nearest_member(const Eigen::Ref<const VectorXd>& x, const std::vector<Index>& pool) const;
  int most_similar_member(const Eigen::Ref<const VectorXd>& x, double x_norm,
                          const std::vector<Index>& pool, ClassifyStats* stats) const;

  MatrixXd basis_;
  std::vector<double> basis_norms_;
  SampleEncoder encoder_;
  MatrixXd train_coefficients_;
  std::vector<double> coefficient_norms_;
  MatrixXd train_data_;
  std::vector<double> train_norms_;
  std::vector<int> train_labels_;
  std::vector<std::vector<Index>> members_;
  std::vector<Index> everyone_;
};

int classify_coefficient_argmax(const Eigen::Ref<const VectorXd>& x,
                                const CoefficientClassifier& model);

enum class AngleScheme { kOnmfCosine, kNmfCoefficients };

int classify_angle_nearest(const Eigen::Ref<const VectorXd>& x,
                           const CoefficientClassifier& model, AngleScheme scheme);

// Fraction of equal positions. Throws DimensionError on length mismatch.
double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth);

}  // namespace bonmf

#endif  // BONMF_CLASSIFY_HPP_
