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

#ifndef BONMF_MATRIX_HPP_
#define BONMF_MATRIX_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bonmf {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonNegativityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when every basis column is zero and no sample can be assigned.
class DegenerateModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense non-negative matrix stored column-major, so that col(j) is a
// contiguous slice. The Tag parameter keeps X, W and H from being mixed up.
template <class Tag>
class NonNegativeMatrix {
 public:
  NonNegativeMatrix() = default;

  explicit NonNegativeMatrix(MatrixXd values) : values_(std::move(values)) {
    if (values_.rows() < 1 || values_.cols() < 1)
      throw DimensionError("matrix must have at least one row and column");
    if (!(values_.array() >= 0.0).all())
      throw NonNegativityError("matrix has a negative or NaN entry");
  }

  Index rows() const { return values_.rows(); }
  Index cols() const { return values_.cols(); }
  const MatrixXd& values() const { return values_; }
  auto col(Index j) const { return values_.col(j); }
  double operator()(Index i, Index j) const { return values_(i, j); }

 private:
  MatrixXd values_;
};

struct DataTag;
struct BasisTag;
struct CoefficientTag;

// m x n samples-as-columns data.
using DataMatrix = NonNegativeMatrix<DataTag>;
// m x k factor W; columns are latent factors.
using BasisMatrix = NonNegativeMatrix<BasisTag>;
// k x n real factor H for the NMF / ONMF baselines.
using DenseCoefficients = NonNegativeMatrix<CoefficientTag>;

// One-hot k x n binary H stored as one cluster index per sample.
class BinaryAssignment {
 public:
  using Cluster = std::int32_t;

  BinaryAssignment() = default;
  BinaryAssignment(std::vector<Cluster> clusters, Index k);

  Index k() const { return k_; }
  Index size() const { return static_cast<Index>(clusters_.size()); }
  Cluster operator[](Index j) const { return clusters_[static_cast<std::size_t>(j)]; }
  const std::vector<Cluster>& clusters() const { return clusters_; }

  // Number of samples per cluster, i.e. the diagonal of H H^T.
  std::vector<Index> cluster_sizes() const;

  // Expands to the dense one-hot matrix. For tests and small instances only.
  MatrixXd to_dense() const;

  friend bool operator==(const BinaryAssignment&, const BinaryAssignment&) = default;

 private:
  std::vector<Cluster> clusters_;
  Index k_ = 0;
};

// 1/2 ||X - W H||_F^2.
double frobenius_objective(const DataMatrix& X, const BasisMatrix& W,
                           const DenseCoefficients& H);
double frobenius_objective(const DataMatrix& X, const BasisMatrix& W,
                           const BinaryAssignment& H);
double frobenius_objective(const MatrixXd& X, const MatrixXd& W, const MatrixXd& H);

// Cosine of the angle between x and w. Returns nullopt when either vector
// has zero norm; callers decide how to treat the degenerate case.
template <class A, class B>
std::optional<double> cosine_similarity(const Eigen::MatrixBase<A>& x,
                                        const Eigen::MatrixBase<B>& w) {
  if (x.size() != w.size()) throw DimensionError("cosine_similarity: length mismatch");
  const double nx = x.norm();
  const double nw = w.norm();
  if (nx == 0.0 || nw == 0.0) return std::nullopt;
  return x.dot(w) / (nx * nw);
}

VectorXd column_norms(const MatrixXd& M);

std::string shape_string(Index rows, Index cols);

}  // namespace bonmf

#endif  // BONMF_MATRIX_HPP_
