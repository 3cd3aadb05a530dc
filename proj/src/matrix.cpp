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

#include "bonmf/matrix.hpp"

#include <sstream>

namespace bonmf {

BinaryAssignment::BinaryAssignment(std::vector<Cluster> clusters, Index k)
    : clusters_(std::move(clusters)), k_(k) {
  if (k_ < 1) throw DimensionError("BinaryAssignment: k must be >= 1");
  for (Cluster c : clusters_) {
    if (c < 0 || c >= k_)
      throw DimensionError("BinaryAssignment: cluster index out of range");
  }
}

std::vector<Index> BinaryAssignment::cluster_sizes() const {
  std::vector<Index> sizes(static_cast<std::size_t>(k_), 0);
  for (Cluster c : clusters_) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

MatrixXd BinaryAssignment::to_dense() const {
  MatrixXd H = MatrixXd::Zero(k_, size());
  for (Index j = 0; j < size(); ++j) H((*this)[j], j) = 1.0;
  return H;
}

std::string shape_string(Index rows, Index cols) {
  std::ostringstream os;
  os << rows << "x" << cols;
  return os.str();
}

double frobenius_objective(const MatrixXd& X, const MatrixXd& W, const MatrixXd& H) {
  if (W.cols() != H.rows() || X.rows() != W.rows() || X.cols() != H.cols()) {
    throw DimensionError("frobenius_objective: X is " + shape_string(X.rows(), X.cols()) +
                         ", W is " + shape_string(W.rows(), W.cols()) + ", H is " +
                         shape_string(H.rows(), H.cols()));
  }
  return 0.5 * (X - W * H).squaredNorm();
}

double frobenius_objective(const DataMatrix& X, const BasisMatrix& W,
                           const DenseCoefficients& H) {
  return frobenius_objective(X.values(), W.values(), H.values());
}

double frobenius_objective(const DataMatrix& X, const BasisMatrix& W,
                           const BinaryAssignment& H) {
  if (X.rows() != W.rows() || W.cols() != H.k() || X.cols() != H.size()) {
    throw DimensionError("frobenius_objective: X is " + shape_string(X.rows(), X.cols()) +
                         ", W is " + shape_string(W.rows(), W.cols()) +
                         ", assignment is " + shape_string(H.k(), H.size()));
  }
  double total = 0.0;
  for (Index j = 0; j < X.cols(); ++j)
    total += (X.col(j) - W.col(H[j])).squaredNorm();
  return 0.5 * total;
}

VectorXd column_norms(const MatrixXd& M) {
  return M.colwise().norm().transpose();
}

}  // namespace bonmf
