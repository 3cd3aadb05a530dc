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

#include "bonmf/nmf.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>

#include "bonmf/binary_orthogonal.hpp"

namespace bonmf {

void FactorizeOptions::validate() const {
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
  if (!(epsilon_guard > 0.0)) throw std::invalid_argument("epsilon_guard must be > 0");
}

BasisMatrix update_w(const DataMatrix& X, const BasisMatrix& W, const DenseCoefficients& H,
                     double epsilon_guard) {
  if (X.rows() != W.rows() || W.cols() != H.rows() || X.cols() != H.cols())
    throw DimensionError("update_w: incompatible shapes");
  const MatrixXd& h = H.values();
  const MatrixXd numerator = X.values() * h.transpose();
  const MatrixXd denominator = W.values() * (h * h.transpose());
  MatrixXd next = W.values().array() * numerator.array() /
                  (denominator.array() + epsilon_guard);
  return BasisMatrix(std::move(next));
}

BasisMatrix update_w(const DataMatrix& X, const BasisMatrix& W, const BinaryAssignment& H,
                     double epsilon_guard) {
  if (X.rows() != W.rows() || W.cols() != H.k() || X.cols() != H.size())
    throw DimensionError("update_w: incompatible shapes");
  const Index k = H.k();
  MatrixXd cluster_sums = MatrixXd::Zero(X.rows(), k);
  for (Index j = 0; j < X.cols(); ++j) cluster_sums.col(H[j]) += X.col(j);
  const std::vector<Index> sizes = H.cluster_sizes();

  MatrixXd next(W.rows(), k);
  for (Index a = 0; a < k; ++a) {
    const double size = static_cast<double>(sizes[static_cast<std::size_t>(a)]);
    next.col(a) = W.col(a).array() * cluster_sums.col(a).array() /
                  (W.col(a).array() * size + epsilon_guard);
  }
  return BasisMatrix(std::move(next));
}

DenseCoefficients update_h_dense(const DataMatrix& X, const BasisMatrix& W,
                                 const DenseCoefficients& H, double epsilon_guard) {
  if (X.rows() != W.rows() || W.cols() != H.rows() || X.cols() != H.cols())
    throw DimensionError("update_h_dense: incompatible shapes");
  const MatrixXd& w = W.values();
  const MatrixXd numerator = w.transpose() * X.values();
  const MatrixXd denominator = (w.transpose() * w) * H.values();
  MatrixXd next = H.values().array() * numerator.array() /
                  (denominator.array() + epsilon_guard);
  return DenseCoefficients(std::move(next));
}

double relative_change(double previous, double current) {
  constexpr double kFloor = 1e-300;
  return std::abs(current - previous) / std::max(previous, kFloor);
}

void warn_if_rank_exceeds(const DataMatrix& X, Index k) {
  if (k > std::min(X.rows(), X.cols())) {
    std::cerr << "warning: rank " << k << " exceeds min(m, n) = "
              << std::min(X.rows(), X.cols()) << "\n";
  }
}

NmfModel factorize_nmf(const DataMatrix& X, Index k, const FactorizeOptions& opts) {
  opts.validate();
  if (k < 1) throw DimensionError("factorize_nmf: k must be >= 1");
  warn_if_rank_exceeds(X, k);
  const auto start = std::chrono::steady_clock::now();
  BasisMatrix W = init_w(X, k, opts.seed);
  bool fallback = false;
  DenseCoefficients H = initial_dense_coefficients(W, X, &fallback);
  NmfModel model = factorize_nmf(X, std::move(W), std::move(H), opts);
  model.trace.init_fallback = fallback;
  model.trace.wall_time_train =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return model;
}

NmfModel factorize_nmf(const DataMatrix& X, BasisMatrix W, DenseCoefficients H,
                       const FactorizeOptions& opts) {
  opts.validate();
  const auto start = std::chrono::steady_clock::now();
  FactorizationTrace trace;
  double previous = frobenius_objective(X, W, H);
  for (int it = 0; it < opts.max_iterations; ++it) {
    W = update_w(X, W, H, opts.epsilon_guard);
    H = update_h_dense(X, W, H, opts.epsilon_guard);
    const double objective = frobenius_objective(X, W, H);
    trace.objective_per_iteration.push_back(objective);
    trace.iterations_run = it + 1;
    if (relative_change(previous, objective) < opts.tolerance) {
      trace.converged = true;
      break;
    }
    previous = objective;
  }
  trace.wall_time_train =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return NmfModel{std::move(W), std::move(H), std::move(trace)};
}

}  // namespace bonmf
