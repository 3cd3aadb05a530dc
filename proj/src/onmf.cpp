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

#include "bonmf/onmf.hpp"

#include <chrono>

#include "bonmf/binary_orthogonal.hpp"

namespace bonmf {

// H <- H .* sqrt((W^T X) ./ ((W^T X H^T) H + eps)), the orthogonal NMF
// coefficient rule of Ding, Li, Peng and Park, "Orthogonal Nonnegative Matrix
// Tri-factorizations for Clustering", KDD 2006.
DenseCoefficients update_h_orthogonal(const DataMatrix& X, const BasisMatrix& W,
                                      const DenseCoefficients& H, double epsilon_guard) {
  if (X.rows() != W.rows() || W.cols() != H.rows() || X.cols() != H.cols())
    throw DimensionError("update_h_orthogonal: incompatible shapes");
  const MatrixXd& h = H.values();
  const MatrixXd projected = W.values().transpose() * X.values();
  // (W^T X H^T) H, grouped so the largest intermediate is k x k.
  const MatrixXd denominator = (projected * h.transpose()) * h;
  MatrixXd next =
      h.array() * (projected.array() / (denominator.array() + epsilon_guard)).sqrt();
  return DenseCoefficients(std::move(next));
}

double off_diagonal_mass(const MatrixXd& H) {
  MatrixXd gram = H * H.transpose();
  gram.diagonal().setZero();
  return gram.norm();
}

double orthogonality_residual(const MatrixXd& H) {
  const double total = (H * H.transpose()).norm();
  return total > 0.0 ? off_diagonal_mass(H) / total : 0.0;
}

OnmfModel factorize_onmf(const DataMatrix& X, Index k, const FactorizeOptions& opts) {
  opts.validate();
  if (k < 1) throw DimensionError("factorize_onmf: k must be >= 1");
  warn_if_rank_exceeds(X, k);
  const auto start = std::chrono::steady_clock::now();
  BasisMatrix W = init_w(X, k, opts.seed);
  bool fallback = false;
  DenseCoefficients H = initial_dense_coefficients(W, X, &fallback);
  OnmfModel model = factorize_onmf(X, std::move(W), std::move(H), opts);
  model.trace.init_fallback = fallback;
  model.trace.wall_time_train =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return model;
}

OnmfModel factorize_onmf(const DataMatrix& X, BasisMatrix W, DenseCoefficients H,
                         const FactorizeOptions& opts) {
  opts.validate();
  const auto start = std::chrono::steady_clock::now();
  FactorizationTrace trace;
  double previous = frobenius_objective(X, W, H);
  for (int it = 0; it < opts.max_iterations; ++it) {
    W = update_w(X, W, H, opts.epsilon_guard);
    H = update_h_orthogonal(X, W, H, opts.epsilon_guard);
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
  const double residual = orthogonality_residual(H.values());
  return OnmfModel{std::move(W), std::move(H), std::move(trace), residual};
}

SampleEncoder::SampleEncoder(const BasisMatrix& W, int inner_iterations, double epsilon_guard)
    : basis_(W.values()),
      gram_(W.values().transpose() * W.values()),
      inner_iterations_(inner_iterations),
      epsilon_guard_(epsilon_guard) {
  if (inner_iterations < 0) throw std::invalid_argument("inner_iterations must be >= 0");
}

VectorXd SampleEncoder::encode(const Eigen::Ref<const VectorXd>& x) const {
  if (x.size() != basis_.rows()) throw DimensionError("encode: feature length mismatch");
  VectorXd h = VectorXd::Ones(gram_.rows());
  if (inner_iterations_ == 0) return h;
  const VectorXd numerator = basis_.transpose() * x;
  VectorXd denominator(h.size());
  for (int it = 0; it < inner_iterations_; ++it) {
    denominator.noalias() = gram_ * h;
    h.array() *= numerator.array() / (denominator.array() + epsilon_guard_);
  }
  return h;
}

VectorXd encode_sample(const Eigen::Ref<const VectorXd>& x, const BasisMatrix& W,
                       int inner_iterations) {
  return SampleEncoder(W, inner_iterations).encode(x);
}

}  // namespace bonmf
