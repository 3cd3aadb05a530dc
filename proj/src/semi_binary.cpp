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

#include "bonmf/semi_binary.hpp"

#include <chrono>

#include "bonmf/binary_orthogonal.hpp"

namespace bonmf {

DenseCoefficients update_h_row(const DataMatrix& X, const BasisMatrix& W,
                               const DenseCoefficients& H, Index row) {
  if (X.rows() != W.rows() || W.cols() != H.rows() || X.cols() != H.cols())
    throw DimensionError("update_h_row: incompatible shapes");
  if (row < 0 || row >= H.rows()) throw DimensionError("update_h_row: row out of range");

  const auto z = W.col(row);
  // W'^T z with the row's own entry zeroed stands in for dropping column `row`.
  VectorXd cross = W.values().transpose() * z;
  cross(row) = 0.0;
  const VectorXd score = (X.values().transpose() * z).array() - 0.5 * z.squaredNorm() -
                         (H.values().transpose() * cross).array();

  MatrixXd next = H.values();
  next.row(row) = score.unaryExpr([](double v) { return sgn(v); }).transpose();
  return DenseCoefficients(std::move(next));
}

DenseCoefficients sweep_h_rows(const DataMatrix& X, const BasisMatrix& W,
                               DenseCoefficients H) {
  for (Index row = 0; row < H.rows(); ++row) H = update_h_row(X, W, H, row);
  return H;
}

SemiBinaryModel factorize_zhang(const DataMatrix& X, Index k, const FactorizeOptions& opts) {
  opts.validate();
  if (k < 1) throw DimensionError("factorize_zhang: k must be >= 1");
  warn_if_rank_exceeds(X, k);
  const auto start = std::chrono::steady_clock::now();

  FactorizationTrace trace;
  BasisMatrix W = init_w(X, k, opts.seed);
  std::optional<MatrixXd> H0 = least_squares_coefficients(W, X);
  trace.init_fallback = !H0;
  MatrixXd start_h = H0 ? MatrixXd(H0->unaryExpr([](double v) { return sgn(v - 0.5); }))
                        : update_h_cosine(X, W).to_dense();
  DenseCoefficients H(std::move(start_h));

  double previous = frobenius_objective(X, W, H);
  for (int it = 0; it < opts.max_iterations; ++it) {
    W = update_w(X, W, H, opts.epsilon_guard);
    DenseCoefficients next = sweep_h_rows(X, W, H);
    const bool stable = next.values() == H.values();
    H = std::move(next);

    const double objective = frobenius_objective(X, W, H);
    trace.objective_per_iteration.push_back(objective);
    trace.iterations_run = it + 1;
    if (stable && relative_change(previous, objective) < opts.tolerance) {
      trace.converged = true;
      break;
    }
    previous = objective;
  }
  trace.wall_time_train =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return SemiBinaryModel{std::move(W), std::move(H), std::move(trace)};
}

}  // namespace bonmf
