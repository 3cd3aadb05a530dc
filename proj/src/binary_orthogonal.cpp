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

#include "bonmf/binary_orthogonal.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>

namespace bonmf {

namespace {

constexpr Index kInitPoolSize = 30;
constexpr Index kInitSampleSize = 10;

BinaryAssignment::Cluster argmax_lowest(const Eigen::Ref<const VectorXd>& v) {
  Index best = 0;
  for (Index j = 1; j < v.size(); ++j) {
    if (v(j) > v(best)) best = j;
  }
  return static_cast<BinaryAssignment::Cluster>(best);
}

}  // namespace

std::vector<std::vector<Index>> init_w_samples(const DataMatrix& X, Index k,
                                               std::uint64_t seed) {
  if (k < 1) throw DimensionError("init_w: k must be >= 1");
  const VectorXd norms = column_norms(X.values());
  std::vector<Index> order(static_cast<std::size_t>(X.cols()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return norms(a) > norms(b); });
  const Index pool = std::min(kInitPoolSize, X.cols());
  order.resize(static_cast<std::size_t>(pool));

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Index>> picks(static_cast<std::size_t>(k));
  for (auto& pick : picks) {
    pick.reserve(kInitSampleSize);
    if (pool >= kInitSampleSize) {
      // Partial Fisher-Yates over a fresh copy of the pool.
      std::vector<Index> candidates = order;
      for (Index s = 0; s < kInitSampleSize; ++s) {
        std::uniform_int_distribution<Index> dist(s, pool - 1);
        std::swap(candidates[static_cast<std::size_t>(s)],
                  candidates[static_cast<std::size_t>(dist(rng))]);
        pick.push_back(candidates[static_cast<std::size_t>(s)]);
      }
    } else {
      std::uniform_int_distribution<Index> dist(0, pool - 1);
      for (Index s = 0; s < kInitSampleSize; ++s)
        pick.push_back(order[static_cast<std::size_t>(dist(rng))]);
    }
  }
  return picks;
}

BasisMatrix init_w(const DataMatrix& X, Index k, std::uint64_t seed) {
  const auto picks = init_w_samples(X, k, seed);
  MatrixXd W = MatrixXd::Zero(X.rows(), k);
  for (Index a = 0; a < k; ++a) {
    const auto& pick = picks[static_cast<std::size_t>(a)];
    for (Index j : pick) W.col(a) += X.col(j);
    W.col(a) /= static_cast<double>(pick.size());
  }
  return BasisMatrix(std::move(W));
}

namespace {

std::optional<Eigen::FullPivLU<MatrixXd>> normal_equations(const BasisMatrix& W) {
  Eigen::FullPivLU<MatrixXd> lu(W.values().transpose() * W.values());
  if (!lu.isInvertible()) return std::nullopt;
  return lu;
}

}  // namespace

std::optional<MatrixXd> least_squares_coefficients(const BasisMatrix& W, const DataMatrix& X) {
  if (W.rows() != X.rows()) throw DimensionError("least_squares_coefficients: row mismatch");
  const auto lu = normal_equations(W);
  if (!lu) return std::nullopt;
  return lu->solve(W.values().transpose() * X.values());
}

BinaryAssignment init_h(const BasisMatrix& W, const DataMatrix& X, bool* fallback) {
  if (W.rows() != X.rows()) throw DimensionError("init_h: row mismatch");
  const auto lu = normal_equations(W);
  if (fallback) *fallback = !lu;
  if (!lu) return update_h_cosine(X, W);

  // (W^T W)^{-1} W^T, k x m, applied column by column.
  const MatrixXd projector = lu->solve(W.values().transpose());
  std::vector<BinaryAssignment::Cluster> clusters(static_cast<std::size_t>(X.cols()));
  VectorXd coefficients(W.cols());
  for (Index j = 0; j < X.cols(); ++j) {
    coefficients.noalias() = projector * X.col(j);
    clusters[static_cast<std::size_t>(j)] = argmax_lowest(coefficients);
  }
  return BinaryAssignment(std::move(clusters), W.cols());
}

std::optional<Index> nearest_basis_column(const Eigen::Ref<const VectorXd>& x, double x_norm,
                                          const MatrixXd& W,
                                          std::span<const double> basis_norms,
                                          std::int64_t* similarity_count) {
  if (x.size() != W.rows() || static_cast<Index>(basis_norms.size()) != W.cols())
    throw DimensionError("nearest_basis_column: incompatible shapes");
  if (similarity_count) *similarity_count += W.cols();
  if (x_norm == 0.0) return std::nullopt;
  Index best = -1;
  double best_similarity = -std::numeric_limits<double>::infinity();
  for (Index j = 0; j < W.cols(); ++j) {
    const double wn = basis_norms[static_cast<std::size_t>(j)];
    if (wn == 0.0) continue;
    const double similarity = x.dot(W.col(j)) / (x_norm * wn);
    if (best < 0 || similarity > best_similarity) {
      best = j;
      best_similarity = similarity;
    }
  }
  if (best < 0) throw DegenerateModelError("every basis column has zero norm");
  return best;
}

namespace {

// Shared body of the two update_h_cosine overloads; norm_of(i) yields ||X_:i||.
template <class NormOf>
BinaryAssignment assign_by_cosine(const DataMatrix& X, const BasisMatrix& W, NormOf norm_of,
                                  CosineDiagnostics* diagnostics) {
  const VectorXd basis_norms = column_norms(W.values());
  if (basis_norms.maxCoeff() == 0.0)
    throw DegenerateModelError("every basis column has zero norm");
  const std::span<const double> wn(basis_norms.data(), static_cast<std::size_t>(W.cols()));

  std::vector<BinaryAssignment::Cluster> clusters(static_cast<std::size_t>(X.cols()), 0);
  Index zero_norm = 0;
  for (Index i = 0; i < X.cols(); ++i) {
    const auto best = nearest_basis_column(X.col(i), norm_of(i), W.values(), wn);
    if (best) {
      clusters[static_cast<std::size_t>(i)] = static_cast<BinaryAssignment::Cluster>(*best);
    } else {
      ++zero_norm;
    }
  }
  if (diagnostics) diagnostics->zero_norm_samples = zero_norm;
  return BinaryAssignment(std::move(clusters), W.cols());
}

}  // namespace

BinaryAssignment update_h_cosine(const DataMatrix& X, std::span<const double> sample_norms,
                                 const BasisMatrix& W, CosineDiagnostics* diagnostics) {
  if (X.rows() != W.rows()) throw DimensionError("update_h_cosine: row mismatch");
  if (static_cast<Index>(sample_norms.size()) != X.cols())
    throw DimensionError("update_h_cosine: sample norm count mismatch");
  return assign_by_cosine(
      X, W, [&](Index i) { return sample_norms[static_cast<std::size_t>(i)]; }, diagnostics);
}

BinaryAssignment update_h_cosine(const DataMatrix& X, const BasisMatrix& W,
                                 CosineDiagnostics* diagnostics) {
  if (X.rows() != W.rows()) throw DimensionError("update_h_cosine: row mismatch");
  return assign_by_cosine(
      X, W, [&](Index i) { return X.values().col(i).norm(); }, diagnostics);
}

BonmfModel factorize_bonmf(const DataMatrix& X, Index k, const FactorizeOptions& opts) {
  opts.validate();
  if (k < 1) throw DimensionError("factorize_bonmf: k must be >= 1");
  warn_if_rank_exceeds(X, k);
  const auto start = std::chrono::steady_clock::now();

  FactorizationTrace trace;
  BasisMatrix W = init_w(X, k, opts.seed);
  BinaryAssignment H = init_h(W, X, &trace.init_fallback);

  const VectorXd norms = column_norms(X.values());
  const std::span<const double> sample_norms(norms.data(), norms.size());
  double previous = frobenius_objective(X, W, H);
  for (int it = 0; it < opts.max_iterations; ++it) {
    W = update_w(X, W, H, opts.epsilon_guard);
    CosineDiagnostics diagnostics;
    BinaryAssignment next = update_h_cosine(X, sample_norms, W, &diagnostics);
    trace.zero_norm_samples = diagnostics.zero_norm_samples;
    const bool stable = next == H;
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
  return BonmfModel{std::move(W), std::move(H), std::move(trace), {}};
}

DenseCoefficients initial_dense_coefficients(const BasisMatrix& W, const DataMatrix& X,
                                             bool* fallback) {
  std::optional<MatrixXd> H0 = least_squares_coefficients(W, X);
  if (fallback) *fallback = !H0;
  if (!H0) H0 = update_h_cosine(X, W).to_dense();
  const double peak = H0->maxCoeff();
  const double floor = peak > 0.0 ? 1e-3 * peak : 1e-3;
  return DenseCoefficients(H0->cwiseMax(floor));
}

}  // namespace bonmf
