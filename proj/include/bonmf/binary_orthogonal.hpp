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

#ifndef BONMF_BINARY_ORTHOGONAL_HPP_
#define BONMF_BINARY_ORTHOGONAL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bonmf/matrix.hpp"
#include "bonmf/nmf.hpp"

namespace bonmf {

// Binary orthogonal NMF: X ~ W H with W >= 0 and H one-hot per column.
struct BonmfModel {
  BasisMatrix basis;
  BinaryAssignment assignments;
  FactorizationTrace trace;
  // Cluster -> class id, filled in by build_label_map.
  std::vector<int> cluster_labels;
};

// Columns of X that init_w averages into each basis column, as indices into X.
// Columns are ranked by descending norm (ties by index); each basis column
// draws 10 of the first min(30, n) without replacement, or with replacement
// when fewer than 10 are available.
std::vector<std::vector<Index>> init_w_samples(const DataMatrix& X, Index k,
                                               std::uint64_t seed);

BasisMatrix init_w(const DataMatrix& X, Index k, std::uint64_t seed);

// Real-valued H0 = (W^T W)^{-1} W^T X, or nullopt when W^T W is singular.
std::optional<MatrixXd> least_squares_coefficients(const BasisMatrix& W, const DataMatrix& X);

struct CosineDiagnostics {
  Index zero_norm_samples = 0;
};

// Per column, solves the k x k normal equations for H0 and keeps the argmax
// (lowest index on ties). Falls back to update_h_cosine when W^T W is
// singular and sets *fallback.
BinaryAssignment init_h(const BasisMatrix& W, const DataMatrix& X, bool* fallback = nullptr);

// For each sample column, argmax_j cos(X_:i, W_:j), lowest index on ties.
// Zero-norm basis columns are never chosen; zero-norm samples go to cluster 0.
// Throws DegenerateModelError if every basis column is zero.
BinaryAssignment update_h_cosine(const DataMatrix& X, const BasisMatrix& W,
                                 CosineDiagnostics* diagnostics = nullptr);

// As above with precomputed column norms of X.
BinaryAssignment update_h_cosine(const DataMatrix& X, std::span<const double> sample_norms,
                                 const BasisMatrix& W,
                                 CosineDiagnostics* diagnostics = nullptr);

// Best cluster for a single vector; nullopt when the vector has zero norm.
// `basis_norms` are the column norms of W. `similarity_count`, if given, is
// incremented once per cosine evaluated.
std::optional<Index> nearest_basis_column(const Eigen::Ref<const VectorXd>& x, double x_norm,
                                          const MatrixXd& W,
                                          std::span<const double> basis_norms,
                                          std::int64_t* similarity_count = nullptr);

BonmfModel factorize_bonmf(const DataMatrix& X, Index k, const FactorizeOptions& opts);

// Dense non-negative start shared by the NMF and ONMF baselines: H0 with
// entries below 1e-3 * max(H0) raised to that floor, so no entry starts at
// zero and gets locked by the multiplicative updates.
DenseCoefficients initial_dense_coefficients(const BasisMatrix& W, const DataMatrix& X,
                                             bool* fallback = nullptr);

}  // namespace bonmf

#endif  // BONMF_BINARY_ORTHOGONAL_HPP_
