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

#ifndef BONMF_NMF_HPP_
#define BONMF_NMF_HPP_

#include <cstdint>
#include <vector>

#include "bonmf/matrix.hpp"

namespace bonmf {

struct FactorizeOptions {
  int max_iterations = 200;
  // Relative objective change below which a run counts as converged.
  double tolerance = 1e-4;
  std::uint64_t seed = 0;
  // Added to every multiplicative-update denominator.
  double epsilon_guard = 1e-10;

  // Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

struct FactorizationTrace {
  std::vector<double> objective_per_iteration;
  int iterations_run = 0;
  double wall_time_train = 0.0;
  bool converged = false;
  // W^T W was singular at initialization and the cosine assignment was used.
  bool init_fallback = false;
  // Samples with zero norm seen by the last cosine assignment.
  Index zero_norm_samples = 0;
};

struct NmfModel {
  BasisMatrix basis;
  DenseCoefficients coefficients;
  FactorizationTrace trace;
};

// Lee-Seung W step: W_ia <- W_ia (X H^T)_ia / ((W H H^T)_ia + eps).
BasisMatrix update_w(const DataMatrix& X, const BasisMatrix& W, const DenseCoefficients& H,
                     double epsilon_guard = 1e-10);

// Same step for a one-hot H. H H^T is diag(cluster sizes) and X H^T holds
// per-cluster column sums, so the cost is O(mn + mk) with no k x n buffer.
BasisMatrix update_w(const DataMatrix& X, const BasisMatrix& W, const BinaryAssignment& H,
                     double epsilon_guard = 1e-10);

// Lee-Seung H step: H_bj <- H_bj (W^T X)_bj / ((W^T W H)_bj + eps).
DenseCoefficients update_h_dense(const DataMatrix& X, const BasisMatrix& W,
                                 const DenseCoefficients& H, double epsilon_guard = 1e-10);

// |current - previous| / max(previous, eps).
double relative_change(double previous, double current);

// Warns on stderr when k exceeds min(m, n); the run proceeds regardless.
void warn_if_rank_exceeds(const DataMatrix& X, Index k);

NmfModel factorize_nmf(const DataMatrix& X, Index k, const FactorizeOptions& opts);

// Runs the alternating updates from caller-supplied factors.
NmfModel factorize_nmf(const DataMatrix& X, BasisMatrix W, DenseCoefficients H,
                       const FactorizeOptions& opts);

}  // namespace bonmf

#endif  // BONMF_NMF_HPP_
