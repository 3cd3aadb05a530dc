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

#ifndef BONMF_SEMI_BINARY_HPP_
#define BONMF_SEMI_BINARY_HPP_

#include "bonmf/matrix.hpp"
#include "bonmf/nmf.hpp"

namespace bonmf {

// Semi-binary NMF baseline (Zhang et al.): H in {0,1}^{k x n} with no
// one-per-column restriction, updated one row at a time by a sign rule.
struct SemiBinaryModel {
  BasisMatrix basis;
  // Entries are exactly 0.0 or 1.0.
  DenseCoefficients coefficients;
  FactorizationTrace trace;
};

// 1 if x > 0, otherwise 0.
constexpr double sgn(double x) { return x > 0.0 ? 1.0 : 0.0; }

// Replaces row `row` of H by
//   sgn(X^T z - 1/2 (z^T z) 1 - H'^T W'^T z)
// where z = W_:row and W', H' are W, H without that column / row.
DenseCoefficients update_h_row(const DataMatrix& X, const BasisMatrix& W,
                               const DenseCoefficients& H, Index row);

// One ascending sweep of update_h_row over every row.
DenseCoefficients sweep_h_rows(const DataMatrix& X, const BasisMatrix& W,
                               DenseCoefficients H);

SemiBinaryModel factorize_zhang(const DataMatrix& X, Index k, const FactorizeOptions& opts);

}  // namespace bonmf

#endif  // BONMF_SEMI_BINARY_HPP_
