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

#ifndef BONMF_ONMF_HPP_
#define BONMF_ONMF_HPP_

#include "bonmf/matrix.hpp"
#include "bonmf/nmf.hpp"

namespace bonmf {

struct OnmfModel {
  BasisMatrix basis;
  DenseCoefficients coefficients;
  FactorizationTrace trace;
  // ||H H^T - diag(H H^T)||_F / ||H H^T||_F of the returned H.
  double orthogonality_residual = 0.0;
};

// Orthogonal NMF with real-valued H.
//
// W follows the Lee-Seung rule. H follows the multiplicative rule for
// one-sided orthogonal NMF of Ding, Li, Peng and Park, "Orthogonal
// Nonnegative Matrix Tri-factorizations for Clustering" (KDD 2006), written
// for X ~ W H with orthogonal rows of H:
//
//   H_bj <- H_bj * sqrt( (W^T X)_bj / ((W^T X H^T H)_bj + eps) )
//
// The stationary points of this rule satisfy the KKT conditions of
// min ||X - W H||^2 subject to H H^T = I, H >= 0.
OnmfModel factorize_onmf(const DataMatrix& X, Index k, const FactorizeOptions& opts);

OnmfModel factorize_onmf(const DataMatrix& X, BasisMatrix W, DenseCoefficients H,
                         const FactorizeOptions& opts);

DenseCoefficients update_h_orthogonal(const DataMatrix& X, const BasisMatrix& W,
                                      const DenseCoefficients& H,
                                      double epsilon_guard = 1e-10);

double orthogonality_residual(const MatrixXd& H);

// Off-diagonal Frobenius mass ||H H^T - diag(H H^T)||_F.
double off_diagonal_mass(const MatrixXd& H);

// Encodes new samples against a fixed basis with the Lee-Seung H rule,
// starting from the all-ones vector. W^T W is computed once.
class SampleEncoder {
 public:
  SampleEncoder(const BasisMatrix& W, int inner_iterations = 50,
                double epsilon_guard = 1e-10);

  VectorXd encode(const Eigen::Ref<const VectorXd>& x) const;

  Index rank() const { return gram_.rows(); }

 private:
  MatrixXd basis_;
  MatrixXd gram_;
  int inner_iterations_;
  double epsilon_guard_;
};

VectorXd encode_sample(const Eigen::Ref<const VectorXd>& x, const BasisMatrix& W,
                       int inner_iterations = 50);

}  // namespace bonmf

#endif  // BONMF_ONMF_HPP_
