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

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace bonmf;

TEST_CASE("orthogonality on the separable identity instance") {
  const DataMatrix X(MatrixXd::Identity(2, 2));
  FactorizeOptions opts;
  opts.max_iterations = 500;
  opts.tolerance = 0.0;

  SUBCASE("default initialization") {
    const auto model = factorize_onmf(X, 2, opts);
    const MatrixXd gram = model.coefficients.values() * model.coefficients.values().transpose();
    CHECK(off_diagonal_mass(model.coefficients.values()) < 1e-3 * gram.norm());
    CHECK(model.orthogonality_residual < 1e-3);
  }
  SUBCASE("explicit start") {
    MatrixXd w(2, 2), h(2, 2);
    w << 0.7, 0.3, 0.3, 0.7;
    h << 0.6, 0.4, 0.4, 0.6;
    const auto model = factorize_onmf(X, BasisMatrix(w), DenseCoefficients(h), opts);
    CHECK(model.orthogonality_residual < 1e-3);
  }
  SUBCASE("residual is non-increasing over the last ten iterations") {
    double previous = 0.0;
    for (int t = 490; t <= 500; ++t) {
      opts.max_iterations = t;
      const auto model = factorize_onmf(X, 2, opts);
      const double residual = off_diagonal_mass(model.coefficients.values());
      if (t > 490) CHECK(residual <= previous + 1e-6);
      previous = residual;
    }
  }
}

TEST_CASE("factorize_onmf bookkeeping") {
  std::mt19937_64 rng(1);
  const DataMatrix X(testing::random_matrix(rng, 8, 10));
  FactorizeOptions opts;
  opts.max_iterations = 1;
  CHECK(factorize_onmf(X, 3, opts).trace.objective_per_iteration.size() == 1);

  for (int t = 1; t <= 10; ++t) {
    opts.max_iterations = t;
    const auto model = factorize_onmf(X, 3, opts);
    CHECK(model.basis.values().minCoeff() >= 0.0);
    CHECK(model.coefficients.values().minCoeff() >= 0.0);
  }
}

TEST_CASE("update_h_orthogonal keeps zeros") {
  std::mt19937_64 rng(2);
  MatrixXd h = testing::random_matrix(rng, 3, 7);
  h(2, 4) = 0.0;
  const auto next = update_h_orthogonal(DataMatrix(testing::random_matrix(rng, 5, 7)),
                                        BasisMatrix(testing::random_matrix(rng, 5, 3)),
                                        DenseCoefficients(h));
  CHECK(next(2, 4) == 0.0);
}

TEST_CASE("encode_sample") {
  MatrixXd w = MatrixXd::Zero(4, 2);
  w(0, 0) = 0.6;
  w(1, 0) = 0.8;
  w(2, 1) = 1.0;
  const BasisMatrix W(w);

  SUBCASE("a basis column encodes to its own index") {
    const VectorXd h = encode_sample(w.col(0), W, 50);
    Index best;
    h.maxCoeff(&best);
    CHECK(best == 0);
    CHECK(h(0) == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("zero input encodes to zero") {
    CHECK(encode_sample(VectorXd::Zero(4), W, 1).isZero(0.0));
  }
  SUBCASE("no iterations returns the all-ones start") {
    CHECK(encode_sample(VectorXd::Ones(4), W, 0).isOnes(0.0));
  }
  SUBCASE("argmax is unchanged by positive scaling") {
    std::mt19937_64 rng(3);
    const BasisMatrix B(testing::random_matrix(rng, 6, 4));
    for (int trial = 0; trial < 50; ++trial) {
      const VectorXd x = testing::random_matrix(rng, 6, 1);
      Index a, b;
      encode_sample(x, B).maxCoeff(&a);
      encode_sample(VectorXd(3.7 * x), B).maxCoeff(&b);
      CHECK(a == b);
    }
  }
}
