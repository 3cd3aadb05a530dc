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

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace bonmf;

TEST_CASE("matrices reject negative and empty input") {
  CHECK_THROWS_AS(DataMatrix(MatrixXd::Constant(2, 2, -1.0)), NonNegativityError);
  CHECK_THROWS_AS(DataMatrix(MatrixXd(0, 3)), DimensionError);
  MatrixXd with_nan = MatrixXd::Ones(2, 2);
  with_nan(1, 1) = std::nan("");
  CHECK_THROWS_AS(BasisMatrix{with_nan}, NonNegativityError);
}

TEST_CASE("binary assignment checks its range and expands to one-hot") {
  CHECK_THROWS_AS(BinaryAssignment({0, 3}, 3), DimensionError);
  CHECK_THROWS_AS(BinaryAssignment({0}, 0), DimensionError);
  const BinaryAssignment h({2, 0, 2, 1}, 3);
  MatrixXd expected(3, 4);
  expected << 0, 1, 0, 0,
              0, 0, 0, 1,
              1, 0, 1, 0;
  CHECK(h.to_dense() == expected);
  CHECK(h.cluster_sizes() == std::vector<Index>{1, 1, 2});
}

TEST_CASE("frobenius objective") {
  SUBCASE("exact factorization is zero") {
    MatrixXd W(3, 2), H(2, 4);
    W << 1, 2, 0, 1, 3, 0;
    H << 1, 0, 2, 1, 0, 1, 1, 3;
    CHECK(frobenius_objective(DataMatrix(W * H), BasisMatrix(W), DenseCoefficients(H)) == 0.0);
  }
  SUBCASE("scalar case") {
    const DataMatrix X(MatrixXd::Constant(1, 1, 2.0));
    const BasisMatrix W(MatrixXd::Ones(1, 1));
    CHECK(frobenius_objective(X, W, DenseCoefficients(MatrixXd::Ones(1, 1))) == doctest::Approx(0.5));
  }
  SUBCASE("identity against a single all-ones cluster") {
    const DataMatrix X(MatrixXd::Identity(2, 2));
    const BasisMatrix W(MatrixXd::Ones(2, 1));
    CHECK(frobenius_objective(X, W, BinaryAssignment({0, 0}, 1)) == doctest::Approx(1.0));
  }
  SUBCASE("shape mismatch") {
    const DataMatrix X(MatrixXd::Ones(2, 3));
    const BasisMatrix W(MatrixXd::Ones(2, 2));
    CHECK_THROWS_AS(frobenius_objective(X, W, DenseCoefficients(MatrixXd::Ones(3, 3))),
                    DimensionError);
    CHECK_THROWS_AS(frobenius_objective(X, W, BinaryAssignment({0, 1}, 2)), DimensionError);
  }
}

TEST_CASE("binary objective equals the objective of the expanded one-hot H") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const DataMatrix X(testing::random_matrix(rng, 6, 8));
    const BasisMatrix W(testing::random_matrix(rng, 6, 3));
    std::vector<BinaryAssignment::Cluster> clusters(8);
    for (auto& c : clusters) c = testing::random_int(rng, 0, 2);
    const BinaryAssignment H(clusters, 3);
    const double binary = frobenius_objective(X, W, H);
    const double dense = frobenius_objective(X, W, DenseCoefficients(H.to_dense()));
    CHECK(binary >= 0.0);
    CHECK(binary == doctest::Approx(dense).epsilon(1e-12));
  }
}

TEST_CASE("cosine similarity") {
  using V = Eigen::Vector2d;
  CHECK(*cosine_similarity(V(1, 0), V(1, 0)) == doctest::Approx(1.0));
  CHECK(*cosine_similarity(V(1, 0), V(0, 1)) == doctest::Approx(0.0));
  CHECK(*cosine_similarity(V(2, 0), V(1, 1)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK_FALSE(cosine_similarity(V(0, 0), V(1, 1)).has_value());
  CHECK_FALSE(cosine_similarity(V(1, 1), V(0, 0)).has_value());
  CHECK_THROWS_AS(cosine_similarity(VectorXd::Ones(3), VectorXd::Ones(2)), DimensionError);
}

TEST_CASE("cosine similarity is invariant to positive scaling") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 200; ++trial) {
    const VectorXd x = testing::random_matrix(rng, 7, 1);
    const VectorXd w = testing::random_matrix(rng, 7, 1);
    const double lambda = scale(rng);
    const double base = *cosine_similarity(x, w);
    const double scaled = *cosine_similarity(VectorXd(lambda * x), w);
    CHECK(std::abs(scaled - base) <= 1e-12 * std::abs(base));
    CHECK(base >= 0.0);
    CHECK(base <= 1.0 + 1e-15);
  }
}
