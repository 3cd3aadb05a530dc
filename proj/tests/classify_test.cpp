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

#include "bonmf/classify.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace bonmf;

namespace {

BonmfModel identity_model(std::vector<int> labels) {
  const Index k = static_cast<Index>(labels.size());
  return BonmfModel{BasisMatrix(MatrixXd::Identity(k, k)),
                    BinaryAssignment(std::vector<BinaryAssignment::Cluster>(1, 0), k),
                    {},
                    std::move(labels)};
}

}  // namespace

TEST_CASE("build_label_map") {
  CHECK(build_label_map(BinaryAssignment({0, 0, 0}, 1), {1, 1, 2}) == ClusterLabelMap{1});
  CHECK(build_label_map(BinaryAssignment({0, 1, 2}, 3), {4, 0, 2}) == ClusterLabelMap{4, 0, 2});
  CHECK(build_label_map(BinaryAssignment({0, 0, 0, 2}, 3), {3, 3, 1, 0}) ==
        ClusterLabelMap{3, 3, 0});
  CHECK_THROWS_AS(build_label_map(BinaryAssignment({0}, 1), {1, 2}), DimensionError);
}

TEST_CASE("classify_bonmf") {
  SUBCASE("a basis column gets its cluster's label") {
    MatrixXd w(3, 3);
    w << 1, 0, 1, 0, 1, 1, 0, 0, 1;
    BonmfModel model{BasisMatrix(w), BinaryAssignment({0, 1, 2}, 3), {}, {5, 6, 7}};
    CHECK(classify_bonmf(w.col(2), model) == 7);
  }
  SUBCASE("closest axis") {
    const auto model = identity_model({10, 20});
    CHECK(classify_bonmf(Eigen::Vector2d(0.9, 0.1), model) == 10);
    CHECK(classify_bonmf(Eigen::Vector2d(1.8, 0.2), model) == 10);
    CHECK(classify_bonmf(Eigen::Vector2d(0.1, 0.9), model) == 20);
  }
  SUBCASE("exactly k similarity evaluations per call") {
    std::mt19937_64 rng(1);
    for (int k = 1; k <= 6; ++k) {
      BonmfModel model{BasisMatrix(testing::random_matrix(rng, 5, k)),
                       BinaryAssignment({0}, k), {}, std::vector<int>(static_cast<std::size_t>(k), 0)};
      const BonmfClassifier classifier(model);
      ClassifyStats stats;
      for (int s = 0; s < 10; ++s) classifier.classify(testing::random_matrix(rng, 5, 1), &stats);
      CHECK(stats.similarity_evaluations == 10 * k);
    }
  }
  SUBCASE("zero input maps through cluster 0 and is flagged") {
    const auto model = identity_model({3, 4});
    ClassifyStats stats;
    CHECK(BonmfClassifier(model).classify(Eigen::Vector2d::Zero(), &stats) == 3);
    CHECK(stats.zero_norm_inputs == 1);
  }
  SUBCASE("scaling never changes the label") {
    std::mt19937_64 rng(2);
    BonmfModel model{BasisMatrix(testing::random_matrix(rng, 6, 4)), BinaryAssignment({0}, 4), {},
                     {0, 1, 2, 3}};
    const BonmfClassifier classifier(model);
    for (int trial = 0; trial < 100; ++trial) {
      const VectorXd x = testing::random_matrix(rng, 6, 1);
      CHECK(classifier.classify(x) == classifier.classify(VectorXd(0.01 * x)));
      CHECK(classifier.classify(x) == classifier.classify(VectorXd(250.0 * x)));
    }
  }
  SUBCASE("a model without labels is rejected") {
    BonmfModel model{BasisMatrix(MatrixXd::Identity(2, 2)), BinaryAssignment({0}, 2), {}, {}};
    CHECK_THROWS_AS(BonmfClassifier{model}, std::logic_error);
  }
}

TEST_CASE("perfect clustering gives perfect training accuracy") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> value(0.2, 1.0);
  MatrixXd X = MatrixXd::Zero(10, 40);
  std::vector<int> labels(40);
  for (Index j = 0; j < 40; ++j) {
    const int block = j < 20 ? 0 : 1;
    labels[static_cast<std::size_t>(j)] = 1 - block;
    for (Index f = 0; f < 5; ++f) X(5 * block + f, j) = value(rng);
  }
  BonmfModel model = factorize_bonmf(DataMatrix(X), 2, {});
  model.cluster_labels = build_label_map(model.assignments, labels);
  const BonmfClassifier classifier(model);
  std::vector<int> predicted;
  for (Index j = 0; j < 40; ++j) predicted.push_back(classifier.classify(X.col(j)));
  CHECK(accuracy(predicted, labels) == 1.0);
}

TEST_CASE("coefficient classifiers") {
  // Four samples on an identity basis; the coefficients equal the samples.
  MatrixXd x(2, 4);
  x << 1.0, 0.8, 0.1, 0.3,
       0.0, 0.1, 1.0, 0.9;
  const LabeledDataset train{DataMatrix(x), {0, 1, 2, 3}, 4};
  const BasisMatrix W(MatrixXd::Identity(2, 2));
  const CoefficientClassifier model(W, DenseCoefficients(x), train, 200);

  SUBCASE("cluster membership comes from the coefficient argmax") {
    CHECK(model.members()[0] == std::vector<Index>{0, 1});
    CHECK(model.members()[1] == std::vector<Index>{2, 3});
  }
  SUBCASE("training samples classify to themselves") {
    for (Index j = 0; j < 4; ++j) {
      CHECK(classify_coefficient_argmax(x.col(j), model) == j);
      CHECK(classify_angle_nearest(x.col(j), model, AngleScheme::kOnmfCosine) == j);
      CHECK(classify_angle_nearest(x.col(j), model, AngleScheme::kNmfCoefficients) == j);
      CHECK(classify_angle_nearest(VectorXd(2.0 * x.col(j)), model, AngleScheme::kOnmfCosine) == j);
    }
  }
  SUBCASE("nearest member inside the matched cluster") {
    // (0.98, 0): squared distance 0.0004 to s0, 0.0424 to s1.
    CHECK(classify_coefficient_argmax(Eigen::Vector2d(0.98, 0.0), model) == 0);
    // (0.75, 0.15): 0.085 to s0, 0.005 to s1.
    CHECK(classify_coefficient_argmax(Eigen::Vector2d(0.75, 0.15), model) == 1);
    // (0.45, 0.44) encodes to cluster 0. s3 is nearer overall (0.2341 against
    // 0.2381 for s1) but sits in the other cluster.
    CHECK(classify_coefficient_argmax(Eigen::Vector2d(0.45, 0.44), model) == 1);
  }
  SUBCASE("hand-computed cosine table") {
    // x = (0.6, 0.5): cluster 0 by cosine to e0. cos to s0 = 0.768, to s1 =
    // 0.842, so s1 wins.
    CHECK(classify_angle_nearest(Eigen::Vector2d(0.6, 0.5), model, AngleScheme::kOnmfCosine) == 1);
    // NMF scheme compares against all four coefficient columns: cos to s2 =
    // 0.963, to s3 = 0.999.
    CHECK(classify_angle_nearest(Eigen::Vector2d(0.35, 0.9), model,
                                 AngleScheme::kNmfCoefficients) == 3);
  }
}

TEST_CASE("empty matched cluster falls back to the global nearest sample") {
  MatrixXd x(2, 2);
  x << 1.0, 0.9,
       0.0, 0.2;
  const LabeledDataset train{DataMatrix(x), {0, 1}, 2};
  // Both training samples land in cluster 0; cluster 1 is empty.
  const CoefficientClassifier model(BasisMatrix(MatrixXd::Identity(2, 2)), DenseCoefficients(x),
                                    train, 200);
  REQUIRE(model.members()[1].empty());
  CHECK(classify_coefficient_argmax(Eigen::Vector2d(0.5, 1.0), model) == 1);
}

TEST_CASE("accuracy") {
  CHECK(accuracy({1, 2, 3}, {1, 2, 3}) == 1.0);
  CHECK(accuracy({0, 0}, {1, 1}) == 0.0);
  CHECK(accuracy({1, 2, 3, 4}, {1, 2, 3, 0}) == 0.75);
  CHECK_THROWS_AS(accuracy({1}, {1, 2}), DimensionError);
}
