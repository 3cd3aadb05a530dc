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

#include "bonmf/data_io.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "test_util.hpp"

using namespace bonmf;

TEST_CASE("csv with header") {
  std::istringstream in("a,b,class\n1,2,cat\n3,4,dog\n0.5,0,cat\n");
  DatasetSpec spec;
  spec.has_header = true;
  const auto ds = read_csv(in, spec);
  MatrixXd expected(2, 3);
  expected << 1, 3, 0.5, 2, 4, 0;
  CHECK(ds.data.values() == expected);
  CHECK(ds.labels == std::vector<int>{0, 1, 0});
  CHECK(ds.class_count == 2);
}

TEST_CASE("csv label column, delimiter and numeric label order") {
  std::istringstream in("10;1.5;2\n2;0;1\n10;3;3\n");
  DatasetSpec spec;
  spec.delimiter = ';';
  spec.label_column = 0;
  const auto ds = read_csv(in, spec);
  CHECK(ds.features() == 2);
  CHECK(ds.labels == std::vector<int>{1, 0, 1});
  CHECK(ds.data(1, 2) == 3.0);
}

TEST_CASE("csv errors carry the line number") {
  std::istringstream in("1,2,0\n1,x,1\n");
  try {
    read_csv(in, DatasetSpec{});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream ragged("1,2,0\n1,1\n");
  CHECK_THROWS_AS(read_csv(ragged, DatasetSpec{}), ParseError);
}

TEST_CASE("libsvm sparse lines fill a dense column") {
  std::istringstream in("1 1:0.5 3:2\n-1 2:1\n");
  const auto ds = read_libsvm(in, DatasetSpec{});
  CHECK(ds.features() == 3);
  CHECK(ds.data.col(0) == Eigen::Vector3d(0.5, 0, 2));
  CHECK(ds.data.col(1) == Eigen::Vector3d(0, 1, 0));
  CHECK(ds.labels == std::vector<int>{1, 0});

  std::istringstream bad("1 1:0.5 three:2\n");
  CHECK_THROWS_AS(read_libsvm(bad, DatasetSpec{}), ParseError);
  std::istringstream zero_index("1 0:1\n");
  CHECK_THROWS_AS(read_libsvm(zero_index, DatasetSpec{}), ParseError);
}

TEST_CASE("negative features") {
  SUBCASE("rejected by default") {
    std::istringstream in("-1,2,0\n3,4,1\n");
    CHECK_THROWS_AS(read_csv(in, DatasetSpec{}), NonNegativityError);
  }
  SUBCASE("shifted to zero on request") {
    std::istringstream in("-1,2,0\n3,4,1\n");
    DatasetSpec spec;
    spec.shift_nonneg = true;
    const auto ds = read_csv(in, spec);
    CHECK(ds.data.values().row(0).minCoeff() == 0.0);
    CHECK(ds.data(0, 1) == 4.0);
    CHECK(ds.data.values().row(1) == Eigen::RowVector2d(2, 4));
  }
  SUBCASE("max scaling") {
    std::istringstream in("2,0,0\n4,0,1\n");
    DatasetSpec spec;
    spec.scale_max = true;
    const auto ds = read_csv(in, spec);
    CHECK(ds.data.values().row(0) == Eigen::RowVector2d(0.5, 1.0));
    CHECK(ds.data.values().row(1).isZero(0.0));
  }
}

TEST_CASE("load, save and load again is bit-exact") {
  std::mt19937_64 rng(1);
  MatrixXd X = testing::random_matrix(rng, 7, 25);
  X(3, 4) = 1e-300;
  X(0, 0) = 123456789.123456789;
  std::vector<int> labels(25);
  for (auto& l : labels) l = testing::random_int(rng, 0, 3);
  labels[0] = 0;
  labels[1] = 1;
  labels[2] = 2;
  labels[3] = 3;
  const LabeledDataset original{DataMatrix(X), labels, 4};

  const auto path = std::filesystem::temp_directory_path() / "bonmf_roundtrip.csv";
  save_csv(path.string(), original);
  DatasetSpec spec;
  spec.path = path.string();
  const auto first = load_dataset(spec);
  save_csv(path.string(), first);
  const auto second = load_dataset(spec);
  std::filesystem::remove(path);

  CHECK(first.data.values() == X);
  CHECK(first.labels == labels);
  CHECK(second.data.values() == first.data.values());
  CHECK(second.labels == first.labels);
}

TEST_CASE("train_test_split") {
  std::mt19937_64 rng(2);
  auto make = [&](Index n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j) labels[static_cast<std::size_t>(j)] = static_cast<int>(j % 3);
    return LabeledDataset{DataMatrix(testing::random_matrix(rng, 3, n)), labels, 3};
  };
  SUBCASE("eighty percent of ten") {
    const auto [train, test] = train_test_split(make(10), 0.8, 0);
    CHECK(train.samples() == 8);
    CHECK(test.samples() == 2);
    CHECK(train.class_count == 3);
    CHECK(test.class_count == 3);
  }
  SUBCASE("ceiling for five") {
    const auto [train, test] = train_test_split(make(5), 0.8, 0);
    CHECK(train.samples() == 4);
    CHECK(test.samples() == 1);
  }
  SUBCASE("deterministic and a partition") {
    const auto ds = make(37);
    const auto a = split_indices(ds, 0.8, 42);
    CHECK(a == split_indices(ds, 0.8, 42));
    CHECK(a != split_indices(ds, 0.8, 43));
    std::vector<Index> all = a.first;
    all.insert(all.end(), a.second.begin(), a.second.end());
    std::sort(all.begin(), all.end());
    std::vector<Index> expected(37);
    std::iota(expected.begin(), expected.end(), Index{0});
    CHECK(all == expected);
  }
  SUBCASE("stratified split keeps every class in training") {
    const auto ds = make(30);
    const auto [train, test] = train_test_split(ds, 0.8, 1, true);
    CHECK(std::set<int>(train.labels.begin(), train.labels.end()).size() == 3);
    CHECK(train.samples() + test.samples() == 30);
  }
  SUBCASE("errors") {
    CHECK_THROWS(train_test_split(make(5), 1.0, 0));
    CHECK_THROWS(train_test_split(make(5), 0.0, 0));
    CHECK_THROWS(train_test_split(make(1), 0.5, 0));
  }
}
