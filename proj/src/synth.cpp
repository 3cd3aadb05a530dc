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

#include "bonmf/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace bonmf {

SynthKind parse_synth_kind(const std::string& name) {
  if (name == "blocks") return SynthKind::kBlocks;
  if (name == "noisy-blocks") return SynthKind::kNoisyBlocks;
  throw std::invalid_argument("unknown synthetic kind '" + name + "'");
}

std::string synth_kind_name(SynthKind kind) {
  return kind == SynthKind::kBlocks ? "blocks" : "noisy-blocks";
}

LabeledDataset synth_dataset(SynthKind kind, Index m, Index n, Index k, double noise,
                             std::uint64_t seed) {
  if (k < 1 || n < 1 || m < 1) throw std::invalid_argument("synth_dataset: sizes must be >= 1");
  if (k > m) throw std::invalid_argument("synth_dataset: k must not exceed m");
  if (!(noise >= 0.0)) throw std::invalid_argument("synth_dataset: noise must be >= 0");

  std::vector<Index> block_start(static_cast<std::size_t>(k) + 1, 0);
  for (Index c = 0; c < k; ++c) {
    const Index width = m / k + (c < m % k ? 1 : 0);
    block_start[static_cast<std::size_t>(c) + 1] = block_start[static_cast<std::size_t>(c)] + width;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> signal(0.1, 1.0);
  std::uniform_real_distribution<double> uniform_noise(0.0, 1.0);
  std::normal_distribution<double> normal_noise(0.0, 1.0);

  MatrixXd X = MatrixXd::Zero(m, n);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) {
    const Index c = j % k;
    labels[static_cast<std::size_t>(j)] = static_cast<int>(c);
    for (Index f = block_start[static_cast<std::size_t>(c)];
         f < block_start[static_cast<std::size_t>(c) + 1]; ++f)
      X(f, j) = signal(rng);
    if (noise > 0.0) {
      for (Index f = 0; f < m; ++f) {
        X(f, j) += kind == SynthKind::kBlocks ? noise * uniform_noise(rng)
                                              : noise * std::abs(normal_noise(rng));
      }
    }
  }
  return LabeledDataset{DataMatrix(std::move(X)), std::move(labels), static_cast<int>(k)};
}

}  // namespace bonmf
