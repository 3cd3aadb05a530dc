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

#ifndef BONMF_SYNTH_HPP_
#define BONMF_SYNTH_HPP_

#include <cstdint>
#include <string>

#include "bonmf/classify.hpp"

namespace bonmf {

enum class SynthKind {
  // Noise drawn uniformly from [0, noise].
  kBlocks,
  // Noise drawn as |N(0, noise)|.
  kNoisyBlocks,
};

SynthKind parse_synth_kind(const std::string& name);
std::string synth_kind_name(SynthKind kind);

// m features split into k contiguous blocks (the first m % k blocks get one
// extra feature). Sample j has class j % k; its block holds values drawn
// uniformly from [0.1, 1], every feature then gets non-negative noise.
LabeledDataset synth_dataset(SynthKind kind, Index m, Index n, Index k, double noise,
                             std::uint64_t seed);

}  // namespace bonmf

#endif  // BONMF_SYNTH_HPP_
