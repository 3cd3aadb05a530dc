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

#ifndef BONMF_MODEL_IO_HPP_
#define BONMF_MODEL_IO_HPP_

#include <string>

#include "bonmf/binary_orthogonal.hpp"

namespace bonmf {

// JSON form of a trained model:
//   {"m": .., "k": .., "W": [row-major m*k doubles], "assignments": [...],
//    "cluster_labels": [...], "iterations_run": .., "objective": [...]}
// Doubles are written in shortest round-trip form, so W reads back bit-exact.
std::string serialize_model(const BonmfModel& model);
BonmfModel deserialize_model(const std::string& text);

void save_model(const std::string& path, const BonmfModel& model);
BonmfModel load_model(const std::string& path);

}  // namespace bonmf

#endif  // BONMF_MODEL_IO_HPP_
