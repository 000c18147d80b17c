// Copyright 2026 The pap Authors
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


#ifndef PAP_GENERATOR_HPP_
#define PAP_GENERATOR_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "pap/graph.hpp"

namespace pap {

struct GeneratorOptions {
  std::uint64_t seed = 1;
  int num_paths = 4;
  int min_path_length = 1;  // vertices per path
  int max_path_length = 4;
  double link_density = 0.2;  // chance of each admissible vertex pair
  bool structured_bias = false;
};

// Deterministic per options. Links are added until G is 2-edge-connected.
// Throws std::invalid_argument for parameters admitting no feasible instance.
PapInstance GenerateInstance(const GeneratorOptions& options);

// PAP_SEED when set and numeric, otherwise `fallback`.
std::uint64_t DefaultSeed(std::uint64_t fallback = 1);

}  // namespace pap

#endif  // PAP_GENERATOR_HPP_
