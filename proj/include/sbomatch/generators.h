// Copyright 2026 The Authors.
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

#ifndef SBOMATCH_GENERATORS_H_
#define SBOMATCH_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "sbomatch/instance.h"

namespace sbomatch {

// Seeded source of integers with the same output on every platform: the
// engine sequence is fixed by the standard and range reduction is done here
// rather than by the library distributions.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi]; requires lo <= hi.
  long long Uniform(long long lo, long long hi);
  // True with probability num/den.
  bool Chance(long long num, long long den);

 private:
  std::mt19937_64 engine_;
};

enum class MatroidFamily { kPartition, kTransversal, kUniform };

std::string ToString(MatroidFamily family);
std::optional<MatroidFamily> ParseFamily(std::string_view name);

struct WeightRange {
  long long min = 1;
  long long max = 100;
};

// Matroid of the given family on `ground_size` elements.
MatroidPtr GenerateMatroid(MatroidFamily family, int ground_size,
                           InstanceRng& rng);

// Parity instance with pairs {2i, 2i+1} and integer weights in range.
ParityInstance GenerateParity(MatroidFamily family, int num_pairs,
                              std::uint64_t seed, WeightRange weights = {});

// Multigraph with `num_edges` random non-loop edges (parallel edges allowed).
MatchingInstance GenerateMatching(MatroidFamily family, int num_vertices,
                                  int num_edges, std::uint64_t seed,
                                  WeightRange weights = {});

}  // namespace sbomatch

#endif  // SBOMATCH_GENERATORS_H_
