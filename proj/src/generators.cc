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

#include "sbomatch/generators.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "sbomatch/errors.h"

namespace sbomatch {

long long InstanceRng::Uniform(long long lo, long long hi) {
  if (lo > hi) throw InputError("empty random range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<long long>(engine_());
  }
  const std::uint64_t buckets = span + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % buckets;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long long>(x % buckets);
}

bool InstanceRng::Chance(long long num, long long den) {
  return Uniform(0, den - 1) < num;
}

std::string ToString(MatroidFamily family) {
  switch (family) {
    case MatroidFamily::kPartition:
      return "partition";
    case MatroidFamily::kTransversal:
      return "transversal";
    case MatroidFamily::kUniform:
      return "uniform";
  }
  return "unknown";
}

std::optional<MatroidFamily> ParseFamily(std::string_view name) {
  for (auto f : {MatroidFamily::kPartition, MatroidFamily::kTransversal,
                 MatroidFamily::kUniform}) {
    if (ToString(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

MatroidPtr RandomPartition(int m, InstanceRng& rng) {
  const int num_blocks = static_cast<int>(rng.Uniform(1, std::max(1, m)));
  std::vector<ElementSet> blocks(num_blocks);
  for (int e = 0; e < m; ++e) {
    if (rng.Chance(1, 8)) continue;  // free element
    blocks[rng.Uniform(0, num_blocks - 1)].push_back(e);
  }
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const ElementSet& b) { return b.empty(); }),
               blocks.end());
  std::vector<int> caps;
  for (const ElementSet& b : blocks) {
    const long long size = static_cast<long long>(b.size());
    caps.push_back(static_cast<int>(rng.Uniform(1, std::max(1LL, size / 2))));
  }
  return MakePartition(m, std::move(blocks), std::move(caps));
}

MatroidPtr RandomTransversal(int m, InstanceRng& rng) {
  const int num_agents =
      static_cast<int>(rng.Uniform(std::max(1, m / 4), std::max(1, m)));
  const long long density = rng.Uniform(2, 4);  // 1/density per element
  std::vector<ElementSet> agents(num_agents);
  for (auto& agent : agents) {
    for (int e = 0; e < m; ++e) {
      if (rng.Chance(1, density)) agent.push_back(e);
    }
  }
  return MakeTransversal(m, std::move(agents));
}

std::vector<Weight> RandomWeights(int count, const WeightRange& range,
                                  InstanceRng& rng) {
  if (range.min < 0 || range.min > range.max) {
    throw InputError("weight range must satisfy 0 <= min <= max");
  }
  std::vector<Weight> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.emplace_back(rng.Uniform(range.min, range.max));
  }
  return out;
}

}  // namespace

MatroidPtr GenerateMatroid(MatroidFamily family, int ground_size,
                           InstanceRng& rng) {
  switch (family) {
    case MatroidFamily::kPartition:
      return RandomPartition(ground_size, rng);
    case MatroidFamily::kTransversal:
      return RandomTransversal(ground_size, rng);
    case MatroidFamily::kUniform:
      return MakeUniform(ground_size,
                         static_cast<int>(rng.Uniform(0, ground_size)));
  }
  throw InputError("unknown matroid family");
}

ParityInstance GenerateParity(MatroidFamily family, int num_pairs,
                              std::uint64_t seed, WeightRange weights) {
  if (num_pairs < 0) throw InputError("pair count must be nonnegative");
  InstanceRng rng(seed);
  ParityInstance out;
  out.matroid = GenerateMatroid(family, 2 * num_pairs, rng);
  for (int i = 0; i < num_pairs; ++i) out.pairs.push_back({2 * i, 2 * i + 1});
  out.weights = RandomWeights(num_pairs, weights, rng);
  return out;
}

MatchingInstance GenerateMatching(MatroidFamily family, int num_vertices,
                                  int num_edges, std::uint64_t seed,
                                  WeightRange weights) {
  if (num_edges < 0) throw InputError("edge count must be nonnegative");
  if (num_edges > 0 && num_vertices < 2) {
    throw InputError("edges need at least two vertices");
  }
  InstanceRng rng(seed);
  MatchingInstance out;
  out.matroid = GenerateMatroid(family, num_vertices, rng);
  for (int i = 0; i < num_edges; ++i) {
    const int u = static_cast<int>(rng.Uniform(0, num_vertices - 1));
    int v = static_cast<int>(rng.Uniform(0, num_vertices - 2));
    if (v >= u) ++v;
    out.edges.push_back({std::min(u, v), std::max(u, v)});
  }
  out.weights = RandomWeights(num_edges, weights, rng);
  return out;
}

}  // namespace sbomatch
