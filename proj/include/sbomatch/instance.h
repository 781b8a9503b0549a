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

#ifndef SBOMATCH_INSTANCE_H_
#define SBOMATCH_INSTANCE_H_

#include <compare>
#include <span>
#include <vector>

#include "sbomatch/matroid.h"
#include "sbomatch/rational.h"

namespace sbomatch {

// Two distinct element ids. Stored with first < second once normalized.
struct Pair {
  int first = 0;
  int second = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

// Matroid parity: the pairs partition the ground set, each pair has a
// nonnegative weight. A set of pair indices is feasible when the union of
// its pairs is independent.
struct ParityInstance {
  MatroidPtr matroid;
  std::vector<Pair> pairs;
  std::vector<Weight> weights;

  int num_pairs() const { return static_cast<int>(pairs.size()); }
};

// Matroid matching: an arbitrary multigraph on the ground set. A set of edge
// indices is feasible when it is a matching whose covered vertices are
// independent.
struct MatchingInstance {
  MatroidPtr matroid;
  std::vector<Pair> edges;
  std::vector<Weight> weights;

  int num_edges() const { return static_cast<int>(edges.size()); }
};

// Throw InputError naming the first violated invariant.
void Validate(const ParityInstance& instance);
void Validate(const MatchingInstance& instance);

// Union of the chosen pairs, sorted.
ElementSet PairUnion(const ParityInstance& instance,
                     std::span<const int> pair_indices);
bool IsFeasible(const ParityInstance& instance,
                std::span<const int> pair_indices);
Weight TotalWeight(const ParityInstance& instance,
                   std::span<const int> pair_indices);

// Edges must form a matching and cover an independent vertex set.
bool IsFeasibleMatching(const MatchingInstance& instance,
                        std::span<const int> edge_indices);
Weight TotalWeight(const MatchingInstance& instance,
                   std::span<const int> edge_indices);

bool HasUnitWeights(const ParityInstance& instance);

// Parallel extension of `inner`: each copy element stands for an original
// element. A set of copies is independent when no original is used twice and
// the originals used are independent in `inner`.
class RestrictedCopiesMatroid : public Matroid {
 public:
  RestrictedCopiesMatroid(MatroidPtr inner, std::vector<int> original_of);

  const MatroidPtr& inner() const { return inner_; }
  const std::vector<int>& original_of() const { return original_of_; }

 protected:
  bool IsIndependentSorted(std::span<const int> elements) const override;

 private:
  MatroidPtr inner_;
  std::vector<int> original_of_;
};

struct ReductionMap {
  // Reduced pair i corresponds to original edge edge_of_pair[i].
  std::vector<int> edge_of_pair;
  // Copy element c stands for original vertex vertex_of_copy[c].
  std::vector<int> vertex_of_copy;
};

struct ParityReduction {
  ParityInstance instance;
  ReductionMap map;
};

// One copy of each vertex per incident edge, grouped by vertex and ordered by
// edge index within a vertex. Isolated vertices get no copies.
ParityReduction MatchingToParity(const MatchingInstance& instance);

// Maps reduced pair indices back to sorted original edge indices.
std::vector<int> PullBack(const ReductionMap& map,
                          std::span<const int> pair_indices);

}  // namespace sbomatch

#endif  // SBOMATCH_INSTANCE_H_
