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

#include "sbomatch/instance.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sbomatch/errors.h"

namespace sbomatch {

namespace {

void CheckWeights(const std::vector<Weight>& weights, std::size_t expected,
                  const char* what) {
  if (weights.size() != expected) {
    throw InputError(std::string("expected one weight per ") + what + ", got " +
                     std::to_string(weights.size()) + " weights for " +
                     std::to_string(expected) + " " + what + "s");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      throw InputError(std::string(what) + " " + std::to_string(i) +
                       " has negative weight " + ToString(weights[i]));
    }
  }
}

void CheckEndpoints(const Pair& p, int ground, const char* what,
                    std::size_t index) {
  if (p.first < 0 || p.first >= ground || p.second < 0 || p.second >= ground) {
    throw InputError(std::string(what) + " " + std::to_string(index) +
                     " has an endpoint outside the ground set");
  }
  if (p.first == p.second) {
    throw InputError(std::string(what) + " " + std::to_string(index) +
                     " is a self-loop");
  }
}

}  // namespace

void Validate(const ParityInstance& instance) {
  if (!instance.matroid) throw InputError("instance has no matroid");
  const int ground = instance.matroid->ground_size();
  if (ground != 2 * instance.num_pairs()) {
    throw InputError("pairs must partition the ground set: ground size " +
                     std::to_string(ground) + " but " +
                     std::to_string(instance.num_pairs()) + " pairs");
  }
  std::vector<int> owner(ground, -1);
  for (std::size_t i = 0; i < instance.pairs.size(); ++i) {
    const Pair& p = instance.pairs[i];
    CheckEndpoints(p, ground, "pair", i);
    for (int e : {p.first, p.second}) {
      if (owner[e] != -1) {
        throw InputError("pairs " + std::to_string(owner[e]) + " and " +
                         std::to_string(i) + " overlap at element " +
                         std::to_string(e));
      }
      owner[e] = static_cast<int>(i);
    }
  }
  CheckWeights(instance.weights, instance.pairs.size(), "pair");
}

void Validate(const MatchingInstance& instance) {
  if (!instance.matroid) throw InputError("instance has no matroid");
  const int ground = instance.matroid->ground_size();
  for (std::size_t i = 0; i < instance.edges.size(); ++i) {
    CheckEndpoints(instance.edges[i], ground, "edge", i);
  }
  CheckWeights(instance.weights, instance.edges.size(), "edge");
}

ElementSet PairUnion(const ParityInstance& instance,
                     std::span<const int> pair_indices) {
  ElementSet out;
  out.reserve(2 * pair_indices.size());
  for (int i : pair_indices) {
    out.push_back(instance.pairs.at(i).first);
    out.push_back(instance.pairs.at(i).second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IsFeasible(const ParityInstance& instance,
                std::span<const int> pair_indices) {
  return instance.matroid->IsIndependent(PairUnion(instance, pair_indices));
}

Weight TotalWeight(const ParityInstance& instance,
                   std::span<const int> pair_indices) {
  Weight total = 0;
  for (int i : pair_indices) total += instance.weights.at(i);
  return total;
}

bool IsFeasibleMatching(const MatchingInstance& instance,
                        std::span<const int> edge_indices) {
  ElementSet covered;
  for (int i : edge_indices) {
    covered.push_back(instance.edges.at(i).first);
    covered.push_back(instance.edges.at(i).second);
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
    return false;
  }
  return instance.matroid->IsIndependent(covered);
}

Weight TotalWeight(const MatchingInstance& instance,
                   std::span<const int> edge_indices) {
  Weight total = 0;
  for (int i : edge_indices) total += instance.weights.at(i);
  return total;
}

bool HasUnitWeights(const ParityInstance& instance) {
  return std::all_of(instance.weights.begin(), instance.weights.end(),
                     [](const Weight& w) { return w == 1; });
}

RestrictedCopiesMatroid::RestrictedCopiesMatroid(MatroidPtr inner,
                                                 std::vector<int> original_of)
    : Matroid(static_cast<int>(original_of.size())),
      inner_(std::move(inner)),
      original_of_(std::move(original_of)) {
  for (int v : original_of_) {
    if (v < 0 || v >= inner_->ground_size()) {
      throw InputError("copy maps to element " + std::to_string(v) +
                       " outside the original ground set");
    }
  }
}

bool RestrictedCopiesMatroid::IsIndependentSorted(
    std::span<const int> elements) const {
  ElementSet originals;
  originals.reserve(elements.size());
  for (int c : elements) originals.push_back(original_of_[c]);
  std::sort(originals.begin(), originals.end());
  if (std::adjacent_find(originals.begin(), originals.end()) !=
      originals.end()) {
    return false;
  }
  return inner_->IsIndependent(originals);
}

ParityReduction MatchingToParity(const MatchingInstance& instance) {
  Validate(instance);
  const int vertices = instance.matroid->ground_size();
  std::vector<std::vector<int>> incident(vertices);
  for (std::size_t i = 0; i < instance.edges.size(); ++i) {
    incident[instance.edges[i].first].push_back(static_cast<int>(i));
    incident[instance.edges[i].second].push_back(static_cast<int>(i));
  }

  ParityReduction out;
  std::vector<Pair> pairs(instance.edges.size(), Pair{-1, -1});
  for (int v = 0; v < vertices; ++v) {
    for (int edge : incident[v]) {
      const int copy = static_cast<int>(out.map.vertex_of_copy.size());
      out.map.vertex_of_copy.push_back(v);
      // Copies are created in ascending vertex order, so the copy of the
      // smaller endpoint is always assigned first.
      if (pairs[edge].first == -1) {
        pairs[edge].first = copy;
      } else {
        pairs[edge].second = copy;
      }
    }
  }
  out.map.edge_of_pair.resize(instance.edges.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.map.edge_of_pair[i] = static_cast<int>(i);
  }
  out.instance.matroid = std::make_shared<RestrictedCopiesMatroid>(
      instance.matroid, out.map.vertex_of_copy);
  out.instance.pairs = std::move(pairs);
  out.instance.weights = instance.weights;
  return out;
}

std::vector<int> PullBack(const ReductionMap& map,
                          std::span<const int> pair_indices) {
  std::vector<int> edges;
  edges.reserve(pair_indices.size());
  for (int p : pair_indices) edges.push_back(map.edge_of_pair.at(p));
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace sbomatch
