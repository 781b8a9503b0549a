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

#include "sbomatch/matroid.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sbomatch/errors.h"

namespace sbomatch {

namespace {

void CheckElements(const ElementSet& set, int ground_size,
                   const std::string& what) {
  for (int e : set) {
    if (e < 0 || e >= ground_size) {
      throw InputError(what + " contains element " + std::to_string(e) +
                       " outside ground set of size " +
                       std::to_string(ground_size));
    }
  }
}

}  // namespace

ElementSet Normalize(std::span<const int> elements) {
  ElementSet out(elements.begin(), elements.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Matroid::Matroid(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) {
    throw InputError("ground set size must be nonnegative");
  }
}

bool Matroid::IsIndependent(std::span<const int> elements) const {
  bool sorted = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const int e = elements[i];
    if (e < 0 || e >= ground_size_) {
      throw InputError("element " + std::to_string(e) +
                       " outside ground set of size " +
                       std::to_string(ground_size_));
    }
    if (i > 0 && elements[i - 1] >= e) sorted = false;
  }
  if (sorted) return IsIndependentSorted(elements);
  const ElementSet normalized = Normalize(elements);
  return IsIndependentSorted(normalized);
}

UniformMatroid::UniformMatroid(int ground_size, int rank)
    : Matroid(ground_size), rank_(rank) {
  if (rank < 0) throw InputError("uniform rank must be nonnegative");
}

bool UniformMatroid::IsIndependentSorted(std::span<const int> elements) const {
  return static_cast<int>(elements.size()) <= rank_;
}

PartitionMatroid::PartitionMatroid(int ground_size,
                                   std::vector<ElementSet> blocks,
                                   std::vector<int> capacities)
    : Matroid(ground_size),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)),
      block_of_(ground_size, -1) {
  if (blocks_.size() != capacities_.size()) {
    throw InputError("partition matroid needs one capacity per block");
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (capacities_[b] < 0) {
      throw InputError("partition capacities must be nonnegative");
    }
    blocks_[b] = Normalize(blocks_[b]);
    CheckElements(blocks_[b], ground_size, "partition block");
    for (int e : blocks_[b]) {
      if (block_of_[e] != -1) {
        throw InputError("partition blocks overlap at element " +
                         std::to_string(e));
      }
      block_of_[e] = static_cast<int>(b);
    }
  }
}

bool PartitionMatroid::IsIndependentSorted(
    std::span<const int> elements) const {
  std::vector<int> used(blocks_.size(), 0);
  for (int e : elements) {
    const int b = block_of_[e];
    if (b >= 0 && ++used[b] > capacities_[b]) return false;
  }
  return true;
}

TransversalMatroid::TransversalMatroid(int ground_size,
                                       std::vector<ElementSet> agents)
    : Matroid(ground_size), agents_(std::move(agents)), agents_of_(ground_size) {
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    agents_[a] = Normalize(agents_[a]);
    CheckElements(agents_[a], ground_size, "transversal agent");
    for (int e : agents_[a]) agents_of_[e].push_back(static_cast<int>(a));
  }
}

namespace {

// Kuhn's augmenting path step: tries to give `element` an agent, re-routing
// previously matched elements when needed.
bool Augment(int element, const std::vector<std::vector<int>>& agents_of,
             std::vector<int>& owner, std::vector<char>& visited) {
  for (int agent : agents_of[element]) {
    if (visited[agent]) continue;
    visited[agent] = 1;
    if (owner[agent] == -1 ||
        Augment(owner[agent], agents_of, owner, visited)) {
      owner[agent] = element;
      return true;
    }
  }
  return false;
}

}  // namespace

bool TransversalMatroid::IsIndependentSorted(
    std::span<const int> elements) const {
  if (elements.size() > agents_.size()) return false;
  std::vector<int> owner(agents_.size(), -1);
  std::vector<char> visited(agents_.size());
  for (int e : elements) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!Augment(e, agents_of_, owner, visited)) return false;
  }
  return true;
}

ExplicitMatroid::ExplicitMatroid(int ground_size, std::vector<ElementSet> sets,
                                 ExplicitMode mode)
    : Matroid(ground_size), mode_(mode) {
  for (auto& s : sets) {
    s = Normalize(s);
    CheckElements(s, ground_size, "explicit set");
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  sets_ = std::move(sets);
}

bool ExplicitMatroid::IsIndependentSorted(std::span<const int> elements) const {
  if (mode_ == ExplicitMode::kIndependentSets) {
    const ElementSet key(elements.begin(), elements.end());
    return std::binary_search(sets_.begin(), sets_.end(), key);
  }
  for (const ElementSet& base : sets_) {
    if (std::includes(base.begin(), base.end(), elements.begin(),
                      elements.end())) {
      return true;
    }
  }
  return false;
}

TruncatedMatroid::TruncatedMatroid(MatroidPtr inner, int max_size)
    : Matroid(inner->ground_size()), inner_(std::move(inner)),
      max_size_(max_size) {
  if (max_size < 0) throw InputError("truncation rank must be nonnegative");
}

bool TruncatedMatroid::IsIndependentSorted(
    std::span<const int> elements) const {
  return static_cast<int>(elements.size()) <= max_size_ &&
         inner_->IsIndependent(elements);
}

ColoopExtension::ColoopExtension(MatroidPtr inner, int extra)
    : Matroid(inner->ground_size() + extra), inner_(std::move(inner)),
      extra_(extra) {
  if (extra < 0) throw InputError("coloop count must be nonnegative");
}

bool ColoopExtension::IsIndependentSorted(std::span<const int> elements) const {
  const int original = inner_->ground_size();
  const auto end = std::lower_bound(elements.begin(), elements.end(), original);
  return inner_->IsIndependent(
      elements.first(static_cast<std::size_t>(end - elements.begin())));
}

CountingMatroid::CountingMatroid(MatroidPtr inner,
                                 std::shared_ptr<OracleStats> stats)
    : Matroid(inner->ground_size()), inner_(std::move(inner)),
      stats_(std::move(stats)) {}

bool CountingMatroid::IsIndependentSorted(std::span<const int> elements) const {
  stats_->Increment();
  return inner_->IsIndependent(elements);
}

MatroidPtr MakeUniform(int ground_size, int rank) {
  return std::make_shared<UniformMatroid>(ground_size, rank);
}

MatroidPtr MakePartition(int ground_size, std::vector<ElementSet> blocks,
                         std::vector<int> capacities) {
  return std::make_shared<PartitionMatroid>(ground_size, std::move(blocks),
                                            std::move(capacities));
}

MatroidPtr MakeTransversal(int ground_size, std::vector<ElementSet> agents) {
  return std::make_shared<TransversalMatroid>(ground_size, std::move(agents));
}

MatroidPtr MakeExplicit(int ground_size, std::vector<ElementSet> sets,
                        ExplicitMode mode) {
  return std::make_shared<ExplicitMatroid>(ground_size, std::move(sets), mode);
}

MatroidPtr Truncate(MatroidPtr matroid, int max_size) {
  return std::make_shared<TruncatedMatroid>(std::move(matroid), max_size);
}

MatroidPtr AddColoops(MatroidPtr matroid, int extra) {
  return std::make_shared<ColoopExtension>(std::move(matroid), extra);
}

CountedMatroid WithCounter(MatroidPtr matroid) {
  auto stats = std::make_shared<OracleStats>();
  auto wrapped = std::make_shared<CountingMatroid>(std::move(matroid), stats);
  return {std::move(wrapped), std::move(stats)};
}

int Rank(const Matroid& matroid, std::span<const int> elements) {
  const ElementSet sorted = Normalize(elements);
  ElementSet current;
  for (int e : sorted) {
    current.push_back(e);
    if (!matroid.IsIndependent(current)) current.pop_back();
  }
  return static_cast<int>(current.size());
}

int FullRank(const Matroid& matroid) {
  ElementSet all(matroid.ground_size());
  for (int i = 0; i < matroid.ground_size(); ++i) all[i] = i;
  return Rank(matroid, all);
}

}  // namespace sbomatch
