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

#ifndef SBOMATCH_MATROID_H_
#define SBOMATCH_MATROID_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sbomatch {

// A finite set of element ids. Functions that return an ElementSet always
// return it sorted ascending without duplicates.
using ElementSet = std::vector<int>;

// Independence oracle over the ground set {0, ..., ground_size() - 1}.
//
// Implementations are immutable after construction, so a single instance may
// be queried from several threads at once.
class Matroid {
 public:
  explicit Matroid(int ground_size);
  virtual ~Matroid() = default;

  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  int ground_size() const { return ground_size_; }

  // Elements may be given in any order; duplicates are ignored. Throws
  // InputError on an id outside the ground set.
  bool IsIndependent(std::span<const int> elements) const;

 protected:
  // `elements` is sorted, duplicate free and in range.
  virtual bool IsIndependentSorted(std::span<const int> elements) const = 0;

 private:
  int ground_size_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Every set of size at most `rank` is independent.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int ground_size, int rank);
  int rank() const { return rank_; }

 protected:
  bool IsIndependentSorted(std::span<const int> elements) const override;

 private:
  int rank_;
};

// Blocks are disjoint; a set is independent when it meets every block in at
// most that block's capacity. Elements outside every block are free.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(int ground_size, std::vector<ElementSet> blocks,
                   std::vector<int> capacities);

  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

 protected:
  bool IsIndependentSorted(std::span<const int> elements) const override;

 private:
  std::vector<ElementSet> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;  // -1 for free elements
};

// A set is independent when its elements can be matched to distinct agents,
// each element to an agent whose list contains it.
class TransversalMatroid : public Matroid {
 public:
  TransversalMatroid(int ground_size, std::vector<ElementSet> agents);

  const std::vector<ElementSet>& agents() const { return agents_; }

 protected:
  bool IsIndependentSorted(std::span<const int> elements) const override;

 private:
  std::vector<ElementSet> agents_;
  std::vector<std::vector<int>> agents_of_;  // element -> agent ids, ascending
};

enum class ExplicitMode {
  // The listed sets are the bases; independent sets are their subsets.
  kBases,
  // The listed sets are the whole independent family, taken literally. Such a
  // family need not be a matroid, which is what the axiom checker is for.
  kIndependentSets,
};

class ExplicitMatroid : public Matroid {
 public:
  ExplicitMatroid(int ground_size, std::vector<ElementSet> sets,
                  ExplicitMode mode);

  // Sorted and deduplicated.
  const std::vector<ElementSet>& sets() const { return sets_; }
  ExplicitMode mode() const { return mode_; }

 protected:
  bool IsIndependentSorted(std::span<const int> elements) const override;

 private:
  std::vector<ElementSet> sets_;
  ExplicitMode mode_;
};

// Independent sets of `inner` with at most `max_size` elements.
class TruncatedMatroid : public Matroid {
 public:
  TruncatedMatroid(MatroidPtr inner, int max_size);

  const MatroidPtr& inner() const { return inner_; }
  int max_size() const { return max_size_; }

 protected:
  bool IsIndependentSorted(std::span<const int> elements) const override;

 private:
  MatroidPtr inner_;
  int max_size_;
};

// `inner` extended by `extra` coloops with ids inner.ground_size() onward.
class ColoopExtension : public Matroid {
 public:
  ColoopExtension(MatroidPtr inner, int extra);

  const MatroidPtr& inner() const { return inner_; }
  int extra() const { return extra_; }

 protected:
  bool IsIndependentSorted(std::span<const int> elements) const override;

 private:
  MatroidPtr inner_;
  int extra_;
};

// Number of independence queries answered by a counting wrapper. The count is
// atomic so concurrent callers may share one wrapper.
class OracleStats {
 public:
  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void Reset() { calls_.store(0, std::memory_order_relaxed); }
  void Increment() { calls_.fetch_add(1, std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> calls_{0};
};

// Forwards every query to `inner` and counts it.
class CountingMatroid : public Matroid {
 public:
  CountingMatroid(MatroidPtr inner, std::shared_ptr<OracleStats> stats);

  const MatroidPtr& inner() const { return inner_; }
  const std::shared_ptr<OracleStats>& stats() const { return stats_; }

 protected:
  bool IsIndependentSorted(std::span<const int> elements) const override;

 private:
  MatroidPtr inner_;
  std::shared_ptr<OracleStats> stats_;
};

MatroidPtr MakeUniform(int ground_size, int rank);
MatroidPtr MakePartition(int ground_size, std::vector<ElementSet> blocks,
                         std::vector<int> capacities);
MatroidPtr MakeTransversal(int ground_size, std::vector<ElementSet> agents);
MatroidPtr MakeExplicit(int ground_size, std::vector<ElementSet> sets,
                        ExplicitMode mode);
MatroidPtr Truncate(MatroidPtr matroid, int max_size);
MatroidPtr AddColoops(MatroidPtr matroid, int extra);

struct CountedMatroid {
  MatroidPtr matroid;
  std::shared_ptr<OracleStats> stats;
};
CountedMatroid WithCounter(MatroidPtr matroid);

// Size of the maximal independent subset of `elements` built greedily in
// ascending id order.
int Rank(const Matroid& matroid, std::span<const int> elements);
int FullRank(const Matroid& matroid);

// Sorted copy with duplicates removed.
ElementSet Normalize(std::span<const int> elements);

enum class AxiomViolation {
  kEmptySetDependent,
  kNotHereditary,  // first: independent set, second: dependent subset
  kNoExchange,     // first: smaller set A, second: larger set B
};

struct AxiomReport {
  // Empty when every axiom holds.
  std::optional<AxiomViolation> violation;
  ElementSet first;
  ElementSet second;

  bool ok() const { return !violation.has_value(); }
};

std::string ToString(AxiomViolation violation);

inline constexpr int kDefaultAxiomGroundBound = 14;

// Exhaustive check of the independence axioms over all 2^m subsets. Throws
// SizeBoundError when the ground set exceeds `max_ground_size`.
AxiomReport CheckMatroidAxioms(const Matroid& matroid,
                               int max_ground_size = kDefaultAxiomGroundBound);

}  // namespace sbomatch

#endif  // SBOMATCH_MATROID_H_
