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

#ifndef SBOMATCH_SBO_LAB_H_
#define SBOMATCH_SBO_LAB_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sbomatch/instance.h"
#include "sbomatch/matroid.h"
#include "sbomatch/solvers.h"

namespace sbomatch {

// Ground set {0, ..., 2p-1} paired as {2i, 2i+1}. A set is independent when
// it has at most 2*nu - 1 elements, or exactly 2*nu elements and either is not
// a union of nu pairs or is the union of nu pairs that form a clique in the
// graph on pair indices.
//
// With an empty graph no nu pairs are jointly feasible; with a single
// nu-clique F the only feasible nu-pair set is F.
class CliqueMatroid : public Matroid {
 public:
  CliqueMatroid(int nu, int pair_count, std::vector<Pair> graph_edges);

  int nu() const { return nu_; }
  int pair_count() const { return pair_count_; }
  // Normalized (first < second) and sorted.
  const std::vector<Pair>& graph_edges() const { return edges_; }

 protected:
  bool IsIndependentSorted(std::span<const int> elements) const override;

 private:
  int nu_;
  int pair_count_;
  std::vector<Pair> edges_;
  std::vector<char> adjacent_;  // pair_count x pair_count
};

struct CliqueInstance {
  std::shared_ptr<const CliqueMatroid> matroid;
  ParityInstance instance;  // pairs {2i, 2i+1}, unit weights
};

CliqueInstance MakeCliqueMatroid(int nu, int pair_count,
                                 std::vector<Pair> graph_edges);

// All edges among `members`.
std::vector<Pair> CliqueEdges(std::span<const int> members);

struct FeasibleSize {
  int size = 0;
  std::vector<int> witness;  // lexicographically first set of that size
  std::uint64_t oracle_calls = 0;
};

// Largest feasible pair set by exhaustive search.
FeasibleSize MaxFeasibleMatchingSize(const ParityInstance& instance,
                                     int max_pairs = 20);

// Lexicographically first k-clique by plain backtracking over the graph.
std::optional<std::vector<int>> FindClique(int vertices,
                                           std::span<const Pair> edges, int k);

// A bijection from base I to base J, identity on I and J's intersection.
struct ExchangeBijection {
  std::vector<std::pair<int, int>> mapping;  // (source, image), by source

  int Image(int source) const;
};

inline constexpr int kDefaultBijectionRankBound = 8;
inline constexpr int kDefaultSboRankBound = 6;
inline constexpr int kDefaultSboGroundBound = 24;

// First valid bijection in lexicographic order of the images of I - J, or
// none. Validity: pi(K) + (I - K) is a base for every K subset of I. Throws
// InputError if I or J is not a base, SizeBoundError past `max_rank`.
std::optional<ExchangeBijection> FindExchangeBijection(
    const Matroid& matroid, std::span<const int> base_i,
    std::span<const int> base_j, int max_rank = kDefaultBijectionRankBound);

// Checks the exchange condition over every subset K of I.
bool IsExchangeBijection(const Matroid& matroid, std::span<const int> base_i,
                         std::span<const int> base_j,
                         const ExchangeBijection& bijection);

struct SboReport {
  bool ok = true;
  // First base pair without a valid bijection, when !ok.
  ElementSet base_i;
  ElementSet base_j;
  int rank = 0;
  std::uint64_t num_bases = 0;
  std::uint64_t pairs_checked = 0;
};

// Strong base orderability by exhaustive search over unordered base pairs.
SboReport CheckSbo(const Matroid& matroid, int max_rank = kDefaultSboRankBound,
                   int max_ground = kDefaultSboGroundBound);

enum class GameDecider {
  // Tests every nu-pair union in lexicographic order, stopping at a hit.
  kBruteForce,
  // Unweighted local search with the given move size; answers yes when the
  // result has nu pairs.
  kLocalSearch,
};

struct GameReport {
  bool answer = false;
  bool truth = false;
  std::vector<int> witness;
  long long iterations = 0;
  std::uint64_t oracle_calls = 0;
  std::optional<std::vector<int>> secret;

  bool correct() const { return answer == truth; }
};

// Decides "is there a feasible nu-pair set?" against a hidden matroid: the
// empty-graph clique matroid when `secret` is empty, otherwise the one whose
// only nu-clique is `secret`. Counts every oracle query the decider makes.
GameReport HiddenOracleGame(int nu, int pair_count,
                            std::optional<std::vector<int>> secret,
                            GameDecider decider, int s = 3,
                            int max_pairs = 20);

std::string FormatGameReport(const GameReport& report, ResultFormat format);

}  // namespace sbomatch

#endif  // SBOMATCH_SBO_LAB_H_
