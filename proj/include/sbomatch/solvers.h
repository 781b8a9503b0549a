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

#ifndef SBOMATCH_SOLVERS_H_
#define SBOMATCH_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbomatch/instance.h"
#include "sbomatch/rational.h"

namespace sbomatch {

// A feasible set of pair indices (edge indices for matching results) with
// its weight and the work spent finding it.
struct Solution {
  std::vector<int> indices;  // ascending
  Weight weight = 0;
  long long iterations = 0;
  std::uint64_t oracle_calls = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Remove `remove` from the current set and add `add`. `remove` is a subset of
// the current set, `add` is disjoint from it.
struct SMove {
  std::vector<int> remove;
  std::vector<int> add;
  Rational gain = 0;

  int size() const { return static_cast<int>(remove.size() + add.size()); }
  friend bool operator==(const SMove&, const SMove&) = default;
};

struct SolverLimits {
  int max_local_pairs = 64;
  int max_exact_pairs = 20;
};

// Pairs in decreasing weight order (ties by ascending index), each kept when
// the running set stays feasible.
Solution Greedy(const ParityInstance& instance);

// Maximum-gain move among all moves of at most `s` pairs whose gain is
// positive and at least `min_gain`. Moves are enumerated with the removed set
// outermost, both sets by size and then lexicographically; the first maximum
// wins. Throws InputError if `current` is infeasible.
std::optional<SMove> BestSMove(const ParityInstance& instance,
                               std::span<const int> current, int s,
                               const Rational& min_gain,
                               const SolverLimits& limits = {});

// Applies `move` to `current`, returning the sorted result.
std::vector<int> ApplyMove(std::span<const int> current, const SMove& move);

struct LocalSearchOptions {
  // The empty-start search is meant for unit weights; set this to run it
  // anyway.
  bool allow_weighted = false;
  SolverLimits limits;
};

// From the empty set, repeatedly apply the best improving s-move.
Solution LocalSearchUnweighted(const ParityInstance& instance, int s,
                               const LocalSearchOptions& options = {});

// From the greedy solution, repeatedly apply the best s-move while one gains
// at least w(A)/n^2.
Solution LocalSearchWeighted(const ParityInstance& instance, int s,
                             const SolverLimits& limits = {});

// ceil((1 + n^2) ln 2), the iteration bound of the weighted local search.
long long WeightedIterationBound(int num_pairs);

// Move size used by the approximation scheme for 0 < epsilon < 1:
// 2*ceil(1/epsilon)+1 unweighted, 4*ceil(1/epsilon)+1 weighted.
int PtasMoveSize(const Rational& epsilon, bool weighted);

Solution Ptas(const ParityInstance& instance, const Rational& epsilon,
              bool weighted, const SolverLimits& limits = {});

// Exhaustive optimum; ties go to the lexicographically smallest index set.
Solution BruteForceOpt(const ParityInstance& instance,
                       const SolverLimits& limits = {});

enum class Algorithm { kGreedy, kLocal1, kLocal2, kPtas, kExact };

std::string ToString(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct SolverConfig {
  Algorithm algorithm = Algorithm::kExact;
  // Move size for kLocal1 / kLocal2.
  int s = 0;
  // Accuracy for kPtas.
  std::optional<Rational> epsilon;
  // kPtas: run the weighted algorithm.
  bool weighted = true;
  bool allow_weighted_local1 = false;
  SolverLimits limits;
};

Solution Solve(const ParityInstance& instance, const SolverConfig& config);

// Solves through the matching-to-parity reduction; indices of the result are
// edge indices of `instance`.
Solution SolveMatching(const MatchingInstance& instance,
                       const SolverConfig& config);

enum class ResultFormat { kText, kJson };

// `index_label` is "pairs" or "edges".
std::string FormatSolution(const Solution& solution, ResultFormat format,
                           std::string_view index_label = "pairs");

}  // namespace sbomatch

#endif  // SBOMATCH_SOLVERS_H_
