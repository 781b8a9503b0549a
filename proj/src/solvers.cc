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

#include "sbomatch/solvers.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitmask.h"
#include "sbomatch/errors.h"

namespace sbomatch {

namespace {

using internal::Bit;
using internal::Mask;
using internal::MaskToSet;

// Hard ceiling for the exhaustive table: 2^26 bytes.
constexpr int kHardExactLimit = 26;

// Instance whose matroid counts queries.
struct CountedInstance {
  ParityInstance instance;
  std::shared_ptr<OracleStats> stats;
};

CountedInstance Count(const ParityInstance& instance) {
  CountedMatroid counted = WithCounter(instance.matroid);
  CountedInstance out{instance, std::move(counted.stats)};
  out.instance.matroid = std::move(counted.matroid);
  return out;
}

void CheckLocalBound(const ParityInstance& instance,
                     const SolverLimits& limits) {
  // Masks are 64 bits wide.
  const int bound = std::min(limits.max_local_pairs, 64);
  if (instance.num_pairs() > bound) {
    throw SizeBoundError("local search limited to " + std::to_string(bound) +
                         " pairs, instance has " +
                         std::to_string(instance.num_pairs()));
  }
}

void CheckMoveSize(int s) {
  if (s < 1) throw InputError("move size s must be at least 1");
}

bool FeasibleMask(const ParityInstance& instance, Mask pairs) {
  return IsFeasible(instance, MaskToSet(pairs));
}

Weight MaskWeight(const ParityInstance& instance, Mask pairs) {
  Weight total = 0;
  for (int i : MaskToSet(pairs)) total += instance.weights[i];
  return total;
}

Mask ToMask(const ParityInstance& instance, std::span<const int> indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 0 || i >= instance.num_pairs()) {
      throw InputError("pair index " + std::to_string(i) + " out of range");
    }
    m |= Bit(i);
  }
  return m;
}

// Calls `visit(mask, weight)` for each k-subset of `items` in lexicographic
// order; stops early when `visit` returns false.
template <typename Visit>
bool ForEachCombination(const std::vector<int>& items,
                        const std::vector<Weight>& weights, int k,
                        Visit&& visit) {
  const int n = static_cast<int>(items.size());
  if (k > n) return true;
  std::vector<int> pos(k);
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    Mask mask = 0;
    Weight w = 0;
    for (int p : pos) {
      mask |= Bit(items[p]);
      w += weights[items[p]];
    }
    if (!visit(mask, w)) return false;
    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i) --i;
    if (i < 0) return true;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

struct MaskMove {
  Mask remove = 0;
  Mask add = 0;
  Rational gain = 0;
};

std::optional<MaskMove> BestMaskMove(const ParityInstance& instance,
                                     Mask current, int s,
                                     const Rational& min_gain) {
  const int n = instance.num_pairs();
  std::vector<int> inside;
  std::vector<int> outside;
  for (int i = 0; i < n; ++i) {
    (current & Bit(i) ? inside : outside).push_back(i);
  }
  std::optional<MaskMove> best;
  const int max_remove = std::min<int>(s, inside.size());
  for (int r = 0; r <= max_remove; ++r) {
    ForEachCombination(inside, instance.weights, r,
                       [&](Mask remove, const Weight& removed) {
      const int max_add = std::min<int>(s - r, outside.size());
      for (int a = 0; a <= max_add; ++a) {
        if (r == 0 && a == 0) continue;
        ForEachCombination(outside, instance.weights, a,
                           [&](Mask add, const Weight& added) {
          Rational gain = added - removed;
          if (gain <= 0 || gain < min_gain) return true;
          if (best && gain <= best->gain) return true;
          if (FeasibleMask(instance, (current & ~remove) | add)) {
            best = MaskMove{remove, add, std::move(gain)};
          }
          return true;
        });
      }
      return true;
    });
  }
  return best;
}

Solution GreedyOn(const ParityInstance& instance) {
  std::vector<int> order(instance.num_pairs());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.weights[a] > instance.weights[b];
  });
  Solution out;
  for (int i : order) {
    out.indices.push_back(i);
    if (IsFeasible(instance, out.indices)) {
      out.weight += instance.weights[i];
    } else {
      out.indices.pop_back();
    }
  }
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

}  // namespace

Solution Greedy(const ParityInstance& instance) {
  Validate(instance);
  CountedInstance counted = Count(instance);
  Solution out = GreedyOn(counted.instance);
  out.oracle_calls = counted.stats->calls();
  return out;
}

std::optional<SMove> BestSMove(const ParityInstance& instance,
                               std::span<const int> current, int s,
                               const Rational& min_gain,
                               const SolverLimits& limits) {
  Validate(instance);
  CheckLocalBound(instance, limits);
  CheckMoveSize(s);
  if (min_gain < 0) throw InputError("min_gain must be nonnegative");
  const Mask mask = ToMask(instance, current);
  if (!FeasibleMask(instance, mask)) {
    throw InputError("current pair set is infeasible");
  }
  const auto best = BestMaskMove(instance, mask, s, min_gain);
  if (!best) return std::nullopt;
  return SMove{MaskToSet(best->remove), MaskToSet(best->add), best->gain};
}

std::vector<int> ApplyMove(std::span<const int> current, const SMove& move) {
  std::vector<int> out;
  for (int i : current) {
    if (!std::binary_search(move.remove.begin(), move.remove.end(), i)) {
      out.push_back(i);
    }
  }
  out.insert(out.end(), move.add.begin(), move.add.end());
  std::sort(out.begin(), out.end());
  return out;
}

Solution LocalSearchUnweighted(const ParityInstance& instance, int s,
                               const LocalSearchOptions& options) {
  Validate(instance);
  CheckLocalBound(instance, options.limits);
  CheckMoveSize(s);
  if (!options.allow_weighted && !HasUnitWeights(instance)) {
    throw InputError(
        "unweighted local search requires unit weights "
        "(pass allow_weighted to override)");
  }
  CountedInstance counted = Count(instance);
  Mask current = 0;
  Solution out;
  while (auto move = BestMaskMove(counted.instance, current, s, 0)) {
    current = (current & ~move->remove) | move->add;
    out.weight += move->gain;
    ++out.iterations;
  }
  out.indices = MaskToSet(current);
  out.oracle_calls = counted.stats->calls();
  return out;
}

Solution LocalSearchWeighted(const ParityInstance& instance, int s,
                             const SolverLimits& limits) {
  Validate(instance);
  CheckLocalBound(instance, limits);
  CheckMoveSize(s);
  CountedInstance counted = Count(instance);
  Solution out = GreedyOn(counted.instance);
  const int n = instance.num_pairs();
  if (n > 0) {
    Mask current = ToMask(instance, out.indices);
    const Rational n_squared = Rational(n) * n;
    while (true) {
      const Rational threshold = out.weight / n_squared;
      auto move = BestMaskMove(counted.instance, current, s, threshold);
      if (!move) break;
      current = (current & ~move->remove) | move->add;
      out.weight += move->gain;
      ++out.iterations;
    }
    out.indices = MaskToSet(current);
  }
  out.oracle_calls = counted.stats->calls();
  return out;
}

long long WeightedIterationBound(int num_pairs) {
  const double n = num_pairs;
  return static_cast<long long>(std::ceil((1.0 + n * n) * std::log(2.0)));
}

int PtasMoveSize(const Rational& epsilon, bool weighted) {
  if (epsilon <= 0 || epsilon >= 1) {
    throw InputError("epsilon must lie strictly between 0 and 1, got " +
                     ToString(epsilon));
  }
  const long long t = Ceil(Rational(1) / epsilon);
  if (t > (1 << 20)) throw SizeBoundError("epsilon too small");
  return static_cast<int>(weighted ? 4 * t + 1 : 2 * t + 1);
}

Solution Ptas(const ParityInstance& instance, const Rational& epsilon,
              bool weighted, const SolverLimits& limits) {
  const int s = PtasMoveSize(epsilon, weighted);
  if (weighted) return LocalSearchWeighted(instance, s, limits);
  return LocalSearchUnweighted(instance, s, {.allow_weighted = false,
                                             .limits = limits});
}

Solution BruteForceOpt(const ParityInstance& instance,
                       const SolverLimits& limits) {
  Validate(instance);
  const int n = instance.num_pairs();
  const int bound = std::min(limits.max_exact_pairs, kHardExactLimit);
  if (n > bound) {
    throw SizeBoundError("exact solver limited to " + std::to_string(bound) +
                         " pairs, instance has " + std::to_string(n));
  }
  CountedInstance counted = Count(instance);
  const Mask count = Bit(n);
  std::vector<char> feasible(count, 0);
  feasible[0] = 1;
  Weight best_weight = 0;
  std::vector<int> best_set;
  for (Mask t = 1; t < count; ++t) {
    // The union family is hereditary, so a set with an infeasible immediate
    // subset is infeasible without asking the oracle.
    bool candidate = true;
    for (Mask rest = t; rest != 0 && candidate; rest &= rest - 1) {
      candidate = feasible[t & ~(rest & -rest)];
    }
    if (!candidate || !FeasibleMask(counted.instance, t)) continue;
    feasible[t] = 1;
    Weight w = MaskWeight(instance, t);
    if (w < best_weight) continue;
    std::vector<int> set = MaskToSet(t);
    if (w > best_weight || set < best_set) {
      best_weight = std::move(w);
      best_set = std::move(set);
    }
  }
  Solution out;
  out.indices = best_set;
  out.weight = best_weight;
  out.oracle_calls = counted.stats->calls();
  return out;
}

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kLocal1:
      return "local1";
    case Algorithm::kLocal2:
      return "local2";
    case Algorithm::kPtas:
      return "ptas";
    case Algorithm::kExact:
      return "exact";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kGreedy, Algorithm::kLocal1,
                      Algorithm::kLocal2, Algorithm::kPtas,
                      Algorithm::kExact}) {
    if (ToString(a) == name) return a;
  }
  return std::nullopt;
}

Solution Solve(const ParityInstance& instance, const SolverConfig& config) {
  switch (config.algorithm) {
    case Algorithm::kGreedy:
      return Greedy(instance);
    case Algorithm::kLocal1:
      return LocalSearchUnweighted(
          instance, config.s,
          {.allow_weighted = config.allow_weighted_local1,
           .limits = config.limits});
    case Algorithm::kLocal2:
      return LocalSearchWeighted(instance, config.s, config.limits);
    case Algorithm::kPtas:
      if (!config.epsilon) throw InputError("ptas needs epsilon");
      return Ptas(instance, *config.epsilon, config.weighted, config.limits);
    case Algorithm::kExact:
      return BruteForceOpt(instance, config.limits);
  }
  throw InputError("unknown algorithm");
}

Solution SolveMatching(const MatchingInstance& instance,
                       const SolverConfig& config) {
  const ParityReduction reduction = MatchingToParity(instance);
  Solution out = Solve(reduction.instance, config);
  out.indices = PullBack(reduction.map, out.indices);
  return out;
}

}  // namespace sbomatch
