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

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bitmask.h"
#include "sbomatch/errors.h"
#include "sbomatch/sbo_lab.h"

namespace sbomatch {

CliqueMatroid::CliqueMatroid(int nu, int pair_count,
                             std::vector<Pair> graph_edges)
    : Matroid(2 * pair_count), nu_(nu), pair_count_(pair_count) {
  if (nu < 1) throw InputError("clique matroid needs nu >= 1");
  if (pair_count < nu) {
    throw InputError("clique matroid needs at least nu pairs");
  }
  for (Pair& e : graph_edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= pair_count) {
      throw InputError("graph edge endpoint outside the pair range");
    }
    if (e.first == e.second) throw InputError("graph edge is a self-loop");
  }
  std::sort(graph_edges.begin(), graph_edges.end(),
            [](const Pair& a, const Pair& b) {
              return std::tie(a.first, a.second) < std::tie(b.first, b.second);
            });
  if (std::adjacent_find(graph_edges.begin(), graph_edges.end()) !=
      graph_edges.end()) {
    throw InputError("graph must be simple: repeated edge");
  }
  edges_ = std::move(graph_edges);
  adjacent_.assign(static_cast<std::size_t>(pair_count) * pair_count, 0);
  for (const Pair& e : edges_) {
    adjacent_[e.first * pair_count + e.second] = 1;
    adjacent_[e.second * pair_count + e.first] = 1;
  }
}

bool CliqueMatroid::IsIndependentSorted(std::span<const int> elements) const {
  const int size = static_cast<int>(elements.size());
  if (size < 2 * nu_) return true;
  if (size > 2 * nu_) return false;
  std::vector<int> pairs;
  for (int i = 0; i < size; i += 2) {
    if (elements[i] % 2 != 0 || elements[i + 1] != elements[i] + 1) {
      return true;  // not a union of pairs
    }
    pairs.push_back(elements[i] / 2);
  }
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      if (!adjacent_[pairs[a] * pair_count_ + pairs[b]]) return false;
    }
  }
  return true;
}

CliqueInstance MakeCliqueMatroid(int nu, int pair_count,
                                 std::vector<Pair> graph_edges) {
  CliqueInstance out;
  out.matroid =
      std::make_shared<CliqueMatroid>(nu, pair_count, std::move(graph_edges));
  out.instance.matroid = out.matroid;
  for (int i = 0; i < pair_count; ++i) {
    out.instance.pairs.push_back({2 * i, 2 * i + 1});
  }
  out.instance.weights.assign(pair_count, Weight(1));
  return out;
}

std::vector<Pair> CliqueEdges(std::span<const int> members) {
  const ElementSet sorted = Normalize(members);
  std::vector<Pair> edges;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      edges.push_back({sorted[a], sorted[b]});
    }
  }
  return edges;
}

FeasibleSize MaxFeasibleMatchingSize(const ParityInstance& instance,
                                     int max_pairs) {
  Validate(instance);
  const int n = instance.num_pairs();
  if (n > max_pairs || n > 62) {
    throw SizeBoundError("feasible-size search limited to " +
                         std::to_string(max_pairs) + " pairs");
  }
  CountedMatroid counted = WithCounter(instance.matroid);
  ParityInstance view = instance;
  view.matroid = counted.matroid;

  FeasibleSize out;
  // Largest size first; within a size, lexicographic order.
  for (int k = n; k >= 1 && out.size == 0; --k) {
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      if (IsFeasible(view, pos)) {
        out.size = k;
        out.witness = pos;
        break;
      }
      int i = k - 1;
      while (i >= 0 && pos[i] == n - k + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  out.oracle_calls = counted.stats->calls();
  return out;
}

std::optional<std::vector<int>> FindClique(int vertices,
                                           std::span<const Pair> edges,
                                           int k) {
  if (k <= 0) return std::vector<int>{};
  std::vector<std::vector<char>> adj(vertices, std::vector<char>(vertices, 0));
  for (const Pair& e : edges) {
    adj[e.first][e.second] = 1;
    adj[e.second][e.first] = 1;
  }
  std::vector<int> chosen;
  std::function<bool(int)> extend = [&](int next) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (int v = next; v < vertices; ++v) {
      bool ok = true;
      for (int u : chosen) ok = ok && adj[u][v];
      if (!ok) continue;
      chosen.push_back(v);
      if (extend(v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (extend(0)) return chosen;
  return std::nullopt;
}

}  // namespace sbomatch
