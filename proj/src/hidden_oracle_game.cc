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

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbomatch/errors.h"
#include "sbomatch/sbo_lab.h"
#include "sbomatch/solvers.h"

namespace sbomatch {

GameReport HiddenOracleGame(int nu, int pair_count,
                            std::optional<std::vector<int>> secret,
                            GameDecider decider, int s, int max_pairs) {
  if (pair_count > max_pairs) {
    throw SizeBoundError("oracle game limited to " + std::to_string(max_pairs) +
                         " pairs");
  }
  std::vector<Pair> graph;
  if (secret) {
    *secret = Normalize(*secret);
    if (static_cast<int>(secret->size()) != nu) {
      throw InputError("secret must name exactly nu distinct pairs");
    }
    for (int p : *secret) {
      if (p < 0 || p >= pair_count) {
        throw InputError("secret pair index out of range");
      }
    }
    graph = CliqueEdges(*secret);
  }
  CliqueInstance hidden = MakeCliqueMatroid(nu, pair_count, std::move(graph));
  CountedMatroid counted = WithCounter(hidden.instance.matroid);
  ParityInstance view = hidden.instance;
  view.matroid = counted.matroid;

  GameReport report;
  report.secret = secret;
  // Singleton pairs are 1-cliques, so nu = 1 always has a witness.
  report.truth = secret.has_value() || nu == 1;

  if (decider == GameDecider::kBruteForce) {
    std::vector<int> pos(nu);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      if (IsFeasible(view, pos)) {
        report.answer = true;
        report.witness = pos;
        break;
      }
      int i = nu - 1;
      while (i >= 0 && pos[i] == pair_count - nu + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < nu; ++j) pos[j] = pos[j - 1] + 1;
    }
    report.oracle_calls = counted.stats->calls();
  } else {
    Solution found = LocalSearchUnweighted(view, s);
    report.answer = static_cast<int>(found.indices.size()) >= nu;
    if (report.answer) report.witness = found.indices;
    report.iterations = found.iterations;
    // The solver wraps the view in its own counter; both count the same
    // queries.
    report.oracle_calls = counted.stats->calls();
  }
  return report;
}

}  // namespace sbomatch
