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

#include "sbomatch/sbo_lab.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "sbomatch/errors.h"
#include "sbomatch/format.h"
#include "test_oracles.h"

namespace sbomatch {
namespace {

using ::sbomatch::testing::AllSubsets;
using ::sbomatch::testing::K4SpanningTrees;
using ::sbomatch::testing::Members;

ParityInstance ReadFixture(const std::string& name) {
  std::ifstream in(std::string(SBOMATCH_TEST_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseParityInstance(ss.str());
}

// Direct transcription of the clique-matroid definition.
bool NaiveCliqueIndependent(int nu, const std::vector<Pair>& edges,
                            const ElementSet& t) {
  const int size = static_cast<int>(t.size());
  if (size <= 2 * nu - 1) return true;
  if (size > 2 * nu) return false;
  std::vector<int> pairs;
  for (int e : t) {
    if (e % 2 == 0 && std::binary_search(t.begin(), t.end(), e + 1)) {
      pairs.push_back(e / 2);
    }
  }
  if (static_cast<int>(pairs.size()) != nu) return true;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const Pair p{pairs[a], pairs[b]};
      if (std::find(edges.begin(), edges.end(), p) == edges.end()) {
        return false;
      }
    }
  }
  return true;
}

// Bases by size-rank filtering, permutations of J - I via next_permutation,
// exchange condition checked here rather than through the library.
bool NaiveIsSbo(const Matroid& m) {
  std::vector<ElementSet> indep;
  std::size_t rank = 0;
  for (const ElementSet& s : AllSubsets(m.ground_size())) {
    if (m.IsIndependent(s)) {
      indep.push_back(s);
      rank = std::max(rank, s.size());
    }
  }
  std::vector<ElementSet> bases;
  for (const ElementSet& s : indep) {
    if (s.size() == rank) bases.push_back(s);
  }
  std::sort(bases.begin(), bases.end());
  auto is_base = [&](ElementSet s) {
    std::sort(s.begin(), s.end());
    return std::binary_search(bases.begin(), bases.end(), s);
  };
  for (const ElementSet& i : bases) {
    for (const ElementSet& j : bases) {
      ElementSet only_i, only_j;
      std::set_difference(i.begin(), i.end(), j.begin(), j.end(),
                          std::back_inserter(only_i));
      std::set_difference(j.begin(), j.end(), i.begin(), i.end(),
                          std::back_inserter(only_j));
      bool found = false;
      do {
        bool ok = true;
        for (std::uint64_t k = 0; ok && k < (1u << i.size()); ++k) {
          ElementSet next;
          for (std::size_t x = 0; x < i.size(); ++x) {
            const int src = i[x];
            const auto pos = std::find(only_i.begin(), only_i.end(), src);
            const int image =
                pos == only_i.end() ? src : only_j[pos - only_i.begin()];
            next.push_back(k >> x & 1 ? image : src);
          }
          ok = is_base(next);
        }
        found = ok;
      } while (!found &&
               std::next_permutation(only_j.begin(), only_j.end()));
      if (!found) return false;
    }
  }
  return true;
}

std::vector<Pair> GraphFromMask(int vertices, std::uint64_t mask) {
  std::vector<Pair> all;
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) all.push_back({a, b});
  }
  std::vector<Pair> out;
  for (int e : Members(mask)) out.push_back(all[e]);
  return out;
}

TEST(CliqueMatroidTest, DefinitionExamples) {
  const CliqueInstance c = MakeCliqueMatroid(2, 3, {{0, 1}});
  EXPECT_TRUE(c.matroid->IsIndependent(ElementSet{0, 1, 2, 3}));
  EXPECT_FALSE(c.matroid->IsIndependent(ElementSet{0, 1, 4, 5}));
  EXPECT_TRUE(c.matroid->IsIndependent(ElementSet{0, 2, 4, 5}));
  EXPECT_FALSE(c.matroid->IsIndependent(ElementSet{0, 1, 2, 3, 4}));
  EXPECT_TRUE(c.matroid->IsIndependent(ElementSet{1, 3, 5}));
  EXPECT_EQ(c.instance.num_pairs(), 3);
  EXPECT_EQ(c.instance.pairs[2], (Pair{4, 5}));
  EXPECT_EQ(c.instance.weights, std::vector<Weight>(3, Weight(1)));
}

TEST(CliqueMatroidTest, MatchesDefinitionOnEverySubset) {
  for (int nu : {1, 2, 3}) {
    for (std::uint64_t mask = 0; mask < 64; mask += 5) {
      const std::vector<Pair> edges = GraphFromMask(4, mask);
      const CliqueInstance c = MakeCliqueMatroid(nu, 4, edges);
      for (const ElementSet& t : AllSubsets(8)) {
        ASSERT_EQ(c.matroid->IsIndependent(t),
                  NaiveCliqueIndependent(nu, edges, t));
      }
    }
  }
}

TEST(CliqueMatroidTest, IsAMatroid) {
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    EXPECT_TRUE(CheckMatroidAxioms(
                    *MakeCliqueMatroid(2, 3, GraphFromMask(3, mask)).matroid)
                    .ok());
  }
  for (std::uint64_t mask : {0u, 1u, 7u, 15u, 63u}) {
    for (int nu : {1, 2, 3}) {
      EXPECT_TRUE(CheckMatroidAxioms(
                      *MakeCliqueMatroid(nu, 4, GraphFromMask(4, mask))
                           .matroid)
                      .ok());
    }
  }
}

TEST(CliqueMatroidTest, RejectsBadParameters) {
  EXPECT_THROW(MakeCliqueMatroid(0, 3, {}), InputError);
  EXPECT_THROW(MakeCliqueMatroid(4, 3, {}), InputError);
  EXPECT_THROW(MakeCliqueMatroid(2, 3, {{1, 1}}), InputError);
  EXPECT_THROW(MakeCliqueMatroid(2, 3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(MakeCliqueMatroid(2, 3, {{0, 3}}), InputError);
  EXPECT_EQ(MakeCliqueMatroid(2, 3, {{2, 0}}).matroid->graph_edges(),
            (std::vector<Pair>{{0, 2}}));
}

TEST(CliqueEdgesTest, AllPairsAmongMembers) {
  EXPECT_EQ(CliqueEdges(std::vector<int>{1, 3, 4}),
            (std::vector<Pair>{{1, 3}, {1, 4}, {3, 4}}));
  EXPECT_TRUE(CliqueEdges(std::vector<int>{2}).empty());
}

TEST(MaxFeasibleMatchingSizeTest, Examples) {
  const FeasibleSize one = MaxFeasibleMatchingSize(
      MakeCliqueMatroid(2, 3, {{0, 1}}).instance);
  EXPECT_EQ(one.size, 2);
  EXPECT_EQ(one.witness, (std::vector<int>{0, 1}));
  EXPECT_EQ(MaxFeasibleMatchingSize(MakeCliqueMatroid(2, 3, {}).instance).size,
            1);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(
        MaxFeasibleMatchingSize(MakeCliqueMatroid(1, n, {}).instance).size, 1);
  }
}

TEST(MaxFeasibleMatchingSizeTest, EqualsNuIffGraphHasClique) {
  for (int nu : {2, 3}) {
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      const std::vector<Pair> edges = GraphFromMask(4, mask);
      const FeasibleSize f =
          MaxFeasibleMatchingSize(MakeCliqueMatroid(nu, 4, edges).instance);
      const auto clique = FindClique(4, edges, nu);
      EXPECT_EQ(f.size == nu, clique.has_value());
      EXPECT_LE(f.size, nu);
      if (clique) EXPECT_EQ(f.witness, *clique);
    }
  }
}

TEST(MaxFeasibleMatchingSizeTest, SizeBound) {
  EXPECT_THROW(
      MaxFeasibleMatchingSize(MakeCliqueMatroid(1, 5, {}).instance, 4),
      SizeBoundError);
}

TEST(FindCliqueTest, Examples) {
  const std::vector<Pair> square{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}};
  EXPECT_EQ(FindClique(4, square, 3), (std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(FindClique(4, square, 4).has_value());
  EXPECT_EQ(FindClique(4, {}, 1), (std::vector<int>{0}));
  EXPECT_FALSE(FindClique(0, {}, 1).has_value());
  EXPECT_EQ(FindClique(3, {}, 0), (std::vector<int>{}));
}

TEST(ExchangeBijectionTest, IdentityWhenBasesAgree) {
  const MatroidPtr u = MakeUniform(4, 2);
  const auto pi =
      FindExchangeBijection(*u, std::vector<int>{0, 1}, std::vector<int>{0, 1});
  ASSERT_TRUE(pi.has_value());
  for (const auto& [src, dst] : pi->mapping) EXPECT_EQ(src, dst);
}

TEST(ExchangeBijectionTest, UniformAnyBijection) {
  const MatroidPtr u = MakeUniform(4, 2);
  const std::vector<int> i{0, 1}, j{2, 3};
  const auto pi = FindExchangeBijection(*u, i, j);
  ASSERT_TRUE(pi.has_value());
  EXPECT_EQ(pi->Image(0), 2);
  EXPECT_EQ(pi->Image(1), 3);
  EXPECT_TRUE(IsExchangeBijection(*u, i, j, *pi));
  EXPECT_TRUE(IsExchangeBijection(*u, i, j, {{{0, 3}, {1, 2}}}));
}

TEST(ExchangeBijectionTest, CliqueExample) {
  const CliqueInstance c = MakeCliqueMatroid(2, 3, {{0, 1}});
  const std::vector<int> i{0, 1, 2, 3}, j{0, 2, 4, 5};
  const auto pi = FindExchangeBijection(*c.matroid, i, j);
  ASSERT_TRUE(pi.has_value());
  EXPECT_EQ(pi->mapping, (std::vector<std::pair<int, int>>{
                             {0, 0}, {1, 4}, {2, 2}, {3, 5}}));
  EXPECT_TRUE(IsExchangeBijection(*c.matroid, i, j, *pi));
  // The validator agrees with a direct check of every K for both candidate
  // bijections.
  const std::vector<Pair> graph{{0, 1}};
  for (const ExchangeBijection& cand :
       {*pi, ExchangeBijection{{{0, 0}, {1, 5}, {2, 2}, {3, 4}}}}) {
    bool valid = true;
    for (std::uint64_t k = 0; k < 16; ++k) {
      ElementSet next;
      for (int x = 0; x < 4; ++x) {
        next.push_back(k >> x & 1 ? cand.mapping[x].second : i[x]);
      }
      std::sort(next.begin(), next.end());
      valid = valid && NaiveCliqueIndependent(2, graph, next);
    }
    EXPECT_EQ(IsExchangeBijection(*c.matroid, i, j, cand), valid);
  }
}

TEST(ExchangeBijectionTest, K4CounterexampleHasNone) {
  const ParityInstance k4 = ReadFixture("k4.inst");
  const std::vector<int> i{0, 1, 4}, j{2, 3, 5};
  EXPECT_FALSE(FindExchangeBijection(*k4.matroid, i, j).has_value());
}

TEST(ExchangeBijectionTest, RejectsNonBasesAndLargeRank) {
  const MatroidPtr u = MakeUniform(4, 2);
  EXPECT_THROW(FindExchangeBijection(*u, std::vector<int>{0},
                                     std::vector<int>{1, 2}),
               InputError);
  EXPECT_THROW(FindExchangeBijection(*u, std::vector<int>{0, 1, 2},
                                     std::vector<int>{1, 2, 3}),
               InputError);
  const MatroidPtr big = MakeUniform(10, 9);
  const std::vector<int> a{0, 1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_THROW(FindExchangeBijection(*big, a, a), SizeBoundError);
  EXPECT_TRUE(FindExchangeBijection(*big, a, a, 9).has_value());
}

TEST(ExchangeBijectionTest, FoundBijectionsRevalidate) {
  for (std::uint64_t mask = 0; mask < 64; mask += 3) {
    const CliqueInstance c = MakeCliqueMatroid(2, 4, GraphFromMask(4, mask));
    std::vector<ElementSet> bases;
    for (const ElementSet& s : AllSubsets(8)) {
      if (s.size() == 4 && c.matroid->IsIndependent(s)) bases.push_back(s);
    }
    for (std::size_t a = 0; a < bases.size(); a += 7) {
      for (std::size_t b = 0; b < bases.size(); b += 5) {
        const auto pi = FindExchangeBijection(*c.matroid, bases[a], bases[b]);
        ASSERT_TRUE(pi.has_value());
        EXPECT_TRUE(IsExchangeBijection(*c.matroid, bases[a], bases[b], *pi));
        for (const auto& [src, dst] : pi->mapping) {
          if (std::binary_search(bases[b].begin(), bases[b].end(), src)) {
            EXPECT_EQ(src, dst);
          }
        }
      }
    }
  }
}

TEST(CheckSboTest, CliqueMatroidsOnThreePairs) {
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const CliqueInstance c = MakeCliqueMatroid(2, 3, GraphFromMask(3, mask));
    const SboReport r = CheckSbo(*c.matroid);
    EXPECT_TRUE(r.ok) << "graph mask " << mask;
    EXPECT_EQ(r.rank, 4);
  }
}

TEST(CheckSboTest, SmallCliqueMatroidsAgreeWithNaiveCheck) {
  for (int nu : {1, 2}) {
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
      const CliqueInstance c =
          MakeCliqueMatroid(nu, 3, GraphFromMask(3, mask));
      EXPECT_EQ(CheckSbo(*c.matroid).ok, NaiveIsSbo(*c.matroid));
    }
  }
}

TEST(CheckSboTest, K4FailsWithWitness) {
  const ParityInstance k4 = ReadFixture("k4.inst");
  const SboReport r = CheckSbo(*k4.matroid);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.rank, 3);
  EXPECT_EQ(r.num_bases, 16u);
  EXPECT_FALSE(NaiveIsSbo(*k4.matroid));
  EXPECT_FALSE(
      FindExchangeBijection(*k4.matroid, r.base_i, r.base_j).has_value());
}

TEST(CheckSboTest, K4FixtureIsTheGraphicMatroid) {
  const ParityInstance k4 = ReadFixture("k4.inst");
  const std::vector<ElementSet> trees = K4SpanningTrees();
  ASSERT_EQ(trees.size(), 16u);
  for (const ElementSet& s : AllSubsets(6)) {
    const bool in_tree = std::any_of(
        trees.begin(), trees.end(), [&](const ElementSet& t) {
          return std::includes(t.begin(), t.end(), s.begin(), s.end());
        });
    EXPECT_EQ(k4.matroid->IsIndependent(s), in_tree);
  }
  EXPECT_TRUE(CheckMatroidAxioms(*k4.matroid).ok());
}

TEST(CheckSboTest, UniformPasses) {
  const SboReport r = CheckSbo(*ReadFixture("uniform42.inst").matroid);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.num_bases, 6u);
  EXPECT_EQ(r.pairs_checked, 15u);
  EXPECT_TRUE(NaiveIsSbo(*MakeUniform(4, 2)));
}

TEST(CheckSboTest, SizeBounds) {
  EXPECT_THROW(CheckSbo(*MakeUniform(10, 7)), SizeBoundError);
  EXPECT_THROW(CheckSbo(*MakeUniform(25, 1)), SizeBoundError);
}

TEST(HiddenOracleGameTest, SecretFoundByBruteForce) {
  const GameReport r = HiddenOracleGame(2, 4, std::vector<int>{1, 3},
                                        GameDecider::kBruteForce);
  EXPECT_TRUE(r.answer);
  EXPECT_TRUE(r.correct());
  EXPECT_EQ(r.witness, (std::vector<int>{1, 3}));
  // Unions {0,1} {0,2} {0,3} {1,2} are rejected before {1,3} is accepted.
  EXPECT_EQ(r.oracle_calls, 5u);
}

TEST(HiddenOracleGameTest, NoSecretNeedsEveryQuery) {
  for (int n = 2; n <= 6; ++n) {
    for (int nu = 2; nu <= std::min(n, 3); ++nu) {
      const GameReport r =
          HiddenOracleGame(nu, n, std::nullopt, GameDecider::kBruteForce);
      EXPECT_FALSE(r.answer);
      EXPECT_TRUE(r.correct());
      std::uint64_t binom = 1;
      for (int k = 0; k < nu; ++k) binom = binom * (n - k) / (k + 1);
      EXPECT_GE(r.oracle_calls, binom);
    }
  }
}

TEST(HiddenOracleGameTest, NuOneIsAlwaysYes) {
  for (auto decider : {GameDecider::kBruteForce, GameDecider::kLocalSearch}) {
    EXPECT_TRUE(HiddenOracleGame(1, 4, std::nullopt, decider).answer);
    EXPECT_TRUE(
        HiddenOracleGame(1, 4, std::vector<int>{2}, decider).answer);
  }
}

TEST(HiddenOracleGameTest, LocalSearchDeciderReportsHonestly) {
  const GameReport r = HiddenOracleGame(2, 4, std::vector<int>{0, 3},
                                        GameDecider::kLocalSearch, 3);
  EXPECT_TRUE(r.truth);
  EXPECT_EQ(r.answer, r.witness.size() == 2u);
  EXPECT_GT(r.oracle_calls, 0u);
}

TEST(HiddenOracleGameTest, RejectsBadSecret) {
  EXPECT_THROW(HiddenOracleGame(2, 4, std::vector<int>{1},
                                GameDecider::kBruteForce),
               InputError);
  EXPECT_THROW(HiddenOracleGame(2, 4, std::vector<int>{1, 9},
                                GameDecider::kBruteForce),
               InputError);
}

TEST(SingleCliqueTest, SecretIsTheUniqueMaximumSet) {
  for (int n = 3; n <= 5; ++n) {
    for (int nu = 2; nu <= 3; ++nu) {
      std::vector<int> secret;
      for (int k = 0; k < nu; ++k) secret.push_back((2 * k + 1) % n);
      std::sort(secret.begin(), secret.end());
      secret.erase(std::unique(secret.begin(), secret.end()), secret.end());
      if (static_cast<int>(secret.size()) != nu) continue;
      const ParityInstance inst =
          MakeCliqueMatroid(nu, n, CliqueEdges(secret)).instance;
      int count = 0;
      for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
        const std::vector<int> set = Members(mask);
        if (static_cast<int>(set.size()) == nu && IsFeasible(inst, set)) {
          ++count;
          EXPECT_EQ(set, secret);
        }
      }
      EXPECT_EQ(count, 1);
    }
  }
}

TEST(GameReportTest, TextMentionsSecret) {
  const GameReport r =
      HiddenOracleGame(2, 3, std::nullopt, GameDecider::kBruteForce);
  const std::string text = FormatGameReport(r, ResultFormat::kText);
  EXPECT_NE(text.find("answer: no"), std::string::npos);
  EXPECT_NE(text.find("secret: none"), std::string::npos);
  EXPECT_NE(text.find("oracle_calls: 3"), std::string::npos);
}

}  // namespace
}  // namespace sbomatch
