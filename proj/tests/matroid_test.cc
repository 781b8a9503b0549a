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

#include <random>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "sbomatch/errors.h"
#include "sbomatch/generators.h"
#include "sbomatch/sbo_lab.h"
#include "test_oracles.h"

namespace sbomatch {
namespace {

using ::sbomatch::testing::AllSubsets;
using ::sbomatch::testing::NaivePartition;
using ::sbomatch::testing::NaiveTransversal;

MatroidPtr PartitionExample() {
  return MakePartition(6, {{0, 2}, {1, 4}, {3}, {5}}, {1, 1, 1, 1});
}

TEST(UniformMatroidTest, Examples) {
  const MatroidPtr u = MakeUniform(4, 2);
  EXPECT_FALSE(u->IsIndependent(ElementSet{0, 1, 2}));
  EXPECT_TRUE(u->IsIndependent(ElementSet{}));
  EXPECT_TRUE(u->IsIndependent(ElementSet{3, 1}));
}

TEST(MatroidTest, RejectsOutOfRangeElements) {
  const MatroidPtr u = MakeUniform(4, 2);
  EXPECT_THROW(u->IsIndependent(ElementSet{4}), InputError);
  EXPECT_THROW(u->IsIndependent(ElementSet{-1}), InputError);
}

TEST(MatroidTest, DuplicatesAndOrderDoNotMatter) {
  const MatroidPtr p = PartitionExample();
  EXPECT_EQ(p->IsIndependent(ElementSet{5, 3, 3, 2}),
            p->IsIndependent(ElementSet{2, 3, 5}));
}

TEST(PartitionMatroidTest, Example) {
  EXPECT_TRUE(PartitionExample()->IsIndependent(ElementSet{2, 3, 4, 5}));
  EXPECT_FALSE(PartitionExample()->IsIndependent(ElementSet{0, 2}));
}

TEST(PartitionMatroidTest, AgreesWithBlockCounting) {
  const std::vector<ElementSet> blocks = {{0, 2, 5}, {1, 4}, {6}};
  const std::vector<int> caps = {2, 1, 0};
  const MatroidPtr p = MakePartition(8, blocks, caps);
  for (const ElementSet& t : AllSubsets(8)) {
    EXPECT_EQ(p->IsIndependent(t), NaivePartition(blocks, caps, t));
  }
}

TEST(PartitionMatroidTest, UnlistedElementsAreFree) {
  const MatroidPtr p = MakePartition(5, {{0, 1}}, {1});
  EXPECT_TRUE(p->IsIndependent(ElementSet{0, 2, 3, 4}));
}

TEST(PartitionMatroidTest, RejectsOverlappingBlocks) {
  EXPECT_THROW(MakePartition(4, {{0, 1}, {1, 2}}, {1, 1}), InputError);
  EXPECT_THROW(MakePartition(4, {{0, 1}}, {1, 1}), InputError);
  EXPECT_THROW(MakePartition(4, {{0, 9}}, {1}), InputError);
}

TEST(TransversalMatroidTest, Examples) {
  const MatroidPtr t = MakeTransversal(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(t->IsIndependent(ElementSet{0, 2}));
  EXPECT_TRUE(t->IsIndependent(ElementSet{1}));
  EXPECT_FALSE(t->IsIndependent(ElementSet{0, 1, 2}));
}

TEST(TransversalMatroidTest, NeedsAugmentingPaths) {
  // Element 0 first grabs agent 0; element 1 can only use agent 0, so 0 has
  // to move to agent 1.
  const MatroidPtr t = MakeTransversal(2, {{0, 1}, {0}});
  EXPECT_TRUE(t->IsIndependent(ElementSet{0, 1}));
}

TEST(TransversalMatroidTest, AgreesWithAssignmentEnumeration) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 7;
    std::vector<ElementSet> agents(1 + rng() % 5);
    for (auto& a : agents) {
      for (int e = 0; e < m; ++e) {
        if (rng() % 3 == 0) a.push_back(e);
      }
    }
    const MatroidPtr t = MakeTransversal(m, agents);
    for (const ElementSet& s : AllSubsets(m)) {
      ASSERT_EQ(t->IsIndependent(s), NaiveTransversal(agents, s));
    }
  }
}

TEST(ExplicitMatroidTest, BasesModeUsesSubsets) {
  const MatroidPtr x =
      MakeExplicit(4, {{0, 1}, {2, 3}, {1, 0}}, ExplicitMode::kBases);
  const auto& sets = static_cast<const ExplicitMatroid&>(*x).sets();
  EXPECT_EQ(sets.size(), 2u);
  EXPECT_TRUE(x->IsIndependent(ElementSet{}));
  EXPECT_TRUE(x->IsIndependent(ElementSet{3}));
  EXPECT_FALSE(x->IsIndependent(ElementSet{0, 2}));
}

TEST(ExplicitMatroidTest, IndependentModeIsLiteral) {
  const MatroidPtr x =
      MakeExplicit(3, {{}, {0}, {0, 2}}, ExplicitMode::kIndependentSets);
  EXPECT_TRUE(x->IsIndependent(ElementSet{0, 2}));
  EXPECT_FALSE(x->IsIndependent(ElementSet{2}));
}

TEST(RankTest, Examples) {
  EXPECT_EQ(Rank(*MakeUniform(4, 2), ElementSet{0, 1, 2}), 2);
  EXPECT_EQ(Rank(*PartitionExample(), ElementSet{}), 0);
  EXPECT_EQ(Rank(*PartitionExample(), ElementSet{0, 1, 2, 3, 4, 5}), 4);
  EXPECT_EQ(FullRank(*PartitionExample()), 4);
}

TEST(RankTest, MonotoneAndSubmodular) {
  for (auto family : {MatroidFamily::kPartition, MatroidFamily::kTransversal,
                      MatroidFamily::kUniform}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      InstanceRng rng(seed);
      const MatroidPtr m = GenerateMatroid(family, 7, rng);
      const auto subsets = AllSubsets(7);
      std::vector<int> rank(subsets.size());
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        rank[i] = Rank(*m, subsets[i]);
      }
      for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = 0; b < subsets.size(); ++b) {
          if ((a & b) == a) ASSERT_LE(rank[a], rank[b]);
          ASSERT_GE(rank[a] + rank[b], rank[a | b] + rank[a & b]);
        }
      }
    }
  }
}

TEST(TruncateTest, MatchesSmallerUniform) {
  const MatroidPtr t = Truncate(MakeUniform(4, 3), 2);
  const MatroidPtr u = MakeUniform(4, 2);
  for (const ElementSet& s : AllSubsets(4)) {
    EXPECT_EQ(t->IsIndependent(s), u->IsIndependent(s));
  }
}

TEST(TruncateTest, FullRankTruncationIsIdentity) {
  const MatroidPtr p = PartitionExample();
  const MatroidPtr t = Truncate(p, FullRank(*p));
  for (const ElementSet& s : AllSubsets(6)) {
    EXPECT_EQ(t->IsIndependent(s), p->IsIndependent(s));
  }
}

TEST(TruncateTest, SizeCapAndInnerIndependence) {
  const MatroidPtr p = PartitionExample();
  const MatroidPtr t = Truncate(p, 2);
  EXPECT_FALSE(t->IsIndependent(ElementSet{2, 3, 4}));
  for (const ElementSet& s : AllSubsets(6)) {
    EXPECT_EQ(t->IsIndependent(s), p->IsIndependent(s) && s.size() <= 2);
  }
  EXPECT_THROW(Truncate(p, -1), InputError);
}

TEST(ColoopTest, Examples) {
  const MatroidPtr c = AddColoops(MakeUniform(2, 1), 2);
  EXPECT_EQ(c->ground_size(), 4);
  EXPECT_TRUE(c->IsIndependent(ElementSet{2, 3}));
  EXPECT_TRUE(c->IsIndependent(ElementSet{0, 2, 3}));
  EXPECT_FALSE(AddColoops(MakeUniform(2, 1), 1)->IsIndependent(
      ElementSet{0, 1, 2}));
  const MatroidPtr same = AddColoops(MakeUniform(2, 1), 0);
  for (const ElementSet& s : AllSubsets(2)) {
    EXPECT_EQ(same->IsIndependent(s), MakeUniform(2, 1)->IsIndependent(s));
  }
}

TEST(AxiomCheckTest, UniformPasses) {
  EXPECT_TRUE(CheckMatroidAxioms(*MakeUniform(4, 2)).ok());
}

TEST(AxiomCheckTest, DetectsHereditaryFailure) {
  // {0, 2} is listed but {2} is not.
  const MatroidPtr x =
      MakeExplicit(3, {{}, {0}, {1}, {0, 2}}, ExplicitMode::kIndependentSets);
  const AxiomReport r = CheckMatroidAxioms(*x);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.violation, AxiomViolation::kNotHereditary);
  EXPECT_EQ(r.first, (ElementSet{0, 2}));
  EXPECT_EQ(r.second, (ElementSet{2}));
}

TEST(AxiomCheckTest, DetectsExchangeFailure) {
  const MatroidPtr x = MakeExplicit(3, {{}, {0}, {1}, {2}, {0, 1}},
                                    ExplicitMode::kIndependentSets);
  const AxiomReport r = CheckMatroidAxioms(*x);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.violation, AxiomViolation::kNoExchange);
  EXPECT_EQ(r.first, (ElementSet{2}));
  EXPECT_EQ(r.second, (ElementSet{0, 1}));
}

TEST(AxiomCheckTest, DetectsDependentEmptySet) {
  const MatroidPtr x =
      MakeExplicit(2, {{0}}, ExplicitMode::kIndependentSets);
  EXPECT_EQ(*CheckMatroidAxioms(*x).violation,
            AxiomViolation::kEmptySetDependent);
}

TEST(AxiomCheckTest, CliqueMatroidPasses) {
  EXPECT_TRUE(
      CheckMatroidAxioms(*MakeCliqueMatroid(2, 3, {{0, 1}}).matroid).ok());
}

TEST(AxiomCheckTest, GeneratedFamiliesAndCombinatorsPass) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    for (auto family : {MatroidFamily::kPartition, MatroidFamily::kTransversal,
                        MatroidFamily::kUniform}) {
      InstanceRng rng(seed);
      const MatroidPtr m = GenerateMatroid(family, 8, rng);
      EXPECT_TRUE(CheckMatroidAxioms(*m).ok());
      EXPECT_TRUE(CheckMatroidAxioms(*Truncate(AddColoops(m, 2), 5)).ok());
    }
  }
}

TEST(AxiomCheckTest, RefusesLargeGroundSets) {
  EXPECT_THROW(CheckMatroidAxioms(*MakeUniform(15, 3)), SizeBoundError);
  EXPECT_NO_THROW(CheckMatroidAxioms(*MakeUniform(15, 3), 15));
}

TEST(CountingMatroidTest, CountsAndResets) {
  auto [m, stats] = WithCounter(MakeUniform(4, 2));
  EXPECT_EQ(stats->calls(), 0u);
  m->IsIndependent(ElementSet{0});
  EXPECT_EQ(stats->calls(), 1u);
  stats->Reset();
  EXPECT_EQ(stats->calls(), 0u);
}

TEST(CountingMatroidTest, NeverChangesAnswers) {
  const MatroidPtr p = PartitionExample();
  auto [m, stats] = WithCounter(p);
  for (const ElementSet& s : AllSubsets(6)) {
    EXPECT_EQ(m->IsIndependent(s), p->IsIndependent(s));
  }
  EXPECT_EQ(stats->calls(), 64u);
}

TEST(CountingMatroidTest, ConcurrentCallersAreAllCounted) {
  auto [m, stats] = WithCounter(MakeTransversal(4, {{0, 1}, {2, 3}}));
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, m = m] {
      for (int i = 0; i < 1000; ++i) m->IsIndependent(ElementSet{0, 2});
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(stats->calls(), 4000u);
}

}  // namespace
}  // namespace sbomatch
