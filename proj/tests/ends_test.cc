// Copyright 2026 The Thompson Ends Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "thompson/ends.h"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.h"
#include "test_graphs.h"
#include "thompson/ends_report.h"
#include "thompson/errors.h"
#include "thompson/treeact.h"
#include "thompson/words.h"

namespace thompson {
namespace {

CellMap G(Generator g) { return StandardGenerator(g); }

CosetBall VBall(int r) {
  return Explore(GroupClass::kV, StandardGeneratorSet(GroupClass::kV), r);
}

void ExpectMatchesOracle(const BallGraph& g, const CompactSet& k) {
  std::vector<bool> removed(g.size(), false);
  for (VertexId v : k.vertices()) removed[v] = true;
  const auto expected = oracle::Components(g, removed);
  const ComponentReport got = ComponentsMinus(g, k);
  ASSERT_EQ(got.components.size(), expected.size());
  std::vector<std::vector<VertexId>> sets;
  for (const Component& c : got.components) {
    sets.push_back(c.vertices);
    bool touches = false;
    for (VertexId v : c.vertices) touches |= g.is_frontier(v);
    ASSERT_EQ(c.kind == ComponentKind::kFrontierTouching, touches);
  }
  std::sort(sets.begin(), sets.end());
  ASSERT_EQ(sets, expected);
  for (VertexId v = 0; v < g.size(); ++v) {
    ASSERT_EQ(got.component_of[v] < 0, k.contains(v));
  }
}

TEST(ComponentsTest, EmptySetLeavesOneComponent) {
  const BallGraph g = VBall(4).ToGraph();
  const ComponentReport r = ComponentsMinus(g, CompactSet());
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.frontier_touching(), 1u);
  EXPECT_EQ(r.components[0].vertices.size(), g.size());
}

TEST(ComponentsTest, TreeRootsSplitByDegree) {
  const TreeBall tree(6);
  const BallGraph& g = tree.graph();
  EXPECT_EQ(ComponentsMinus(g, CompactSet({0})).frontier_touching(), 2u);
  const VertexId b = *tree.Find(TreeVertex::Parse("B"));
  EXPECT_EQ(ComponentsMinus(g, CompactSet({b})).frontier_touching(), 3u);
  ExpectMatchesOracle(g, CompactSet({0}));
  ExpectMatchesOracle(g, CompactSet({b}));
}

TEST(ComponentsTest, RandomSetsMatchFloodFill) {
  std::mt19937_64 rng(9);
  const std::vector<BallGraph> graphs = {VBall(5).ToGraph(), TreeBall(7).graph(),
                                         FreeGroupBall(2, 5).graph(),
                                         testing::GridBall(6)};
  for (const BallGraph& g : graphs) {
    for (int i = 0; i < 30; ++i) {
      std::vector<VertexId> k;
      const int n = 1 + static_cast<int>(rng() % 12);
      for (int j = 0; j < n; ++j) k.push_back(rng() % g.size());
      ExpectMatchesOracle(g, CompactSet(k));
    }
  }
}

TEST(SaturateTest, IdempotentAndConnected) {
  const BallGraph g = VBall(6).ToGraph();
  std::mt19937_64 rng(10);
  int done = 0;
  while (done < 20) {
    const CompactSet k = testing::RandomInteriorSet(g, rng, 4);
    CompactSet s;
    try {
      s = Saturate(g, k);
    } catch (const MarginTooSmall&) {
      continue;
    }
    ++done;
    EXPECT_TRUE(s.IsConnected(g));
    EXPECT_EQ(ComponentsMinus(g, s).closed_bounded(), 0u);
    EXPECT_EQ(Saturate(g, s), s);
  }
}

TEST(SaturateTest, JoinsDistantTreeVerticesAlongThePath) {
  const TreeBall tree(10);
  const VertexId u = *tree.Find(TreeVertex::Parse("abA"));
  const VertexId v = *tree.Find(TreeVertex::Parse("BaBA"));
  const CompactSet s = Saturate(tree.graph(), CompactSet({u, v}));
  EXPECT_TRUE(s.IsConnected(tree.graph()));
  // In a tree the joining path is unique; recover it by walking to the root.
  std::set<VertexId> path;
  auto ancestors = [&](VertexId x) {
    std::vector<VertexId> chain = {x};
    while (tree.graph().depth(chain.back()) > 0) {
      for (VertexId w : tree.graph().neighbors(chain.back())) {
        if (tree.graph().depth(w) < tree.graph().depth(chain.back())) {
          chain.push_back(w);
          break;
        }
      }
    }
    return chain;
  };
  const auto au = ancestors(u), av = ancestors(v);
  std::set<VertexId> su(au.begin(), au.end()), sv(av.begin(), av.end());
  for (VertexId x : au) if (!sv.count(x) || x == 0) path.insert(x);
  for (VertexId x : av) if (!su.count(x) || x == 0) path.insert(x);
  for (VertexId x : path) EXPECT_TRUE(s.contains(x)) << x;
  EXPECT_EQ(s.size(), path.size());
}

TEST(SaturateTest, FrontierContactRejected) {
  const BallGraph g = FreeGroupBall(2, 4).graph();
  const VertexId far = static_cast<VertexId>(g.size() - 1);
  EXPECT_THROW(Saturate(g, CompactSet({0, far})), MarginTooSmall);
  EXPECT_FALSE(HasMargin(g, CompactSet({far})));
}

TEST(SaturateTest, AbsorbsClosedComponents) {
  const BallGraph g = testing::GridBall(6);
  // A ring around the origin of the grid encloses it.
  std::vector<VertexId> ring;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.depth(v) == 2) ring.push_back(v);
  }
  const CompactSet s = Saturate(g, CompactSet(ring));
  EXPECT_TRUE(s.contains(0));
  EXPECT_EQ(ComponentsMinus(g, s).components.size(), 1u);
}

TEST(AmplifyTest, FourRegularTreeCenter) {
  const FreeGroupBall tree(2, 6);
  const Amplification a = Amplify(
      tree.graph(), CompactSet({0}),
      [&](VertexId v) { return tree.Translate({1, 1}, v); });
  EXPECT_EQ(a.n, 4u);
  EXPECT_EQ(a.bound, 6u);
  // The three outer branches at each center plus the segment between them.
  EXPECT_EQ(a.report.frontier_touching(), 7u);
  EXPECT_TRUE(a.certified);
}

TEST(AmplifyTest, OneEndedGridIsDegenerate) {
  const BallGraph g = testing::GridBall(8);
  const Amplification a =
      Amplify(g, CompactSet({0}), testing::GridShift(g, 8, 3, 0));
  EXPECT_EQ(a.n, 1u);
  EXPECT_EQ(a.bound, 1u);
  EXPECT_TRUE(a.certified);
}

TEST(AmplifyTest, UnverifiablePreconditions) {
  const FreeGroupBall tree(2, 6);
  auto shift = [&](std::vector<int> u) {
    return [&tree, u](VertexId v) { return tree.Translate(u, v); };
  };
  // Overlapping translate.
  const CompactSet k = Saturate(tree.graph(), CompactSet({0, 1}));
  EXPECT_THROW(Amplify(tree.graph(), k, shift({1})), PreconditionUnverifiable);
  // Translate too close to the frontier.
  EXPECT_THROW(Amplify(tree.graph(), CompactSet({0}), shift({1, 1, 1, 1, 1})),
               PreconditionUnverifiable);
}

TEST(EndsReportTest, LineHasTwoPersistentComponents) {
  const std::vector<int> schedule = {2};
  const EndsReport r = RunEndsReport(FreeGroupEndsProblem(1, 3), schedule);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].frontier_touching, 2u);
  EXPECT_EQ(r.entries[0].persistent, 2u);
  EXPECT_EQ(r.best_bound, 2u);
}

TEST(EndsReportTest, TreeReportAmplifies) {
  const std::vector<int> schedule = {3, 4};
  const EndsReport r = RunEndsReport(FreeGroupEndsProblem(2, 6), schedule);
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_GE(r.entries[0].persistent, 4u);
  bool certified = false;
  for (const RadiusEntry& e : r.entries) {
    if (e.amplification) certified |= e.amplification->certified;
  }
  EXPECT_TRUE(certified);
  EXPECT_FALSE(r.reasoning.empty());
}

TEST(EndTracesTest, LineHasTwoChains) {
  const FreeGroupBall line(1, 8);
  const std::vector<int> schedule = {3, 5, 8};
  const TraceForest f = EndTraces(line.graph(), CompactSet({0}), schedule);
  ASSERT_EQ(f.chains.size(), 2u);
  for (const TraceChain& c : f.chains) EXPECT_EQ(c.length(), 3u);
  EXPECT_EQ(f.surviving(), 2u);
}

TEST(EndTracesTest, FourRegularTreeHasFourChainsAndNoClosedLinks) {
  const FreeGroupBall tree(2, 5);
  const std::vector<int> schedule = {2, 3, 5};
  const TraceForest f = EndTraces(tree.graph(), CompactSet({0}), schedule);
  EXPECT_EQ(f.chains.size(), 4u);
  EXPECT_EQ(f.surviving(), 4u);
  const BallGraph& g = tree.graph();
  const CompactSet k = Saturate(g.Truncated(3), CompactSet({0, 1}));
  const std::vector<int> later = {3, 4, 5};
  const TraceForest h = EndTraces(g, k, later);
  for (const TraceChain& c : h.chains) {
    for (std::size_t i = 0; i < c.length(); ++i) {
      EXPECT_EQ(h.reports[i].components[c.components[i]].kind,
                ComponentKind::kFrontierTouching);
    }
  }
}

TEST(SymdiffTest, ExactExamples) {
  EXPECT_EQ(SymdiffExact(CellMap::Identity()), 0u);
  EXPECT_EQ(SymdiffExact(G(Generator::kX0)), 2u);
  EXPECT_EQ(SymdiffExact(G(Generator::kPi1)), 2u);
  // In F only the intervals [0, 2^-k) carry affine states.
  EXPECT_EQ(SymdiffExact(G(Generator::kX0), GroupClass::kF), 1u);
}

TEST(SymdiffTest, StandardGeneratorsMatchBreakpointEnumeration) {
  for (Generator gen : kStandardGenerators) {
    const CellMap v = G(gen);
    EXPECT_EQ(SymdiffExact(v),
              oracle::IntervalsStraddlingBreakpoints(v) +
                  oracle::IntervalsStraddlingBreakpoints(oracle::SwapPairs(v)))
        << GeneratorName(gen);
  }
}

TEST(SymdiffTest, RandomElementsMatchImageEnumeration) {
  std::mt19937_64 rng(12);
  for (GroupClass group : {GroupClass::kF, GroupClass::kT, GroupClass::kV}) {
    std::vector<Generator> gens = {Generator::kX0, Generator::kX1};
    if (group != GroupClass::kF) gens.push_back(Generator::kPi0);
    if (group == GroupClass::kV) gens.push_back(Generator::kPi1);
    const auto alphabet = SymmetrizedAlphabet(gens);
    for (int i = 0; i < 150; ++i) {
      const CellMap w = EvaluateWord(RandomWord(rng, 7, alphabet));
      ASSERT_EQ(NonAffineIntervalCount(w, group),
                oracle::BadImageIntervals(w, group))
          << GroupName(group) << " " << w;
    }
  }
}

TEST(SymdiffTest, BallLedgersCharacterizeFlips) {
  const CosetBall ball = VBall(5);
  for (const NamedElement& gen : ball.generators()) {
    const FlipLedger ledger = SymdiffBall(gen.map, ball, gen.name);
    EXPECT_EQ(ledger.total(), SymdiffExact(gen.map)) << gen.name;
    EXPECT_TRUE(ledger.stabilized) << gen.name;
    const auto bps = oracle::Breakpoints(gen.map);
    std::set<VertexId> flips;
    for (const Flip& f : ledger.flips) flips.insert(f.vertex);
    for (VertexId u = 0; u < ball.size(); ++u) {
      const CosetState s = ball.state(u);
      bool expected;
      if (s.is_affine()) {
        const mpq_class a = oracle::Q(s.patches()[0].image().left());
        const mpq_class b = oracle::Q(s.patches()[0].image().right());
        expected = std::any_of(bps.begin(), bps.end(),
                               [&](const auto& p) { return a < p && p < b; });
      } else {
        expected = Step(s, gen.map).is_affine();
      }
      ASSERT_EQ(flips.count(u) == 1, expected) << gen.name << " " << s.ToString();
    }
  }
  EXPECT_EQ(SymdiffBall(CellMap::Identity(), ball).total(), 0u);
}

TEST(CutTest, ConstantPredicateGivesEmptyCut) {
  const CutReport r =
      SageevCut(VBall(3), [](const CosetState&) { return true; });
  EXPECT_TRUE(r.cut_edges.empty());
  EXPECT_EQ(r.complement_side, 0u);
  EXPECT_TRUE(r.separated);
}

TEST(CutTest, CutEdgesAreLedgerFlips) {
  const CosetBall ball = VBall(5);
  const CutReport r = SageevCut(ball);
  EXPECT_TRUE(r.separated);
  std::map<std::uint16_t, std::set<VertexId>> ledgers;
  for (std::uint16_t k = 0; k < ball.generators().size(); ++k) {
    for (const Flip& f : SymdiffBall(ball.generators()[k].map, ball).flips) {
      ledgers[k].insert(f.vertex);
    }
  }
  for (const BallEdge& e : r.cut_edges) {
    EXPECT_NE(ball.state(e.from).is_affine(), ball.state(e.to).is_affine());
    EXPECT_TRUE(ledgers[e.gen].count(e.from)) << e.from;
  }
  // Independent separation check: drop cut edges and flood fill.
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (const BallEdge& e : ball.edges()) {
    if (ball.state(e.from).is_affine() == ball.state(e.to).is_affine()) {
      kept.emplace_back(e.from, e.to);
    }
  }
  std::vector<int> depth(ball.size());
  for (VertexId v = 0; v < ball.size(); ++v) depth[v] = ball.depth(v);
  const BallGraph pruned(ball.radius(), depth, kept);
  for (const auto& comp :
       oracle::Components(pruned, std::vector<bool>(ball.size(), false))) {
    const bool side = ball.state(comp.front()).is_affine();
    for (VertexId v : comp) ASSERT_EQ(ball.state(v).is_affine(), side);
  }
}

}  // namespace
}  // namespace thompson
