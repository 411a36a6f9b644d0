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
#include "thompson/treeact.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.h"
#include "thompson/errors.h"

namespace thompson {
namespace {

TreeVertex V(const char* s) { return TreeVertex::Parse(s); }

// Reduction by a randomly chosen redex each time: aa, bbb, bB, Bb, BB -> b,
// bb -> B (as a length-two rewrite), until none applies.
std::string RandomRewrite(std::string w, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::pair<std::size_t, int>> redexes;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const std::string two = w.substr(i, 2);
      if (two == "aa" || two == "bB" || two == "Bb") redexes.push_back({i, 0});
      if (two == "bb") redexes.push_back({i, 1});
      if (two == "BB") redexes.push_back({i, 2});
    }
    if (redexes.empty()) return w;
    const auto [i, kind] = redexes[rng() % redexes.size()];
    if (kind == 0) {
      w.erase(i, 2);
    } else {
      w.replace(i, 2, kind == 1 ? "B" : "b");
    }
  }
}

TEST(NormalFormTest, Examples) {
  EXPECT_EQ(NormalForm("a a"), "");
  EXPECT_EQ(NormalForm("b b b"), "");
  EXPECT_EQ(NormalForm("a b B a"), "");
  EXPECT_EQ(NormalForm("a.b.b"), "aB");
  EXPECT_EQ(NormalForm("1"), "");
  EXPECT_THROW(NormalForm("abc"), ParseError);
}

TEST(NormalFormTest, ConfluentUnderRandomRewriting) {
  std::mt19937_64 rng(14);
  const std::string letters = "abB";
  for (int i = 0; i < 2000; ++i) {
    std::string w;
    const int n = static_cast<int>(rng() % 16);
    for (int j = 0; j < n; ++j) w += letters[rng() % 3];
    const ModWord nf = NormalForm(w);
    ASSERT_EQ(RandomRewrite(w, rng), nf) << w;
    ASSERT_EQ(RandomRewrite(w, rng), nf) << w;
  }
}

TEST(NormalFormTest, GroupLaws) {
  std::mt19937_64 rng(15);
  const auto words = EnumerateModWords(4);
  for (int i = 0; i < 500; ++i) {
    const ModWord& g = words[rng() % words.size()];
    const ModWord& h = words[rng() % words.size()];
    const ModWord& k = words[rng() % words.size()];
    ASSERT_EQ(Multiply(Multiply(g, h), k), Multiply(g, Multiply(h, k)));
    ASSERT_EQ(Multiply(g, Inverse(g)), "");
  }
}

TEST(TreeTest, BallIsATreeWithBiregularInterior) {
  for (int r = 0; r <= 8; ++r) {
    const TreeBall ball(r);
    const BallGraph& g = ball.graph();
    EXPECT_EQ(g.edge_count() + 1, g.size()) << r;
    const auto comps =
        oracle::Components(g, std::vector<bool>(g.size(), false));
    EXPECT_EQ(comps.size(), 1u);
    for (VertexId v = 0; v < g.size(); ++v) {
      if (g.is_frontier(v)) continue;
      EXPECT_EQ(g.neighbors(v).size(), ball.vertex(v).type == 'A' ? 2u : 3u);
      EXPECT_EQ(TreeDistance(V("A"), ball.vertex(v)), g.depth(v));
    }
  }
}

TEST(TreeTest, ActionIsByAutomorphisms) {
  const TreeBall ball(6);
  std::mt19937_64 rng(16);
  const auto words = EnumerateModWords(3);
  for (int i = 0; i < 200; ++i) {
    const ModWord& g = words[rng() % words.size()];
    const ModWord& h = words[rng() % words.size()];
    for (VertexId v = 0; v < ball.size(); v += 7) {
      const TreeVertex& x = ball.vertex(v);
      ASSERT_EQ(Act(Multiply(g, h), x), Act(g, Act(h, x)));
      for (VertexId w : ball.graph().neighbors(v)) {
        ASSERT_EQ(TreeDistance(Act(g, x), Act(g, ball.vertex(w))), 1);
      }
    }
  }
}

TEST(ClassifyTest, Examples) {
  const TreeBall ball(10);
  const Isometry a = Classify("a", ball);
  EXPECT_EQ(a.kind, Isometry::Kind::kElliptic);
  EXPECT_EQ(ball.vertex(*a.fixed_vertex), V("A"));

  const Isometry id = Classify("", ball);
  EXPECT_EQ(id.kind, Isometry::Kind::kElliptic);
  EXPECT_EQ(ball.vertex(*id.fixed_vertex), V("A"));

  const Isometry ab = Classify("ab", ball);
  ASSERT_EQ(ab.kind, Isometry::Kind::kHyperbolic);
  EXPECT_EQ(ab.translation_length, 2);
  std::set<TreeVertex> axis;
  for (VertexId v : ab.axis) axis.insert(ball.vertex(v));
  // abB is the coset a<b>, written aB.
  for (const char* s : {"A", "B", "abA", "aB"}) {
    EXPECT_TRUE(axis.count(V(s))) << s;
  }

  const Isometry p = Classify(NormalForm("a b a B"), ball);
  EXPECT_EQ(p.kind, Isometry::Kind::kHyperbolic);
  EXPECT_EQ(Classify("abab", TreeBall(3)).kind, Isometry::Kind::kUnresolved);
}

TEST(ClassifyTest, DisplacementOracleAndStability) {
  const auto words = EnumerateModWords(4);
  const TreeBall small(10), large(14);
  for (const ModWord& g : words) {
    int best = 1 << 30;
    for (VertexId v = 0; v < small.size(); ++v) {
      best = std::min(best, TreeDistance(small.vertex(v), Act(g, small.vertex(v))));
    }
    const Isometry s = Classify(g, small);
    const Isometry l = Classify(g, large);
    ASSERT_NE(s.kind, Isometry::Kind::kUnresolved) << g;
    ASSERT_EQ(s.kind, l.kind) << g;
    if (best == 0) {
      ASSERT_EQ(s.kind, Isometry::Kind::kElliptic) << g;
    } else {
      ASSERT_EQ(s.kind, Isometry::Kind::kHyperbolic) << g;
      ASSERT_EQ(s.translation_length, best) << g;
      ASSERT_EQ(l.translation_length, best) << g;
      for (VertexId v : s.axis) {
        ASSERT_EQ(TreeDistance(small.vertex(v), Act(g, small.vertex(v))), best);
      }
    }
  }
}

TEST(SuiteTest, PairFromTheDisjointFixedSetExample) {
  const TreeBall ball(12);
  EXPECT_EQ(ball.FixedSet("a"), std::vector<VertexId>{0});
  const ModWord g2 = NormalForm("b a B");
  const auto fix = ball.FixedSet(g2);
  ASSERT_EQ(fix.size(), 1u);
  EXPECT_EQ(ball.vertex(fix[0]), V("bA"));
  EXPECT_EQ(Classify(Multiply("a", g2), ball).kind, Isometry::Kind::kHyperbolic);
  EXPECT_EQ(ball.FixedSet("b"), ball.FixedSet("B"));
}

TEST(SuiteTest, SmallSuiteHasNoViolations) {
  const SuiteReport r = Lemma41Suite(TreeBall(10), 2);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_GT(r.disjoint_fix_checks, 0u);
  EXPECT_GT(r.stabilized_fix_checks, 0u);
  EXPECT_EQ(r.elements, EnumerateModWords(2).size());
}

}  // namespace
}  // namespace thompson
