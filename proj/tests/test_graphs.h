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
// Small graphs with known ends for the component tests.

#ifndef THOMPSON_TESTS_TEST_GRAPHS_H_
#define THOMPSON_TESTS_TEST_GRAPHS_H_

#include <cstdlib>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "thompson/ballgraph.h"
#include "thompson/ends.h"

namespace thompson::testing {

// Vertices of Z^2 at L1 distance <= r from the origin, in BFS order.
inline std::vector<std::pair<int, int>> GridPoints(int r) {
  std::vector<std::pair<int, int>> pts;
  for (int d = 0; d <= r; ++d) {
    for (int x = -d; x <= d; ++x) {
      const int y = d - std::abs(x);
      pts.emplace_back(x, y);
      if (y != 0) pts.emplace_back(x, -y);
    }
  }
  return pts;
}

// One-ended testbed.
inline BallGraph GridBall(int r) {
  const auto pts = GridPoints(r);
  std::map<std::pair<int, int>, VertexId> id;
  std::vector<int> depth;
  for (const auto& p : pts) {
    id[p] = static_cast<VertexId>(depth.size());
    depth.push_back(std::abs(p.first) + std::abs(p.second));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [p, v] : id) {
    for (const auto& q : {std::pair{p.first + 1, p.second},
                          std::pair{p.first, p.second + 1}}) {
      if (auto it = id.find(q); it != id.end()) edges.emplace_back(v, it->second);
    }
  }
  return BallGraph(r, depth, edges);
}

inline Translation GridShift(const BallGraph&, int r, int dx, int dy) {
  const auto pts = GridPoints(r);
  std::map<std::pair<int, int>, VertexId> id;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    id[pts[i]] = static_cast<VertexId>(i);
  }
  return [pts, id, dx, dy](VertexId v) -> std::optional<VertexId> {
    const auto it = id.find({pts[v].first + dx, pts[v].second + dy});
    if (it == id.end()) return std::nullopt;
    return it->second;
  };
}

// n random vertices at depth <= radius - 2.
inline CompactSet RandomInteriorSet(const BallGraph& g, std::mt19937_64& rng,
                                    int n) {
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.depth(v) <= g.radius() - 2) inner.push_back(v);
  }
  std::vector<VertexId> k;
  for (int i = 0; i < n; ++i) k.push_back(inner[rng() % inner.size()]);
  return CompactSet(std::move(k));
}

}  // namespace thompson::testing

#endif  // THOMPSON_TESTS_TEST_GRAPHS_H_
