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
#ifndef THOMPSON_BALLGRAPH_H_
#define THOMPSON_BALLGRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace thompson {

using VertexId = std::uint32_t;

// An explored ball of radius R around vertex 0 in some locally finite graph,
// as an undirected simple graph. Vertex ids are in BFS order, so depth is
// nondecreasing in the id and every sub-ball is an id prefix. Vertices at
// depth R form the frontier; all edges of non-frontier vertices are present.
class BallGraph {
 public:
  BallGraph() = default;
  // Self-loops and duplicate edges are dropped.
  BallGraph(int radius, std::vector<int> depth,
            const std::vector<std::pair<VertexId, VertexId>>& edges);

  int radius() const { return radius_; }
  std::size_t size() const { return depth_.size(); }
  int depth(VertexId v) const { return depth_[v]; }
  const std::vector<int>& depths() const { return depth_; }
  bool is_frontier(VertexId v) const { return depth_[v] == radius_; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  // The ball of radius r <= radius() with the same ids.
  BallGraph Truncated(int r) const;

  // Shortest path from a to b through vertices accepted by allowed (a and b
  // themselves need not be), or empty if none.
  template <typename Pred>
  std::vector<VertexId> ShortestPath(VertexId a, VertexId b,
                                     Pred allowed) const;

 private:
  int radius_ = 0;
  std::vector<int> depth_;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<VertexId> adjacency_;
};

// Cayley graph of the free group of the given rank on a, b, c, ... (a
// 2*rank-regular tree; rank 1 is the bi-infinite line). Used as a testbed
// with known ends: 2 for the line, infinitely many otherwise.
class FreeGroupBall {
 public:
  FreeGroupBall(int rank, int radius);

  const BallGraph& graph() const { return graph_; }
  int rank() const { return rank_; }
  // Letters are 1..rank for generators and -1..-rank for inverses.
  const std::vector<int>& word(VertexId v) const { return words_[v]; }
  std::optional<VertexId> Find(const std::vector<int>& word) const;
  // Left multiplication by u, a graph automorphism of the full tree. Returns
  // nullopt when the image leaves the ball.
  std::optional<VertexId> Translate(const std::vector<int>& u,
                                    VertexId v) const;

 private:
  int rank_;
  BallGraph graph_;
  std::vector<std::vector<int>> words_;
  std::map<std::vector<int>, VertexId> index_;
};

// --- template implementation ---------------------------------------------

template <typename Pred>
std::vector<VertexId> BallGraph::ShortestPath(VertexId a, VertexId b,
                                              Pred allowed) const {
  std::vector<VertexId> parent(size(), static_cast<VertexId>(-1));
  std::vector<VertexId> queue = {a};
  parent[a] = a;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    if (u == b) break;
    for (VertexId w : neighbors(u)) {
      if (parent[w] != static_cast<VertexId>(-1)) continue;
      if (w != b && !allowed(w)) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[b] == static_cast<VertexId>(-1)) return {};
  std::vector<VertexId> path = {b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  return {path.rbegin(), path.rend()};
}

}  // namespace thompson

#endif  // THOMPSON_BALLGRAPH_H_
