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
#include "thompson/ballgraph.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace thompson {

BallGraph::BallGraph(int radius, std::vector<int> depth,
                     const std::vector<std::pair<VertexId, VertexId>>& edges)
    : radius_(radius), depth_(std::move(depth)) {
  const std::size_t n = depth_.size();
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    if (a >= n || b >= n) throw std::out_of_range("edge endpoint not in ball");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    offsets_[v + 1] = offsets_[v] + list.size();
  }
  adjacency_.reserve(offsets_[n]);
  for (auto& list : adj) {
    adjacency_.insert(adjacency_.end(), list.begin(), list.end());
  }
}

BallGraph BallGraph::Truncated(int r) const {
  if (r > radius_) throw std::invalid_argument("cannot truncate to larger radius");
  const auto end = std::upper_bound(depth_.begin(), depth_.end(), r);
  const auto n = static_cast<std::size_t>(end - depth_.begin());
  BallGraph out;
  out.radius_ = r;
  out.depth_.assign(depth_.begin(), end);
  out.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexId w : neighbors(static_cast<VertexId>(v))) {
      if (w < n) out.adjacency_.push_back(w);
    }
    out.offsets_[v + 1] = out.adjacency_.size();
  }
  return out;
}

namespace {

std::vector<int> Reduced(std::vector<int> w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

FreeGroupBall::FreeGroupBall(int rank, int radius) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  std::vector<int> depth = {0};
  words_ = {{}};
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<int> letters;
  for (int i = 1; i <= rank; ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  // Reduced words of length d + 1 extend words of length d by a letter that
  // does not cancel, so BFS order is generation order.
  for (std::size_t v = 0; v < words_.size(); ++v) {
    if (depth[v] == radius) continue;
    for (int l : letters) {
      const auto& w = words_[v];
      if (!w.empty() && w.back() == -l) continue;
      std::vector<int> child = w;
      child.push_back(l);
      words_.push_back(std::move(child));
      depth.push_back(depth[v] + 1);
      edges.emplace_back(static_cast<VertexId>(v),
                         static_cast<VertexId>(words_.size() - 1));
    }
  }
  for (std::size_t v = 0; v < words_.size(); ++v) {
    index_.emplace(words_[v], static_cast<VertexId>(v));
  }
  graph_ = BallGraph(radius, std::move(depth), edges);
}

std::optional<VertexId> FreeGroupBall::Find(const std::vector<int>& word) const {
  const std::vector<int> w = Reduced(word);
  if (static_cast<int>(w.size()) > graph_.radius()) return std::nullopt;
  const auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> FreeGroupBall::Translate(const std::vector<int>& u,
                                                 VertexId v) const {
  std::vector<int> w = u;
  w.insert(w.end(), words_[v].begin(), words_[v].end());
  return Find(w);
}

}  // namespace thompson
