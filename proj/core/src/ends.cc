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

#include <algorithm>
#include <set>

#include "thompson/errors.h"

namespace thompson {

// --- CompactSet -------------------------------------------------------------------

CompactSet::CompactSet(std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
}

bool CompactSet::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool CompactSet::IsConnected(const BallGraph& ball) const {
  if (vertices_.empty()) return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<VertexId> stack = {vertices_.front()};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : ball.neighbors(u)) {
      const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
      if (it == vertices_.end() || *it != w) continue;
      char& flag = seen[it - vertices_.begin()];
      if (flag) continue;
      flag = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == vertices_.size();
}

CompactSet CompactSet::Union(const CompactSet& other) const {
  std::vector<VertexId> all = vertices_;
  all.insert(all.end(), other.vertices_.begin(), other.vertices_.end());
  return CompactSet(std::move(all));
}

bool CompactSet::Intersects(const CompactSet& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

// --- components -------------------------------------------------------------------

std::size_t ComponentReport::frontier_touching() const {
  return static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(), [](const auto& c) {
        return c.kind == ComponentKind::kFrontierTouching;
      }));
}

std::size_t ComponentReport::closed_bounded() const {
  return components.size() - frontier_touching();
}

ComponentReport ComponentsMinus(const BallGraph& ball, const CompactSet& k) {
  ComponentReport report;
  report.radius = ball.radius();
  report.component_of.assign(ball.size(), -2);
  for (VertexId v : k.vertices()) {
    if (v >= ball.size()) throw OutOfBall("compact set vertex outside ball");
    report.component_of[v] = -1;
  }
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < ball.size(); ++root) {
    if (report.component_of[root] != -2) continue;
    const int index = static_cast<int>(report.components.size());
    Component c{{}, ComponentKind::kClosedBounded};
    report.component_of[root] = index;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      c.vertices.push_back(u);
      if (ball.is_frontier(u)) c.kind = ComponentKind::kFrontierTouching;
      for (VertexId w : ball.neighbors(u)) {
        if (report.component_of[w] != -2) continue;
        report.component_of[w] = index;
        stack.push_back(w);
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    report.components.push_back(std::move(c));
  }
  return report;
}

namespace {

bool Safe(const BallGraph& ball, VertexId v) {
  if (ball.is_frontier(v)) return false;
  for (VertexId w : ball.neighbors(v)) {
    if (ball.is_frontier(w)) return false;
  }
  return true;
}

}  // namespace

bool HasMargin(const BallGraph& ball, const CompactSet& k) {
  return std::all_of(k.vertices().begin(), k.vertices().end(), [&](VertexId v) {
    return v < ball.size() && Safe(ball, v);
  });
}

CompactSet Saturate(const BallGraph& ball, const CompactSet& k) {
  if (k.empty()) return k;
  if (!HasMargin(ball, k)) {
    throw MarginTooSmall("compact set reaches the frontier shell at radius " +
                         std::to_string(ball.radius()));
  }
  std::vector<char> in_k(ball.size(), 0);
  for (VertexId v : k.vertices()) in_k[v] = 1;

  // Grow the component of the first vertex until it holds all of K, joining
  // the nearest remaining piece through safe vertices each round.
  std::vector<char> joined(ball.size(), 0);
  std::vector<VertexId> stack = {k.vertices().front()};
  joined[k.vertices().front()] = 1;
  std::size_t joined_count = 1;
  for (;;) {
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : ball.neighbors(u)) {
        if (!in_k[w] || joined[w]) continue;
        joined[w] = 1;
        ++joined_count;
        stack.push_back(w);
      }
    }
    std::size_t k_total = 0;
    for (VertexId v = 0; v < ball.size(); ++v) k_total += in_k[v];
    if (joined_count == k_total) break;
    // Multi-source BFS from the joined part to any unjoined K vertex.
    std::vector<VertexId> parent(ball.size(), static_cast<VertexId>(-1));
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < ball.size(); ++v) {
      if (joined[v]) {
        parent[v] = v;
        queue.push_back(v);
      }
    }
    VertexId target = static_cast<VertexId>(-1);
    for (std::size_t head = 0; head < queue.size() && target == VertexId(-1);
         ++head) {
      const VertexId u = queue[head];
      for (VertexId w : ball.neighbors(u)) {
        if (parent[w] != static_cast<VertexId>(-1) || !Safe(ball, w)) continue;
        parent[w] = u;
        if (in_k[w]) {
          target = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (target == static_cast<VertexId>(-1)) {
      throw MarginTooSmall("cannot connect compact set away from the frontier");
    }
    for (VertexId v = parent[target]; !joined[v]; v = parent[v]) {
      in_k[v] = 1;
      joined[v] = 1;
      ++joined_count;
      stack.push_back(v);
    }
    joined[target] = 1;
    ++joined_count;
    stack.push_back(target);
  }

  std::vector<VertexId> out;
  for (VertexId v = 0; v < ball.size(); ++v) {
    if (in_k[v]) out.push_back(v);
  }
  const ComponentReport report = ComponentsMinus(ball, CompactSet(out));
  for (const Component& c : report.components) {
    if (c.kind == ComponentKind::kClosedBounded) {
      out.insert(out.end(), c.vertices.begin(), c.vertices.end());
    }
  }
  return CompactSet(std::move(out));
}

// --- amplification -------------------------------------------------------------

Amplification Amplify(const BallGraph& ball, const CompactSet& k,
                      const Translation& gamma) {
  auto fail = [](const std::string& what) {
    throw PreconditionUnverifiable(what);
  };
  if (k.empty()) fail("compact set is empty");
  if (!HasMargin(ball, k)) fail("compact set lacks a frontier margin");
  if (!k.IsConnected(ball)) fail("compact set is not connected");
  std::vector<VertexId> image;
  image.reserve(k.size());
  for (VertexId v : k.vertices()) {
    const std::optional<VertexId> w = gamma(v);
    if (!w) fail("translate leaves the ball");
    image.push_back(*w);
  }
  Amplification out;
  out.translate = CompactSet(std::move(image));
  if (out.translate.size() != k.size()) fail("translation is not injective");
  if (!HasMargin(ball, out.translate)) fail("translate lacks a frontier margin");
  if (!out.translate.IsConnected(ball)) fail("translate is not connected");
  if (k.Intersects(out.translate)) fail("translate meets the compact set");

  const ComponentReport rk = ComponentsMinus(ball, k);
  const ComponentReport rt = ComponentsMinus(ball, out.translate);
  const int host_k = rt.component_of[k.vertices().front()];
  const int host_t = rk.component_of[out.translate.vertices().front()];
  for (VertexId v : k.vertices()) {
    if (rt.component_of[v] != host_k) fail("K spans components of ball - gK");
  }
  for (VertexId v : out.translate.vertices()) {
    if (rk.component_of[v] != host_t) fail("gK spans components of ball - K");
  }
  out.n = rk.frontier_touching();
  out.n_translate = rt.frontier_touching();
  if (out.n_translate < out.n) {
    fail("translate has fewer frontier-touching components inside the ball");
  }
  out.report = ComponentsMinus(ball, k.Union(out.translate));
  out.bound = std::max<std::size_t>(2 * out.n, 3) - 2;
  out.certified = out.report.frontier_touching() >= out.bound;
  return out;
}

// --- traces ------------------------------------------------------------------------

std::size_t TraceForest::surviving() const {
  std::set<int> last;
  for (const TraceChain& c : chains) {
    if (c.length() == radii.size()) last.insert(c.components.back());
  }
  return last.size();
}

TraceForest EndTraces(const BallGraph& ball, const CompactSet& k,
                      std::span<const int> schedule) {
  if (schedule.empty()) throw std::invalid_argument("empty radius schedule");
  if (!std::is_sorted(schedule.begin(), schedule.end()) ||
      std::adjacent_find(schedule.begin(), schedule.end()) != schedule.end() ||
      schedule.back() > ball.radius()) {
    throw std::invalid_argument("radius schedule must increase within the ball");
  }
  TraceForest forest;
  for (int r : schedule) {
    const BallGraph g = ball.Truncated(r);
    if (!HasMargin(g, k)) {
      throw MarginTooSmall("compact set too close to the radius " +
                           std::to_string(r) + " frontier");
    }
    forest.radii.push_back(r);
    forest.reports.push_back(ComponentsMinus(g, k));
  }
  const ComponentReport& first = forest.reports.front();
  for (std::size_t c = 0; c < first.components.size(); ++c) {
    if (first.components[c].kind != ComponentKind::kFrontierTouching) continue;
    TraceChain chain;
    chain.components.push_back(static_cast<int>(c));
    const VertexId witness = first.components[c].vertices.front();
    for (std::size_t i = 1; i < forest.reports.size(); ++i) {
      const int next = forest.reports[i].component_of[witness];
      if (forest.reports[i].components[next].kind !=
          ComponentKind::kFrontierTouching) {
        break;
      }
      chain.components.push_back(next);
    }
    forest.chains.push_back(std::move(chain));
  }
  return forest;
}

// --- almost invariance -----------------------------------------------------------

std::size_t NonAffineIntervalCount(const CellMap& w, GroupClass group) {
  const auto& pairs = w.pairs();
  if (group == GroupClass::kF) {
    // Only [0, 2^-k) are images of affine F-states; they are internal nodes
    // along the left spine above the first cell.
    const std::uint32_t first = pairs.front().domain.level();
    return first > 1 ? first - 1 : 0;
  }
  return pairs.size() > 2 ? pairs.size() - 2 : 0;
}

std::size_t SymdiffExact(const CellMap& v, GroupClass group) {
  return NonAffineIntervalCount(v, group) +
         NonAffineIntervalCount(Invert(v), group);
}

FlipLedger SymdiffBall(const CellMap& v, const CosetBall& ball,
                       const std::string& name) {
  FlipLedger ledger;
  ledger.generator = name.empty() ? v.ToString() : name;
  int max_depth = -1;
  for (VertexId u = 0; u < ball.size(); ++u) {
    const CosetState s = ball.state(u);
    const bool a = MemberA(s);
    if (a != MemberA(Step(s, v))) {
      ledger.flips.push_back(Flip{u, a});
      max_depth = std::max(max_depth, ball.depth(u));
    }
  }
  ledger.stabilization_radius = max_depth + 1;
  ledger.stabilized = max_depth < ball.radius();
  return ledger;
}

CutReport SageevCut(const CosetBall& ball,
                    const std::function<bool(const CosetState&)>& predicate) {
  CutReport report;
  std::vector<char> side(ball.size());
  for (VertexId v = 0; v < ball.size(); ++v) {
    side[v] = predicate(ball.state(v)) ? 1 : 0;
    (side[v] ? report.a_side : report.complement_side)++;
  }
  std::vector<std::vector<VertexId>> adj(ball.size());
  for (const BallEdge& e : ball.edges()) {
    if (side[e.from] != side[e.to]) {
      report.cut_edges.push_back(e);
    } else {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
  }
  // Flood fill from every A vertex in the graph with cut edges removed.
  std::vector<char> reached(ball.size(), 0);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < ball.size(); ++v) {
    if (side[v]) {
      reached[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : adj[u]) {
      if (!reached[w]) {
        reached[w] = 1;
        stack.push_back(w);
      }
    }
  }
  report.separated = true;
  for (VertexId v = 0; v < ball.size(); ++v) {
    if (!side[v] && reached[v]) report.separated = false;
  }
  return report;
}

}  // namespace thompson
