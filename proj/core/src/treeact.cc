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

#include <algorithm>
#include <limits>
#include <set>

#include "thompson/errors.h"

namespace thompson {
namespace {

bool IsB(char c) { return c == 'b' || c == 'B'; }

void Push(ModWord& stack, char c) {
  if (c == 'a') {
    if (!stack.empty() && stack.back() == 'a') {
      stack.pop_back();
    } else {
      stack.push_back('a');
    }
    return;
  }
  if (!stack.empty() && IsB(stack.back())) {
    const int sum = (stack.back() == 'b' ? 1 : 2) + (c == 'b' ? 1 : 2);
    if (sum % 3 == 0) {
      stack.pop_back();
    } else {
      stack.back() = sum % 3 == 1 ? 'b' : 'B';
    }
    return;
  }
  stack.push_back(c);
}

TreeVertex Canonical(ModWord w, char type) {
  if (!w.empty() && (type == 'A' ? w.back() == 'a' : IsB(w.back()))) {
    w.pop_back();
  }
  return TreeVertex{std::move(w), type};
}

int DistanceFromA(const TreeVertex& v) {
  if (v.word.empty()) return v.type == 'A' ? 0 : 1;
  return static_cast<int>(v.word.size()) + (IsB(v.word.front()) ? 1 : 0);
}

std::vector<TreeVertex> Neighbors(const TreeVertex& v) {
  if (v.type == 'A') {
    return {Canonical(v.word, 'B'), Canonical(Multiply(v.word, "a"), 'B')};
  }
  return {Canonical(v.word, 'A'), Canonical(Multiply(v.word, "b"), 'A'),
          Canonical(Multiply(v.word, "B"), 'A')};
}

bool ConnectedIn(const BallGraph& g, const std::vector<VertexId>& set) {
  if (set.empty()) return true;
  std::set<VertexId> members(set.begin(), set.end());
  std::set<VertexId> seen = {set.front()};
  std::vector<VertexId> stack = {set.front()};
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u)) {
      if (members.contains(w) && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == members.size();
}

}  // namespace

ModWord NormalForm(std::string_view word) {
  ModWord out;
  for (char c : word) {
    if (c == ' ' || c == '.' || c == '*' || c == '1') continue;
    if (c != 'a' && c != 'b' && c != 'B') {
      throw ParseError("bad letter '" + std::string(1, c) +
                       "' in modular group word");
    }
    Push(out, c);
  }
  return out;
}

ModWord Multiply(const ModWord& g, const ModWord& h) {
  ModWord out = g;
  for (char c : h) Push(out, c);
  return out;
}

ModWord Inverse(const ModWord& g) {
  ModWord out(g.rbegin(), g.rend());
  for (char& c : out) {
    if (c == 'b') {
      c = 'B';
    } else if (c == 'B') {
      c = 'b';
    }
  }
  return out;
}

std::string TreeVertex::ToString() const { return word + type; }

TreeVertex TreeVertex::Parse(std::string_view text) {
  if (text.empty() || (text.back() != 'A' && text.back() != 'B')) {
    throw ParseError("tree vertex must end in A or B: '" + std::string(text) +
                     "'");
  }
  const char type = text.back();
  TreeVertex v = Canonical(NormalForm(text.substr(0, text.size() - 1)), type);
  return v;
}

TreeVertex Act(const ModWord& g, const TreeVertex& v) {
  return Canonical(Multiply(g, v.word), v.type);
}

int TreeDistance(const TreeVertex& u, const TreeVertex& v) {
  const TreeVertex x = Act(Inverse(u.word), v);
  const int from_a = DistanceFromA(x);
  if (u.type == 'A') return from_a;
  // From B: one step less when the geodesic from A runs through B.
  const bool through_b =
      !(x.word.empty() && x.type == 'A') &&
      (x.word.empty() || IsB(x.word.front()));
  return through_b ? from_a - 1 : from_a + 1;
}

TreeBall::TreeBall(int radius) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  std::vector<int> depth = {0};
  std::vector<std::pair<VertexId, VertexId>> edges;
  vertices_ = {TreeVertex{"", 'A'}};
  index_.emplace(vertices_[0], 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (depth[v] == radius) continue;
    for (TreeVertex& w : Neighbors(vertices_[v])) {
      auto it = index_.find(w);
      if (it == index_.end()) {
        it = index_.emplace(w, static_cast<VertexId>(vertices_.size())).first;
        vertices_.push_back(std::move(w));
        depth.push_back(depth[v] + 1);
      }
      edges.emplace_back(static_cast<VertexId>(v), it->second);
    }
  }
  graph_ = BallGraph(radius, std::move(depth), edges);
}

std::optional<VertexId> TreeBall::Find(const TreeVertex& v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId TreeBall::ActInBall(const ModWord& g, VertexId v) const {
  const TreeVertex image = Act(g, vertices_[v]);
  const auto id = Find(image);
  if (!id) {
    throw OutOfBall(image.ToString() + " lies outside the radius " +
                    std::to_string(radius()) + " ball");
  }
  return *id;
}

std::vector<VertexId> TreeBall::FixedSet(const ModWord& g) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (Act(g, vertices_[v]) == vertices_[v]) out.push_back(v);
  }
  return out;
}

Isometry Classify(const ModWord& g, const TreeBall& ball) {
  Isometry out;
  if (g.empty()) {
    out.kind = Isometry::Kind::kElliptic;
    out.fixed_vertex = 0;
    return out;
  }
  if (ball.radius() < 2 * Syllables(g) + 2) return out;
  int best = std::numeric_limits<int>::max();
  std::vector<int> disp(ball.size());
  for (VertexId v = 0; v < ball.size(); ++v) {
    disp[v] = TreeDistance(ball.vertex(v), Act(g, ball.vertex(v)));
    best = std::min(best, disp[v]);
  }
  if (best == 0) {
    out.kind = Isometry::Kind::kElliptic;
    out.fixed_vertex = static_cast<VertexId>(
        std::find(disp.begin(), disp.end(), 0) - disp.begin());
    return out;
  }
  out.kind = Isometry::Kind::kHyperbolic;
  out.translation_length = best;
  // Minimal displacement is attained exactly on the axis; walk it from one
  // end of its intersection with the ball.
  std::vector<VertexId> axis;
  for (VertexId v = 0; v < ball.size(); ++v) {
    if (disp[v] == best) axis.push_back(v);
  }
  auto on_axis = [&](VertexId v) { return disp[v] == best; };
  VertexId start = axis.front();
  for (VertexId v : axis) {
    const auto nb = ball.graph().neighbors(v);
    if (std::count_if(nb.begin(), nb.end(), on_axis) <= 1) {
      start = v;
      break;
    }
  }
  std::set<VertexId> seen = {start};
  out.axis = {start};
  for (bool extended = true; extended;) {
    extended = false;
    for (VertexId w : ball.graph().neighbors(out.axis.back())) {
      if (on_axis(w) && seen.insert(w).second) {
        out.axis.push_back(w);
        extended = true;
        break;
      }
    }
  }
  return out;
}

std::vector<ModWord> EnumerateModWords(int n) {
  std::vector<ModWord> out = {""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const ModWord w = out[i];
    if (Syllables(w) == n) continue;
    for (char c : {'a', 'b', 'B'}) {
      if (!w.empty() && (c == 'a') == (w.back() == 'a')) continue;
      out.push_back(w + c);
    }
  }
  return out;
}

SuiteReport Lemma41Suite(const TreeBall& ball, int max_syllables) {
  if (ball.radius() < 4 * max_syllables + 2) {
    throw std::invalid_argument("tree ball too small for the suite");
  }
  SuiteReport report;
  report.max_syllables = max_syllables;
  const std::vector<ModWord> elements = EnumerateModWords(max_syllables);
  report.elements = elements.size();
  auto violation = [&](const std::string& what) {
    report.violations.push_back(what);
  };
  auto name = [](const ModWord& w) { return w.empty() ? std::string("1") : w; };

  std::vector<std::vector<VertexId>> fix(elements.size());
  std::vector<Isometry> iso(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const ModWord& g = elements[i];
    fix[i] = ball.FixedSet(g);
    iso[i] = Classify(g, ball);
    ++report.subtree_checks;
    if (!ConnectedIn(ball.graph(), fix[i])) {
      violation("Fix(" + name(g) + ") is not a subtree");
    }
    ++report.dichotomy_checks;
    const bool elliptic = iso[i].kind == Isometry::Kind::kElliptic;
    if (iso[i].kind == Isometry::Kind::kUnresolved) {
      violation(name(g) + " unresolved");
    } else if (elliptic == fix[i].empty()) {
      violation(name(g) + ": classification disagrees with its fixed set");
    } else if (!elliptic) {
      // The axis is a line translated by the translation length.
      const auto& axis = iso[i].axis;
      std::set<VertexId> on(axis.begin(), axis.end());
      for (std::size_t k = 0; k + 1 < axis.size(); ++k) {
        if (TreeDistance(ball.vertex(axis[k]), ball.vertex(axis[k + 1])) != 1) {
          violation(name(g) + ": axis is not a path");
        }
      }
      for (VertexId v : axis) {
        const TreeVertex image = Act(g, ball.vertex(v));
        const auto id = ball.Find(image);
        if (id && !on.contains(*id)) violation(name(g) + ": axis not invariant");
        if (TreeDistance(ball.vertex(v), image) != iso[i].translation_length) {
          violation(name(g) + ": axis displacement differs");
        }
      }
    }
  }

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      ++report.pairs;
      const ModWord& g1 = elements[i];
      const ModWord& g2 = elements[j];
      if (fix[i].empty() || fix[j].empty()) continue;
      std::vector<VertexId> common;
      std::set_intersection(fix[i].begin(), fix[i].end(), fix[j].begin(),
                            fix[j].end(), std::back_inserter(common));
      if (common.empty()) {
        ++report.disjoint_fix_checks;
        const Isometry p = Classify(Multiply(g1, g2), ball);
        if (p.kind != Isometry::Kind::kHyperbolic) {
          violation("Fix(" + name(g1) + "), Fix(" + name(g2) +
                    ") disjoint but the product is not hyperbolic");
        }
      }
      // g1 Fix(g2) = Fix(g2); the identity fixes the whole tree.
      bool stabilizes = true;
      if (!g2.empty()) {
        std::set<VertexId> f2(fix[j].begin(), fix[j].end());
        for (VertexId v : fix[j]) {
          const auto id = ball.Find(Act(g1, ball.vertex(v)));
          if (!id || !f2.contains(*id)) {
            stabilizes = false;
            break;
          }
        }
      }
      if (stabilizes) {
        ++report.stabilized_fix_checks;
        if (common.empty()) {
          violation(name(g1) + " stabilizes Fix(" + name(g2) +
                    ") but the fixed sets are disjoint");
        }
      }
    }
  }
  return report;
}

}  // namespace thompson
