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
#ifndef THOMPSON_TREEACT_H_
#define THOMPSON_TREEACT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/ballgraph.h"

namespace thompson {

// The modular group Z/2 * Z/3 = <a | a^2> * <b | b^3> acting on its
// Bass-Serre tree. Elements are reduced words over a, b and B = b^2, stored
// as strings: letters alternate between {a} and {b, B}.
using ModWord = std::string;

// Applies a^2 = 1, b^3 = 1 exhaustively. Accepts letters a, b, B; spaces and
// '.' are ignored; "1" is the identity. Throws ParseError on other letters.
ModWord NormalForm(std::string_view word);
ModWord Multiply(const ModWord& g, const ModWord& h);
ModWord Inverse(const ModWord& g);
inline int Syllables(const ModWord& w) { return static_cast<int>(w.size()); }

// Vertex wA or wB: left cosets of <a> and <b>. The word is canonical: it does
// not end in a letter of the vertex's own factor.
struct TreeVertex {
  ModWord word;
  char type = 'A';  // 'A' or 'B'
  std::string ToString() const;
  static TreeVertex Parse(std::string_view text);
  friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;
};

TreeVertex Act(const ModWord& g, const TreeVertex& v);
int TreeDistance(const TreeVertex& u, const TreeVertex& v);

// Vertices within distance L of A, in BFS order (ids as in BallGraph).
class TreeBall {
 public:
  explicit TreeBall(int radius);

  int radius() const { return graph_.radius(); }
  std::size_t size() const { return vertices_.size(); }
  const TreeVertex& vertex(VertexId v) const { return vertices_[v]; }
  const BallGraph& graph() const { return graph_; }
  std::optional<VertexId> Find(const TreeVertex& v) const;
  // g.v inside the ball; throws OutOfBall when the image escapes.
  VertexId ActInBall(const ModWord& g, VertexId v) const;
  std::vector<VertexId> FixedSet(const ModWord& g) const;

 private:
  BallGraph graph_;
  std::vector<TreeVertex> vertices_;
  std::map<TreeVertex, VertexId> index_;
};

struct Isometry {
  enum class Kind { kElliptic, kHyperbolic, kUnresolved };
  Kind kind = Kind::kUnresolved;
  std::optional<VertexId> fixed_vertex;  // elliptic
  int translation_length = 0;            // hyperbolic
  std::vector<VertexId> axis;            // hyperbolic, in order along the axis
};

// Needs radius >= 2 * Syllables(g) + 2, otherwise kUnresolved.
Isometry Classify(const ModWord& g, const TreeBall& ball);

struct SuiteReport {
  int max_syllables = 0;
  std::size_t elements = 0;
  std::size_t pairs = 0;
  std::size_t subtree_checks = 0;       // fixed sets are subtrees
  std::size_t dichotomy_checks = 0;     // elliptic xor hyperbolic, axes are lines
  std::size_t disjoint_fix_checks = 0;  // disjoint fixed sets => hyperbolic product
  std::size_t stabilized_fix_checks = 0;  // g1 Fix(g2) = Fix(g2) => meet
  std::vector<std::string> violations;
};

// Needs ball radius >= 4 * max_syllables + 2 so every product is resolved.
SuiteReport Lemma41Suite(const TreeBall& ball, int max_syllables);

// All reduced words with at most n letters, shortest first.
std::vector<ModWord> EnumerateModWords(int n);

}  // namespace thompson

#endif  // THOMPSON_TREEACT_H_
