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
#ifndef THOMPSON_ENDS_H_
#define THOMPSON_ENDS_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thompson/ballgraph.h"
#include "thompson/cosetgraph.h"

namespace thompson {

// A finite vertex set, kept sorted and duplicate free.
class CompactSet {
 public:
  CompactSet() = default;
  explicit CompactSet(std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(VertexId v) const;
  bool IsConnected(const BallGraph& ball) const;
  CompactSet Union(const CompactSet& other) const;
  bool Intersects(const CompactSet& other) const;

  friend bool operator==(const CompactSet&, const CompactSet&) = default;

 private:
  std::vector<VertexId> vertices_;
};

enum class ComponentKind { kClosedBounded, kFrontierTouching };

struct Component {
  std::vector<VertexId> vertices;  // sorted
  ComponentKind kind;
};

// Components of ball minus K. component_of[v] is the component index of v,
// or -1 for v in K.
struct ComponentReport {
  int radius = 0;
  std::vector<Component> components;
  std::vector<int> component_of;

  std::size_t frontier_touching() const;
  std::size_t closed_bounded() const;
};

ComponentReport ComponentsMinus(const BallGraph& ball, const CompactSet& k);

// True when K avoids the frontier and every neighbor of the frontier
// ("margin >= 1"). Only such K have complement components whose closed or
// frontier-touching status is meaningful.
bool HasMargin(const BallGraph& ball, const CompactSet& k);

// Connects K along shortest ball paths and absorbs every component of ball
// minus K that does not reach the frontier. Throws MarginTooSmall when K (or
// a joining path) comes within distance 1 of the frontier.
CompactSet Saturate(const BallGraph& ball, const CompactSet& k);

// A covering translation restricted to the ball; nullopt when the image
// leaves the ball.
using Translation = std::function<std::optional<VertexId>(VertexId)>;

struct Amplification {
  CompactSet translate;           // gamma K
  std::size_t n = 0;              // frontier-touching count for K
  std::size_t n_translate = 0;    // frontier-touching count for gamma K
  ComponentReport report;         // for K union gamma K
  std::size_t bound = 0;          // max(2n - 2, 1)
  bool certified = false;         // report reaches the bound
};

// Checks, inside the ball, the hypotheses of the two-translate argument: K
// connected with margin, gamma K inside the ball with margin, connected and
// disjoint from K, gamma K inside one component of ball minus K and vice
// versa, and gamma K having at least n frontier-touching complement
// components. Throws PreconditionUnverifiable otherwise.
Amplification Amplify(const BallGraph& ball, const CompactSet& k,
                      const Translation& gamma);

// Links frontier-touching components across an increasing radius schedule
// for a fixed K. Each chain starts at one frontier-touching component of the
// smallest radius and follows the components containing it until one of them
// is closed.
struct TraceChain {
  // Component index at schedule[i], for i < length.
  std::vector<int> components;
  std::size_t length() const { return components.size(); }
};

struct TraceForest {
  std::vector<int> radii;
  std::vector<ComponentReport> reports;
  std::vector<TraceChain> chains;
  // Distinct frontier-touching components reached by chains at the largest
  // radius.
  std::size_t surviving() const;
};

// ball must have radius >= schedule.back(); schedule increasing.
TraceForest EndTraces(const BallGraph& ball, const CompactSet& k,
                      std::span<const int> schedule);

// --- almost invariance of A on coset balls -----------------------------------

inline bool MemberA(const CosetState& s) { return s.is_affine(); }

// |vA symmetric-difference A| in the coset graph of the given group, i.e.
// the number of states u with member_A(u) != member_A(v u):
// count(v) + count(v^-1).
std::size_t SymdiffExact(const CellMap& v, GroupClass group = GroupClass::kV);
// count(w): affine states u (image a standard interval I of level >= 1; for
// F only I = [0, 2^-k)) with w u not affine, i.e. I not inside a reduced cell
// of w. The reduced cells are the leaves of a binary tree whose internal
// nodes are exactly those I (plus the root [0,1)).
std::size_t NonAffineIntervalCount(const CellMap& w,
                                   GroupClass group = GroupClass::kV);

struct Flip {
  VertexId vertex;
  bool from_a;  // member_A of the vertex (the image has the opposite value)
};

struct FlipLedger {
  std::string generator;
  std::vector<Flip> flips;
  std::size_t total() const { return flips.size(); }
  // Least d such that no flip vertex has depth >= d.
  int stabilization_radius = 0;
  // Whether every flip lies at depth < radius, so that all flips involving
  // the listed vertices were visible.
  bool stabilized = false;
};

// Flip states u (depth < radius) with member_A(u) != member_A(v u).
FlipLedger SymdiffBall(const CellMap& v, const CosetBall& ball,
                       const std::string& name = "");

struct CutReport {
  std::vector<BallEdge> cut_edges;
  std::size_t a_side = 0;
  std::size_t complement_side = 0;
  bool separated = false;  // no path in ball minus cut joins the two sides
};

CutReport SageevCut(const CosetBall& ball,
                    const std::function<bool(const CosetState&)>& predicate =
                        MemberA);

}  // namespace thompson

#endif  // THOMPSON_ENDS_H_
