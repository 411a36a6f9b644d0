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
#ifndef THOMPSON_ELEMENTS_H_
#define THOMPSON_ELEMENTS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/dyadic.h"

namespace thompson {

// Which of Thompson's groups an element lies in. Ordered by inclusion,
// F < T < V.
enum class GroupClass : std::uint8_t { kF = 0, kT = 1, kV = 2 };

inline GroupClass Join(GroupClass a, GroupClass b) { return a < b ? b : a; }
std::string_view GroupName(GroupClass c);
// Accepts "F", "T", "V" (case-insensitive). Throws ParseError.
GroupClass ParseGroupClass(std::string_view name);

struct CellPair {
  StdInterval domain;
  StdInterval range;
  friend bool operator==(const CellPair&, const CellPair&) = default;
};

// The affine map of a standard interval onto another standard interval:
// x -> 2^slope_exp * x + offset on domain.
class AffinePatch {
 public:
  AffinePatch(StdInterval domain, StdInterval image)
      : domain_(std::move(domain)), image_(std::move(image)) {}

  const StdInterval& domain() const { return domain_; }
  const StdInterval& image() const { return image_; }

  int slope_exp() const {
    return static_cast<int>(domain_.level()) - static_cast<int>(image_.level());
  }
  Dyadic offset() const;
  Dyadic Apply(const Dyadic& x) const;
  bool is_identity() const { return domain_ == image_; }
  // Same affine law x -> 2^s x + b, regardless of domain.
  bool SameLaw(const AffinePatch& other) const;

  std::string ToString() const;
  std::size_t Hash() const;

  friend bool operator==(const AffinePatch&, const AffinePatch&) = default;

 private:
  StdInterval domain_;
  StdInterval image_;
};

// Merges sibling patches that share one affine law until no merge applies,
// and sorts by domain. The result is the unique coarsest decomposition of the
// same map into patches with standard images.
std::vector<AffinePatch> NormalizePatches(std::vector<AffinePatch> patches);

// An element of V: a bijection of [0, 1) given by pairing a standard dyadic
// partition of the domain with one of the range, affine on each cell.
//
// The representation is always reduced, so two CellMaps are equal as records
// exactly when they are equal as functions. Composition convention is
// (g * h)(x) = g(h(x)).
class CellMap {
 public:
  // The identity.
  CellMap();

  static CellMap Identity() { return CellMap(); }
  // Validates that both sides partition [0, 1) (MalformedPartition otherwise)
  // and reduces.
  static CellMap FromPairs(std::vector<CellPair> pairs);
  // Parses "k/2^n -> k'/2^n', ..." as written by ToString().
  static CellMap Parse(std::string_view text);

  // Sorted by domain.
  const std::vector<CellPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  GroupClass group_class() const { return class_; }
  bool is_identity() const;
  std::uint32_t max_level() const;

  std::string ToString() const;
  std::size_t Hash() const;

  friend bool operator==(const CellMap& a, const CellMap& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  friend CellMap ReduceTrusted(std::vector<CellPair> pairs);

  std::vector<CellPair> pairs_;
  GroupClass class_ = GroupClass::kF;
};

std::ostream& operator<<(std::ostream& os, const CellMap& g);

// Same as CellMap::FromPairs.
CellMap Reduce(std::vector<CellPair> pairs);

// g after h.
CellMap Compose(const CellMap& g, const CellMap& h);
inline CellMap operator*(const CellMap& g, const CellMap& h) {
  return Compose(g, h);
}
CellMap Invert(const CellMap& g);
// g^n for any integer n.
CellMap Power(const CellMap& g, int n);
// k g k^-1.
CellMap Conjugate(const CellMap& g, const CellMap& k);

// Right-continuous evaluation; throws OutOfDomain unless 0 <= x < 1.
Dyadic Evaluate(const CellMap& g, const Dyadic& x);
// Limit of g(t) as t increases to x, for 0 < x <= 1.
Dyadic EvaluateLeftLimit(const CellMap& g, const Dyadic& x);

// Normalized affine patches of g restricted to the cell.
std::vector<AffinePatch> Restriction(const CellMap& g,
                                     const StdInterval& cell);

// Left endpoints (other than 0) of the maximal half-open intervals on which g
// is affine.
std::vector<Dyadic> Breakpoints(const CellMap& g);

bool IsIdentityOn(const CellMap& g, const StdInterval& cell);
// Membership in G_[0,1/2): identity on [0, 1/2). For F and T elements this is
// the same as fixing the closed interval, by continuity.
inline bool FixesHalf(const CellMap& g) {
  return IsIdentityOn(g, StdInterval::LeftHalf());
}

// A standard interval on which g is the identity, if there is one. The
// witness is the first reduced cell carrying the identity law; an affine map
// that fixes a subinterval is the identity, so this test is exact.
std::optional<StdInterval> SmallWitness(const CellMap& g);

// Coarsest list of standard intervals whose union is the set of cells on
// which g is not the identity. Empty iff g is the identity.
std::vector<StdInterval> Support(const CellMap& g);
bool SupportsDisjoint(const CellMap& g, const CellMap& h);

// Least n <= bound with g^n = 1.
std::optional<int> OrderUpTo(const CellMap& g, int bound);

enum class Generator { kX0, kX1, kPi0, kPi1 };
inline constexpr std::array<Generator, 4> kStandardGenerators = {
    Generator::kX0, Generator::kX1, Generator::kPi0, Generator::kPi1};

std::string_view GeneratorName(Generator g);
std::optional<Generator> ParseGenerator(std::string_view name);

// x0, x1 generate F; with pi0 they generate T; with pi1, V.
//   x0:  [0,1/2)->[0,1/4), [1/2,3/4)->[1/4,1/2), [3/4,1)->[1/2,1)
//   x1:  identity on [0,1/2), a copy of x0 squeezed onto [1/2,1)
//   pi0: [0,1/2)->[1/2,3/4), [1/2,3/4)->[3/4,1), [3/4,1)->[0,1/2)
//   pi1: identity on [0,1/2), swaps [1/2,3/4) and [3/4,1)
CellMap StandardGenerator(Generator g);

// Rotation t -> t + amount (mod 1) of the circle [0,1)/~; amount in [0, 1).
CellMap Rotation(const Dyadic& amount);

// The conjugate of g by the affine squeeze of [0, 1) onto cell, extended by
// the identity off the cell.
CellMap Squeeze(const CellMap& g, const StdInterval& cell);

// Arcs of the circle under t -> (cos 2 pi t, sin 2 pi t): U = (0, 1/2),
// D = (1/2, 1), L = (1/4, 3/4), R = (3/4, 5/4) wrapping through 0.
enum class Arc { kL, kR, kU, kD };
inline constexpr std::array<Arc, 4> kArcs = {Arc::kL, Arc::kR, Arc::kU,
                                             Arc::kD};
std::string_view ArcName(Arc a);

// Two generators of the copy of F supported on the arc: x0 and x1 squeezed
// onto [0, 1/2), then rotated into place.
std::array<CellMap, 2> ArcSubgroupGenerators(Arc arc);

}  // namespace thompson

template <>
struct std::hash<thompson::CellMap> {
  std::size_t operator()(const thompson::CellMap& g) const { return g.Hash(); }
};

#endif  // THOMPSON_ELEMENTS_H_
