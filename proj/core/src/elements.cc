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
#include "thompson/elements.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "thompson/errors.h"

namespace thompson {
namespace {

std::size_t HashCombine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool ByDomain(const CellPair& a, const CellPair& b) {
  return a.domain < b.domain;
}

bool ByRange(const CellPair& a, const CellPair& b) { return a.range < b.range; }

// Both children of one parent, in order.
bool AreSiblings(const StdInterval& left, const StdInterval& right) {
  return left.level() == right.level() && left.is_left_child() &&
         right.index() == left.index() + 1;
}

// sub lies inside sup; true iff they end at the same point.
bool SharesRightEnd(const StdInterval& sub, const StdInterval& sup) {
  const std::uint32_t d = sub.level() - sup.level();
  return sub.index() + 1 == ((sup.index() + 1) << d);
}

template <typename Cells>
void CheckPartition(const Cells& cells, const char* side) {
  Dyadic expected = 0;
  for (const StdInterval& c : cells) {
    if (c.left() != expected) {
      throw MalformedPartition(std::string(side) +
                               " cells do not partition [0,1) at " +
                               c.ToString());
    }
    expected = c.right();
  }
  if (expected != 1) {
    throw MalformedPartition(std::string(side) + " cells do not cover [0,1)");
  }
}

GroupClass Classify(const std::vector<CellPair>& pairs) {
  // pairs sorted by domain. Locate the cell whose range starts at 0 and check
  // that ranges increase cyclically from there.
  const std::size_t n = pairs.size();
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pairs[i].range.index().is_zero()) {
      start = i;
      break;
    }
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const StdInterval& a = pairs[(start + k) % n].range;
    const StdInterval& b = pairs[(start + k + 1) % n].range;
    if (a.right() != b.left()) return GroupClass::kV;
  }
  return start == 0 ? GroupClass::kF : GroupClass::kT;
}

}  // namespace

std::string_view GroupName(GroupClass c) {
  switch (c) {
    case GroupClass::kF:
      return "F";
    case GroupClass::kT:
      return "T";
    case GroupClass::kV:
      return "V";
  }
  return "?";
}

GroupClass ParseGroupClass(std::string_view name) {
  if (name.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
      case 'F':
        return GroupClass::kF;
      case 'T':
        return GroupClass::kT;
      case 'V':
        return GroupClass::kV;
      default:
        break;
    }
  }
  throw ParseError("unknown group '" + std::string(name) + "' (want F, T, V)");
}

// --- AffinePatch -------------------------------------------------------------

Dyadic AffinePatch::offset() const {
  return image_.left() - domain_.left().Shifted(slope_exp());
}

Dyadic AffinePatch::Apply(const Dyadic& x) const {
  return (x - domain_.left()).Shifted(slope_exp()) + image_.left();
}

bool AffinePatch::SameLaw(const AffinePatch& other) const {
  return slope_exp() == other.slope_exp() && offset() == other.offset();
}

std::string AffinePatch::ToString() const {
  return domain_.ToString() + " -> " + image_.ToString();
}

std::size_t AffinePatch::Hash() const {
  return HashCombine(domain_.Hash(), image_.Hash());
}

std::vector<AffinePatch> NormalizePatches(std::vector<AffinePatch> patches) {
  std::sort(patches.begin(), patches.end(),
            [](const AffinePatch& a, const AffinePatch& b) {
              return a.domain() < b.domain();
            });
  std::vector<AffinePatch> stack;
  stack.reserve(patches.size());
  for (AffinePatch& p : patches) {
    stack.push_back(std::move(p));
    while (stack.size() >= 2) {
      const AffinePatch& a = stack[stack.size() - 2];
      const AffinePatch& b = stack.back();
      if (!AreSiblings(a.domain(), b.domain()) ||
          !AreSiblings(a.image(), b.image())) {
        break;
      }
      AffinePatch merged(*a.domain().Parent(), *a.image().Parent());
      stack.pop_back();
      stack.back() = std::move(merged);
    }
  }
  return stack;
}

// --- CellMap -------------------------------------------------------------------

CellMap::CellMap() : pairs_{CellPair{StdInterval(), StdInterval()}} {}

// Pairs must already form partitions on both sides.
CellMap ReduceTrusted(std::vector<CellPair> pairs) {
  std::sort(pairs.begin(), pairs.end(), ByDomain);
  std::vector<CellPair> stack;
  stack.reserve(pairs.size());
  for (CellPair& p : pairs) {
    stack.push_back(std::move(p));
    while (stack.size() >= 2) {
      const CellPair& a = stack[stack.size() - 2];
      const CellPair& b = stack.back();
      if (!AreSiblings(a.domain, b.domain) || !AreSiblings(a.range, b.range)) {
        break;
      }
      CellPair merged{*a.domain.Parent(), *a.range.Parent()};
      stack.pop_back();
      stack.back() = std::move(merged);
    }
  }
  CellMap g;
  g.class_ = Classify(stack);
  g.pairs_ = std::move(stack);
  return g;
}

CellMap CellMap::FromPairs(std::vector<CellPair> pairs) {
  if (pairs.empty()) throw MalformedPartition("no cells");
  std::vector<StdInterval> domains, ranges;
  domains.reserve(pairs.size());
  ranges.reserve(pairs.size());
  for (const CellPair& p : pairs) {
    domains.push_back(p.domain);
    ranges.push_back(p.range);
  }
  std::sort(domains.begin(), domains.end());
  std::sort(ranges.begin(), ranges.end());
  CheckPartition(domains, "domain");
  CheckPartition(ranges, "range");
  return ReduceTrusted(std::move(pairs));
}

CellMap Reduce(std::vector<CellPair> pairs) {
  return CellMap::FromPairs(std::move(pairs));
}

CellMap CellMap::Parse(std::string_view text) {
  std::vector<CellPair> pairs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    const auto arrow = item.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("expected 'k/2^n -> k'/2^n'' in '" + std::string(item) +
                       "'");
    }
    pairs.push_back(CellPair{StdInterval::Parse(item.substr(0, arrow)),
                             StdInterval::Parse(item.substr(arrow + 2))});
    pos = comma + 1;
  }
  return FromPairs(std::move(pairs));
}

bool CellMap::is_identity() const {
  return pairs_.size() == 1 && pairs_[0].domain == pairs_[0].range;
}

std::uint32_t CellMap::max_level() const {
  std::uint32_t m = 0;
  for (const CellPair& p : pairs_) {
    m = std::max({m, p.domain.level(), p.range.level()});
  }
  return m;
}

std::string CellMap::ToString() const {
  std::string out;
  for (const CellPair& p : pairs_) {
    if (!out.empty()) out += ", ";
    out += p.domain.ToString();
    out += " -> ";
    out += p.range.ToString();
  }
  return out;
}

std::size_t CellMap::Hash() const {
  std::size_t h = pairs_.size();
  for (const CellPair& p : pairs_) {
    h = HashCombine(h, p.domain.Hash());
    h = HashCombine(h, p.range.Hash());
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const CellMap& g) {
  return os << g.ToString();
}

CellMap Compose(const CellMap& g, const CellMap& h) {
  // Walk the common refinement of h's range partition and g's domain
  // partition; both are ordered by left endpoint, and two standard intervals
  // with the same left endpoint are nested.
  std::vector<CellPair> inner = h.pairs();
  std::sort(inner.begin(), inner.end(), ByRange);
  const std::vector<CellPair>& outer = g.pairs();

  std::vector<CellPair> out;
  out.reserve(inner.size() + outer.size());
  std::size_t i = 0, j = 0;
  while (i < inner.size() && j < outer.size()) {
    const CellPair& a = inner[i];
    const CellPair& b = outer[j];
    if (a.range.level() >= b.domain.level()) {
      out.push_back(
          CellPair{a.domain, Transport(a.range, b.domain, b.range)});
      if (SharesRightEnd(a.range, b.domain)) ++j;
      ++i;
    } else {
      out.push_back(
          CellPair{Transport(b.domain, a.range, a.domain), b.range});
      if (SharesRightEnd(b.domain, a.range)) ++i;
      ++j;
    }
  }
  return ReduceTrusted(std::move(out));
}

CellMap Invert(const CellMap& g) {
  std::vector<CellPair> pairs;
  pairs.reserve(g.size());
  for (const CellPair& p : g.pairs()) pairs.push_back(CellPair{p.range, p.domain});
  return ReduceTrusted(std::move(pairs));
}

CellMap Power(const CellMap& g, int n) {
  CellMap base = n < 0 ? Invert(g) : g;
  unsigned e = static_cast<unsigned>(n < 0 ? -static_cast<long>(n) : n);
  CellMap result;
  while (e > 0) {
    if (e & 1U) result = Compose(result, base);
    e >>= 1;
    if (e > 0) base = Compose(base, base);
  }
  return result;
}

CellMap Conjugate(const CellMap& g, const CellMap& k) {
  return Compose(Compose(k, g), Invert(k));
}

namespace {

// Index of the cell whose domain contains x (0 <= x < 1).
std::size_t FindCell(const CellMap& g, const Dyadic& x) {
  const auto& pairs = g.pairs();
  auto it = std::upper_bound(
      pairs.begin(), pairs.end(), x,
      [](const Dyadic& v, const CellPair& p) { return v < p.domain.left(); });
  return static_cast<std::size_t>(it - pairs.begin()) - 1;
}

}  // namespace

Dyadic Evaluate(const CellMap& g, const Dyadic& x) {
  if (x < 0 || x >= 1) {
    throw OutOfDomain("evaluation point " + x.ToString() +
                      " is outside [0,1)");
  }
  const CellPair& p = g.pairs()[FindCell(g, x)];
  return AffinePatch(p.domain, p.range).Apply(x);
}

Dyadic EvaluateLeftLimit(const CellMap& g, const Dyadic& x) {
  if (x <= 0 || x > 1) {
    throw OutOfDomain("left limit point " + x.ToString() +
                      " is outside (0,1]");
  }
  const auto& pairs = g.pairs();
  auto it = std::lower_bound(
      pairs.begin(), pairs.end(), x,
      [](const CellPair& p, const Dyadic& v) { return p.domain.left() < v; });
  const CellPair& p = *(it - 1);
  return AffinePatch(p.domain, p.range).Apply(x);
}

std::vector<AffinePatch> Restriction(const CellMap& g,
                                     const StdInterval& cell) {
  std::vector<AffinePatch> patches;
  for (const CellPair& p : g.pairs()) {
    switch (Relate(p.domain, cell)) {
      case Relation::kEqual:
      case Relation::kIinJ:
        patches.emplace_back(p.domain, p.range);
        break;
      case Relation::kJinI:
        patches.emplace_back(cell, Transport(cell, p.domain, p.range));
        break;
      case Relation::kDisjoint:
        break;
    }
  }
  return NormalizePatches(std::move(patches));
}

std::vector<Dyadic> Breakpoints(const CellMap& g) {
  std::vector<Dyadic> out;
  const auto& pairs = g.pairs();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const AffinePatch prev(pairs[i - 1].domain, pairs[i - 1].range);
    const AffinePatch cur(pairs[i].domain, pairs[i].range);
    if (!prev.SameLaw(cur)) out.push_back(cur.domain().left());
  }
  return out;
}

bool IsIdentityOn(const CellMap& g, const StdInterval& cell) {
  for (const CellPair& p : g.pairs()) {
    switch (Relate(p.domain, cell)) {
      case Relation::kEqual:
      case Relation::kIinJ:
      case Relation::kJinI:
        if (p.domain != p.range) return false;
        break;
      case Relation::kDisjoint:
        break;
    }
  }
  return true;
}

std::optional<StdInterval> SmallWitness(const CellMap& g) {
  for (const CellPair& p : g.pairs()) {
    if (p.domain == p.range) return p.domain;
  }
  return std::nullopt;
}

std::vector<StdInterval> Support(const CellMap& g) {
  std::vector<StdInterval> stack;
  for (const CellPair& p : g.pairs()) {
    if (p.domain == p.range) continue;
    stack.push_back(p.domain);
    while (stack.size() >= 2 &&
           AreSiblings(stack[stack.size() - 2], stack.back())) {
      stack.pop_back();
      stack.back() = *stack.back().Parent();
    }
  }
  return stack;
}

bool SupportsDisjoint(const CellMap& g, const CellMap& h) {
  for (const StdInterval& a : Support(g)) {
    for (const StdInterval& b : Support(h)) {
      if (Relate(a, b) != Relation::kDisjoint) return false;
    }
  }
  return true;
}

std::optional<int> OrderUpTo(const CellMap& g, int bound) {
  if (bound < 1) throw std::invalid_argument("order bound must be >= 1");
  CellMap p = g;
  for (int n = 1; n <= bound; ++n) {
    if (p.is_identity()) return n;
    p = Compose(p, g);
  }
  return std::nullopt;
}

std::string_view GeneratorName(Generator g) {
  switch (g) {
    case Generator::kX0:
      return "x0";
    case Generator::kX1:
      return "x1";
    case Generator::kPi0:
      return "pi0";
    case Generator::kPi1:
      return "pi1";
  }
  return "?";
}

std::optional<Generator> ParseGenerator(std::string_view name) {
  for (Generator g : kStandardGenerators) {
    if (GeneratorName(g) == name) return g;
  }
  return std::nullopt;
}

CellMap StandardGenerator(Generator g) {
  auto cell = [](int k, std::uint32_t n) { return StdInterval(k, n); };
  switch (g) {
    case Generator::kX0:
      return CellMap::FromPairs({{cell(0, 1), cell(0, 2)},
                                 {cell(2, 2), cell(1, 2)},
                                 {cell(3, 2), cell(1, 1)}});
    case Generator::kX1:
      return CellMap::FromPairs({{cell(0, 1), cell(0, 1)},
                                 {cell(2, 2), cell(4, 3)},
                                 {cell(6, 3), cell(5, 3)},
                                 {cell(7, 3), cell(3, 2)}});
    case Generator::kPi0:
      return CellMap::FromPairs({{cell(0, 1), cell(2, 2)},
                                 {cell(2, 2), cell(3, 2)},
                                 {cell(3, 2), cell(0, 1)}});
    case Generator::kPi1:
      return CellMap::FromPairs({{cell(0, 1), cell(0, 1)},
                                 {cell(2, 2), cell(3, 2)},
                                 {cell(3, 2), cell(2, 2)}});
  }
  return CellMap();
}

CellMap Rotation(const Dyadic& amount) {
  if (amount < 0 || amount >= 1) {
    throw OutOfDomain("rotation amount must lie in [0,1)");
  }
  const std::uint32_t level = amount.exponent();
  const Integer cells = Integer(1) << level;
  std::vector<CellPair> pairs;
  for (Integer k = 0; k < cells; ++k) {
    pairs.push_back(CellPair{StdInterval(k, level),
                             StdInterval((k + amount.mantissa()) % cells, level)});
  }
  return ReduceTrusted(std::move(pairs));
}

CellMap Squeeze(const CellMap& g, const StdInterval& cell) {
  std::vector<CellPair> pairs;
  for (const CellPair& p : g.pairs()) {
    pairs.push_back(CellPair{Transport(p.domain, StdInterval(), cell),
                             Transport(p.range, StdInterval(), cell)});
  }
  for (const auto& c : DecomposeRange(0, cell.left())) pairs.push_back({c, c});
  for (const auto& c : DecomposeRange(cell.right(), 1)) pairs.push_back({c, c});
  return ReduceTrusted(std::move(pairs));
}

std::string_view ArcName(Arc a) {
  switch (a) {
    case Arc::kL:
      return "L";
    case Arc::kR:
      return "R";
    case Arc::kU:
      return "U";
    case Arc::kD:
      return "D";
  }
  return "?";
}

std::array<CellMap, 2> ArcSubgroupGenerators(Arc arc) {
  const StdInterval upper = StdInterval::LeftHalf();
  std::array<CellMap, 2> gens = {
      Squeeze(StandardGenerator(Generator::kX0), upper),
      Squeeze(StandardGenerator(Generator::kX1), upper)};
  if (arc == Arc::kU) return gens;
  if (arc == Arc::kL || arc == Arc::kR) {
    const CellMap quarter = Rotation(Dyadic(1, 2));
    for (auto& g : gens) g = Conjugate(g, quarter);
  }
  if (arc == Arc::kR || arc == Arc::kD) {
    const CellMap half = Rotation(Dyadic(1, 1));
    for (auto& g : gens) g = Conjugate(g, half);
  }
  return gens;
}

}  // namespace thompson
