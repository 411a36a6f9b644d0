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
#include "thompson/cosetgraph.h"

#include <algorithm>
#include <functional>
#include <thread>

#include "thompson/errors.h"

namespace thompson {
namespace {

void PutVarint(std::string& out, std::uint32_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

std::uint32_t GetVarint(std::string_view key, std::size_t& pos) {
  std::uint32_t v = 0;
  for (int shift = 0;; shift += 7) {
    const auto byte = static_cast<unsigned char>(key.at(pos++));
    v |= static_cast<std::uint32_t>(byte & 0x7f) << shift;
    if (!(byte & 0x80)) return v;
  }
}

void PutIndex(std::string& out, const Integer& index, std::uint32_t level) {
  const std::uint32_t bytes = (level + 7) / 8;
  if (level <= 64) {
    auto v = index.convert_to<std::uint64_t>();
    for (std::uint32_t k = 0; k < bytes; ++k, v >>= 8) {
      out.push_back(static_cast<char>(v & 0xff));
    }
    return;
  }
  Integer v = index;
  for (std::uint32_t k = 0; k < bytes; ++k, v >>= 8) {
    out.push_back(static_cast<char>(static_cast<unsigned>(v & 0xff)));
  }
}

Integer GetIndex(std::string_view key, std::size_t& pos, std::uint32_t level) {
  const std::uint32_t bytes = (level + 7) / 8;
  if (pos + bytes > key.size()) throw std::out_of_range("truncated state key");
  Integer v = 0;
  for (std::uint32_t k = bytes; k-- > 0;) {
    v <<= 8;
    v |= static_cast<unsigned char>(key[pos + k]);
  }
  pos += bytes;
  return v;
}

// Post-composes patch p with a map given by cells sorted by domain whose
// domains cover p's image.
void ApplyOuter(const std::vector<CellPair>& outer, const AffinePatch& p,
                std::vector<AffinePatch>& out) {
  const StdInterval& img = p.image();
  auto it = std::upper_bound(outer.begin(), outer.end(), img,
                             [](const StdInterval& x, const CellPair& c) {
                               return CompareLeft(x, c.domain) < 0;
                             });
  --it;
  if (it->domain.level() <= img.level()) {
    out.emplace_back(p.domain(), Transport(img, it->domain, it->range));
    return;
  }
  for (; it != outer.end() && img.Encloses(it->domain); ++it) {
    out.emplace_back(Transport(it->domain, img, p.domain()), it->range);
  }
}

void CheckClass(const CellMap& g, GroupClass group) {
  if (Join(g.group_class(), group) != group) {
    throw ClassMismatch("element of " + std::string(GroupName(g.group_class())) +
                        " used in a " + std::string(GroupName(group)) +
                        " coset graph");
  }
}

}  // namespace

// --- CosetState ------------------------------------------------------------------

CosetState CosetState::Identity(GroupClass group) {
  return CosetState(group, {AffinePatch(StdInterval::LeftHalf(),
                                        StdInterval::LeftHalf())});
}

CosetState CosetState::FromPatches(GroupClass group,
                                   std::vector<AffinePatch> patches) {
  if (patches.empty()) throw ParseError("coset state has no patches");
  patches = NormalizePatches(std::move(patches));
  Dyadic pos(0);
  for (const AffinePatch& p : patches) {
    if (p.domain().left() != pos) {
      throw ParseError("patch domains do not partition [0,1/2)");
    }
    pos = p.domain().right();
  }
  if (pos != Dyadic(1, 1)) {
    throw ParseError("patch domains do not partition [0,1/2)");
  }
  std::vector<StdInterval> images;
  Dyadic total(0);
  for (const AffinePatch& p : patches) {
    images.push_back(p.image());
    total += p.image().length();
  }
  if (total >= Dyadic(1)) throw ParseError("coset state is not realizable");
  std::sort(images.begin(), images.end());
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i - 1].right() > images[i].left()) {
      throw ParseError("patch images overlap");
    }
  }
  if (group != GroupClass::kV) {
    // Images must run contiguously in domain order, starting at 0 for F and
    // wrapping around the circle for T.
    Dyadic at = patches.front().image().left();
    if (group == GroupClass::kF && !at.is_zero()) {
      throw ParseError("F coset state must fix 0");
    }
    for (const AffinePatch& p : patches) {
      if (at == Dyadic(1)) at = Dyadic(0);
      if (p.image().left() != at) {
        throw ParseError("coset state is not realizable in " +
                         std::string(GroupName(group)));
      }
      at = p.image().right();
    }
  }
  return CosetState(group, std::move(patches));
}

CosetState CosetState::Parse(GroupClass group, std::string_view text) {
  std::vector<AffinePatch> patches;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(pos, end - pos);
    const std::size_t arrow = token.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("bad patch '" + std::string(token) + "'");
    }
    patches.emplace_back(StdInterval::Parse(token.substr(0, arrow)),
                         StdInterval::Parse(token.substr(arrow + 2)));
    pos = end;
  }
  CosetState s = FromPatches(group, patches);
  if (s.patches_.size() != patches.size()) {
    throw ParseError("coset state is not normalized");
  }
  return s;
}

CosetState CosetState::FromKey(GroupClass group, std::string_view key) {
  std::vector<AffinePatch> patches;
  std::size_t pos = 0;
  Dyadic at(0);
  while (pos < key.size()) {
    const std::uint32_t dlevel = GetVarint(key, pos);
    const std::uint32_t ilevel = GetVarint(key, pos);
    Integer dindex = at.mantissa() << (dlevel - at.exponent());
    Integer iindex = GetIndex(key, pos, ilevel);
    StdInterval domain(std::move(dindex), dlevel);
    at = domain.right();
    patches.emplace_back(std::move(domain),
                         StdInterval(std::move(iindex), ilevel));
  }
  return CosetState(group, std::move(patches));
}

Dyadic CosetState::image_length() const {
  Dyadic total(0);
  for (const AffinePatch& p : patches_) total += p.image().length();
  return total;
}

std::string CosetState::Key() const {
  std::string out;
  for (const AffinePatch& p : patches_) {
    PutVarint(out, p.domain().level());
    PutVarint(out, p.image().level());
    PutIndex(out, p.image().index(), p.image().level());
  }
  return out;
}

std::string CosetState::ToString() const {
  std::string out;
  for (const AffinePatch& p : patches_) {
    if (!out.empty()) out += ' ';
    out += p.domain().ToString() + "->" + p.image().ToString();
  }
  return out;
}

CosetState StateOf(const CellMap& g, GroupClass group) {
  CheckClass(g, group);
  return CosetState(group, Restriction(g, StdInterval::LeftHalf()));
}

CosetState Step(const CosetState& s, const CellMap& v) {
  std::vector<AffinePatch> out;
  out.reserve(s.patches_.size() + 2);
  for (const AffinePatch& p : s.patches_) ApplyOuter(v.pairs(), p, out);
  return CosetState(Join(s.group_, v.group_class()),
                    NormalizePatches(std::move(out)));
}

CosetState Translate(const CosetState& s, const CellMap& n) {
  if (!IsIdentityOn(n, StdInterval::RightHalf())) {
    throw NotNormalizing("translation must be the identity on [1/2,1)");
  }
  CheckClass(n, s.group_);
  std::vector<CellPair> outer;
  outer.reserve(s.patches_.size());
  for (const AffinePatch& p : s.patches_) {
    outer.push_back(CellPair{p.domain(), p.image()});
  }
  std::vector<AffinePatch> out;
  for (const AffinePatch& p : Restriction(n, StdInterval::LeftHalf())) {
    ApplyOuter(outer, p, out);
  }
  return CosetState(s.group_, NormalizePatches(std::move(out)));
}

// --- CosetBall -------------------------------------------------------------------

CosetBall::CosetBall(const CosetBall& other)
    : group_(other.group_),
      radius_(other.radius_),
      generators_(other.generators_),
      keys_(other.keys_),
      layer_end_(other.layer_end_),
      edges_(other.edges_) {
  RebuildIndex();
}

CosetBall& CosetBall::operator=(const CosetBall& other) {
  if (this != &other) {
    CosetBall copy(other);
    *this = std::move(copy);
  }
  return *this;
}

void CosetBall::RebuildIndex() {
  index_.clear();
  index_.reserve(keys_.size());
  for (std::size_t v = 0; v < keys_.size(); ++v) {
    index_.emplace(keys_[v], static_cast<VertexId>(v));
  }
}

VertexId CosetBall::Add(std::string key) {
  keys_.push_back(std::move(key));
  const auto id = static_cast<VertexId>(keys_.size() - 1);
  index_.emplace(keys_.back(), id);
  return id;
}

int CosetBall::depth(VertexId v) const {
  return static_cast<int>(
      std::upper_bound(layer_end_.begin(), layer_end_.end(), v) -
      layer_end_.begin());
}

std::optional<VertexId> CosetBall::FindKey(std::string_view key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> CosetBall::Find(const CosetState& s) const {
  if (s.group() != group_) return std::nullopt;
  return FindKey(s.Key());
}

CosetBall CosetBall::Truncated(int r) const {
  if (r < 0 || r > radius_) {
    throw std::invalid_argument("truncation radius out of range");
  }
  CosetBall out;
  out.group_ = group_;
  out.radius_ = r;
  out.generators_ = generators_;
  const std::size_t n = layer_end_[r];
  out.keys_.assign(keys_.begin(), keys_.begin() + static_cast<long>(n));
  out.layer_end_.assign(layer_end_.begin(), layer_end_.begin() + r + 1);
  for (const BallEdge& e : edges_) {
    if (e.from >= n) break;
    if (e.to < n) out.edges_.push_back(e);
  }
  out.RebuildIndex();
  return out;
}

BallGraph CosetBall::ToGraph() const {
  std::vector<int> depths(size());
  int d = 0;
  for (std::size_t v = 0; v < size(); ++v) {
    while (v >= layer_end_[d]) ++d;
    depths[v] = d;
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges_.size());
  for (const BallEdge& e : edges_) pairs.emplace_back(e.from, e.to);
  return BallGraph(radius_, std::move(depths), pairs);
}

bool operator==(const CosetBall& a, const CosetBall& b) {
  if (a.group_ != b.group_ || a.radius_ != b.radius_ ||
      a.layer_end_ != b.layer_end_ || a.keys_ != b.keys_ ||
      a.edges_ != b.edges_ || a.generators_.size() != b.generators_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.generators_.size(); ++i) {
    if (a.generators_[i].name != b.generators_[i].name ||
        a.generators_[i].map != b.generators_[i].map) {
      return false;
    }
  }
  return true;
}

// --- exploration ---------------------------------------------------------------

CosetBall Explore(GroupClass group, const std::vector<NamedElement>& generators,
                  int radius, const ExploreOptions& options) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  CosetBall ball;
  ball.group_ = group;
  ball.generators_ = Symmetrize(generators);
  if (ball.generators_.size() > 0xffff) {
    throw std::invalid_argument("too many generators");
  }
  for (const NamedElement& g : ball.generators_) CheckClass(g.map, group);
  ball.Add(CosetState::Identity(group).Key());
  ball.layer_end_ = {1};
  return Extend(std::move(ball), radius, options);
}

CosetBall Extend(CosetBall ball, int radius, const ExploreOptions& options) {
  if (radius <= ball.radius_) return ball.Truncated(radius);
  const std::size_t num_gens = ball.generators_.size();
  const int threads = std::max(1, options.threads);
  const std::size_t chunk = 1024 * static_cast<std::size_t>(threads);

  // Frontier edges are recomputed while expanding the old frontier.
  const std::size_t old_frontier_start =
      ball.radius_ == 0 ? 0 : ball.layer_end_[ball.radius_ - 1];
  std::erase_if(ball.edges_, [&](const BallEdge& e) {
    return e.from >= old_frontier_start;
  });

  std::vector<std::string> images;
  for (int d = ball.radius_; d <= radius; ++d) {
    const std::size_t begin = d == 0 ? 0 : ball.layer_end_[d - 1];
    const std::size_t end = ball.layer_end_[d];
    const bool grow = d < radius;
    for (std::size_t lo = begin; lo < end; lo += chunk) {
      const std::size_t hi = std::min(end, lo + chunk);
      images.assign((hi - lo) * num_gens, std::string());
      auto work = [&](std::size_t a, std::size_t b) {
        for (std::size_t v = a; v < b; ++v) {
          const CosetState s = ball.state(static_cast<VertexId>(v));
          for (std::size_t g = 0; g < num_gens; ++g) {
            images[(v - lo) * num_gens + g] =
                Step(s, ball.generators_[g].map).Key();
          }
        }
      };
      if (threads == 1 || hi - lo < 64) {
        work(lo, hi);
      } else {
        std::vector<std::jthread> pool;
        const std::size_t per = (hi - lo + threads - 1) / threads;
        for (std::size_t a = lo; a < hi; a += per) {
          pool.emplace_back(work, a, std::min(hi, a + per));
        }
      }
      // Sequential merge in (vertex, generator) order keeps ids independent
      // of scheduling.
      for (std::size_t v = lo; v < hi; ++v) {
        for (std::size_t g = 0; g < num_gens; ++g) {
          std::string& key = images[(v - lo) * num_gens + g];
          std::optional<VertexId> to = ball.FindKey(key);
          if (!to) {
            if (!grow) continue;
            if (ball.keys_.size() >= options.vertex_budget) {
              throw ResourceLimit(
                  "vertex budget of " + std::to_string(options.vertex_budget) +
                      " exceeded while exploring radius " +
                      std::to_string(d + 1),
                  d, ball.keys_.size());
            }
            to = ball.Add(std::move(key));
          }
          ball.edges_.push_back(BallEdge{static_cast<VertexId>(v),
                                         static_cast<std::uint16_t>(g), *to});
        }
      }
    }
    if (grow) ball.layer_end_.push_back(ball.keys_.size());
  }
  ball.radius_ = radius;
  return ball;
}

}  // namespace thompson
