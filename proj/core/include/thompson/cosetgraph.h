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
#ifndef THOMPSON_COSETGRAPH_H_
#define THOMPSON_COSETGRAPH_H_

#include <cstdint>
#include <deque>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "thompson/ballgraph.h"
#include "thompson/elements.h"
#include "thompson/words.h"

namespace thompson {

// The left coset gH, H = G_[0,1/2], recorded as the restriction of g to
// [0,1/2): sibling-normalized affine patches whose domains partition [0,1/2).
// Two elements give equal states iff they lie in the same left coset.
class CosetState {
 public:
  static CosetState Identity(GroupClass group);
  // Validates partition, disjoint images, realizability and, for F and T, the
  // order constraints; normalizes. Throws ParseError.
  static CosetState FromPatches(GroupClass group,
                                std::vector<AffinePatch> patches);
  // Inverse of ToString(). Throws ParseError.
  static CosetState Parse(GroupClass group, std::string_view text);
  // Inverse of Key(); trusts the key.
  static CosetState FromKey(GroupClass group, std::string_view key);

  GroupClass group() const { return group_; }
  const std::vector<AffinePatch>& patches() const { return patches_; }
  // Membership in the almost invariant set A: g is affine on [0,1/2).
  bool is_affine() const { return patches_.size() == 1; }
  Dyadic image_length() const;

  // Compact canonical byte string; equal keys iff equal states.
  std::string Key() const;
  // "0/2^1->0/2^2" style patch list, space separated.
  std::string ToString() const;

  friend bool operator==(const CosetState&, const CosetState&) = default;

 private:
  CosetState(GroupClass group, std::vector<AffinePatch> patches)
      : group_(group), patches_(std::move(patches)) {}

  GroupClass group_ = GroupClass::kF;
  std::vector<AffinePatch> patches_;

  friend CosetState StateOf(const CellMap& g, GroupClass group);
  friend CosetState Step(const CosetState& s, const CellMap& v);
  friend CosetState Translate(const CosetState& s, const CellMap& n);
};

// Throws ClassMismatch when g is not in the group.
CosetState StateOf(const CellMap& g, GroupClass group);
// State of (v g)H from the state of gH.
CosetState Step(const CosetState& s, const CellMap& v);
// State of (g n)H from the state of gH, for n the identity on [1/2,1) (such n
// normalize H). Commutes with Step. Throws NotNormalizing.
CosetState Translate(const CosetState& s, const CellMap& n);

struct BallEdge {
  VertexId from;
  std::uint16_t gen;
  VertexId to;
  friend bool operator==(const BallEdge&, const BallEdge&) = default;
};

struct ExploreOptions {
  int threads = 1;
  std::size_t vertex_budget = 5'000'000;
};

// BFS ball of radius R around the identity coset. Vertex ids are in BFS
// order (layer by layer, each layer in discovery order), edges are sorted by
// (from, gen) and include every edge between two ball vertices.
class CosetBall {
 public:
  CosetBall() = default;
  CosetBall(const CosetBall& other);
  CosetBall& operator=(const CosetBall& other);
  CosetBall(CosetBall&&) = default;
  CosetBall& operator=(CosetBall&&) = default;

  GroupClass group() const { return group_; }
  int radius() const { return radius_; }
  // Symmetrized generators; edge labels index into this list.
  const std::vector<NamedElement>& generators() const { return generators_; }
  std::size_t size() const { return keys_.size(); }
  CosetState state(VertexId v) const {
    return CosetState::FromKey(group_, keys_[v]);
  }
  const std::string& key(VertexId v) const { return keys_[v]; }
  int depth(VertexId v) const;
  // Number of vertices of depth <= d.
  std::size_t count_within(int d) const { return layer_end_[d]; }
  const std::vector<BallEdge>& edges() const { return edges_; }
  bool is_frontier(VertexId v) const { return depth(v) == radius_; }
  std::optional<VertexId> Find(const CosetState& s) const;
  std::optional<VertexId> FindKey(std::string_view key) const;

  CosetBall Truncated(int r) const;
  BallGraph ToGraph() const;

  friend bool operator==(const CosetBall& a, const CosetBall& b);

 private:
  void RebuildIndex();
  VertexId Add(std::string key);

  GroupClass group_ = GroupClass::kF;
  int radius_ = 0;
  std::vector<NamedElement> generators_;
  std::deque<std::string> keys_;
  std::unordered_map<std::string_view, VertexId> index_;
  std::vector<std::size_t> layer_end_;
  std::vector<BallEdge> edges_;

  friend CosetBall Explore(GroupClass, const std::vector<NamedElement>&, int,
                           const ExploreOptions&);
  friend CosetBall Extend(CosetBall, int, const ExploreOptions&);
  friend CosetBall LoadBall(const std::filesystem::path&);
};

// Symmetrizes the generators (inverses named "<name>^-1" are appended unless
// already present) and explores. Throws ResourceLimit when the ball would
// exceed the vertex budget, reporting the last complete radius.
CosetBall Explore(GroupClass group, const std::vector<NamedElement>& generators,
                  int radius, const ExploreOptions& options = {});
// Grows a ball to a larger radius; the result equals a fresh exploration.
CosetBall Extend(CosetBall ball, int radius, const ExploreOptions& options = {});

// Versioned text cache. Save throws IoFailure; Load throws IoFailure or
// FormatVersionMismatch and never returns a partial ball.
void SaveBall(const CosetBall& ball, const std::filesystem::path& path);
CosetBall LoadBall(const std::filesystem::path& path);
CosetBall CacheRoundtrip(const CosetBall& ball,
                         const std::filesystem::path& path);

// Cache file for (group, generators) inside a cache directory.
std::filesystem::path CachePath(const std::filesystem::path& dir,
                                GroupClass group,
                                const std::vector<NamedElement>& generators);
// Loads, extends or explores as needed and refreshes the cache when it grew.
CosetBall ExploreCached(const std::filesystem::path& dir, GroupClass group,
                        const std::vector<NamedElement>& generators, int radius,
                        const ExploreOptions& options = {});

}  // namespace thompson

#endif  // THOMPSON_COSETGRAPH_H_
