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
#ifndef THOMPSON_ENDS_REPORT_H_
#define THOMPSON_ENDS_REPORT_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thompson/ballgraph.h"
#include "thompson/cosetgraph.h"
#include "thompson/ends.h"

namespace thompson {

struct NamedSet {
  std::string name;
  CompactSet set;
};

struct NamedTranslation {
  std::string name;
  Translation map;
};

// Input to the greedy end search: the largest ball needed, a source of raw
// candidate sets for a given radius, and covering translations.
struct EndsProblem {
  std::string title;
  BallGraph ball;
  std::function<std::vector<NamedSet>(const BallGraph&)> seeds;
  std::vector<NamedTranslation> translations;
};

struct AmplificationEntry {
  std::string k_strategy;
  std::size_t k_size = 0;
  std::string translation;
  int radius = 0;
  std::size_t n = 0;
  std::size_t n_translate = 0;
  std::size_t frontier_touching = 0;
  std::size_t bound = 0;
  bool certified = false;
  CompactSet k;
  CompactSet translate;
};

struct RadiusEntry {
  int radius = 0;
  std::size_t vertices = 0;
  std::size_t candidates = 0;   // saturated candidates examined
  std::string strategy;         // how the chosen K arose
  CompactSet k;
  std::size_t frontier_touching = 0;
  int next_radius = 0;
  std::size_t persistent = 0;   // frontier-touching count at next_radius
  std::optional<AmplificationEntry> amplification;
};

struct EndsReport {
  std::string title;
  std::vector<RadiusEntry> entries;
  std::size_t best_bound = 0;
  int best_radius = -1;
  std::string reasoning;
};

// For each scheduled radius R, saturates every seed and every union of a seed
// with a translate, keeps the K whose complement has the most
// frontier-touching components that persist to the next scheduled radius
// (R + 1 after the last). Candidates with at least 3 persistent components
// are then tried, smallest first, for amplification inside the whole
// problem ball, where translates have the most room. Needs problem.ball to
// have radius >= schedule.back() + 1.
EndsReport RunEndsReport(const EndsProblem& problem,
                         std::span<const int> schedule);

// The coset graph problem for (G, G_[0,1/2]) with the standard generators:
// seeds are root balls, x0-power states and the vertices of the A cut; the
// translations come from elements supported in [0,1/2).
EndsProblem CosetEndsProblem(const CosetBall& ball);
// Elements that are the identity on [1/2,1), used as covering translations.
std::vector<NamedElement> NormalizerElements(GroupClass group);

// Explores (through the cache when given) and runs the report.
EndsReport CosetEndsReport(GroupClass group, std::span<const int> schedule,
                           const ExploreOptions& options,
                           const std::optional<std::filesystem::path>& cache);

// The line (2 ends) and the 4-regular tree testbeds.
EndsProblem FreeGroupEndsProblem(int rank, int radius);

}  // namespace thompson

#endif  // THOMPSON_ENDS_REPORT_H_
