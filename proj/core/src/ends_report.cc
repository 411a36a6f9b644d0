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
#include "thompson/ends_report.h"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <set>
#include <tuple>

#include "thompson/errors.h"

namespace thompson {
namespace {

std::vector<NamedSet> RootBalls(const BallGraph& g) {
  std::vector<NamedSet> out;
  for (int j = 0; j <= g.radius() - 2; ++j) {
    std::vector<VertexId> v;
    for (VertexId u = 0; u < g.size() && g.depth(u) <= j; ++u) v.push_back(u);
    out.push_back({"ball(" + std::to_string(j) + ")", CompactSet(std::move(v))});
  }
  return out;
}

// A translation restricted to a prefix ball.
Translation Restrict(const Translation& t, std::size_t size) {
  return [t, size](VertexId v) -> std::optional<VertexId> {
    if (v >= size) return std::nullopt;
    const std::optional<VertexId> w = t(v);
    if (!w || *w >= size) return std::nullopt;
    return w;
  };
}

std::optional<CompactSet> Image(const CompactSet& k, const Translation& t) {
  std::vector<VertexId> out;
  for (VertexId v : k.vertices()) {
    const std::optional<VertexId> w = t(v);
    if (!w) return std::nullopt;
    out.push_back(*w);
  }
  return CompactSet(std::move(out));
}

std::string LetterName(int l) {
  const char base = static_cast<char>('a' + std::abs(l) - 1);
  return std::string(1, l > 0 ? base : static_cast<char>(base - 'a' + 'A'));
}

}  // namespace

EndsReport RunEndsReport(const EndsProblem& problem,
                         std::span<const int> schedule) {
  if (schedule.empty() || !std::is_sorted(schedule.begin(), schedule.end()) ||
      std::adjacent_find(schedule.begin(), schedule.end()) != schedule.end()) {
    throw std::invalid_argument("radius schedule must be increasing");
  }
  if (problem.ball.radius() < schedule.back() + 1) {
    throw std::invalid_argument("ball too small for the radius schedule");
  }
  EndsReport report;
  report.title = problem.title;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const int r = schedule[i];
    const int next = i + 1 < schedule.size() ? schedule[i + 1] : r + 1;
    const BallGraph g = problem.ball.Truncated(r);
    const BallGraph gn = problem.ball.Truncated(next);

    std::vector<NamedSet> raw = problem.seeds(g);
    const std::size_t num_seeds = raw.size();
    for (std::size_t s = 0; s < num_seeds; ++s) {
      for (const NamedTranslation& t : problem.translations) {
        const auto image = Image(raw[s].set, Restrict(t.map, g.size()));
        if (!image || image->Intersects(raw[s].set)) continue;
        raw.push_back({raw[s].name + " + " + t.name + "." + raw[s].name,
                       raw[s].set.Union(*image)});
      }
    }

    RadiusEntry entry;
    entry.radius = r;
    entry.vertices = g.size();
    entry.next_radius = next;
    std::set<std::vector<VertexId>> seen;
    std::vector<std::pair<const NamedSet*, CompactSet>> amplifiable;
    std::tuple<std::size_t, std::size_t, long> best{0, 0, 0};
    for (const NamedSet& cand : raw) {
      CompactSet k;
      try {
        k = Saturate(g, cand.set);
      } catch (const MarginTooSmall&) {
        continue;
      }
      if (k.empty() || !seen.insert(k.vertices()).second) continue;
      ++entry.candidates;
      const std::size_t ft = ComponentsMinus(g, k).frontier_touching();
      const std::size_t persistent = ComponentsMinus(gn, k).frontier_touching();
      if (persistent >= 3) amplifiable.emplace_back(&cand, k);
      const std::tuple<std::size_t, std::size_t, long> score{
          persistent, ft, -static_cast<long>(k.size())};
      if (entry.strategy.empty() || score > best) {
        best = score;
        entry.strategy = cand.name;
        entry.k = k;
        entry.frontier_touching = ft;
        entry.persistent = persistent;
      }
    }

    std::stable_sort(amplifiable.begin(), amplifiable.end(),
                     [](const auto& a, const auto& b) {
                       return a.second.size() < b.second.size();
                     });
    for (const auto& [cand, k] : amplifiable) {
      for (const NamedTranslation& t : problem.translations) {
        try {
          const Amplification amp = Amplify(problem.ball, k, t.map);
          entry.amplification = AmplificationEntry{
              cand->name,  k.size(), t.name,
              problem.ball.radius(), amp.n, amp.n_translate,
              amp.report.frontier_touching(), amp.bound, amp.certified,
              k, amp.translate};
          break;
        } catch (const PreconditionUnverifiable&) {
        }
      }
      if (entry.amplification) break;
    }
    if (entry.persistent > report.best_bound) {
      report.best_bound = entry.persistent;
      report.best_radius = r;
    }
    report.entries.push_back(std::move(entry));
  }

  if (report.best_bound == 0) {
    report.reasoning =
        "No compact set with a frontier margin fits the explored balls; no "
        "bound is claimed.";
  } else {
    report.reasoning =
        "Candidate lower bound e >= " + std::to_string(report.best_bound) +
        " at radius " + std::to_string(report.best_radius) +
        ", counted as frontier-touching complementary components that persist "
        "to the next radius. This is finite-scale evidence only: "
        "frontier-touching is a proxy for unbounded, and no number of ends is "
        "claimed beyond the count. The infinite conclusion rests on structure "
        "not computed here: elements supported in [0,1/2) normalize H and "
        "act as covering translations of the coset graph, a translate of K "
        "moved off itself turns n >= 3 unbounded components into 2n - 2, and "
        "iterating forces infinitely many ends unless the pair is virtually "
        "cyclic.";
  }
  return report;
}

// --- coset graphs -----------------------------------------------------------------

std::vector<NamedElement> NormalizerElements(GroupClass group) {
  const StdInterval left = StdInterval::LeftHalf();
  std::vector<NamedElement> base = {
      {"s(x0)", Squeeze(StandardGenerator(Generator::kX0), left)},
      {"s(x1)", Squeeze(StandardGenerator(Generator::kX1), left)},
  };
  if (group == GroupClass::kV) {
    base.push_back({"s(pi0)", Squeeze(StandardGenerator(Generator::kPi0), left)});
    base.push_back({"s(pi1)", Squeeze(StandardGenerator(Generator::kPi1), left)});
  }
  std::vector<NamedElement> letters = Symmetrize(base);
  std::vector<NamedElement> out = letters;
  for (const NamedElement& a : letters) {
    for (const NamedElement& b : letters) {
      const CellMap ab = a.map * b.map;
      if (ab.is_identity()) continue;
      const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& e) {
        return e.map == ab;
      });
      if (!dup) out.push_back({a.name + " " + b.name, ab});
    }
  }
  return out;
}

EndsProblem CosetEndsProblem(const CosetBall& ball) {
  auto shared = std::make_shared<const CosetBall>(ball);
  EndsProblem problem;
  problem.title = "(" + std::string(GroupName(ball.group())) + ", " +
                  std::string(GroupName(ball.group())) + "_[0,1/2))";
  problem.ball = ball.ToGraph();

  // x0-power states in order x0^0, x0^1, x0^-1, x0^2, ...
  std::vector<std::pair<int, VertexId>> powers;
  const CellMap x0 = StandardGenerator(Generator::kX0);
  for (int i = 0; i <= ball.radius(); ++i) {
    for (int sign : {1, -1}) {
      if (i == 0 && sign < 0) continue;
      const auto v = ball.Find(StateOf(Power(x0, sign * i), ball.group()));
      if (v) powers.emplace_back(sign * i, *v);
    }
  }
  const CutReport cut = SageevCut(ball);
  std::vector<VertexId> cut_vertices;
  for (const BallEdge& e : cut.cut_edges) {
    cut_vertices.push_back(e.from);
    cut_vertices.push_back(e.to);
  }

  problem.seeds = [powers, cut_vertices](const BallGraph& g) {
    std::vector<NamedSet> out = RootBalls(g);
    std::vector<VertexId> pos = {0};
    std::vector<VertexId> both = {0};
    for (const auto& [i, v] : powers) {
      if (i == 0 || v >= g.size() || g.depth(v) > g.radius() - 2) continue;
      both.push_back(v);
      out.push_back({"x0^[" + std::to_string(std::min(i, 0)) + "," +
                         std::to_string(std::max(i, 0)) + "]",
                     CompactSet(both)});
      if (i > 0) {
        pos.push_back(v);
        out.push_back({"x0^[0," + std::to_string(i) + "]", CompactSet(pos)});
      }
    }
    std::vector<VertexId> cut_in;
    for (VertexId v : cut_vertices) {
      if (v < g.size() && g.depth(v) <= g.radius() - 2) cut_in.push_back(v);
    }
    if (!cut_in.empty()) out.push_back({"cut", CompactSet(std::move(cut_in))});
    return out;
  };

  for (const NamedElement& n : NormalizerElements(ball.group())) {
    auto memo = std::make_shared<std::vector<std::int64_t>>(ball.size(), -2);
    problem.translations.push_back(
        {n.name, [shared, memo, map = n.map](VertexId v) -> std::optional<VertexId> {
           if (v >= shared->size()) return std::nullopt;
           std::int64_t& slot = (*memo)[v];
           if (slot == -2) {
             const auto w = shared->Find(Translate(shared->state(v), map));
             slot = w ? static_cast<std::int64_t>(*w) : -1;
           }
           if (slot < 0) return std::nullopt;
           return static_cast<VertexId>(slot);
         }});
  }
  return problem;
}

EndsReport CosetEndsReport(GroupClass group, std::span<const int> schedule,
                           const ExploreOptions& options,
                           const std::optional<std::filesystem::path>& cache) {
  if (schedule.empty()) throw std::invalid_argument("empty radius schedule");
  const int radius = schedule.back() + 1;
  const std::vector<NamedElement> gens = StandardGeneratorSet(group);
  const CosetBall ball = cache ? ExploreCached(*cache, group, gens, radius, options)
                               : Explore(group, gens, radius, options);
  return RunEndsReport(CosetEndsProblem(ball), schedule);
}

// --- testbeds ---------------------------------------------------------------------

EndsProblem FreeGroupEndsProblem(int rank, int radius) {
  auto tree = std::make_shared<const FreeGroupBall>(rank, radius);
  EndsProblem problem;
  problem.title = rank == 1 ? "line" : std::to_string(2 * rank) + "-regular tree";
  problem.ball = tree->graph();
  problem.seeds = RootBalls;
  std::vector<int> letters;
  for (int i = 1; i <= rank; ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  for (int a : letters) {
    for (int b : letters) {
      if (a == -b) continue;
      const std::vector<int> u = {a, b};
      problem.translations.push_back(
          {LetterName(a) + LetterName(b),
           [tree, u](VertexId v) { return tree->Translate(u, v); }});
    }
  }
  return problem;
}

}  // namespace thompson
