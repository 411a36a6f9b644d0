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
// thompson: command-line front end.
//
// Exit status: 0 success, 2 certificate failure or property violation,
// 3 vertex budget exceeded, 64 usage error, 1 any other error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thompson/cosetgraph.h"
#include "thompson/dot.h"
#include "thompson/dyadic.h"
#include "thompson/elements.h"
#include "thompson/ends.h"
#include "thompson/ends_report.h"
#include "thompson/errors.h"
#include "thompson/facert.h"
#include "thompson/treeact.h"
#include "thompson/words.h"

namespace {

using nlohmann::json;
using namespace thompson;

constexpr int kExitViolation = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 64;
constexpr const char* kCacheEnv = "THOMPSON_CACHE_DIR";

struct RunConfig {
  std::string group = "V";
  int radius = 4;
  std::string schedule;
  std::size_t budget = 5'000'000;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string cache_dir;
  std::string format = "text";
};

// Collects human-readable lines and a structured result; exactly one of them
// is printed.
class Report {
 public:
  Report(const RunConfig& config, std::string command)
      : config_(config), command_(std::move(command)) {}

  void Line(const std::string& text) { lines_.push_back(text); }
  json& result() { return result_; }
  void SetStatus(int status) { status_ = status; }
  int status() const { return status_; }

  void Print(std::ostream& out) const {
    if (config_.format != "text") {
      json doc = {{"format", "thompson-report"},
                  {"version", 1},
                  {"command", command_},
                  {"context",
                   {{"group", config_.group},
                    {"vertex_budget", config_.budget},
                    {"threads", config_.threads},
                    {"seed", config_.seed}}},
                  {"status", status_},
                  {"result", result_}};
      out << doc.dump(2) << "\n";
    } else {
      for (const std::string& l : lines_) out << l << "\n";
    }
  }

 private:
  const RunConfig& config_;
  std::string command_;
  std::vector<std::string> lines_;
  json result_ = json::object();
  int status_ = 0;
};

std::vector<int> ParseSchedule(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int r = std::stoi(item, &used);
    if (used != item.size() || r < 0) {
      throw ParseError("bad radius '" + item + "' in schedule");
    }
    out.push_back(r);
  }
  if (out.empty()) throw ParseError("empty radius schedule");
  return out;
}

ExploreOptions Options(const RunConfig& c) {
  return ExploreOptions{c.threads, c.budget};
}

CosetBall GetBall(const RunConfig& c, GroupClass group, int radius) {
  const auto gens = StandardGeneratorSet(group);
  if (!c.cache_dir.empty()) {
    return ExploreCached(c.cache_dir, group, gens, radius, Options(c));
  }
  return Explore(group, gens, radius, Options(c));
}

std::string Join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

CompactSet RootBall(const BallGraph& g, int r) {
  std::vector<VertexId> v;
  for (VertexId u = 0; u < g.size() && g.depth(u) <= r; ++u) v.push_back(u);
  return CompactSet(std::move(v));
}

// --- element ------------------------------------------------------------------

void ElementEval(const std::string& elem, const std::string& at, Report& rep) {
  const CellMap g = ParseElement(elem);
  const Dyadic x = Dyadic::Parse(at);
  const Dyadic y = Evaluate(g, x);
  rep.Line(y.ToString());
  rep.result() = {{"element", g.ToString()}, {"at", x.ToString()},
                  {"value", y.ToString()}};
}

void ElementCompose(const std::vector<std::string>& elems, Report& rep) {
  CellMap g;
  for (const auto& e : elems) g = g * ParseElement(e);
  rep.Line(g.ToString());
  rep.result() = {{"product", g.ToString()},
                  {"class", std::string(GroupName(g.group_class()))}};
}

void ElementOrder(const std::string& elem, int bound, Report& rep) {
  const CellMap g = ParseElement(elem);
  const auto n = OrderUpTo(g, bound);
  rep.Line(n ? std::to_string(*n) : "order > " + std::to_string(bound));
  rep.result() = {{"element", g.ToString()}, {"bound", bound},
                  {"order", n ? json(*n) : json(nullptr)}};
}

void ElementSmall(const std::string& elem, Report& rep) {
  const CellMap g = ParseElement(elem);
  const auto w = SmallWitness(g);
  rep.Line(w ? "small, identity on " + w->ToString() : "not small");
  rep.result() = {{"element", g.ToString()},
                  {"witness", w ? json(w->ToString()) : json(nullptr)}};
}

void ElementSupport(const std::string& elem, Report& rep) {
  const CellMap g = ParseElement(elem);
  std::vector<std::string> cells;
  for (const auto& c : Support(g)) cells.push_back(c.ToString());
  rep.Line(cells.empty() ? "empty" : Join(cells, " "));
  rep.result() = {{"element", g.ToString()}, {"support", cells}};
}

// --- ball ------------------------------------------------------------------------

void BallInfo(const RunConfig& c, Report& rep) {
  const GroupClass group = ParseGroupClass(c.group);
  const CosetBall ball = GetBall(c, group, c.radius);
  json shells = json::array();
  rep.Line("coset graph of (" + c.group + ", " + c.group +
           "_[0,1/2)), radius " + std::to_string(ball.radius()) +
           ", budget " + std::to_string(c.budget));
  for (int d = 0; d <= ball.radius(); ++d) {
    const std::size_t begin = d == 0 ? 0 : ball.count_within(d - 1);
    std::size_t in_a = 0;
    for (std::size_t v = begin; v < ball.count_within(d); ++v) {
      in_a += ball.state(static_cast<VertexId>(v)).is_affine();
    }
    const std::size_t n = ball.count_within(d) - begin;
    rep.Line("  depth " + std::to_string(d) + ": " + std::to_string(n) +
             " states (" + std::to_string(in_a) + " in A)");
    shells.push_back({{"depth", d}, {"states", n}, {"in_A", in_a}});
  }
  rep.Line("  vertices " + std::to_string(ball.size()) + ", edges " +
           std::to_string(ball.edges().size()));
  rep.result() = {{"radius", ball.radius()},
                  {"vertices", ball.size()},
                  {"edges", ball.edges().size()},
                  {"shells", shells}};
}

void BallExportDot(const RunConfig& c, const std::string& out_path,
                   Report& rep) {
  const GroupClass group = ParseGroupClass(c.group);
  const CosetBall ball = GetBall(c, group, c.radius);
  DotStyle style;
  style.fill = [&](VertexId v) {
    return ball.state(v).is_affine() ? std::string("lightblue") : std::string();
  };
  std::ofstream out(out_path);
  if (!out) throw IoFailure("cannot write " + out_path);
  WriteDot(out, ball.ToGraph(), c.group + "_coset_ball_r" + std::to_string(c.radius),
           style);
  rep.Line("wrote " + out_path + " (" + std::to_string(ball.size()) +
           " vertices, radius " + std::to_string(ball.radius()) + ")");
  rep.result() = {{"path", out_path}, {"vertices", ball.size()}};
}

// --- ends -----------------------------------------------------------------------

json EntryJson(const RadiusEntry& e) {
  json j = {{"radius", e.radius},
            {"vertices", e.vertices},
            {"candidates", e.candidates},
            {"strategy", e.strategy},
            {"k_size", e.k.size()},
            {"frontier_touching", e.frontier_touching},
            {"next_radius", e.next_radius},
            {"persistent", e.persistent}};
  if (e.amplification) {
    const auto& a = *e.amplification;
    j["amplification"] = {{"k_strategy", a.k_strategy},
                          {"k_size", a.k_size},
                          {"translation", a.translation},
                          {"radius", a.radius},
                          {"n", a.n},
                          {"n_translate", a.n_translate},
                          {"frontier_touching", a.frontier_touching},
                          {"bound", a.bound},
                          {"certified", a.certified}};
  }
  return j;
}

EndsProblem Problem(const RunConfig& c, const std::string& testbed, int radius) {
  if (testbed == "line") return FreeGroupEndsProblem(1, radius);
  if (testbed == "tree4") return FreeGroupEndsProblem(2, radius);
  if (!testbed.empty()) throw ParseError("unknown testbed '" + testbed + "'");
  return CosetEndsProblem(GetBall(c, ParseGroupClass(c.group), radius));
}

void EndsReportCmd(const RunConfig& c, const std::string& testbed,
                   Report& rep) {
  const std::vector<int> schedule = ParseSchedule(c.schedule);
  const EndsReport report =
      RunEndsReport(Problem(c, testbed, schedule.back() + 1), schedule);
  rep.Line("ends report for " + report.title + ", budget " +
           std::to_string(c.budget));
  json entries = json::array();
  for (const RadiusEntry& e : report.entries) {
    rep.Line("radius " + std::to_string(e.radius) + " (" +
             std::to_string(e.vertices) + " vertices, " +
             std::to_string(e.candidates) + " saturated candidates): K = " +
             e.strategy + " (" + std::to_string(e.k.size()) + " vertices), " +
             std::to_string(e.frontier_touching) +
             " frontier-touching components, " + std::to_string(e.persistent) +
             " persist to radius " + std::to_string(e.next_radius));
    rep.Line("  candidate lower bound e >= " + std::to_string(e.persistent) +
             " at radius " + std::to_string(e.radius));
    if (e.amplification) {
      const auto& a = *e.amplification;
      rep.Line("  amplified: K = " + a.k_strategy + ", translate by " +
               a.translation + " at radius " + std::to_string(a.radius) +
               ": n = " + std::to_string(a.n) + ", " +
               std::to_string(a.frontier_touching) + " components >= 2n-2 = " +
               std::to_string(a.bound) +
               (a.certified ? " (certified)" : " (NOT certified)"));
    }
    entries.push_back(EntryJson(e));
  }
  rep.Line(report.reasoning);
  rep.result() = {{"pair", report.title},
                  {"schedule", schedule},
                  {"entries", entries},
                  {"best_bound", report.best_bound},
                  {"best_radius", report.best_radius},
                  {"reasoning", report.reasoning}};
}

void EndsAmplify(const RunConfig& c, const std::string& testbed, int k_radius,
                 const std::string& by, Report& rep) {
  const EndsProblem problem = Problem(c, testbed, c.radius);
  const CompactSet k = Saturate(problem.ball, RootBall(problem.ball, k_radius));
  const NamedTranslation* t = nullptr;
  for (const auto& cand : problem.translations) {
    if (cand.name == by) t = &cand;
  }
  if (!t) {
    std::vector<std::string> names;
    for (const auto& cand : problem.translations) names.push_back(cand.name);
    throw ParseError("unknown translation '" + by + "'; choose from: " +
                     Join(names, ", "));
  }
  const Amplification amp = Amplify(problem.ball, k, t->map);
  rep.Line(problem.title + ", radius " + std::to_string(c.radius) +
           ": K = saturated ball(" + std::to_string(k_radius) + "), " +
           std::to_string(k.size()) + " vertices, n = " + std::to_string(amp.n));
  rep.Line("translate by " + by + ": n' = " + std::to_string(amp.n_translate) +
           ", K u gK leaves " +
           std::to_string(amp.report.frontier_touching()) +
           " frontier-touching components, bound 2n-2 = " +
           std::to_string(amp.bound) +
           (amp.certified ? " certified" : " NOT certified"));
  if (!amp.certified) rep.SetStatus(kExitViolation);
  rep.result() = {{"radius", c.radius},
                  {"k_size", k.size()},
                  {"translation", by},
                  {"n", amp.n},
                  {"n_translate", amp.n_translate},
                  {"frontier_touching", amp.report.frontier_touching()},
                  {"bound", amp.bound},
                  {"certified", amp.certified}};
}

void EndsTraces(const RunConfig& c, const std::string& testbed, int k_radius,
                Report& rep) {
  const std::vector<int> schedule = ParseSchedule(c.schedule);
  const EndsProblem problem = Problem(c, testbed, schedule.back());
  const CompactSet k = Saturate(problem.ball.Truncated(schedule.front()),
                                RootBall(problem.ball, k_radius));
  const TraceForest forest = EndTraces(problem.ball, k, schedule);
  rep.Line(problem.title + ": K = saturated ball(" + std::to_string(k_radius) +
           "), " + std::to_string(k.size()) + " vertices");
  json radii = json::array();
  for (std::size_t i = 0; i < forest.radii.size(); ++i) {
    rep.Line("  radius " + std::to_string(forest.radii[i]) + ": " +
             std::to_string(forest.reports[i].frontier_touching()) +
             " frontier-touching, " +
             std::to_string(forest.reports[i].closed_bounded()) + " closed");
    radii.push_back({{"radius", forest.radii[i]},
                     {"frontier_touching", forest.reports[i].frontier_touching()},
                     {"closed_bounded", forest.reports[i].closed_bounded()}});
  }
  json chains = json::array();
  for (const TraceChain& ch : forest.chains) chains.push_back(ch.components);
  rep.Line("  " + std::to_string(forest.chains.size()) + " chains, " +
           std::to_string(forest.surviving()) +
           " distinct components reached at radius " +
           std::to_string(forest.radii.back()));
  rep.result() = {{"k_size", k.size()},
                  {"radii", radii},
                  {"chains", chains},
                  {"surviving", forest.surviving()}};
}

// --- ai ------------------------------------------------------------------------------

void AiExact(const RunConfig& c, const std::string& gen, Report& rep) {
  const CellMap v = ParseElement(gen);
  const std::size_t n = SymdiffExact(v, ParseGroupClass(c.group));
  rep.Line(std::to_string(n));
  rep.result() = {{"element", v.ToString()}, {"symdiff", n}};
}

void AiBall(const RunConfig& c, const std::string& gen, Report& rep) {
  const GroupClass group = ParseGroupClass(c.group);
  const CellMap v = ParseElement(gen);
  const CosetBall ball = GetBall(c, group, c.radius);
  const FlipLedger ledger = SymdiffBall(v, ball, gen);
  const std::size_t exact = SymdiffExact(v, group);
  rep.Line("flips of " + gen + " within radius " + std::to_string(c.radius) +
           ": " + std::to_string(ledger.total()) + " (closed form " +
           std::to_string(exact) + "), last flip depth " +
           std::to_string(ledger.stabilization_radius - 1));
  for (const Flip& f : ledger.flips) {
    rep.Line("  " + ball.state(f.vertex).ToString() +
             (f.from_a ? "  A -> not A" : "  not A -> A"));
  }
  if (ledger.total() != exact) rep.SetStatus(kExitViolation);
  json flips = json::array();
  for (const Flip& f : ledger.flips) {
    flips.push_back({{"state", ball.state(f.vertex).ToString()},
                     {"depth", ball.depth(f.vertex)},
                     {"from_A", f.from_a}});
  }
  rep.result() = {{"radius", c.radius},
                  {"total", ledger.total()},
                  {"exact", exact},
                  {"stabilization_radius", ledger.stabilization_radius},
                  {"flips", flips}};
}

void AiCut(const RunConfig& c, Report& rep) {
  const CosetBall ball = GetBall(c, ParseGroupClass(c.group), c.radius);
  const CutReport cut = SageevCut(ball);
  rep.Line("A cut in the radius " + std::to_string(c.radius) + " " + c.group +
           " coset ball: " + std::to_string(cut.cut_edges.size()) +
           " cut edges, " + std::to_string(cut.a_side) + " states in A, " +
           std::to_string(cut.complement_side) + " outside, " +
           (cut.separated ? "separated" : "NOT separated"));
  if (!cut.separated) rep.SetStatus(kExitViolation);
  rep.result() = {{"radius", c.radius},
                  {"cut_edges", cut.cut_edges.size()},
                  {"a_side", cut.a_side},
                  {"complement_side", cut.complement_side},
                  {"separated", cut.separated}};
}

// --- fa --------------------------------------------------------------------------------

void FaEmit(const FACertificate& cert, const std::string& out_path,
            Report& rep) {
  std::vector<std::string> audit;
  VerifyCertificate(cert, &audit);
  for (const auto& l : audit) rep.Line(l);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw IoFailure("cannot write " + out_path);
    out << CertificateToJson(cert);
    rep.Line("certificate written to " + out_path);
  }
  rep.Line("CERTIFICATE VERIFIED (" + cert.cites + ")");
  rep.result() = {{"group", std::string(GroupName(cert.group))},
                  {"verified", true},
                  {"audit", audit},
                  {"certificate", json::parse(CertificateToJson(cert))}};
}

void FaVerify(const std::string& in_path, Report& rep) {
  std::ifstream in(in_path);
  if (!in) throw IoFailure("cannot read " + in_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const FACertificate cert = CertificateFromJson(buf.str());
  std::vector<std::string> audit;
  VerifyCertificate(cert, &audit);
  for (const auto& l : audit) rep.Line(l);
  rep.Line("CERTIFICATE VERIFIED (" + cert.cites + ")");
  rep.result() = {{"group", std::string(GroupName(cert.group))}, {"verified", true},
                  {"audit", audit}};
}

// --- tree --------------------------------------------------------------------------

void TreeSuite(int max_syllables, Report& rep) {
  const TreeBall ball(4 * max_syllables + 2);
  const SuiteReport s = Lemma41Suite(ball, max_syllables);
  rep.Line("modular group, words of <= " + std::to_string(max_syllables) +
           " letters: " + std::to_string(s.elements) + " elements, " +
           std::to_string(s.pairs) + " pairs, tree radius " +
           std::to_string(ball.radius()) + " (" + std::to_string(ball.size()) +
           " vertices)");
  rep.Line("  fixed sets are subtrees: " + std::to_string(s.subtree_checks) +
           " checks");
  rep.Line("  elliptic/hyperbolic dichotomy: " +
           std::to_string(s.dichotomy_checks) + " checks");
  rep.Line("  disjoint fixed sets give hyperbolic products: " +
           std::to_string(s.disjoint_fix_checks) + " checks");
  rep.Line("  stabilized fixed sets meet: " +
           std::to_string(s.stabilized_fix_checks) + " checks");
  rep.Line("  violations: " + std::to_string(s.violations.size()));
  for (const auto& v : s.violations) rep.Line("    " + v);
  if (!s.violations.empty()) rep.SetStatus(kExitViolation);
  rep.result() = {{"max_syllables", max_syllables},
                  {"elements", s.elements},
                  {"pairs", s.pairs},
                  {"subtree_checks", s.subtree_checks},
                  {"dichotomy_checks", s.dichotomy_checks},
                  {"disjoint_fix_checks", s.disjoint_fix_checks},
                  {"stabilized_fix_checks", s.stabilized_fix_checks},
                  {"violations", s.violations}};
}

void TreeClassify(const std::string& word, int radius, Report& rep) {
  const ModWord g = NormalForm(word);
  const TreeBall ball(radius > 0 ? radius : 2 * Syllables(g) + 2);
  const Isometry iso = Classify(g, ball);
  const std::string name = g.empty() ? "1" : g;
  switch (iso.kind) {
    case Isometry::Kind::kElliptic:
      rep.Line(name + ": elliptic, fixes " +
               ball.vertex(*iso.fixed_vertex).ToString());
      rep.result() = {{"word", name}, {"kind", "elliptic"},
                      {"fixed", ball.vertex(*iso.fixed_vertex).ToString()}};
      break;
    case Isometry::Kind::kHyperbolic: {
      std::vector<std::string> axis;
      for (VertexId v : iso.axis) axis.push_back(ball.vertex(v).ToString());
      rep.Line(name + ": hyperbolic, translation length " +
               std::to_string(iso.translation_length) + ", axis " +
               Join(axis, " - "));
      rep.result() = {{"word", name}, {"kind", "hyperbolic"},
                      {"translation_length", iso.translation_length},
                      {"axis", axis}};
      break;
    }
    case Isometry::Kind::kUnresolved:
      rep.Line(name + ": unresolved at radius " + std::to_string(ball.radius()));
      rep.result() = {{"word", name}, {"kind", "unresolved"}};
      break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  if (const char* env = std::getenv(kCacheEnv)) config.cache_dir = env;

  CLI::App app{"Thompson's groups: coset graph ends, almost invariant sets, "
               "property FA certificates."};
  app.require_subcommand(1);
  app.add_option("--threads", config.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for randomized choices");
  app.add_option("--budget", config.budget, "Vertex budget for explorations");
  app.add_option("--cache-dir", config.cache_dir,
                 std::string("Coset ball cache directory (default $") +
                     kCacheEnv + ")");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "structured"}));

  std::string command;
  std::string elem, at, testbed, by, word, out_path, in_path;
  std::vector<std::string> elems;
  int bound = 200, k_radius = 1, max_syllables = 4, tree_radius = 0;
  bool random_conjugator = false;

  auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group,-g", config.group, "F, T or V")
        ->check(CLI::IsMember({"F", "T", "V"}));
  };
  auto radius_opt = [&](CLI::App* sub) {
    sub->add_option("--radius,-r", config.radius, "Ball radius")
        ->check(CLI::NonNegativeNumber);
  };

  auto* element = app.add_subcommand("element", "Element algebra");
  element->require_subcommand(1);
  auto* e_eval = element->add_subcommand("eval", "Evaluate at a dyadic point");
  e_eval->add_option("--name,--elem,-e", elem, "Generator, word or cell map")->required();
  e_eval->add_option("--at", at, "Dyadic point in [0,1)")->required();
  auto* e_compose = element->add_subcommand("compose", "Product, leftmost applied last");
  e_compose->add_option("elements", elems, "Elements")->required();
  auto* e_order = element->add_subcommand("order", "Order up to a bound");
  e_order->add_option("--name,--elem,-e", elem)->required();
  e_order->add_option("--bound", bound)->check(CLI::PositiveNumber);
  auto* e_small = element->add_subcommand("small", "Identity on some standard interval?");
  e_small->add_option("--name,--elem,-e", elem)->required();
  auto* e_support = element->add_subcommand("support", "Support as standard intervals");
  e_support->add_option("--name,--elem,-e", elem)->required();

  auto* ball = app.add_subcommand("ball", "Coset graph balls");
  ball->require_subcommand(1);
  auto* b_explore = ball->add_subcommand("explore", "Explore (and cache) a ball");
  auto* b_info = ball->add_subcommand("info", "Shell sizes of a ball");
  auto* b_dot = ball->add_subcommand("export-dot", "Graphviz export, A in blue");
  b_dot->add_option("--out,-o", out_path)->required();
  for (auto* s : {b_explore, b_info, b_dot}) {
    group_opt(s);
    radius_opt(s);
  }

  auto* ends = app.add_subcommand("ends", "Finite-scale ends");
  ends->require_subcommand(1);
  auto* n_report = ends->add_subcommand("report", "Greedy lower bounds over a schedule");
  n_report->add_option("--schedule,-s", config.schedule, "Radii, e.g. 4,6,8")->required();
  auto* n_amplify = ends->add_subcommand("amplify", "Two-translate amplification");
  radius_opt(n_amplify);
  n_amplify->add_option("--k-ball", k_radius, "K = saturated ball of this radius");
  n_amplify->add_option("--by", by, "Translation name")->required();
  auto* n_traces = ends->add_subcommand("traces", "Follow components across radii");
  n_traces->add_option("--schedule,-s", config.schedule)->required();
  n_traces->add_option("--k-ball", k_radius, "K = saturated ball of this radius");
  for (auto* s : {n_report, n_amplify, n_traces}) {
    group_opt(s);
    s->add_option("--testbed", testbed, "line or tree4 instead of a coset graph");
  }

  auto* ai = app.add_subcommand("ai", "Almost invariance of A");
  ai->require_subcommand(1);
  auto* a_exact = ai->add_subcommand("exact", "Closed-form |vA - A| count");
  a_exact->add_option("--gen,-e", elem)->required();
  auto* a_ball = ai->add_subcommand("ball", "Flip states within a ball");
  a_ball->add_option("--gen,-e", elem)->required();
  radius_opt(a_ball);
  auto* a_cut = ai->add_subcommand("cut", "A / complement cut");
  radius_opt(a_cut);
  for (auto* s : {a_exact, a_ball, a_cut}) group_opt(s);

  auto* fa = app.add_subcommand("fa", "Property FA certificates");
  fa->require_subcommand(1);
  auto* f_t = fa->add_subcommand("t-cert", "Certificate for T");
  f_t->add_flag("--random-conjugator", random_conjugator,
                "Conjugate all generators by a seeded random element of T");
  auto* f_v = fa->add_subcommand("v-cert", "Certificate for V");
  for (auto* s : {f_t, f_v}) s->add_option("--out,-o", out_path, "Write JSON");
  auto* f_verify = fa->add_subcommand("verify", "Re-verify a certificate file");
  f_verify->add_option("--in,-i", in_path)->required();

  auto* tree = app.add_subcommand("tree", "Modular group tree testbed");
  tree->require_subcommand(1);
  auto* t_suite = tree->add_subcommand("suite", "Fixed-point lemma checks");
  t_suite->add_option("--max-syllables", max_syllables)->check(CLI::Range(0, 6));
  auto* t_classify = tree->add_subcommand("classify", "Elliptic or hyperbolic");
  t_classify->add_option("--word,-w", word)->required();
  t_classify->add_option("--radius,-r", tree_radius, "Default 2*letters+2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::string path;
  for (CLI::App* s = &app; !s->get_subcommands().empty();) {
    s = s->get_subcommands().front();
    path += (path.empty() ? "" : " ") + s->get_name();
  }
  Report rep(config, path);
  try {
    if (e_eval->parsed()) ElementEval(elem, at, rep);
    if (e_compose->parsed()) ElementCompose(elems, rep);
    if (e_order->parsed()) ElementOrder(elem, bound, rep);
    if (e_small->parsed()) ElementSmall(elem, rep);
    if (e_support->parsed()) ElementSupport(elem, rep);
    if (b_explore->parsed() || b_info->parsed()) BallInfo(config, rep);
    if (b_dot->parsed()) BallExportDot(config, out_path, rep);
    if (n_report->parsed()) EndsReportCmd(config, testbed, rep);
    if (n_amplify->parsed()) EndsAmplify(config, testbed, k_radius, by, rep);
    if (n_traces->parsed()) EndsTraces(config, testbed, k_radius, rep);
    if (a_exact->parsed()) AiExact(config, elem, rep);
    if (a_ball->parsed()) AiBall(config, elem, rep);
    if (a_cut->parsed()) AiCut(config, rep);
    if (f_t->parsed()) {
      CellMap k;
      if (random_conjugator) {
        std::mt19937_64 rng(config.seed);
        const Generator t_gens[] = {Generator::kX0, Generator::kX1,
                                    Generator::kPi0};
        const auto alphabet = SymmetrizedAlphabet(t_gens);
        k = EvaluateWord(RandomWord(rng, 6, alphabet));
        rep.Line("conjugator " + k.ToString());
      }
      FaEmit(TCertificate(k), out_path, rep);
    }
    if (f_v->parsed()) FaEmit(VCertificate(), out_path, rep);
    if (f_verify->parsed()) FaVerify(in_path, rep);
    if (t_suite->parsed()) TreeSuite(max_syllables, rep);
    if (t_classify->parsed()) TreeClassify(word, tree_radius, rep);
  } catch (const CertificateFailure& e) {
    std::cerr << "CERTIFICATE FAILED: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << " (completed radius "
              << e.completed_radius() << ", " << e.vertices()
              << " vertices)\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  rep.Print(std::cout);
  return rep.status();
}
