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
#include "thompson/facert.h"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "thompson/errors.h"

namespace thompson {
namespace {

using nlohmann::json;

constexpr int kOrderBound = 200;
constexpr std::string_view kFormat = "thompson-fa-certificate";
constexpr int kVersion = 1;

[[noreturn]] void Fail(const std::string& what) {
  throw CertificateFailure(what);
}

// The coarsest cell on which g is the identity: the most informative witness
// (for a generator of an arc subgroup it is the complementary arc).
std::optional<StdInterval> CoarsestIdentityCell(const CellMap& g) {
  std::optional<StdInterval> best;
  for (const CellPair& p : g.pairs()) {
    if (p.domain != p.range) continue;
    if (!best || p.domain.level() < best->level()) best = p.domain;
  }
  return best;
}

bool InGroup(const CellMap& g, GroupClass group) {
  return Join(g.group_class(), group) == group;
}

const NamedElement* FindNamed(const std::vector<NamedElement>& gens,
                              std::string_view name) {
  for (const NamedElement& g : gens) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

CellMap EvaluateNamedWord(const std::vector<NamedElement>& gens,
                          std::string_view word) {
  std::istringstream in{std::string(word)};
  CellMap out;
  std::string token;
  while (in >> token) {
    bool inverse = false;
    if (token.size() > 3 && token.ends_with("^-1")) {
      inverse = true;
      token.resize(token.size() - 3);
    }
    const NamedElement* g = FindNamed(gens, token);
    if (!g) Fail("generation word uses unknown generator '" + token + "'");
    out = out * (inverse ? Invert(g->map) : g->map);
  }
  return out;
}

char ArcOf(std::string_view name) { return name.empty() ? '?' : name[0]; }

bool OppositeArcs(std::string_view a, std::string_view b) {
  const char x = ArcOf(a);
  const char y = ArcOf(b);
  return (x == 'L' && y == 'R') || (x == 'R' && y == 'L') ||
         (x == 'U' && y == 'D') || (x == 'D' && y == 'U');
}

}  // namespace

std::string_view EvidenceKindName(EvidenceKind kind) {
  switch (kind) {
    case EvidenceKind::kSmall:
      return "Small";
    case EvidenceKind::kFiniteOrder:
      return "FiniteOrder";
    case EvidenceKind::kConjugateSmall:
      return "ConjugateSmall";
    case EvidenceKind::kCommutingDisjointPair:
      return "CommutingDisjointPair";
    case EvidenceKind::kChain:
      return "Lemma41_3Chain";
    case EvidenceKind::kSubgroupFixedPoint:
      return "SubgroupFixedPoint";
  }
  return "?";
}

namespace {

EvidenceKind ParseEvidenceKind(std::string_view name) {
  for (EvidenceKind k :
       {EvidenceKind::kSmall, EvidenceKind::kFiniteOrder,
        EvidenceKind::kConjugateSmall, EvidenceKind::kCommutingDisjointPair,
        EvidenceKind::kChain, EvidenceKind::kSubgroupFixedPoint}) {
    if (EvidenceKindName(k) == name) return k;
  }
  Fail("unknown evidence kind '" + std::string(name) + "'");
}

}  // namespace

// --- evidence -------------------------------------------------------------------

EllipticEvidence FindEllipticEvidence(const std::string& name, const CellMap& g,
                                      const EvidenceHints& hints) {
  EllipticEvidence e;
  e.subject = name;
  e.map = g;
  if (hints.prefer == EvidenceKind::kFiniteOrder) {
    if (auto n = OrderUpTo(g, kOrderBound)) {
      e.kind = EvidenceKind::kFiniteOrder;
      e.order = *n;
      return e;
    }
  }
  if (auto w = CoarsestIdentityCell(g)) {
    e.kind = EvidenceKind::kSmall;
    e.witness = w;
    return e;
  }
  if (auto n = OrderUpTo(g, kOrderBound)) {
    e.kind = EvidenceKind::kFiniteOrder;
    e.order = *n;
    return e;
  }
  if (hints.conjugator) {
    if (auto w = CoarsestIdentityCell(Conjugate(g, *hints.conjugator))) {
      e.kind = EvidenceKind::kConjugateSmall;
      e.conjugator = hints.conjugator;
      e.witness = w;
      return e;
    }
  }
  if (hints.factors.size() == 2) {
    const CellMap& a = hints.factors[0].map;
    const CellMap& b = hints.factors[1].map;
    if (a * b == g && CoarsestIdentityCell(a) && CoarsestIdentityCell(b) &&
        SupportsDisjoint(a, b) && a * b == b * a) {
      e.kind = EvidenceKind::kCommutingDisjointPair;
      e.factors = hints.factors;
      e.steps = {"both factors are small, hence elliptic",
                 "they commute, so each stabilizes the fixed set of the other",
                 "commuting elliptic elements share a fixed point, which the "
                 "product fixes"};
      return e;
    }
  }
  throw NoEvidence(name + " is not small, has order > " +
                   std::to_string(kOrderBound) +
                   " and no hinted route applies");
}

void VerifyEvidence(const EllipticEvidence& e) {
  const std::string who = e.subject + " (" +
                          std::string(EvidenceKindName(e.kind)) + "): ";
  switch (e.kind) {
    case EvidenceKind::kSmall:
      if (!e.witness || !IsIdentityOn(e.map, *e.witness)) {
        Fail(who + "not the identity on the stated witness");
      }
      return;
    case EvidenceKind::kFiniteOrder:
      if (e.order < 1 || OrderUpTo(e.map, e.order) != e.order) {
        Fail(who + "order is not " + std::to_string(e.order));
      }
      return;
    case EvidenceKind::kConjugateSmall:
      if (!e.conjugator || !e.witness ||
          !IsIdentityOn(Conjugate(e.map, *e.conjugator), *e.witness)) {
        Fail(who + "conjugate is not the identity on the stated witness");
      }
      return;
    case EvidenceKind::kCommutingDisjointPair: {
      if (e.factors.size() != 2) Fail(who + "needs two factors");
      const CellMap& a = e.factors[0].map;
      const CellMap& b = e.factors[1].map;
      if (a * b != e.map) Fail(who + "factors do not multiply to the subject");
      if (!CoarsestIdentityCell(a) || !CoarsestIdentityCell(b)) {
        Fail(who + "a factor is not small");
      }
      if (!SupportsDisjoint(a, b)) Fail(who + "supports overlap");
      if (a * b != b * a) Fail(who + "factors do not commute");
      return;
    }
    case EvidenceKind::kChain: {
      // subject = p x with p of finite order, x in a subgroup with a fixed
      // point, and x^-1 p x p small.
      if (e.factors.size() != 2 || !e.auxiliary || !e.witness) {
        Fail(who + "incomplete chain");
      }
      const CellMap& x = e.factors[0].map;
      const CellMap& p = e.factors[1].map;
      if (p * x != e.map) Fail(who + "subject is not the stated product");
      if (Invert(x) * p * x * p != *e.auxiliary) {
        Fail(who + "auxiliary element is not x^-1 p x p");
      }
      if (!IsIdentityOn(*e.auxiliary, *e.witness)) {
        Fail(who + "auxiliary element is not the identity on the witness");
      }
      if (!OrderUpTo(p, kOrderBound)) Fail(who + "p does not have finite order");
      if (e.subgroup.empty() || !InGroup(x, ParseGroupClass(e.subgroup))) {
        Fail(who + "x is not in the stated subgroup");
      }
      return;
    }
    case EvidenceKind::kSubgroupFixedPoint:
      if (e.subgroup.empty() || !InGroup(e.map, ParseGroupClass(e.subgroup))) {
        Fail(who + "not an element of " + e.subgroup);
      }
      return;
  }
}

// --- word search -----------------------------------------------------------------

std::optional<std::string> FindWord(const std::vector<NamedElement>& generators,
                                    const CellMap& target, int half_length) {
  const std::vector<NamedElement> letters = Symmetrize(generators);
  std::vector<std::pair<CellMap, std::string>> ball = {{CellMap(), ""}};
  std::unordered_map<CellMap, std::size_t> index = {{CellMap(), 0}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= half_length; ++len) {
    const std::size_t layer_end = ball.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const NamedElement& l : letters) {
        CellMap g = ball[i].first * l.map;
        if (index.contains(g)) continue;
        index.emplace(g, ball.size());
        ball.emplace_back(std::move(g),
                          ball[i].second.empty() ? l.name
                                                 : ball[i].second + " " + l.name);
      }
    }
    layer_begin = layer_end;
  }
  for (const auto& [a, word] : ball) {
    const auto it = index.find(Invert(a) * target);
    if (it == index.end()) continue;
    const std::string& rest = ball[it->second].second;
    if (word.empty()) return rest.empty() ? "1" : rest;
    return rest.empty() ? word : word + " " + rest;
  }
  return std::nullopt;
}

// --- certificates ----------------------------------------------------------------

FACertificate TCertificate(const CellMap& conjugator) {
  FACertificate cert;
  cert.group = GroupClass::kT;
  cert.conjugator = conjugator;
  if (!InGroup(conjugator, GroupClass::kT)) {
    throw ClassMismatch("T certificate conjugator must lie in T");
  }
  for (Arc arc : {Arc::kL, Arc::kR, Arc::kU, Arc::kD}) {
    const auto gens = ArcSubgroupGenerators(arc);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      cert.generators.push_back(
          {std::string(ArcName(arc)) + std::to_string(i),
           Conjugate(gens[i], conjugator)});
    }
  }
  for (const NamedElement& g : cert.generators) {
    cert.generator_evidence.push_back(FindEllipticEvidence(g.name, g.map));
  }
  for (std::size_t i = 0; i < cert.generators.size(); ++i) {
    for (std::size_t j = i; j < cert.generators.size(); ++j) {
      const NamedElement& a = cert.generators[i];
      const NamedElement& b = cert.generators[j];
      EvidenceHints hints;
      if (OppositeArcs(a.name, b.name)) hints.factors = {a, b};
      cert.pairs.push_back(
          {a.name, b.name,
           FindEllipticEvidence(a.name + "*" + b.name, a.map * b.map, hints)});
    }
  }
  for (Generator s : {Generator::kX0, Generator::kX1, Generator::kPi0}) {
    const CellMap target = Conjugate(StandardGenerator(s), conjugator);
    std::optional<std::string> word;
    for (int half = 1; half <= 4 && !word; ++half) {
      word = FindWord(cert.generators, target, half);
    }
    if (!word) {
      throw CertificateFailure("no short word over the arc generators gives " +
                               std::string(GeneratorName(s)));
    }
    cert.generation.push_back({std::string(GeneratorName(s)), *word});
  }
  return cert;
}

FACertificate VCertificate() {
  FACertificate cert;
  cert.group = GroupClass::kV;
  cert.nested = std::make_shared<const FACertificate>(TCertificate());
  for (Generator s : kStandardGenerators) {
    cert.generators.push_back(
        {std::string(GeneratorName(s)), StandardGenerator(s)});
    cert.generation.push_back(
        {std::string(GeneratorName(s)), std::string(GeneratorName(s))});
  }
  const NamedElement& x0 = cert.generators[0];
  const NamedElement& pi1 = cert.generators[3];
  auto in_t = [](const std::string& name, const CellMap& g) {
    EllipticEvidence e;
    e.subject = name;
    e.map = g;
    e.kind = EvidenceKind::kSubgroupFixedPoint;
    e.subgroup = "T";
    e.steps = {"lies in T, which has a global fixed point by the nested "
               "certificate"};
    return e;
  };
  EvidenceHints finite_order;
  finite_order.prefer = EvidenceKind::kFiniteOrder;
  for (const NamedElement& g : cert.generators) {
    cert.generator_evidence.push_back(
        g.name == "pi1" ? FindEllipticEvidence(g.name, g.map, finite_order)
                        : in_t(g.name, g.map));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const NamedElement& a = cert.generators[i];
      const NamedElement& b = cert.generators[j];
      cert.pairs.push_back(
          {a.name, b.name, in_t(a.name + "*" + b.name, a.map * b.map)});
    }
  }
  for (std::size_t j = 0; j < 4; ++j) {
    const NamedElement& b = cert.generators[j];
    const std::string name = "pi1*" + b.name;
    const CellMap product = pi1.map * b.map;
    if (b.name == "x0") {
      EllipticEvidence e;
      e.subject = name;
      e.map = product;
      e.kind = EvidenceKind::kChain;
      e.factors = {x0, pi1};
      e.auxiliary = Invert(x0.map) * pi1.map * x0.map * pi1.map;
      e.witness = CoarsestIdentityCell(*e.auxiliary);
      if (!e.witness) {
        throw CertificateFailure("x0^-1 pi1 x0 pi1 is not small");
      }
      e.subgroup = "T";
      e.steps = {
          "x0^-1 pi1 x0 pi1 is small, hence elliptic",
          "Fix(x0^-1 pi1 x0) ∩ Fix(pi1) ≠ ∅",
          "=> x0^-1(Fix(pi1)) ∩ Fix(pi1) ≠ ∅",
          "=> Fix(x0^-1) ∩ Fix(pi1) ≠ ∅, so pi1 x0 is elliptic"};
      cert.pairs.push_back({"pi1", b.name, std::move(e)});
    } else {
      // pi1 pi0 and pi1 pi1 by finite order, pi1 x1 by smallness.
      cert.pairs.push_back(
          {"pi1", b.name,
           FindEllipticEvidence(name, product,
                                b.name == "x1" ? EvidenceHints{} : finite_order)});
    }
  }
  return cert;
}

void VerifyCertificate(const FACertificate& cert,
                       std::vector<std::string>* audit) {
  auto note = [&](const std::string& line) {
    if (audit) audit->push_back(line);
  };
  const std::string group(GroupName(cert.group));
  if (cert.group != GroupClass::kT && cert.group != GroupClass::kV) {
    Fail("certificates exist only for T and V");
  }
  if (!InGroup(cert.conjugator, cert.group)) {
    Fail("conjugator is not in " + group);
  }
  if (cert.generators.empty()) Fail("no generators");
  for (const NamedElement& g : cert.generators) {
    if (!InGroup(g.map, cert.group)) Fail(g.name + " is not in " + group);
    if (std::count_if(cert.generators.begin(), cert.generators.end(),
                      [&](const auto& o) { return o.name == g.name; }) != 1) {
      Fail("duplicate generator name " + g.name);
    }
  }

  if (cert.group == GroupClass::kV) {
    if (!cert.nested || cert.nested->group != GroupClass::kT) {
      Fail("V certificate needs a nested T certificate");
    }
    note("nested T certificate:");
    std::vector<std::string> inner;
    VerifyCertificate(*cert.nested, &inner);
    for (const std::string& line : inner) note("  " + line);
  }

  // Generation: every standard generator of the group (conjugated) is a word
  // in the certificate generators.
  std::vector<Generator> needed = {Generator::kX0, Generator::kX1,
                                   Generator::kPi0};
  if (cert.group == GroupClass::kV) needed.push_back(Generator::kPi1);
  for (Generator s : needed) {
    const std::string name(GeneratorName(s));
    const auto it = std::find_if(cert.generation.begin(), cert.generation.end(),
                                 [&](const auto& w) { return w.target == name; });
    if (it == cert.generation.end()) Fail("no generation witness for " + name);
    if (EvaluateNamedWord(cert.generators, it->word) !=
        Conjugate(StandardGenerator(s), cert.conjugator)) {
      Fail("generation witness for " + name + " does not evaluate correctly");
    }
    note("generates " + name + " = " + it->word);
  }

  auto check_kind = [&](const EllipticEvidence& e) {
    if (e.kind == EvidenceKind::kSubgroupFixedPoint ||
        e.kind == EvidenceKind::kChain) {
      if (cert.group != GroupClass::kV || e.subgroup != "T") {
        Fail(e.subject + ": subgroup evidence needs the nested T certificate");
      }
    }
  };

  if (cert.generator_evidence.size() != cert.generators.size()) {
    Fail("generator evidence count mismatch");
  }
  for (std::size_t i = 0; i < cert.generators.size(); ++i) {
    const EllipticEvidence& e = cert.generator_evidence[i];
    if (e.subject != cert.generators[i].name || e.map != cert.generators[i].map) {
      Fail("evidence " + e.subject + " does not match generator " +
           cert.generators[i].name);
    }
    check_kind(e);
    VerifyEvidence(e);
    note(e.subject + ": " + std::string(EvidenceKindName(e.kind)) +
         (e.witness ? " on " + e.witness->ToString() : "") +
         (e.order ? " order " + std::to_string(e.order) : ""));
  }

  const std::size_t m = cert.generators.size();
  if (cert.pairs.size() != m * (m + 1) / 2) {
    Fail("pair evidence does not cover all " + std::to_string(m * (m + 1) / 2) +
         " pairs");
  }
  std::vector<std::vector<int>> covered(m, std::vector<int>(m, 0));
  auto index_of = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < m; ++i) {
      if (cert.generators[i].name == name) return i;
    }
    Fail("pair names unknown generator " + name);
  };
  for (const PairEvidence& p : cert.pairs) {
    const std::size_t a = index_of(p.left);
    const std::size_t b = index_of(p.right);
    if (covered[a][b] || covered[b][a]) {
      Fail("pair " + p.left + "," + p.right + " listed twice");
    }
    covered[a][b] = 1;
    const EllipticEvidence& e = p.evidence;
    if (e.map != cert.generators[a].map * cert.generators[b].map) {
      Fail("pair " + p.left + "*" + p.right + ": stored product is wrong");
    }
    if (e.kind == EvidenceKind::kCommutingDisjointPair &&
        (cert.group != GroupClass::kT || !OppositeArcs(p.left, p.right))) {
      Fail("pair " + p.left + "*" + p.right +
           ": commuting-disjoint route is reserved for opposite arcs");
    }
    check_kind(e);
    VerifyEvidence(e);
    std::string line = p.left + "*" + p.right + ": " +
                       std::string(EvidenceKindName(e.kind));
    if (e.witness) line += " on " + e.witness->ToString();
    if (e.order) line += " order " + std::to_string(e.order);
    note(line);
    for (const std::string& step : e.steps) note("    " + step);
  }
  note(group + " is generated by " + std::to_string(m) +
       " elliptic elements with elliptic pairwise products; " + cert.cites);
}

// --- JSON ------------------------------------------------------------------------

namespace {

json NamedToJson(const NamedElement& g) {
  return {{"name", g.name}, {"map", g.map.ToString()}};
}

NamedElement NamedFromJson(const json& j) {
  return {j.at("name").get<std::string>(),
          CellMap::Parse(j.at("map").get<std::string>())};
}

json EvidenceToJson(const EllipticEvidence& e) {
  json j = {{"subject", e.subject},
            {"map", e.map.ToString()},
            {"kind", EvidenceKindName(e.kind)}};
  if (e.witness) j["witness"] = e.witness->ToString();
  if (e.order) j["order"] = e.order;
  if (e.conjugator) j["conjugator"] = e.conjugator->ToString();
  if (!e.factors.empty()) {
    j["factors"] = json::array();
    for (const auto& f : e.factors) j["factors"].push_back(NamedToJson(f));
  }
  if (e.auxiliary) j["auxiliary"] = e.auxiliary->ToString();
  if (!e.subgroup.empty()) j["subgroup"] = e.subgroup;
  if (!e.steps.empty()) j["steps"] = e.steps;
  return j;
}

EllipticEvidence EvidenceFromJson(const json& j) {
  EllipticEvidence e;
  e.subject = j.at("subject").get<std::string>();
  e.map = CellMap::Parse(j.at("map").get<std::string>());
  e.kind = ParseEvidenceKind(j.at("kind").get<std::string>());
  if (j.contains("witness")) {
    e.witness = StdInterval::Parse(j["witness"].get<std::string>());
  }
  if (j.contains("order")) e.order = j["order"].get<int>();
  if (j.contains("conjugator")) {
    e.conjugator = CellMap::Parse(j["conjugator"].get<std::string>());
  }
  if (j.contains("factors")) {
    for (const json& f : j["factors"]) e.factors.push_back(NamedFromJson(f));
  }
  if (j.contains("auxiliary")) {
    e.auxiliary = CellMap::Parse(j["auxiliary"].get<std::string>());
  }
  if (j.contains("subgroup")) e.subgroup = j["subgroup"].get<std::string>();
  if (j.contains("steps")) e.steps = j["steps"].get<std::vector<std::string>>();
  return e;
}

json CertToJson(const FACertificate& cert) {
  json j = {{"format", kFormat},
            {"version", kVersion},
            {"group", GroupName(cert.group)},
            {"cites", cert.cites},
            {"conjugator", cert.conjugator.ToString()},
            {"generators", json::array()},
            {"generator_evidence", json::array()},
            {"pairs", json::array()},
            {"generation", json::array()}};
  for (const auto& g : cert.generators) j["generators"].push_back(NamedToJson(g));
  for (const auto& e : cert.generator_evidence) {
    j["generator_evidence"].push_back(EvidenceToJson(e));
  }
  for (const auto& p : cert.pairs) {
    j["pairs"].push_back({{"left", p.left},
                          {"right", p.right},
                          {"evidence", EvidenceToJson(p.evidence)}});
  }
  for (const auto& w : cert.generation) {
    j["generation"].push_back({{"target", w.target}, {"word", w.word}});
  }
  j["nested"] = cert.nested ? CertToJson(*cert.nested) : json(nullptr);
  return j;
}

FACertificate CertFromJson(const json& j) {
  if (j.at("format").get<std::string>() != kFormat ||
      j.at("version").get<int>() != kVersion) {
    Fail("unsupported certificate format");
  }
  FACertificate cert;
  cert.group = ParseGroupClass(j.at("group").get<std::string>());
  cert.cites = j.at("cites").get<std::string>();
  cert.conjugator = CellMap::Parse(j.at("conjugator").get<std::string>());
  for (const json& g : j.at("generators")) {
    cert.generators.push_back(NamedFromJson(g));
  }
  for (const json& e : j.at("generator_evidence")) {
    cert.generator_evidence.push_back(EvidenceFromJson(e));
  }
  for (const json& p : j.at("pairs")) {
    cert.pairs.push_back({p.at("left").get<std::string>(),
                          p.at("right").get<std::string>(),
                          EvidenceFromJson(p.at("evidence"))});
  }
  for (const json& w : j.at("generation")) {
    cert.generation.push_back(
        {w.at("target").get<std::string>(), w.at("word").get<std::string>()});
  }
  if (!j.at("nested").is_null()) {
    cert.nested = std::make_shared<const FACertificate>(CertFromJson(j["nested"]));
  }
  return cert;
}

}  // namespace

std::string CertificateToJson(const FACertificate& cert) {
  return CertToJson(cert).dump(2) + "\n";
}

FACertificate CertificateFromJson(std::string_view text) {
  try {
    return CertFromJson(json::parse(text));
  } catch (const CertificateFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw CertificateFailure(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace thompson
