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
#ifndef THOMPSON_FACERT_H_
#define THOMPSON_FACERT_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/elements.h"
#include "thompson/words.h"

namespace thompson {

enum class EvidenceKind {
  kSmall,                  // identity on the witness interval
  kFiniteOrder,            // subject^order = 1
  kConjugateSmall,         // conjugator * subject * conjugator^-1 small
  kCommutingDisjointPair,  // subject = a*b, a and b small, disjoint supports,
                           // commuting
  kChain,                  // the x0 / pi1 argument, see VCertificate
  kSubgroupFixedPoint,     // subject lies in a subgroup with a certified
                           // global fixed point
};

std::string_view EvidenceKindName(EvidenceKind kind);

struct EllipticEvidence {
  std::string subject;
  CellMap map;
  EvidenceKind kind = EvidenceKind::kSmall;
  std::optional<StdInterval> witness;  // kSmall, kConjugateSmall, kChain
  int order = 0;                       // kFiniteOrder
  std::optional<CellMap> conjugator;   // kConjugateSmall
  // kCommutingDisjointPair: the factors; kChain: the conjugating element and
  // the finite order element.
  std::vector<NamedElement> factors;
  std::optional<CellMap> auxiliary;    // kChain: the small element
  std::string subgroup;                // kSubgroupFixedPoint
  std::vector<std::string> steps;      // human-readable argument
};

struct EvidenceHints {
  // Tried before the default order when applicable (the FA arguments name
  // the route they use, e.g. finite order for an element that is also small).
  std::optional<EvidenceKind> prefer;
  std::optional<CellMap> conjugator;
  std::vector<NamedElement> factors;  // subject == factors[0] * factors[1]
};

// First applicable of Small, FiniteOrder (bound 200), ConjugateSmall and
// CommutingDisjointPair (hinted). Throws NoEvidence.
EllipticEvidence FindEllipticEvidence(const std::string& name, const CellMap& g,
                                      const EvidenceHints& hints = {});
// Recomputes every claim. Throws CertificateFailure.
void VerifyEvidence(const EllipticEvidence& e);

struct PairEvidence {
  std::string left;
  std::string right;
  EllipticEvidence evidence;  // for left * right
};

// A word over the certificate generators, "a b^-1 ...", evaluating to
// conjugator * target * conjugator^-1.
struct GenerationWitness {
  std::string target;
  std::string word;
};

struct FACertificate {
  GroupClass group = GroupClass::kT;
  std::vector<NamedElement> generators;
  std::vector<EllipticEvidence> generator_evidence;
  std::vector<PairEvidence> pairs;
  CellMap conjugator;  // identity unless the certificate was conjugated
  std::vector<GenerationWitness> generation;
  std::shared_ptr<const FACertificate> nested;  // T inside V
  std::string cites = "Lemma 4.1(4)";
};

// Eight generators of the arc subgroups L, R, U, D (two each), all small, with
// evidence for all 36 products. The optional conjugator k replaces every
// generator g by k g k^-1.
FACertificate TCertificate(const CellMap& conjugator = CellMap::Identity());
FACertificate VCertificate();

// Recomputes everything from the stored maps; appends one line per check to
// audit when given. Throws CertificateFailure naming the first failing check.
void VerifyCertificate(const FACertificate& cert,
                       std::vector<std::string>* audit = nullptr);

std::string CertificateToJson(const FACertificate& cert);
// Throws CertificateFailure on malformed documents.
FACertificate CertificateFromJson(std::string_view text);

// Meet-in-the-middle search for a word of length <= 2 * half_length over the
// symmetrized generators that evaluates to target.
std::optional<std::string> FindWord(const std::vector<NamedElement>& generators,
                                    const CellMap& target, int half_length);

}  // namespace thompson

#endif  // THOMPSON_FACERT_H_
