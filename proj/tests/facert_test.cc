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

#include <gtest/gtest.h>

#include <random>

#include "thompson/errors.h"
#include "thompson/words.h"

namespace thompson {
namespace {

CellMap G(Generator g) { return StandardGenerator(g); }
StdInterval I(const char* s) { return StdInterval::Parse(s); }

const EllipticEvidence& PairFor(const FACertificate& c, const std::string& a,
                                const std::string& b) {
  for (const PairEvidence& p : c.pairs) {
    if ((p.left == a && p.right == b) || (p.left == b && p.right == a)) {
      return p.evidence;
    }
  }
  throw std::runtime_error("no pair " + a + "," + b);
}

class CertificateTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    t_ = new FACertificate(TCertificate());
    v_ = new FACertificate(VCertificate());
  }
  static void TearDownTestSuite() {
    delete t_;
    delete v_;
  }
  static FACertificate* t_;
  static FACertificate* v_;
};

FACertificate* CertificateTest::t_ = nullptr;
FACertificate* CertificateTest::v_ = nullptr;

TEST(EvidenceTest, Examples) {
  const CellMap pi1 = G(Generator::kPi1);
  EvidenceHints finite;
  finite.prefer = EvidenceKind::kFiniteOrder;
  const EllipticEvidence e = FindEllipticEvidence("pi1", pi1, finite);
  EXPECT_EQ(e.kind, EvidenceKind::kFiniteOrder);
  EXPECT_EQ(e.order, 2);
  // Under this diagram pi1 is also the identity on [0,1/2).
  EXPECT_EQ(FindEllipticEvidence("pi1", pi1).kind, EvidenceKind::kSmall);

  const EllipticEvidence s =
      FindEllipticEvidence("pi1 x1", pi1 * G(Generator::kX1));
  EXPECT_EQ(s.kind, EvidenceKind::kSmall);
  EXPECT_EQ(s.witness, StdInterval::LeftHalf());

  EXPECT_THROW(FindEllipticEvidence("x0", G(Generator::kX0)), NoEvidence);
  EXPECT_EQ(FindEllipticEvidence("pi0", G(Generator::kPi0)).order, 3);
}

TEST(EvidenceTest, ConjugateSmallNeedsAHint) {
  // Conjugates of small elements are small; the hinted route must verify too.
  const CellMap k = G(Generator::kX0);
  const CellMap small = ArcSubgroupGenerators(Arc::kU)[0];
  const CellMap g = Conjugate(small, Invert(k));
  EvidenceHints hints;
  hints.conjugator = k;
  const EllipticEvidence e = FindEllipticEvidence("g", g, hints);
  VerifyEvidence(e);
  EXPECT_TRUE(e.kind == EvidenceKind::kSmall ||
              e.kind == EvidenceKind::kConjugateSmall);
}

TEST(EvidenceTest, VerifyRejectsFalseClaims) {
  EllipticEvidence e = FindEllipticEvidence("pi1 x1",
                                            G(Generator::kPi1) * G(Generator::kX1));
  e.witness = I("1/2^1");
  EXPECT_THROW(VerifyEvidence(e), CertificateFailure);

  EvidenceHints finite;
  finite.prefer = EvidenceKind::kFiniteOrder;
  EllipticEvidence f = FindEllipticEvidence("pi0", G(Generator::kPi0), finite);
  f.order = 2;
  EXPECT_THROW(VerifyEvidence(f), CertificateFailure);
}

TEST_F(CertificateTest, TCertificateShape) {
  const FACertificate& c = *t_;
  EXPECT_EQ(c.group, GroupClass::kT);
  ASSERT_EQ(c.generators.size(), 8u);
  EXPECT_EQ(c.pairs.size(), 36u);
  for (const EllipticEvidence& e : c.generator_evidence) {
    EXPECT_EQ(e.kind, EvidenceKind::kSmall) << e.subject;
    EXPECT_TRUE(IsIdentityOn(e.map, *e.witness));
  }
  std::size_t commuting = 0;
  for (const PairEvidence& p : c.pairs) {
    if (p.evidence.kind == EvidenceKind::kCommutingDisjointPair) {
      ++commuting;
      const char a = p.left[0], b = p.right[0];
      EXPECT_TRUE((a == 'L' && b == 'R') || (a == 'R' && b == 'L') ||
                  (a == 'U' && b == 'D') || (a == 'D' && b == 'U'))
          << p.left << "*" << p.right;
    } else {
      EXPECT_EQ(p.evidence.kind, EvidenceKind::kSmall);
    }
  }
  // L0*R0 and U0*D0; the other opposite pairs happen to be small.
  EXPECT_EQ(commuting, 2u);
  const EllipticEvidence& lu = PairFor(c, "L0", "U0");
  EXPECT_EQ(lu.kind, EvidenceKind::kSmall);
  EXPECT_EQ(Relate(*lu.witness, I("3/2^2")) == Relation::kEqual ||
                Relate(*lu.witness, I("3/2^2")) == Relation::kIinJ,
            true);
  EXPECT_NO_THROW(VerifyCertificate(c));
}

TEST_F(CertificateTest, VCertificateFollowsTheFourArguments) {
  const FACertificate& c = *v_;
  EXPECT_EQ(c.group, GroupClass::kV);
  ASSERT_TRUE(c.nested);
  const EllipticEvidence& pi1 = c.generator_evidence.back();
  EXPECT_EQ(pi1.subject, "pi1");
  EXPECT_EQ(pi1.kind, EvidenceKind::kFiniteOrder);
  EXPECT_EQ(pi1.order, 2);
  const EllipticEvidence& pp = PairFor(c, "pi1", "pi0");
  EXPECT_EQ(pp.kind, EvidenceKind::kFiniteOrder);
  EXPECT_EQ(pp.order, 2);
  const EllipticEvidence& px1 = PairFor(c, "pi1", "x1");
  EXPECT_EQ(px1.kind, EvidenceKind::kSmall);
  EXPECT_EQ(px1.witness, StdInterval::LeftHalf());
  const EllipticEvidence& px0 = PairFor(c, "pi1", "x0");
  EXPECT_EQ(px0.kind, EvidenceKind::kChain);
  ASSERT_TRUE(px0.auxiliary);
  EXPECT_EQ(*px0.auxiliary, ParseElement("x0^-1 pi1 x0 pi1"));
  EXPECT_EQ(px0.witness, StdInterval::LeftHalf());
  EXPECT_EQ(c.cites, "Lemma 4.1(4)");

  std::vector<std::string> audit;
  VerifyCertificate(c, &audit);
  EXPECT_FALSE(audit.empty());
}

TEST_F(CertificateTest, TamperedCertificatesFail) {
  {
    FACertificate c = *t_;
    c.generator_evidence[3].witness = StdInterval::Unit();
    EXPECT_THROW(VerifyCertificate(c), CertificateFailure);
  }
  {
    FACertificate c = *t_;
    c.pairs.pop_back();
    EXPECT_THROW(VerifyCertificate(c), CertificateFailure);
  }
  {
    FACertificate c = *t_;
    c.generators[0].map = G(Generator::kPi0);
    EXPECT_THROW(VerifyCertificate(c), CertificateFailure);
  }
  {
    FACertificate c = *t_;
    c.generation[0].word = c.generation[1].word;
    EXPECT_THROW(VerifyCertificate(c), CertificateFailure);
  }
  {
    FACertificate c = *v_;
    for (PairEvidence& p : c.pairs) {
      if (p.left == "pi1" && p.right == "x0") p.evidence.witness = I("1/2^1");
    }
    EXPECT_THROW(VerifyCertificate(c), CertificateFailure);
  }
  {
    FACertificate c = *v_;
    c.nested.reset();
    EXPECT_THROW(VerifyCertificate(c), CertificateFailure);
  }
  {
    // The commuting route is not accepted for pairs that are not opposite.
    FACertificate c = *t_;
    for (PairEvidence& p : c.pairs) {
      if (p.left == "L0" && p.right == "U0") {
        p.evidence.kind = EvidenceKind::kCommutingDisjointPair;
      }
    }
    EXPECT_THROW(VerifyCertificate(c), CertificateFailure);
  }
}

TEST_F(CertificateTest, JsonRoundTrip) {
  for (const FACertificate* c : {t_, v_}) {
    const std::string text = CertificateToJson(*c);
    const FACertificate back = CertificateFromJson(text);
    EXPECT_EQ(CertificateToJson(back), text);
    EXPECT_NO_THROW(VerifyCertificate(back));
  }
  std::string bad = CertificateToJson(*t_);
  bad.replace(bad.find("\"version\": 1"), 12, "\"version\": 9");
  EXPECT_THROW(CertificateFromJson(bad), CertificateFailure);
  EXPECT_THROW(CertificateFromJson("{"), CertificateFailure);
}

TEST(CertificateCovarianceTest, ConjugatedTCertificatesPass) {
  std::mt19937_64 rng(13);
  const Generator t_gens[] = {Generator::kX0, Generator::kX1, Generator::kPi0};
  const auto alphabet = SymmetrizedAlphabet(t_gens);
  for (int i = 0; i < 3; ++i) {
    const CellMap k = EvaluateWord(RandomWord(rng, 4, alphabet));
    const FACertificate c = TCertificate(k);
    EXPECT_NO_THROW(VerifyCertificate(c)) << k;
  }
}

TEST(FindWordTest, FindsShortWords) {
  const std::vector<NamedElement> gens = StandardGeneratorSet(GroupClass::kT);
  const auto w = FindWord(gens, G(Generator::kX0) * G(Generator::kPi0), 1);
  ASSERT_TRUE(w);
  EXPECT_EQ(ParseElement(*w), G(Generator::kX0) * G(Generator::kPi0));
  EXPECT_FALSE(FindWord(gens, G(Generator::kPi1), 2));
}

}  // namespace
}  // namespace thompson
