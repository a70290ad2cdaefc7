// Copyright 2026 The twolevel Authors.
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

#include <gtest/gtest.h>

#include "properties.h"
#include "twolevel/corpus.h"
#include "twolevel/prosody.h"

namespace twolevel {
namespace {

using testing::arabic;
using testing::spell;
using testing::sym;

class ProsodyTest : public ::testing::Test {
 protected:
  const Grammar& g = arabic();
  const Phonology ph = Phonology::from_grammar(g);

  SyllabifiedBase base(const std::string& s, bool extra = true) {
    return syllabify(ph, sym(g, s), extra);
  }
};

TEST_F(ProsodyTest, SyllabifiesKutib) {
  auto b = base("kutib");
  ASSERT_EQ(b.syllables.size(), 2u);
  EXPECT_EQ(spell(g, b.syllables[0].symbols()), "ku");
  EXPECT_EQ(spell(g, b.syllables[1].symbols()), "ti");
  ASSERT_TRUE(b.extrametrical);
  EXPECT_EQ(*b.extrametrical, *g.alphabet.find("b"));
  EXPECT_TRUE(b.appendix.empty());
}

TEST_F(ProsodyTest, WeightsAndClosedSyllables) {
  auto b = base("kuttib");
  ASSERT_EQ(b.syllables.size(), 2u);
  EXPECT_EQ(b.syllables[0].weight(), Weight::kHeavy);
  EXPECT_EQ(spell(g, b.syllables[0].symbols()), "kut");
  EXPECT_EQ(base("kuutib").syllables[0].weight(), Weight::kHeavy);
  auto plain = base("kutib", false);
  EXPECT_FALSE(plain.extrametrical);
  EXPECT_EQ(plain.syllables.back().weight(), Weight::kHeavy);
}

TEST_F(ProsodyTest, InitialClusterGoesToAppendix) {
  auto b = base("nkutib");
  EXPECT_EQ(spell(g, b.appendix), "n");
  EXPECT_EQ(base("stuktib").appendix.size(), 1u);
}

TEST_F(ProsodyTest, SyllabifiesEveryCorpusForm) {
  for (const auto& c : load_corpus(default_corpus_path())) {
    auto s = sym(g, c.expected);
    SyllabifiedBase b;
    ASSERT_NO_THROW(b = syllabify(ph, s, true)) << c.expected;
    EXPECT_EQ(b.flatten(), s);
  }
}

TEST_F(ProsodyTest, RejectsUnparsableStrings) {
  EXPECT_THROW(base("utib"), ProsodyError);
  EXPECT_THROW(syllabify(ph, SymbolString{}, true), ProsodyError);
  EXPECT_THROW(base("k"), ProsodyError);
}

TEST_F(ProsodyTest, PhiLightSyllableLeft) {
  auto f = phi(ph, base("kutib"), Constituent::kLightSyllable, Edge::kLeft);
  EXPECT_EQ(spell(g, f.kernel), "ku");
  EXPECT_EQ(spell(g, f.residue), "tib");
}

TEST_F(ProsodyTest, PhiConsonantLeft) {
  auto f = phi(ph, base("kutib"), Constituent::kConsonant, Edge::kLeft);
  EXPECT_EQ(spell(g, f.kernel), "k");
  EXPECT_EQ(spell(g, f.residue), "utib");
}

TEST_F(ProsodyTest, PhiRightEdgeKeepsExtrametricalInKernel) {
  auto f = phi(ph, base("kutib"), Constituent::kLightSyllable, Edge::kRight);
  EXPECT_EQ(spell(g, f.kernel), "tib");
  EXPECT_EQ(spell(g, f.residue), "ku");
  auto c = phi(ph, base("kutib"), Constituent::kConsonant, Edge::kRight);
  EXPECT_EQ(spell(g, c.kernel), "b");
}

TEST_F(ProsodyTest, PhiFailures) {
  EXPECT_THROW(phi(ph, base("kuutib"), Constituent::kLightSyllable, Edge::kLeft),
               ProsodyError);
  EXPECT_THROW(phi(ph, base("nkutib"), Constituent::kLightSyllable, Edge::kLeft),
               ProsodyError);
  EXPECT_THROW(phi(ph, base("kutib"), Constituent::kFoot, Edge::kLeft),
               ProsodyError);
  EXPECT_THROW(phi(ph, base("kutib"), Constituent::kProsodicWord, Edge::kLeft),
               ProsodyError);
}

TEST_F(ProsodyTest, PhiIdentity) {
  auto f = testing::check_phi_identity(ph, g, 7, 500);
  EXPECT_TRUE(f.empty()) << f.front();
}

TEST_F(ProsodyTest, NegativeCircumscription) {
  auto b = base("kutib");
  EXPECT_EQ(spell(g, apply_npc(ph, MorphOp::spread(), b,
                               Constituent::kLightSyllable, Edge::kLeft)),
            "kuttib");
  EXPECT_EQ(spell(g, apply_npc(ph, MorphOp::prefix(sym(g, "t")), b,
                               Constituent::kConsonant, Edge::kLeft)),
            "ktutib");
}

TEST_F(ProsodyTest, PositiveCircumscription) {
  auto b = base("kutib");
  EXPECT_EQ(spell(g, apply_ppc(ph, MorphOp::suffix(sym(g, "a")), b,
                               Constituent::kLightSyllable, Edge::kLeft)),
            "kuatib");
  EXPECT_EQ(spell(g, apply_ppc(ph, MorphOp::prefix(sym(g, "n")), b,
                               Constituent::kLightSyllable, Edge::kRight)),
            "kuntib");
}

// Applying O to the kernel under PPC equals applying it to the residue of
// the opposite factoring, when both factor the same way.
TEST_F(ProsodyTest, PositiveAndNegativeAreDual) {
  std::mt19937 rng(3);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto s = testing::random_cv_string(ph, rng);
    auto b = syllabify(ph, s, true);
    for (auto c : {Constituent::kLightSyllable, Constituent::kConsonant}) {
      for (auto e : {Edge::kLeft, Edge::kRight}) {
        Factoring f;
        try {
          f = phi(ph, b, c, e);
        } catch (const ProsodyError&) {
          continue;
        }
        const MorphOp op = MorphOp::suffix(sym(g, "a"));
        SymbolString ppc = apply_ppc(ph, op, b, c, e);
        SymbolString by_hand = apply_op(ph, op, f.kernel);
        if (e == Edge::kLeft) {
          by_hand.insert(by_hand.end(), f.residue.begin(), f.residue.end());
        } else {
          by_hand.insert(by_hand.begin(), f.residue.begin(), f.residue.end());
        }
        EXPECT_EQ(ppc, by_hand);
        SymbolString npc = apply_npc(ph, op, b, c, e);
        Factoring g2 = f;
        g2.residue = apply_op(ph, op, f.residue);
        EXPECT_EQ(npc, g2.reassemble());
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 300);
}

TEST_F(ProsodyTest, SpreadNeedsAConsonant) {
  EXPECT_THROW(apply_op(ph, MorphOp::spread(), sym(g, "utib")), ProsodyError);
  EXPECT_EQ(spell(g, apply_op(ph, MorphOp::spread(), sym(g, "tib"))), "ttib");
}

TEST_F(ProsodyTest, Association) {
  using N = TemplateNode;
  const N cvcvc[] = {N::kLight, N::kLight, N::kExtrametrical};
  const N cvvcvc[] = {N::kHeavy, N::kLight, N::kExtrametrical};
  EXPECT_EQ(spell(g, associate(ph, cvcvc, sym(g, "ktb"), sym(g, "ui"))),
            "kutib");
  EXPECT_EQ(spell(g, associate(ph, cvvcvc, sym(g, "ktb"), sym(g, "ui"))),
            "kuutib");
  try {
    associate(ph, cvcvc, sym(g, "ktb"), sym(g, "u"));
    FAIL();
  } catch (const ProsodyError& e) {
    EXPECT_STREQ(e.what(), "unfilled mora of node 2 (light syllable)");
  }
  EXPECT_THROW(associate(ph, cvcvc, sym(g, "kt"), sym(g, "ui")), ProsodyError);
}

TEST_F(ProsodyTest, OracleMeasures) {
  EXPECT_EQ(spell(g, oracle_measure(g, 1)), "kutib");
  EXPECT_EQ(spell(g, oracle_measure(g, 2)), "kuttib");
  EXPECT_EQ(spell(g, oracle_measure(g, 3)), "kuutib");
  EXPECT_EQ(spell(g, oracle_measure(g, 8)), "ktutib");
  EXPECT_THROW(oracle_measure(g, 7), ProsodyError);
}

}  // namespace
}  // namespace twolevel
