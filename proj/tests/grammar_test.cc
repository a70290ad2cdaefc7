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

#include <string>

#include "test_util.h"
#include "twolevel/grammar.h"

namespace twolevel {
namespace {

using testing::arabic;

const char* kHeader = R"(TAPES
1 pattern
2 root
3 vocalism
4 affix prefix

ALPHABET
template: sm sx
consonants: ' b k n s t
vowels: a i u
boundary: +

CLASSES
consonant = ' b k n s t
vowel = a i u
C : consonant
V : vowel
X : * != +

FEATURES
measure = 1 2 3 4 5 6 7 8 10
)";

ParseOptions unchecked() {
  ParseOptions o;
  o.validate = false;
  return o;
}

TEST(ParseGrammar, BundledGrammarHasNineRulesAndFourTapes) {
  const Grammar& g = arabic();
  EXPECT_EQ(g.tape_count(), 4u);
  ASSERT_EQ(g.rules.size(), 9u);
  for (int i = 1; i <= 9; ++i) {
    EXPECT_EQ(g.rules[i - 1].id, "R" + std::to_string(i));
  }
  EXPECT_TRUE(g.tapes[3].prefix);
  EXPECT_EQ(g.lexicon.size(), 9u);
}

TEST(ParseGrammar, BundledRulesAsPublished) {
  const Grammar& g = arabic();
  EXPECT_TRUE(g.find_rule("R2")->obligatory());
  EXPECT_TRUE(g.find_rule("R6")->obligatory());
  EXPECT_FALSE(g.find_rule("R1")->obligatory());
  EXPECT_EQ(format_tuple(g, g.find_rule("R8")->lex), "(sm, C, V, A)");
  EXPECT_EQ(format_features(g.features, *g.find_rule("R7")->fs),
            "measure=2,5");
  const Rule& r4 = *g.find_rule("R4");
  ASSERT_EQ(r4.inequalities.size(), 1u);
  EXPECT_FALSE(r4.variable("X").admits(*g.alphabet.find("+")));
  const Rule& r6 = *g.find_rule("R6");
  EXPECT_TRUE(r6.variable("C1").admits(*g.alphabet.find("'")));
  EXPECT_FALSE(r6.variable("V1").admits(*g.alphabet.find("k")));
}

TEST(ParseGrammar, EmptyRuleSectionIsValid) {
  Grammar g = parse_grammar(std::string(kHeader) + "RULES\n");
  EXPECT_TRUE(g.rules.empty());
  EXPECT_TRUE(validate(g).empty());
}

TEST(ParseGrammar, ArityErrorAtLexLine) {
  std::string text = std::string(kHeader) +
                     "RULES\n"
                     "rule R1 =>\n"
                     "  lsc: *\n"
                     "  surf: C V\n"
                     "  rsc: *\n"
                     "  llc: *\n"
                     "  lex: (sm, C, V)\n"
                     "  rlc: *\n";
  const int lex_line = 28;
  ASSERT_EQ(std::count(text.begin(),
                       text.begin() + text.find("  lex:"), '\n') + 1,
            lex_line);
  try {
    parse_grammar(text);
    FAIL() << "expected an arity error";
  } catch (const GrammarError& e) {
    ASSERT_FALSE(e.errors().empty());
    EXPECT_EQ(e.errors()[0].line, lex_line);
    EXPECT_NE(e.errors()[0].message.find("arity"), std::string::npos);
  }
}

TEST(ParseGrammar, ReportsUndeclaredSymbolWithLine) {
  std::string text = std::string(kHeader) +
                     "RULES\nrule R1 =>\n  surf: C q\n  lex: (sm, C, V, 0)\n";
  try {
    parse_grammar(text);
    FAIL();
  } catch (const GrammarError& e) {
    EXPECT_EQ(e.errors()[0].line, 24);
    EXPECT_NE(e.errors()[0].message.find("'q'"), std::string::npos);
  }
}

TEST(ParseGrammar, DuplicateRuleId) {
  std::string rule =
      "rule R1 =>\n  surf: C V\n  lex: (sm, C, V, 0)\n";
  std::string text = std::string(kHeader) + "RULES\n" + rule + rule;
  try {
    parse_grammar(text, unchecked());
    FAIL();
  } catch (const GrammarError& e) {
    EXPECT_EQ(e.errors()[0].line, 26);
  }
  Grammar g = parse_grammar(std::string(kHeader) + "RULES\n" + rule,
                            unchecked());
  g.rules.push_back(g.rules.front());
  auto d = validate(g);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].subject, "R1");
}

TEST(ParseGrammar, UndeclaredAttribute) {
  std::string text = std::string(kHeader) +
                     "RULES\nrule R1 =>\n  surf: C V\n  lex: (sm, C, V, 0)\n"
                     "  fs: aspect=perf\n";
  EXPECT_THROW(parse_grammar(text), GrammarError);
}

TEST(ParseGrammar, AcceptsUnicodeArrows) {
  std::string text = std::string(kHeader) +
                     "RULES\nrule R1 ⇔\n  surf: C V\n  lex: (sm, C, V, 0)\n";
  Grammar g = parse_grammar(text);
  EXPECT_TRUE(g.rules[0].obligatory());
}

TEST(Validate, BundledGrammarIsClean) {
  EXPECT_TRUE(validate(arabic()).empty());
}

TEST(Validate, IncompatibleClassesGiveOneDiagnostic) {
  std::string text = std::string(kHeader) +
                     "RULES\nrule R1 =>\n  surf: C V\n  lex: (sm, C, V, 0)\n"
                     "  where: C in vowel\n";
  Grammar g = parse_grammar(text, unchecked());
  auto d = validate(g);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].subject, "R1");
  EXPECT_NE(d[0].message.find("incompatible"), std::string::npos);
}

TEST(Validate, LexiconEntryOnMissingTape) {
  Grammar base = parse_grammar(std::string(kHeader) + "RULES\n");
  Grammar g = parse_lexicon(base, "LEXICON\n5 ktb root\n", unchecked());
  auto d = validate(g);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_NE(d[0].message.find("out of range"), std::string::npos);
  EXPECT_THROW(parse_lexicon(base, "LEXICON\n5 ktb root\n"), GrammarError);
}

TEST(Validate, ObligatoryRuleNeedsLexicalMaterial) {
  std::string text = std::string(kHeader) +
                     "RULES\nrule R1 <=>\n  surf: C\n  lex: (0, 0, 0, 0)\n";
  Grammar g = parse_grammar(text, unchecked());
  ASSERT_EQ(validate(g).size(), 1u);
}

TEST(Validate, WildcardInsideLex) {
  std::string text = std::string(kHeader) +
                     "RULES\nrule R1 =>\n  surf: C\n  lex: (sm, C, *, 0)\n";
  EXPECT_THROW(parse_grammar(text), GrammarError);
}

TEST(Lexicon, FormsAndFeatures) {
  const Grammar& g = arabic();
  const auto& stv = g.lexicon[testing::entry(g, 4, "stV")];
  ASSERT_EQ(stv.form.size(), 3u);
  EXPECT_EQ(stv.form[2].kind, PatternElement::Kind::kVariable);
  EXPECT_EQ(stv.form[2].variable, "V");
  EXPECT_EQ(format_features(g.features, stv.fs), "measure=10");
  const auto& pattern = g.lexicon[testing::entry(g, 1, "smsmsx")];
  EXPECT_EQ(pattern.form.size(), 3u);
  EXPECT_TRUE(pattern.fs.empty());
  const auto& null_affix = g.lexicon[testing::entry(g, 4, "0")];
  EXPECT_TRUE(null_affix.form.empty());
  const auto& root = g.lexicon[testing::entry(g, 2, "ktb")];
  EXPECT_TRUE(root.fs.empty());  // 1-8,10 is the whole domain
}

TEST(RoundTrip, PrintThenParseIsStable) {
  const Grammar& g = arabic();
  Grammar again = parse_lexicon(parse_grammar(print_grammar(g)),
                                print_lexicon(g));
  EXPECT_EQ(again, g);
  EXPECT_EQ(print_grammar(again), print_grammar(g));
  EXPECT_EQ(print_lexicon(again), print_lexicon(g));
}

TEST(Surface, ParseNamesOffendingPosition) {
  const Grammar& g = arabic();
  EXPECT_EQ(parse_surface(g, "'uktib").size(), 6u);
  EXPECT_TRUE(parse_surface(g, "").empty());
  try {
    parse_surface(g, "kuQ");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos);
  }
}

}  // namespace
}  // namespace twolevel
