// Copyright 2026 The Zulu Verbalizer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zulu/lexicon.h"

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.h"
#include "zulu/error.h"

namespace zulu {
namespace {

using testing::lexicon_from;
using testing::shipped_lexicon;

constexpr std::string_view kRows5And6 =
    "C\t5\ti-\t(li)-\tali-\tlona\tlonke\tli-\teli-\t-lo-\tyi-\t-li-\n"
    "C\t6\ta-\tma-\tawa-\twona\twonke\ta-\t-\t-\t-\t-\n";

constexpr std::string_view kRows3aAnd2a =
    "C\t3a\tu-\t-\taka-\twona\twonke\tu-\to-\t-ye-\tngu-\t-mu-\n"
    "C\t2a\to-\t-\taba-\tbona\tbonke\tba-\t-\t-\t-\t-\n";

// Expects a LexiconError on `line` whose reason mentions `needle`.
void ExpectLoadError(const std::string &text, int line,
                     std::string_view needle) {
  try {
    lexicon_from(text);
    FAIL() << "expected a LexiconError for:\n" << text;
  } catch (const LexiconError &e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(e.reason().find(needle), std::string::npos) << e.what();
  }
}

TEST(NounClassTest, LabelsRoundTrip) {
  for (NounClass cls : kAllNounClasses) {
    EXPECT_EQ(parse_noun_class(to_string(cls)), cls);
  }
  EXPECT_FALSE(parse_noun_class("12"));
  EXPECT_FALSE(parse_noun_class("9b"));
  EXPECT_FALSE(parse_noun_class(""));
}

TEST(NounClassTest, DefaultPluralCoupling) {
  EXPECT_EQ(default_plural_class(NounClass::k1), NounClass::k2);
  EXPECT_EQ(default_plural_class(NounClass::k1a), NounClass::k2a);
  EXPECT_EQ(default_plural_class(NounClass::k3a), NounClass::k2a);
  EXPECT_EQ(default_plural_class(NounClass::k3), NounClass::k4);
  EXPECT_EQ(default_plural_class(NounClass::k5), NounClass::k6);
  EXPECT_EQ(default_plural_class(NounClass::k7), NounClass::k8);
  EXPECT_EQ(default_plural_class(NounClass::k9a), NounClass::k6);
  EXPECT_EQ(default_plural_class(NounClass::k9), NounClass::k10);
  EXPECT_EQ(default_plural_class(NounClass::k11), NounClass::k10);
  EXPECT_FALSE(default_plural_class(NounClass::k14));
  EXPECT_FALSE(default_plural_class(NounClass::k15));
  EXPECT_FALSE(default_plural_class(NounClass::k17));
  EXPECT_FALSE(default_plural_class(NounClass::k10));
}

TEST(LoadLexiconTest, NounLine) {
  Lexicon lex = lexicon_from(std::string(kRows5And6) +
                             "N\tikhambi\t5\tamakhambi\t6\tliving\tmedicinal herb\n");
  const NounEntry &n = lookup_noun(lex, "ikhambi");
  EXPECT_EQ(n.lemma, "ikhambi");
  EXPECT_EQ(n.cls, NounClass::k5);
  EXPECT_EQ(n.plural_lemma, "amakhambi");
  EXPECT_EQ(n.plural_cls, NounClass::k6);
  EXPECT_TRUE(n.living);
  EXPECT_FALSE(n.person);
  EXPECT_EQ(n.gloss, "medicinal herb");
}

TEST(LoadLexiconTest, Class3aNoun) {
  Lexicon lex = lexicon_from(std::string(kRows3aAnd2a) +
                             "N\tushizi\t3a\toshizi\t2a\tnonliving\tcheese\n");
  const NounEntry &n = lookup_noun(lex, "ushizi");
  EXPECT_EQ(n.cls, NounClass::k3a);
  EXPECT_EQ(n.plural_cls, NounClass::k2a);
  EXPECT_FALSE(n.living);
}

TEST(LoadLexiconTest, VerbLine) {
  Lexicon lex = lexicon_from("V\ttaughtBy\tfundiswa\tagent\ttaught by\n");
  const VerbEntry &v = lookup_verb(lex, "taughtBy");
  EXPECT_EQ(v.stem, "fundiswa");
  EXPECT_TRUE(v.agent_prefix);
  EXPECT_THROW(lookup_verb(lex, "eats"), UnknownEntryError);
}

TEST(LoadLexiconTest, CommentsBlankLinesAndCrlf) {
  Lexicon lex = lexicon_from(
      "# header\n\n" + std::string(kRows5And6) +
      "N\tigama\t5\tamagama\t6\tnonliving\tname\r\n# trailing\n");
  EXPECT_EQ(lookup_noun(lex, "igama").gloss, "name");
}

TEST(LoadLexiconTest, EmptySource) {
  ExpectLoadError("", 0, "empty lexicon");
  ExpectLoadError("# only a comment\n\n", 0, "empty lexicon");
}

TEST(LoadLexiconTest, MalformedLinesReportLineNumbers) {
  const std::string rows(kRows5And6);  // lines 1-2
  ExpectLoadError(rows + "N\tigama\t5\tamagama\t6\tnonliving\n", 3,
                  "7 fields");
  ExpectLoadError(rows + "N\tigama\t12\t-\t-\tnonliving\tname\n", 3,
                  "unknown noun class '12'");
  ExpectLoadError(rows + "N\tgama\t5\t-\t-\tnonliving\tname\n", 3,
                  "must begin with a, i, o or u");
  ExpectLoadError(rows + "N\tigama\t5\tamagama\t-\tnonliving\tname\n", 3,
                  "both");
  ExpectLoadError(rows + "N\tigama\t5\t-\t-\tnonliving,person\tname\n", 3,
                  "person must be living");
  ExpectLoadError(rows + "N\tigama\t5\t-\t-\tdead\tname\n", 3,
                  "living");
  ExpectLoadError(rows + "V\teats\tadla\tnoagent\teats\n", 3,
                  "must not begin with a vowel");
  ExpectLoadError(rows + "V\teats\tdla\tmaybe\teats\n", 3, "agent");
  ExpectLoadError(rows + "X\tfoo\n", 3, "unknown record type");
  ExpectLoadError("C\t5\ti-\t-\tli-\tlona\tlonke\tli-\t-\t-\t-\t-\n", 1,
                  "must begin with 'a'");
  ExpectLoadError("C\t5\ti-\t-\tali-\tlona\tlonk\tli-\t-\t-\t-\t-\n", 1,
                  "must end in 'onke'");
  ExpectLoadError("C\t5\ti-\t-\tali-\tlona\n", 1, "12 fields");
}

TEST(LoadLexiconTest, DuplicatesRejected) {
  const std::string rows(kRows5And6);
  ExpectLoadError(rows + "N\tigama\t5\t-\t-\tnonliving\tname\n"
                         "N\tigama\t5\t-\t-\tnonliving\tname again\n",
                  4, "duplicate lemma 'igama'");
  ExpectLoadError(rows + rows.substr(0, rows.find('\n') + 1), 3,
                  "duplicate concord row");
  ExpectLoadError("V\teats\tdla\tnoagent\teats\nV\teats\tdla\tnoagent\teats\n",
                  2, "duplicate verb key");
}

TEST(LoadLexiconTest, NounClassWithoutConcordRow) {
  const std::string rows(kRows5And6);
  ExpectLoadError(rows + "\nN\tisihlalo\t7\t-\t-\tnonliving\tchair\n", 4,
                  "class 7 which has no concord row");
  ExpectLoadError(rows + "N\tigama\t5\tizigama\t8\tnonliving\tname\n", 3,
                  "plural of 'igama' uses class 8");
}

TEST(LoadLexiconTest, LemmaLookupIsCaseSensitive) {
  EXPECT_NO_THROW(lookup_noun(shipped_lexicon(), "uSolwazi"));
  EXPECT_THROW(lookup_noun(shipped_lexicon(), "usolwazi"), UnknownEntryError);
}

TEST(LookupNounTest, ShippedEntries) {
  const NounEntry &giraffe = lookup_noun(shipped_lexicon(), "indlulamithi");
  EXPECT_EQ(giraffe.cls, NounClass::k9);
  EXPECT_EQ(giraffe.plural_lemma, "izindlulamithi");
  EXPECT_EQ(giraffe.plural_cls, NounClass::k10);

  const NounEntry &professor = lookup_noun(shipped_lexicon(), "uSolwazi");
  EXPECT_EQ(professor.cls, NounClass::k1a);
  EXPECT_TRUE(professor.person);
  EXPECT_TRUE(professor.living);
}

TEST(LookupNounTest, UnknownLemmaNamesIt) {
  try {
    lookup_noun(shipped_lexicon(), "qqq");
    FAIL();
  } catch (const UnknownEntryError &e) {
    EXPECT_NE(std::string(e.what()).find("'qqq'"), std::string::npos);
  }
}

TEST(PluralizeTest, StoredPlurals) {
  const Lexicon &lex = shipped_lexicon();
  EXPECT_EQ(pluralize(lookup_noun(lex, "ikhambi")),
            std::make_pair(std::string("amakhambi"), NounClass::k6));
  EXPECT_EQ(pluralize(lookup_noun(lex, "indebe")),
            std::make_pair(std::string("izindebe"), NounClass::k10));
  // Attested form, not the 5->6 coupling.
  EXPECT_EQ(pluralize(lookup_noun(lex, "ihlamvana")).first, "izihlamvana");
}

TEST(PluralizeTest, NoPluralForAbstractNoun) {
  EXPECT_THROW(pluralize(lookup_noun(shipped_lexicon(), "ubuhle")),
               NoPluralError);
  EXPECT_THROW(pluralize(lookup_noun(shipped_lexicon(), "ukucula")),
               NoPluralError);
}

TEST(ConcordsForTest, ShippedRows) {
  const Lexicon &lex = shipped_lexicon();
  const ConcordSet &c10 = concords_for(lex, NounClass::k10);
  EXPECT_EQ(c10.neg_sc, "azi-");
  EXPECT_EQ(c10.pron, "zona");
  EXPECT_EQ(c10.all_concord, "zonke");

  const ConcordSet &c5 = concords_for(lex, NounClass::k5);
  EXPECT_EQ(c5.rel_concord, "eli-");
  EXPECT_EQ(c5.quant_concord, "-lo-");

  const ConcordSet &c7 = concords_for(lex, NounClass::k7);
  EXPECT_EQ(c7.enum_copula, "yi-");
  EXPECT_EQ(c7.enum_prefix, "-si-");

  // Unattested cells stay empty.
  EXPECT_FALSE(concords_for(lex, NounClass::k9).rel_concord);
  EXPECT_FALSE(concords_for(lex, NounClass::k10).enum_prefix);
}

TEST(ConcordsForTest, MissingRowIsAnError) {
  Lexicon lex = lexicon_from(kRows5And6);
  EXPECT_THROW(concords_for(lex, NounClass::k7), LexiconError);
}

TEST(ShippedLexiconTest, MatchesClassTable) {
  const Lexicon &lex = shipped_lexicon();
  ASSERT_EQ(lex.concords().size(), testing::kClassTable.size());
  for (const auto &row : testing::kClassTable) {
    SCOPED_TRACE(row.cls);
    const ConcordSet &cs = concords_for(lex, *parse_noun_class(row.cls));
    EXPECT_EQ(cs.neg_sc, row.neg_sc);
    EXPECT_EQ(cs.pron, row.pron);
  }
}

TEST(ShippedLexiconTest, EveryClassAndPluralClassHasConcords) {
  const Lexicon &lex = shipped_lexicon();
  for (const auto &[lemma, noun] : lex.nouns()) {
    SCOPED_TRACE(lemma);
    EXPECT_NO_THROW(concords_for(lex, noun.cls));
    if (noun.plural_cls) {
      EXPECT_NO_THROW(concords_for(lex, *noun.plural_cls));
    }
    EXPECT_EQ(noun.plural_lemma.has_value(), noun.plural_cls.has_value());
    if (noun.person) {
      EXPECT_TRUE(noun.living);
    }
  }
}

TEST(ShippedLexiconTest, PluralAllConcordsMatchQuantifiedSentences) {
  const Lexicon &lex = shipped_lexicon();
  auto all_of_plural = [&](std::string_view lemma) {
    return concords_for(lex, *lookup_noun(lex, lemma).plural_cls).all_concord;
  };
  EXPECT_EQ(all_of_plural("ikhambi"), "wonke");  // wonke amakhambi
  EXPECT_EQ(all_of_plural("indebe"), "zonke");   // zonke izindebe
  EXPECT_EQ(all_of_plural("indlulamithi"), "zonke");
  EXPECT_EQ(all_of_plural("isifundo"), "zonke");
}

TEST(ShippedLexiconTest, ConcordInvariants) {
  for (const auto &[cls, cs] : shipped_lexicon().concords()) {
    SCOPED_TRACE(to_string(cls));
    EXPECT_EQ(cs.cls, cls);
    if (!cs.neg_sc.empty()) {
      EXPECT_EQ(cs.neg_sc[0], 'a');
    }
    EXPECT_TRUE(cs.all_concord.ends_with("onke"));
  }
}

TEST(DumpLexiconTest, FixedPoint) {
  const Lexicon &lex = shipped_lexicon();
  std::ostringstream first;
  dump_lexicon(lex, first);
  Lexicon reloaded = lexicon_from(first.str());
  EXPECT_EQ(reloaded, lex);
  std::ostringstream second;
  dump_lexicon(reloaded, second);
  EXPECT_EQ(second.str(), first.str());
}

}  // namespace
}  // namespace zulu
