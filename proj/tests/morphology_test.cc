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

#include "zulu/morphology.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"
#include "zulu/error.h"

namespace zulu {
namespace {

using morph::all_concord_word;
using morph::clitic_thize;
using morph::coalesce_na;
using morph::conjugate;
using morph::copulative;
using morph::enum_phi;
using morph::negative_copula;
using morph::quant_dwa;
using testing::shipped_lexicon;

const ConcordSet &Row(NounClass cls) {
  return concords_for(shipped_lexicon(), cls);
}

VerbEntry Verb(std::string stem) { return {"v", std::move(stem), false, ""}; }

// Random vowel-initial lower-case words.
std::string RandomNoun(std::mt19937 &rng) {
  static constexpr std::string_view kVowels = "aiou";
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";
  std::string s(1, kVowels[rng() % kVowels.size()]);
  const int len = 1 + static_cast<int>(rng() % 12);
  for (int i = 0; i < len; ++i) s += kLetters[rng() % kLetters.size()];
  return s;
}

TEST(SurfaceTest, RejectsBadWhitespace) {
  EXPECT_THROW(Surface(""), MorphologyError);
  EXPECT_THROW(Surface(" umuthi"), MorphologyError);
  EXPECT_THROW(Surface("umuthi "), MorphologyError);
  EXPECT_THROW(Surface("noma  yiliphi"), MorphologyError);
  EXPECT_THROW(Surface("a\tb"), MorphologyError);
  EXPECT_EQ(Surface("noma yiliphi").text(), "noma yiliphi");
}

TEST(CopulativeTest, FirstLetterRule) {
  EXPECT_EQ(copulative(Surface("umuthi")).text(), "ngumuthi");
  EXPECT_EQ(copulative(Surface("imithi")).text(), "yimithi");
  EXPECT_EQ(copulative(Surface("uSolwazi")).text(), "nguSolwazi");
  EXPECT_EQ(copulative(Surface("amanzi")).text(), "ngamanzi");
  EXPECT_EQ(copulative(Surface("obaba")).text(), "ngobaba");
}

TEST(CopulativeTest, ConsonantInitialIsAnError) {
  EXPECT_THROW(copulative(Surface("bhotela")), MorphologyError);
  EXPECT_THROW(copulative(Surface("Umuthi")), MorphologyError);
}

TEST(CopulativeTest, PrefixLengthAndSuffixProperty) {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::string noun = RandomNoun(rng);
    const std::string out = copulative(Surface(noun)).text();
    const size_t prefix = noun[0] == 'i' ? 1 : 2;
    ASSERT_EQ(out.size(), noun.size() + prefix) << noun;
    ASSERT_TRUE(out.ends_with(noun)) << noun;
  }
}

TEST(CoalesceNaTest, VowelPairs) {
  EXPECT_EQ(coalesce_na(Surface("ubisi")).text(), "nobisi");
  EXPECT_EQ(coalesce_na(Surface("imithi")).text(), "nemithi");
  EXPECT_EQ(coalesce_na(Surface("amanzi")).text(), "namanzi");
  EXPECT_EQ(coalesce_na(Surface("obaba")).text(), "nobaba");
}

TEST(CoalesceNaTest, ConsonantInitialIsAnError) {
  EXPECT_THROW(coalesce_na(Surface("bisi")), MorphologyError);
}

TEST(CoalesceNaTest, OutputProperty) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::string noun = RandomNoun(rng);
    const std::string out = coalesce_na(Surface(noun)).text();
    ASSERT_EQ(out[0], 'n') << noun;
    ASSERT_TRUE(out.ends_with(noun.substr(1))) << noun;
  }
}

TEST(AllConcordWordTest, TableDriven) {
  EXPECT_EQ(all_concord_word(Row(NounClass::k6)).text(), "wonke");
  EXPECT_EQ(all_concord_word(Row(NounClass::k9)).text(), "yonke");
  EXPECT_EQ(all_concord_word(Row(NounClass::k7)).text(), "sonke");
  EXPECT_EQ(all_concord_word(Row(NounClass::k10)).text(), "zonke");
}

TEST(NegativeCopulaTest, ConcordialAndImpersonal) {
  EXPECT_EQ(negative_copula(Row(NounClass::k10), Row(NounClass::k9), false)
                .text(),
            "aziyona");
  EXPECT_EQ(
      negative_copula(Row(NounClass::k9), Row(NounClass::k9), true).text(),
      "akuyona");
  EXPECT_EQ(negative_copula(Row(NounClass::k5), Row(NounClass::k5), false)
                .text(),
            "alilona");
  EXPECT_EQ(negative_copula(Row(NounClass::k6), Row(NounClass::k5), false)
                .text(),
            "awalona");
}

TEST(NegativeCopulaTest, PrefixPropertyOverAllClassPairs) {
  for (const auto &[sc, subj] : shipped_lexicon().concords()) {
    for (const auto &[oc, obj] : shipped_lexicon().concords()) {
      if (obj.pron.empty()) {
        EXPECT_THROW(negative_copula(subj, obj, true), ConcordUnavailableError);
        continue;
      }
      EXPECT_TRUE(negative_copula(subj, obj, true).text().starts_with("aku"));
      if (subj.neg_sc.empty()) {
        EXPECT_THROW(negative_copula(subj, obj, false),
                     ConcordUnavailableError);
        continue;
      }
      const std::string out = negative_copula(subj, obj, false).text();
      const std::string stem = subj.neg_sc.substr(0, subj.neg_sc.size() - 1);
      EXPECT_TRUE(out.starts_with(stem)) << out;
      EXPECT_TRUE(out.ends_with(obj.pron)) << out;
    }
  }
}

TEST(QuantDwaTest, AttestedRows) {
  EXPECT_EQ(quant_dwa(Row(NounClass::k5)).text(), "elilodwa");
  // esi- + -so- + -dwa
  EXPECT_EQ(quant_dwa(Row(NounClass::k7)).text(), std::string("esi") + "so" + "dwa");
  EXPECT_EQ(quant_dwa(Row(NounClass::k3a)).text(), "oyedwa");
  EXPECT_EQ(quant_dwa(Row(NounClass::k1a)).text(), "oyedwa");
}

TEST(QuantDwaTest, AbsentConcordNamesClass) {
  try {
    quant_dwa(Row(NounClass::k9));
    FAIL();
  } catch (const ConcordUnavailableError &e) {
    EXPECT_NE(std::string(e.what()).find("class 9"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("concord not available"),
              std::string::npos);
  }
}

TEST(EnumPhiTest, AttestedRows) {
  EXPECT_EQ(enum_phi(Row(NounClass::k5)).text(), "noma yiliphi");
  // yi- + -si- + -phi, ngu- + -mu- + -phi
  EXPECT_EQ(enum_phi(Row(NounClass::k7)).text(),
            std::string("noma ") + "yi" + "si" + "phi");
  EXPECT_EQ(enum_phi(Row(NounClass::k3a)).text(),
            std::string("noma ") + "ngu" + "mu" + "phi");
}

TEST(EnumPhiTest, AbsentConcord) {
  EXPECT_THROW(enum_phi(Row(NounClass::k1a)), ConcordUnavailableError);
  EXPECT_THROW(enum_phi(Row(NounClass::k10)), ConcordUnavailableError);
}

TEST(CliticThizeTest, AttachesWithoutSpace) {
  EXPECT_EQ(clitic_thize(Surface("ihlamvana")).text(), "ihlamvanathize");
  EXPECT_EQ(clitic_thize(Surface("isifundo")).text(), "isifundothize");
  EXPECT_THROW(clitic_thize(Surface("")), MorphologyError);
}

TEST(ConjugateTest, SubjectConcordPlusStem) {
  EXPECT_EQ(conjugate(Row(NounClass::k9), Verb("dla")).text(), "idla");
  EXPECT_EQ(conjugate(Row(NounClass::k10), Verb("dla")).text(), "zidla");
  EXPECT_EQ(conjugate(Row(NounClass::k7), Verb("fundiswa")).text(),
            "sifundiswa");
  EXPECT_EQ(conjugate(Row(NounClass::k8), Verb("fundiswa")).text(),
            "zifundiswa");
}

TEST(ConjugateTest, MissingSubjectConcord) {
  ConcordSet cs = Row(NounClass::k9);
  cs.subj_concord.clear();
  EXPECT_THROW(conjugate(cs, Verb("dla")), ConcordUnavailableError);
}

TEST(ConcordOutputsTest, NoHyphensOrStrayWhitespace) {
  for (const auto &[cls, cs] : shipped_lexicon().concords()) {
    std::vector<std::string> outs;
    outs.push_back(conjugate(cs, Verb("dla")).text());
    if (cs.rel_concord && cs.quant_concord) outs.push_back(quant_dwa(cs).text());
    if (cs.enum_copula && cs.enum_prefix) {
      const std::string phi = enum_phi(cs).text();
      ASSERT_TRUE(phi.starts_with("noma "));
      outs.push_back(phi.substr(5));
    }
    for (const std::string &out : outs) {
      EXPECT_EQ(out.find('-'), std::string::npos) << out;
      EXPECT_EQ(out.find(' '), std::string::npos) << out;
    }
  }
}

TEST(MorphologyTest, Deterministic) {
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(quant_dwa(Row(NounClass::k5)), quant_dwa(Row(NounClass::k5)));
    EXPECT_EQ(copulative(Surface("umuthi")), copulative(Surface("umuthi")));
  }
}

TEST(SentenceInitialTest, UpperCasesAsciiOnly) {
  EXPECT_EQ(morph::sentence_initial(Surface("sonke")).text(), "Sonke");
  EXPECT_EQ(morph::sentence_initial(Surface("Sonke")).text(), "Sonke");
  EXPECT_EQ(morph::sentence_initial(Surface("élan")).text(), "élan");
}

}  // namespace
}  // namespace zulu
