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

#ifndef ZULU_LEXICON_H_
#define ZULU_LEXICON_H_

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace zulu {

// The eighteen isiZulu noun classes. No other values exist.
enum class NounClass {
  k1, k2, k1a, k2a, k3a, k3, k4, k5, k6, k7, k8, k9a, k9, k10, k11, k14, k15,
  k17,
};

inline constexpr std::array<NounClass, 18> kAllNounClasses = {
    NounClass::k1,  NounClass::k2,  NounClass::k1a, NounClass::k2a,
    NounClass::k3a, NounClass::k3,  NounClass::k4,  NounClass::k5,
    NounClass::k6,  NounClass::k7,  NounClass::k8,  NounClass::k9a,
    NounClass::k9,  NounClass::k10, NounClass::k11, NounClass::k14,
    NounClass::k15, NounClass::k17,
};

// Label as written in grammars: "1", "1a", "10", ...
std::string_view to_string(NounClass cls);

// Inverse of to_string(); nullopt for anything that is not a class label.
std::optional<NounClass> parse_noun_class(std::string_view label);

// Conventional singular/plural coupling (1->2, 5->6, 9a->6, ...). Classes
// 14, 15 and 17 have none, and neither do plural classes.
std::optional<NounClass> default_plural_class(NounClass cls);

struct NounEntry {
  std::string lemma;
  NounClass cls = NounClass::k1;
  std::optional<std::string> plural_lemma;
  std::optional<NounClass> plural_cls;
  bool living = false;
  bool person = false;
  std::string gloss;

  bool operator==(const NounEntry &) const = default;
};

struct VerbEntry {
  std::string key;    // object property name, e.g. "eats"
  std::string stem;   // without subject concord, e.g. "dla"
  bool agent_prefix = false;  // object takes the copulative ("taught by")
  std::string gloss;

  bool operator==(const VerbEntry &) const = default;
};

// One row of agreement morphology for a noun class. Stored concords keep
// their hyphen join markers ("eli-", "-lo-"); composition strips them.
// Empty strings stand for cells the table leaves blank.
struct ConcordSet {
  NounClass cls = NounClass::k1;
  std::string augment;
  std::string prefix;
  std::string neg_sc;
  std::string pron;
  std::string all_concord;  // full word, e.g. "zonke"
  std::string subj_concord;
  std::optional<std::string> rel_concord;
  std::optional<std::string> quant_concord;
  std::optional<std::string> enum_copula;
  std::optional<std::string> enum_prefix;

  bool operator==(const ConcordSet &) const = default;
};

// Nouns, verbs and concord tables. Immutable once loaded.
class Lexicon {
 public:
  const std::map<std::string, NounEntry> &nouns() const { return nouns_; }
  const std::map<std::string, VerbEntry> &verbs() const { return verbs_; }
  const std::map<NounClass, ConcordSet> &concords() const {
    return concords_;
  }

  bool operator==(const Lexicon &) const = default;

 private:
  friend Lexicon load_lexicon(std::istream &source);

  std::map<std::string, NounEntry> nouns_;
  std::map<std::string, VerbEntry> verbs_;
  std::map<NounClass, ConcordSet> concords_;
};

// Reads the tab-separated lexicon format:
//
//   # comment
//   C  class augment prefix neg_sc pron all_concord subj_concord rc qc ec ep
//   N  lemma class plural_lemma plural_class living|nonliving[,person] gloss
//   V  key stem agent|noagent gloss
//
// "-" marks an absent cell. Throws LexiconError with the offending line.
Lexicon load_lexicon(std::istream &source);
Lexicon load_lexicon_file(const std::string &path);

// Writes the lexicon back in the same format. Loading the output yields an
// equal Lexicon.
void dump_lexicon(const Lexicon &lex, std::ostream &out);

// Throws UnknownEntryError naming the lemma.
const NounEntry &lookup_noun(const Lexicon &lex, std::string_view lemma);

// Throws UnknownEntryError naming the key.
const VerbEntry &lookup_verb(const Lexicon &lex, std::string_view key);

// The stored plural. Plurals are never synthesized; throws NoPluralError
// when the entry has none.
std::pair<std::string, NounClass> pluralize(const NounEntry &entry);

// Total over every class used by a loaded noun.
const ConcordSet &concords_for(const Lexicon &lex, NounClass cls);

}  // namespace zulu

#endif  // ZULU_LEXICON_H_
