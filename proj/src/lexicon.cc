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

#include <fstream>
#include <sstream>
#include <vector>

#include "zulu/error.h"

namespace zulu {

namespace {

constexpr std::array<std::string_view, 18> kClassLabels = {
    "1", "2", "1a", "2a", "3a", "3", "4", "5", "6",
    "7", "8", "9a", "9", "10", "11", "14", "15", "17",
};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool starts_with_vowel(std::string_view s) {
  return !s.empty() && std::string_view("aiou").find(s[0]) != std::string_view::npos;
}

class LineReader {
 public:
  explicit LineReader(int line) : line_(line) {}

  [[noreturn]] void fail(const std::string &reason) const {
    throw LexiconError(line_, reason);
  }

  NounClass noun_class(std::string_view field) const {
    auto cls = parse_noun_class(field);
    if (!cls) fail("unknown noun class '" + std::string(field) + "'");
    return *cls;
  }

  // "-" is a blank cell.
  static std::string cell(std::string_view field) {
    return field == "-" ? std::string() : std::string(field);
  }

  static std::optional<std::string> optional_cell(std::string_view field) {
    if (field == "-") return std::nullopt;
    return std::string(field);
  }

  void require_nonempty(std::string_view field, const char *what) const {
    if (field.empty()) fail(std::string("empty ") + what);
  }

 private:
  int line_;
};

ConcordSet parse_concord(const LineReader &in,
                         const std::vector<std::string_view> &f) {
  if (f.size() != 12) {
    in.fail("concord line needs 12 fields, got " + std::to_string(f.size()));
  }
  ConcordSet cs;
  cs.cls = in.noun_class(f[1]);
  cs.augment = LineReader::cell(f[2]);
  cs.prefix = LineReader::cell(f[3]);
  cs.neg_sc = LineReader::cell(f[4]);
  cs.pron = LineReader::cell(f[5]);
  cs.all_concord = LineReader::cell(f[6]);
  cs.subj_concord = LineReader::cell(f[7]);
  cs.rel_concord = LineReader::optional_cell(f[8]);
  cs.quant_concord = LineReader::optional_cell(f[9]);
  cs.enum_copula = LineReader::optional_cell(f[10]);
  cs.enum_prefix = LineReader::optional_cell(f[11]);
  if (!cs.neg_sc.empty() && cs.neg_sc[0] != 'a') {
    in.fail("negative subject concord '" + cs.neg_sc + "' must begin with 'a'");
  }
  if (cs.all_concord.size() < 4 ||
      cs.all_concord.compare(cs.all_concord.size() - 4, 4, "onke") != 0) {
    in.fail("all-concord '" + cs.all_concord + "' must end in 'onke'");
  }
  return cs;
}

NounEntry parse_noun(const LineReader &in,
                     const std::vector<std::string_view> &f) {
  if (f.size() != 7) {
    in.fail("noun line needs 7 fields, got " + std::to_string(f.size()));
  }
  NounEntry noun;
  in.require_nonempty(f[1], "lemma");
  if (!starts_with_vowel(f[1])) {
    in.fail("lemma '" + std::string(f[1]) + "' must begin with a, i, o or u");
  }
  noun.lemma = f[1];
  noun.cls = in.noun_class(f[2]);
  if ((f[3] == "-") != (f[4] == "-")) {
    in.fail("plural lemma and plural class must both be given or both be '-'");
  }
  if (f[3] != "-") {
    in.require_nonempty(f[3], "plural lemma");
    noun.plural_lemma = std::string(f[3]);
    noun.plural_cls = in.noun_class(f[4]);
  }
  std::string_view sem = f[5];
  std::string_view flags;
  if (size_t comma = sem.find(','); comma != std::string_view::npos) {
    flags = sem.substr(comma + 1);
    sem = sem.substr(0, comma);
  }
  if (sem == "living") {
    noun.living = true;
  } else if (sem != "nonliving") {
    in.fail("expected 'living' or 'nonliving', got '" + std::string(sem) + "'");
  }
  if (flags == "person") {
    noun.person = true;
  } else if (!flags.empty()) {
    in.fail("unknown noun flag '" + std::string(flags) + "'");
  }
  if (noun.person && !noun.living) in.fail("a person must be living");
  noun.gloss = f[6];
  return noun;
}

VerbEntry parse_verb(const LineReader &in,
                     const std::vector<std::string_view> &f) {
  if (f.size() != 5) {
    in.fail("verb line needs 5 fields, got " + std::to_string(f.size()));
  }
  VerbEntry verb;
  in.require_nonempty(f[1], "verb key");
  in.require_nonempty(f[2], "verb stem");
  if (std::string_view("aeiouAEIOU").find(f[2][0]) != std::string_view::npos) {
    in.fail("verb stem '" + std::string(f[2]) + "' must not begin with a vowel");
  }
  verb.key = f[1];
  verb.stem = f[2];
  if (f[3] == "agent") {
    verb.agent_prefix = true;
  } else if (f[3] != "noagent") {
    in.fail("expected 'agent' or 'noagent', got '" + std::string(f[3]) + "'");
  }
  verb.gloss = f[4];
  return verb;
}

std::string or_dash(const std::string &s) { return s.empty() ? "-" : s; }
std::string or_dash(const std::optional<std::string> &s) {
  return s ? *s : "-";
}

}  // namespace

std::string_view to_string(NounClass cls) {
  return kClassLabels[static_cast<size_t>(cls)];
}

std::optional<NounClass> parse_noun_class(std::string_view label) {
  for (size_t i = 0; i < kClassLabels.size(); ++i) {
    if (kClassLabels[i] == label) return kAllNounClasses[i];
  }
  return std::nullopt;
}

std::optional<NounClass> default_plural_class(NounClass cls) {
  switch (cls) {
    case NounClass::k1: return NounClass::k2;
    case NounClass::k1a: return NounClass::k2a;
    case NounClass::k3a: return NounClass::k2a;
    case NounClass::k3: return NounClass::k4;
    case NounClass::k5: return NounClass::k6;
    case NounClass::k7: return NounClass::k8;
    case NounClass::k9a: return NounClass::k6;
    case NounClass::k9: return NounClass::k10;
    case NounClass::k11: return NounClass::k10;
    default: return std::nullopt;
  }
}

Lexicon load_lexicon(std::istream &source) {
  Lexicon lex;
  std::map<std::string, int> noun_lines;
  std::string line;
  int lineno = 0;
  bool any_entry = false;
  while (std::getline(source, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    LineReader in(lineno);
    auto fields = split_tabs(line);
    const std::string_view tag = fields[0];
    if (tag == "C") {
      ConcordSet cs = parse_concord(in, fields);
      if (lex.concords_.count(cs.cls)) {
        in.fail("duplicate concord row for class " +
                std::string(to_string(cs.cls)));
      }
      lex.concords_.emplace(cs.cls, std::move(cs));
    } else if (tag == "N") {
      NounEntry noun = parse_noun(in, fields);
      if (lex.nouns_.count(noun.lemma)) {
        in.fail("duplicate lemma '" + noun.lemma + "'");
      }
      noun_lines[noun.lemma] = lineno;
      lex.nouns_.emplace(noun.lemma, std::move(noun));
    } else if (tag == "V") {
      VerbEntry verb = parse_verb(in, fields);
      if (lex.verbs_.count(verb.key)) {
        in.fail("duplicate verb key '" + verb.key + "'");
      }
      lex.verbs_.emplace(verb.key, std::move(verb));
    } else {
      in.fail("unknown record type '" + std::string(tag) +
              "' (expected C, N or V)");
    }
    any_entry = true;
  }
  if (!any_entry) throw LexiconError(0, "empty lexicon");

  for (const auto &[lemma, noun] : lex.nouns_) {
    LineReader in(noun_lines[lemma]);
    if (!lex.concords_.count(noun.cls)) {
      in.fail("noun '" + lemma + "' uses class " +
              std::string(to_string(noun.cls)) + " which has no concord row");
    }
    if (noun.plural_cls && !lex.concords_.count(*noun.plural_cls)) {
      in.fail("plural of '" + lemma + "' uses class " +
              std::string(to_string(*noun.plural_cls)) +
              " which has no concord row");
    }
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon '" + path + "'");
  return load_lexicon(in);
}

void dump_lexicon(const Lexicon &lex, std::ostream &out) {
  for (NounClass cls : kAllNounClasses) {
    auto it = lex.concords().find(cls);
    if (it == lex.concords().end()) continue;
    const ConcordSet &cs = it->second;
    out << "C\t" << to_string(cls) << '\t' << or_dash(cs.augment) << '\t'
        << or_dash(cs.prefix) << '\t' << or_dash(cs.neg_sc) << '\t'
        << or_dash(cs.pron) << '\t' << or_dash(cs.all_concord) << '\t'
        << or_dash(cs.subj_concord) << '\t' << or_dash(cs.rel_concord) << '\t'
        << or_dash(cs.quant_concord) << '\t' << or_dash(cs.enum_copula)
        << '\t' << or_dash(cs.enum_prefix) << '\n';
  }
  for (const auto &[lemma, n] : lex.nouns()) {
    out << "N\t" << lemma << '\t' << to_string(n.cls) << '\t'
        << or_dash(n.plural_lemma) << '\t'
        << (n.plural_cls ? to_string(*n.plural_cls) : "-") << '\t'
        << (n.living ? "living" : "nonliving") << (n.person ? ",person" : "")
        << '\t' << n.gloss << '\n';
  }
  for (const auto &[key, v] : lex.verbs()) {
    out << "V\t" << key << '\t' << v.stem << '\t'
        << (v.agent_prefix ? "agent" : "noagent") << '\t' << v.gloss << '\n';
  }
}

const NounEntry &lookup_noun(const Lexicon &lex, std::string_view lemma) {
  auto it = lex.nouns().find(std::string(lemma));
  if (it == lex.nouns().end()) {
    throw UnknownEntryError("unknown noun '" + std::string(lemma) + "'");
  }
  return it->second;
}

const VerbEntry &lookup_verb(const Lexicon &lex, std::string_view key) {
  auto it = lex.verbs().find(std::string(key));
  if (it == lex.verbs().end()) {
    throw UnknownEntryError("unknown property '" + std::string(key) + "'");
  }
  return it->second;
}

std::pair<std::string, NounClass> pluralize(const NounEntry &entry) {
  if (!entry.plural_lemma || !entry.plural_cls) {
    throw NoPluralError("no plural form for '" + entry.lemma + "'");
  }
  return {*entry.plural_lemma, *entry.plural_cls};
}

const ConcordSet &concords_for(const Lexicon &lex, NounClass cls) {
  auto it = lex.concords().find(cls);
  if (it == lex.concords().end()) {
    throw LexiconError(0, "no concord row for class " +
                              std::string(to_string(cls)));
  }
  return it->second;
}

}  // namespace zulu
