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

#include "zulu/error.h"

namespace zulu {

namespace {

bool valid_surface(std::string_view s) {
  if (s.empty() || s.front() == ' ' || s.back() == ' ') return false;
  if (s.find("  ") != std::string_view::npos) return false;
  return s.find_first_of("\t\n\r") == std::string_view::npos;
}

std::string class_name(const ConcordSet &cs) {
  return "class " + std::string(to_string(cs.cls));
}

const std::string &require(const std::optional<std::string> &cell,
                           const ConcordSet &cs, const char *what) {
  if (!cell || cell->empty()) {
    throw ConcordUnavailableError(std::string("concord not available: ") +
                                  what + " for " + class_name(cs));
  }
  return *cell;
}

const std::string &require(const std::string &cell, const ConcordSet &cs,
                           const char *what) {
  if (cell.empty()) {
    throw ConcordUnavailableError(std::string("concord not available: ") +
                                  what + " for " + class_name(cs));
  }
  return cell;
}

char initial_vowel(const Surface &noun, const char *rule) {
  const char c = noun.text()[0];
  if (c != 'a' && c != 'i' && c != 'o' && c != 'u') {
    throw MorphologyError(std::string(rule) + ": '" + noun.text() +
                          "' does not begin with a, i, o or u");
  }
  return c;
}

}  // namespace

Surface::Surface(std::string text) : text_(std::move(text)) {
  if (!valid_surface(text_)) {
    throw MorphologyError("invalid surface form '" + text_ + "'");
  }
}

std::ostream &operator<<(std::ostream &os, const Surface &s) {
  return os << s.text();
}

namespace morph {

std::string strip_hyphens(std::string_view concord) {
  std::string out;
  out.reserve(concord.size());
  for (char c : concord) {
    if (c != '-') out += c;
  }
  return out;
}

Surface copulative(const Surface &noun) {
  const char v = initial_vowel(noun, "copulative");
  return Surface((v == 'i' ? "y" : "ng") + noun.text());
}

Surface coalesce_na(const Surface &noun) {
  const char v = initial_vowel(noun, "na-coalescence");
  const std::string rest = noun.text().substr(1);
  switch (v) {
    case 'i': return Surface("ne" + rest);
    case 'u': return Surface("no" + rest);
    // a + o -> o is not among the attested pairs; it follows a + u.
    case 'o': return Surface("no" + rest);
    default: return Surface("na" + rest);
  }
}

Surface all_concord_word(const ConcordSet &cs) {
  return Surface(require(cs.all_concord, cs, "all-concord"));
}

Surface negative_copula(const ConcordSet &subj, const ConcordSet &obj,
                        bool impersonal) {
  const std::string &pron = require(obj.pron, obj, "pronoun");
  if (impersonal) return Surface("aku" + pron);
  return Surface(
      strip_hyphens(require(subj.neg_sc, subj, "negative subject concord")) +
      pron);
}

Surface quant_dwa(const ConcordSet &cs) {
  return Surface(
      strip_hyphens(require(cs.rel_concord, cs, "relative concord")) +
      strip_hyphens(require(cs.quant_concord, cs, "quantitative concord")) +
      "dwa");
}

Surface enum_phi(const ConcordSet &cs) {
  return Surface(
      "noma " + strip_hyphens(require(cs.enum_copula, cs, "copulative")) +
      strip_hyphens(require(cs.enum_prefix, cs, "enumerative prefix")) +
      "phi");
}

Surface clitic_thize(const Surface &noun) {
  return Surface(noun.text() + "thize");
}

Surface conjugate(const ConcordSet &cs, const VerbEntry &verb) {
  return Surface(
      strip_hyphens(require(cs.subj_concord, cs, "subject concord")) +
      verb.stem);
}

Surface sentence_initial(const Surface &word) {
  std::string text = word.text();
  if (text[0] >= 'a' && text[0] <= 'z') text[0] = text[0] - 'a' + 'A';
  return Surface(std::move(text));
}

}  // namespace morph
}  // namespace zulu
