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

#ifndef ZULU_MORPHOLOGY_H_
#define ZULU_MORPHOLOGY_H_

#include <ostream>
#include <string>
#include <string_view>

#include "zulu/lexicon.h"

namespace zulu {

// A formed word or phrase fragment: non-empty, no leading or trailing
// whitespace, single internal spaces. Construction throws MorphologyError
// on anything else.
class Surface {
 public:
  explicit Surface(std::string text);

  const std::string &text() const { return text_; }
  operator std::string_view() const { return text_; }

  bool operator==(const Surface &) const = default;

 private:
  std::string text_;
};

std::ostream &operator<<(std::ostream &os, const Surface &s);

namespace morph {

// Removes the hyphen join markers of a stored concord ("-lo-" -> "lo").
std::string strip_hyphens(std::string_view concord);

// Predicative "is a N": ng- before a/o/u, y- before i.
Surface copulative(const Surface &noun);

// na + noun with vowel coalescence: a+i -> e, a+u -> o, a+a -> a, a+o -> o.
Surface coalesce_na(const Surface &noun);

// The class-agreeing "all" word (wonke, zonke, ...).
Surface all_concord_word(const ConcordSet &cs);

// NEG SC of the subject class joined to PRON of the object class, or the
// impersonal aku- form when `impersonal` is set.
Surface negative_copula(const ConcordSet &subj, const ConcordSet &obj,
                        bool impersonal);

// "at least one": RC + QC + -dwa (elilodwa).
Surface quant_dwa(const ConcordSet &cs);

// "some": noma + copulative + EP + -phi (noma yiliphi).
Surface enum_phi(const ConcordSet &cs);

// Noun + -thize.
Surface clitic_thize(const Surface &noun);

// Subject concord + verb stem (zi + dla).
Surface conjugate(const ConcordSet &cs, const VerbEntry &verb);

// Upper-cases the first letter when it is an ASCII lower-case letter.
Surface sentence_initial(const Surface &word);

}  // namespace morph
}  // namespace zulu

#endif  // ZULU_MORPHOLOGY_H_
