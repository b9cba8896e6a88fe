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

#ifndef ZULU_RENDERER_H_
#define ZULU_RENDERER_H_

#include <span>
#include <string>
#include <vector>

#include "zulu/axiom.h"
#include "zulu/lexicon.h"
#include "zulu/morphology.h"
#include "zulu/profile.h"

namespace zulu {

// One word of a rendered sentence and the rule that produced it. `op` names
// the rule ("lemma", "plural", "copulative", "quant_dwa", ...), `input` is
// what it was applied to: a surface form, or class labels for concord rules
// ("10/9" for subject/object classes).
struct TraceStep {
  std::string op;
  std::string input;
  std::string output;

  bool operator==(const TraceStep &) const = default;
};

// The sentence text is exactly the steps' outputs joined by single spaces.
struct Sentence {
  std::string text;
  std::string pattern;
  std::vector<TraceStep> steps;
};

// Verbalizes an axiom. Covered shapes:
//
//   sub(A, B)             subsumption
//   sub(A, not(B))        negated subsumption
//   disjoint(A, B)        same as sub(A, not(B))
//   sub(A, some(p, B))    existential
//   and(A, B, ...)        conjunction (as a class statement)
//   or(A, B, ...)         disjunction (as a class statement)
//
// where A, B are named classes. Anything else throws UnsupportedShapeError
// naming the offending node. Lexicon errors propagate.
Sentence render(const Axiom &axiom, const Lexicon &lex,
                const PreferenceProfile &profile);

Sentence render_subsumption(const NounEntry &sub, const NounEntry &sup,
                            SubsumptionNumber variant, const Lexicon &lex);

Sentence render_negated_subsumption(const NounEntry &sub, const NounEntry &sup,
                                    NegationNumber variant,
                                    const Lexicon &lex);

Sentence render_conjunction(std::span<const NounEntry> parts, AndStyle style);

Sentence render_disjunction(std::span<const NounEntry> parts, OrStyle style);

// Quantified styles always keep the object singular. kThize always uses a
// singular subject and kGenericPlural a plural one, whatever `number` says.
Sentence render_existential(const NounEntry &subj, const VerbEntry &property,
                            const NounEntry &obj, ExistStyle style,
                            Number number, const Lexicon &lex);

// Capitalizes the first word when `casing` asks for it.
Sentence apply_case(Sentence sentence, SentenceCase casing);

}  // namespace zulu

#endif  // ZULU_RENDERER_H_
