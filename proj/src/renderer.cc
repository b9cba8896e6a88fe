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

#include "zulu/renderer.h"

#include <variant>

#include "zulu/error.h"

namespace zulu {

namespace {

std::string label(NounClass cls) { return std::string(to_string(cls)); }

class SentenceBuilder {
 public:
  explicit SentenceBuilder(std::string pattern) { s_.pattern = std::move(pattern); }

  SentenceBuilder &add(std::string op, std::string input, const Surface &out) {
    s_.steps.push_back({std::move(op), std::move(input), out.text()});
    return *this;
  }

  Sentence finish() && {
    for (const TraceStep &step : s_.steps) {
      if (!s_.text.empty()) s_.text += ' ';
      s_.text += step.output;
    }
    return std::move(s_);
  }

 private:
  Sentence s_;
};

// A noun as it stands in the sentence: its surface form and class.
struct NounForm {
  std::string lemma;
  NounClass cls;
  const char *op;  // "lemma" or "plural"
  std::string source;  // the stored singular
};

NounForm singular(const NounEntry &n) { return {n.lemma, n.cls, "lemma", n.lemma}; }

NounForm plural(const NounEntry &n) {
  auto [lemma, cls] = pluralize(n);
  return {std::move(lemma), cls, "plural", n.lemma};
}

void add_noun(SentenceBuilder &b, const NounForm &form) {
  b.add(form.op, form.source, Surface(form.lemma));
}

void add_copulative(SentenceBuilder &b, const NounForm &form) {
  std::string op = form.op == std::string_view("plural") ? "plural,copulative"
                                                         : "copulative";
  b.add(std::move(op), form.source, morph::copulative(Surface(form.lemma)));
}

void add_all_concord(SentenceBuilder &b, const Lexicon &lex, NounClass cls) {
  b.add("all_concord", label(cls),
        morph::all_concord_word(concords_for(lex, cls)));
}

void require_arity(std::span<const NounEntry> parts, const char *what) {
  if (parts.size() < 2) {
    throw Error(std::string(what) + " needs at least two parts, got " +
                std::to_string(parts.size()));
  }
}

[[noreturn]] void unsupported(const ClassExpr &node) {
  throw UnsupportedShapeError("unsupported axiom shape: cannot verbalize '" +
                              format_expr(node) + "' in this position");
}

const NounEntry &named_noun(const ClassExpr &e, const Lexicon &lex) {
  if (!e.is_named()) unsupported(e);
  return lookup_noun(lex, e.name());
}

std::vector<NounEntry> named_parts(const ClassExpr &e, const Lexicon &lex) {
  for (const ClassExpr &part : e.operands()) {
    if (!part.is_named()) unsupported(part);
  }
  std::vector<NounEntry> parts;
  for (const ClassExpr &part : e.operands()) {
    parts.push_back(lookup_noun(lex, part.name()));
  }
  return parts;
}

Sentence render_sub(const SubClassOf &ax, const Lexicon &lex,
                    const PreferenceProfile &p) {
  if (!ax.sub.is_named()) unsupported(ax.sub);
  const ClassExpr &sup = ax.sup;
  switch (sup.kind()) {
    case ClassExpr::Kind::kNamed:
      return render_subsumption(named_noun(ax.sub, lex), named_noun(sup, lex),
                                p.subsumption_number, lex);
    case ClassExpr::Kind::kNot: {
      if (!sup.operand(0).is_named()) unsupported(sup.operand(0));
      return render_negated_subsumption(named_noun(ax.sub, lex),
                                        named_noun(sup.operand(0), lex),
                                        p.negation_number, lex);
    }
    case ClassExpr::Kind::kSome: {
      if (!sup.operand(0).is_named()) unsupported(sup.operand(0));
      const NounEntry &subj = named_noun(ax.sub, lex);
      const VerbEntry &verb = lookup_verb(lex, sup.name());
      const NounEntry &obj = named_noun(sup.operand(0), lex);
      return render_existential(subj, verb, obj, p.exist_style,
                                p.exist_number, lex);
    }
    default:
      unsupported(sup);
  }
}

}  // namespace

Sentence render_subsumption(const NounEntry &sub, const NounEntry &sup,
                            SubsumptionNumber variant, const Lexicon &lex) {
  SentenceBuilder b("subsumption." + std::string(to_string(variant)));
  switch (variant) {
    case SubsumptionNumber::kSingular:
      add_noun(b, singular(sub));
      add_copulative(b, singular(sup));
      break;
    case SubsumptionNumber::kPlural:
      add_noun(b, plural(sub));
      add_copulative(b, plural(sup));
      break;
    case SubsumptionNumber::kAllPlural: {
      // The superclass stays singular: "wonke amakhambi ngumuthi".
      const NounForm subj = plural(sub);
      add_all_concord(b, lex, subj.cls);
      add_noun(b, subj);
      add_copulative(b, singular(sup));
      break;
    }
  }
  return std::move(b).finish();
}

Sentence render_negated_subsumption(const NounEntry &sub, const NounEntry &sup,
                                    NegationNumber variant,
                                    const Lexicon &lex) {
  SentenceBuilder b("negation." + std::string(to_string(variant)));
  const NounForm subj = variant == NegationNumber::kPluralConcordial ||
                                variant == NegationNumber::kAllPluralConcordial
                            ? plural(sub)
                            : singular(sub);
  const bool impersonal = variant == NegationNumber::kSingularImpersonal;
  if (variant == NegationNumber::kAllPluralConcordial) {
    add_all_concord(b, lex, subj.cls);
  }
  add_noun(b, subj);
  // No copulative here; the superclass keeps its bare singular form.
  b.add(impersonal ? "negative_copula_impersonal" : "negative_copula",
        label(subj.cls) + "/" + label(sup.cls),
        morph::negative_copula(concords_for(lex, subj.cls),
                               concords_for(lex, sup.cls), impersonal));
  add_noun(b, singular(sup));
  return std::move(b).finish();
}

Sentence render_conjunction(std::span<const NounEntry> parts, AndStyle style) {
  require_arity(parts, "conjunction");
  SentenceBuilder b("conjunction." + std::string(to_string(style)));
  add_noun(b, singular(parts[0]));
  for (size_t i = 1; i < parts.size(); ++i) {
    switch (style) {
      case AndStyle::kEnumerationNa:
        b.add("coalesce_na", parts[i].lemma,
              morph::coalesce_na(Surface(parts[i].lemma)));
        break;
      case AndStyle::kKanye:
      case AndStyle::kFuthi: {
        const std::string word(to_string(style));
        b.add("connective", word, Surface(word));
        add_noun(b, singular(parts[i]));
        break;
      }
    }
  }
  return std::move(b).finish();
}

Sentence render_disjunction(std::span<const NounEntry> parts, OrStyle style) {
  require_arity(parts, "disjunction");
  SentenceBuilder b("disjunction." + std::string(to_string(style)));
  const std::string word(to_string(style));
  add_noun(b, singular(parts[0]));
  for (size_t i = 1; i < parts.size(); ++i) {
    b.add("connective", word, Surface(word));
    add_noun(b, singular(parts[i]));
  }
  return std::move(b).finish();
}

Sentence render_existential(const NounEntry &subj, const VerbEntry &property,
                            const NounEntry &obj, ExistStyle style,
                            Number number, const Lexicon &lex) {
  if (style == ExistStyle::kThize) number = Number::kSingular;
  if (style == ExistStyle::kGenericPlural) number = Number::kPlural;

  std::string pattern = "existential." + std::string(to_string(style));
  if (style != ExistStyle::kGenericPlural) {
    pattern += "." + std::string(to_string(number));
  }
  SentenceBuilder b(std::move(pattern));

  const NounForm s = number == Number::kPlural ? plural(subj) : singular(subj);
  if (style != ExistStyle::kGenericPlural) add_all_concord(b, lex, s.cls);
  add_noun(b, s);
  b.add("conjugate", label(s.cls) + "/" + property.stem,
        morph::conjugate(concords_for(lex, s.cls), property));

  // The object, with the agentive copulative when the property asks for it.
  auto add_object = [&](const NounForm &o) {
    if (property.agent_prefix) {
      add_copulative(b, o);
    } else {
      add_noun(b, o);
    }
  };

  const ConcordSet &obj_concords = concords_for(lex, obj.cls);
  switch (style) {
    case ExistStyle::kGenericPlural:
      add_object(plural(obj));
      break;
    case ExistStyle::kDwa:
      add_object(singular(obj));
      b.add("quant_dwa", label(obj.cls), morph::quant_dwa(obj_concords));
      break;
    case ExistStyle::kNomaPhi:
      b.add("enum_phi", label(obj.cls), morph::enum_phi(obj_concords));
      add_object(singular(obj));
      break;
    case ExistStyle::kThize: {
      Surface o(obj.lemma);
      std::string op = "clitic_thize";
      if (property.agent_prefix) {
        o = morph::copulative(o);
        op = "copulative,clitic_thize";
      }
      b.add(std::move(op), obj.lemma, morph::clitic_thize(o));
      break;
    }
  }
  return std::move(b).finish();
}

Sentence apply_case(Sentence sentence, SentenceCase casing) {
  if (casing == SentenceCase::kAsStored || sentence.steps.empty()) {
    return sentence;
  }
  TraceStep &first = sentence.steps.front();
  const Surface cased = morph::sentence_initial(Surface(first.output));
  if (cased.text() == first.output) return sentence;
  first.op += ",sentence_initial";
  first.output = cased.text();
  sentence.text.replace(0, first.output.size(), first.output);
  return sentence;
}

Sentence render(const Axiom &axiom, const Lexicon &lex,
                const PreferenceProfile &profile) {
  struct Dispatch {
    const Lexicon &lex;
    const PreferenceProfile &p;

    Sentence operator()(const SubClassOf &ax) const {
      return render_sub(ax, lex, p);
    }
    Sentence operator()(const DisjointWith &ax) const {
      return render_sub(SubClassOf{ax.first, ClassExpr::Not(ax.second)}, lex,
                        p);
    }
    Sentence operator()(const ClassStatement &st) const {
      switch (st.expr.kind()) {
        case ClassExpr::Kind::kAnd:
          return render_conjunction(named_parts(st.expr, lex), p.and_style);
        case ClassExpr::Kind::kOr:
          return render_disjunction(named_parts(st.expr, lex), p.or_style);
        default:
          unsupported(st.expr);
      }
    }
  };
  return apply_case(std::visit(Dispatch{lex, profile}, axiom),
                    profile.sentence_case);
}

}  // namespace zulu
