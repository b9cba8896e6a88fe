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

#ifndef ZULU_AXIOM_H_
#define ZULU_AXIOM_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zulu/error.h"

namespace zulu {

// A class expression in the EL-like fragment: named classes closed under
// negation, conjunction, disjunction and existential restriction.
class ClassExpr {
 public:
  enum class Kind { kNamed, kNot, kAnd, kOr, kSome };

  static ClassExpr Named(std::string lemma);
  static ClassExpr Not(ClassExpr inner);
  // Both throw std::invalid_argument for fewer than two parts.
  static ClassExpr And(std::vector<ClassExpr> parts);
  static ClassExpr Or(std::vector<ClassExpr> parts);
  static ClassExpr Some(std::string property, ClassExpr filler);

  Kind kind() const { return kind_; }
  bool is_named() const { return kind_ == Kind::kNamed; }

  // Lemma for Named, property for Some, empty otherwise.
  const std::string &name() const { return name_; }

  // Inner expression for Not, filler for Some, parts for And/Or.
  const std::vector<ClassExpr> &operands() const { return operands_; }
  const ClassExpr &operand(size_t i) const { return operands_.at(i); }

  bool operator==(const ClassExpr &other) const;

 private:
  ClassExpr(Kind kind, std::string name, std::vector<ClassExpr> operands)
      : kind_(kind), name_(std::move(name)), operands_(std::move(operands)) {}

  Kind kind_;
  std::string name_;
  std::vector<ClassExpr> operands_;
};

struct SubClassOf {
  ClassExpr sub;
  ClassExpr sup;
  bool operator==(const SubClassOf &) const = default;
};

struct DisjointWith {
  ClassExpr first;
  ClassExpr second;
  bool operator==(const DisjointWith &) const = default;
};

// A bare class expression, verbalized as a noun phrase ("Butter and Milk").
struct ClassStatement {
  ClassExpr expr;
  bool operator==(const ClassStatement &) const = default;
};

using Axiom = std::variant<SubClassOf, DisjointWith, ClassStatement>;

struct ParsedAxiom {
  int line = 0;
  Axiom axiom;
};

struct AxiomFile {
  std::vector<ParsedAxiom> axioms;
  std::vector<ParseError> errors;  // one per bad line, in line order
};

// Parses one axiom per line:
//
//   axiom := "sub(" expr "," expr ")" | "disjoint(" expr "," expr ")" | expr
//   expr  := ident | "not(" expr ")" | "and(" expr {"," expr}+ ")"
//          | "or(" expr {"," expr}+ ")" | "some(" ident "," expr ")"
//
// Blank lines and "#" comments are skipped. A bad line is reported and
// parsing continues with the next one.
AxiomFile parse_axioms(std::string_view text);

// Parses a single axiom; throws ParseError. `line` is only used for
// diagnostics.
Axiom parse_axiom(std::string_view text, int line = 1);

// Canonical text form; parse_axiom(format_axiom(a)) == a.
std::string format_axiom(const Axiom &axiom);
std::string format_expr(const ClassExpr &expr);

}  // namespace zulu

#endif  // ZULU_AXIOM_H_
