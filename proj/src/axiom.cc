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

#include "zulu/axiom.h"

#include <optional>
#include <stdexcept>

namespace zulu {

ClassExpr ClassExpr::Named(std::string lemma) {
  return ClassExpr(Kind::kNamed, std::move(lemma), {});
}

ClassExpr ClassExpr::Not(ClassExpr inner) {
  std::vector<ClassExpr> ops;
  ops.push_back(std::move(inner));
  return ClassExpr(Kind::kNot, "", std::move(ops));
}

ClassExpr ClassExpr::And(std::vector<ClassExpr> parts) {
  if (parts.size() < 2) throw std::invalid_argument("and() needs >= 2 parts");
  return ClassExpr(Kind::kAnd, "", std::move(parts));
}

ClassExpr ClassExpr::Or(std::vector<ClassExpr> parts) {
  if (parts.size() < 2) throw std::invalid_argument("or() needs >= 2 parts");
  return ClassExpr(Kind::kOr, "", std::move(parts));
}

ClassExpr ClassExpr::Some(std::string property, ClassExpr filler) {
  std::vector<ClassExpr> ops;
  ops.push_back(std::move(filler));
  return ClassExpr(Kind::kSome, std::move(property), std::move(ops));
}

bool ClassExpr::operator==(const ClassExpr &other) const {
  return kind_ == other.kind_ && name_ == other.name_ &&
         operands_ == other.operands_;
}

namespace {

constexpr int kMaxDepth = 200;

enum class TokenType { kIdent, kOpen, kClose, kComma, kEnd };

struct Token {
  TokenType type = TokenType::kEnd;
  std::string text;
  int column = 1;
};

std::string describe(const Token &t) {
  switch (t.type) {
    case TokenType::kIdent: return "identifier '" + t.text + "'";
    case TokenType::kOpen: return "'('";
    case TokenType::kClose: return "')'";
    case TokenType::kComma: return "','";
    case TokenType::kEnd: return "end of line";
  }
  return "?";
}

// Decodes one UTF-8 sequence at `pos`. Returns the code point and its byte
// length, or nullopt for a malformed sequence.
std::optional<std::pair<char32_t, size_t>> decode_utf8(std::string_view s,
                                                       size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return std::pair<char32_t, size_t>{b0, 1};
  size_t len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return std::nullopt;
  }
  if (pos + len > s.size()) return std::nullopt;
  for (size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  // Overlong forms, surrogates and out-of-range values.
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return std::nullopt;
  }
  return std::pair<char32_t, size_t>{cp, len};
}

// Non-ASCII code points count as letters, apart from the Latin-1 symbol
// block, the general punctuation block and the BOM.
bool is_letter(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  }
  if (cp >= 0x80 && cp <= 0xBF) return false;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x206F) return false;
  if (cp == 0xFEFF) return false;
  return true;
}

bool is_ident_char(char32_t cp) {
  return is_letter(cp) || (cp >= '0' && cp <= '9') || cp == '_';
}

class Parser {
 public:
  Parser(std::string_view text, int line) : text_(text), line_(line) {}

  Axiom parse_line() {
    Axiom result = parse_top();
    const Token &t = peek();
    if (t.type != TokenType::kEnd) {
      if (t.type == TokenType::kClose) {
        fail(t, "unbalanced parentheses: unexpected ')'", {"end of line"});
      }
      fail(t, "expected end of line, found " + describe(t), {"end of line"});
    }
    return result;
  }

 private:
  [[noreturn]] void fail(int column, const std::string &message,
                         std::vector<std::string> expected) const {
    throw ParseError(line_, column, message, std::move(expected));
  }

  [[noreturn]] void fail(const Token &t, const std::string &message,
                         std::vector<std::string> expected) const {
    fail(t.column, message, std::move(expected));
  }

  [[noreturn]] void unexpected(const Token &t,
                               std::vector<std::string> expected) const {
    std::string want;
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) want += i + 1 == expected.size() ? " or " : ", ";
      want += expected[i];
    }
    if (t.type == TokenType::kEnd) {
      for (const auto &e : expected) {
        if (e == "')'") {
          fail(t, "unbalanced parentheses: expected " + want +
                      ", found end of line",
               std::move(expected));
        }
      }
    }
    fail(t, "expected " + want + ", found " + describe(t), std::move(expected));
  }

  const Token &peek() {
    if (!lookahead_) lookahead_ = lex();
    return *lookahead_;
  }

  Token next() {
    Token t = peek();
    lookahead_.reset();
    return t;
  }

  Token lex() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
      ++column_;
    }
    Token t;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (c == '(' || c == ')' || c == ',') {
      t.type = c == '(' ? TokenType::kOpen
               : c == ')' ? TokenType::kClose
                          : TokenType::kComma;
      ++pos_;
      ++column_;
      return t;
    }
    auto cp = decode_utf8(text_, pos_);
    if (!cp) fail(column_, "invalid UTF-8 byte sequence", {});
    if (!is_letter(cp->first)) {
      std::string shown = cp->first >= 0x20 && cp->first < 0x7F
                              ? "'" + std::string(1, c) + "'"
                              : "code point U+" + hex(cp->first);
      fail(column_, "unexpected character " + shown,
           {"identifier", "'('", "')'", "','"});
    }
    const size_t start = pos_;
    while (pos_ < text_.size()) {
      auto next_cp = decode_utf8(text_, pos_);
      if (!next_cp) fail(column_, "invalid UTF-8 byte sequence", {});
      if (!is_ident_char(next_cp->first)) break;
      pos_ += next_cp->second;
      ++column_;
    }
    t.type = TokenType::kIdent;
    t.text = std::string(text_.substr(start, pos_ - start));
    return t;
  }

  static std::string hex(char32_t cp) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string out;
    for (int shift = 20; shift >= 0; shift -= 4) {
      out += kDigits[(cp >> shift) & 0xF];
    }
    size_t nz = out.find_first_not_of('0');
    return out.substr(std::min<size_t>(nz, out.size() - 4));
  }

  Token expect(TokenType type, const char *what) {
    if (peek().type != type) unexpected(peek(), {what});
    return next();
  }

  Axiom parse_top() {
    if (peek().type != TokenType::kIdent) {
      unexpected(peek(), {"'sub('", "'disjoint('", "class expression"});
    }
    Token head = next();
    if (peek().type == TokenType::kOpen &&
        (head.text == "sub" || head.text == "disjoint")) {
      next();
      ClassExpr a = parse_expr(1);
      expect(TokenType::kComma, "','");
      ClassExpr b = parse_expr(1);
      expect(TokenType::kClose, "')'");
      if (head.text == "sub") return SubClassOf{std::move(a), std::move(b)};
      return DisjointWith{std::move(a), std::move(b)};
    }
    return ClassStatement{parse_after_ident(head, 0)};
  }

  ClassExpr parse_expr(int depth) {
    if (peek().type != TokenType::kIdent) {
      unexpected(peek(), {"class expression"});
    }
    return parse_after_ident(next(), depth);
  }

  ClassExpr parse_after_ident(const Token &head, int depth) {
    if (peek().type != TokenType::kOpen) return ClassExpr::Named(head.text);
    const Token open = next();
    if (depth >= kMaxDepth) fail(open, "expression nested too deeply", {});
    if (head.text == "not") {
      ClassExpr inner = parse_expr(depth + 1);
      expect(TokenType::kClose, "')'");
      return ClassExpr::Not(std::move(inner));
    }
    if (head.text == "and" || head.text == "or") {
      std::vector<ClassExpr> parts;
      parts.push_back(parse_expr(depth + 1));
      while (peek().type == TokenType::kComma) {
        next();
        parts.push_back(parse_expr(depth + 1));
      }
      if (peek().type != TokenType::kClose) unexpected(peek(), {"','", "')'"});
      if (parts.size() < 2) {
        fail(peek(), "'" + head.text + "' needs at least two arguments",
             {"','"});
      }
      next();
      return head.text == "and" ? ClassExpr::And(std::move(parts))
                                : ClassExpr::Or(std::move(parts));
    }
    if (head.text == "some") {
      Token property = expect(TokenType::kIdent, "property name");
      expect(TokenType::kComma, "','");
      ClassExpr filler = parse_expr(depth + 1);
      expect(TokenType::kClose, "')'");
      return ClassExpr::Some(property.text, std::move(filler));
    }
    fail(open, "unknown constructor '" + head.text + "'",
         {"','", "')'", "end of line"});
  }

  std::string_view text_;
  int line_;
  size_t pos_ = 0;
  int column_ = 1;
  std::optional<Token> lookahead_;
};

// Text before an unquoted "#". Identifiers cannot contain "#", so the first
// one always starts the comment.
std::string_view strip_comment(std::string_view line) {
  size_t hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

void format_to(const ClassExpr &e, std::string &out) {
  auto list = [&](const char *head) {
    out += head;
    out += '(';
    for (size_t i = 0; i < e.operands().size(); ++i) {
      if (i > 0) out += ", ";
      format_to(e.operand(i), out);
    }
    out += ')';
  };
  switch (e.kind()) {
    case ClassExpr::Kind::kNamed:
      out += e.name();
      break;
    case ClassExpr::Kind::kNot:
      list("not");
      break;
    case ClassExpr::Kind::kAnd:
      list("and");
      break;
    case ClassExpr::Kind::kOr:
      list("or");
      break;
    case ClassExpr::Kind::kSome:
      out += "some(" + e.name() + ", ";
      format_to(e.operand(0), out);
      out += ')';
      break;
  }
}

}  // namespace

Axiom parse_axiom(std::string_view text, int line) {
  return Parser(strip_comment(text), line).parse_line();
}

AxiomFile parse_axioms(std::string_view text) {
  AxiomFile file;
  int lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineno;
    std::string_view body = strip_comment(line);
    if (!is_blank(body)) {
      try {
        file.axioms.push_back({lineno, Parser(body, lineno).parse_line()});
      } catch (const ParseError &e) {
        file.errors.push_back(e);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return file;
}

std::string format_expr(const ClassExpr &expr) {
  std::string out;
  format_to(expr, out);
  return out;
}

std::string format_axiom(const Axiom &axiom) {
  struct Printer {
    std::string operator()(const SubClassOf &a) const {
      return "sub(" + format_expr(a.sub) + ", " + format_expr(a.sup) + ")";
    }
    std::string operator()(const DisjointWith &a) const {
      return "disjoint(" + format_expr(a.first) + ", " +
             format_expr(a.second) + ")";
    }
    std::string operator()(const ClassStatement &a) const {
      return format_expr(a.expr);
    }
  };
  return std::visit(Printer{}, axiom);
}

}  // namespace zulu
