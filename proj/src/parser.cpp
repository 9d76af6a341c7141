/* Copyright 2026 The Contingency Workbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <cctype>

#include "cwb/errors.hpp"
#include "cwb/formula.hpp"

namespace cwb {

namespace {

enum class Tok { Atom, Top, Bot, Not, Delta, Nabla, Box, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  Lexer(std::string_view text, ParseOptions options) : text_(text), options_(options) {}

  Token next() {
    skip_space();
    const int line = line_, column = column_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, column};
    const char c = text_[pos_];

    auto fixed = [&](Tok kind, std::size_t length) {
      Token t{kind, std::string(text_.substr(pos_, length)), line, column};
      advance(length);
      return t;
    };

    if (c == '!' || c == '~') return fixed(Tok::Not, 1);
    if (c == '&') return fixed(Tok::And, 1);
    if (c == '|') return fixed(Tok::Or, 1);
    if (c == '(') return fixed(Tok::LParen, 1);
    if (c == ')') return fixed(Tok::RParen, 1);
    if (starts_with("<->")) return fixed(Tok::Iff, 3);
    if (starts_with("->")) return fixed(Tok::Implies, 2);
    if (starts_with("[]")) {
      if (options_.mode != Mode::Extended)
        throw ParseError(ParseError::Kind::BoxNotAllowed, line, column, "[] is only available in extended mode");
      return fixed(Tok::Box, 2);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      std::string word(text_.substr(pos_, end - pos_));
      Token t{Tok::Atom, word, line, column};
      advance(end - pos_);
      if (word == "D") {
        t.kind = Tok::Delta;
      } else if (word == "Nb") {
        t.kind = Tok::Nabla;
      } else if (word == "top") {
        t.kind = Tok::Top;
      } else if (word == "bot") {
        t.kind = Tok::Bot;
      } else if (word == kTopAtom) {
        if (!options_.allow_reserved)
          throw ParseError(ParseError::Kind::ReservedAtom, line, column, "'_t' is reserved");
      } else if (!std::islower(static_cast<unsigned char>(word[0]))) {
        throw ParseError(ParseError::Kind::Syntax, line, column,
                         "unknown word '" + word + "' (atoms start with a lowercase letter; operators D and Nb "
                         "need a following space)");
      }
      return t;
    }
    throw ParseError(ParseError::Kind::Syntax, line, column, std::string("unexpected character '") + c + "'");
  }

 private:
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance(1);
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Precedence, loosest first: <->, -> (right), |, &, unary.
class Parser {
 public:
  Parser(std::string_view text, ParseOptions options) : lexer_(text, options) { shift(); }

  Formula parse_all() {
    Formula f = parse_iff();
    if (current_.kind != Tok::End) fail("unexpected '" + current_.text + "'");
    return f;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Kind::Syntax, current_.line, current_.column, message);
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (current_.kind == Tok::Iff) {
      shift();
      f = iff(f, parse_implies());
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (current_.kind == Tok::Implies) {
      shift();
      return implies(f, parse_implies());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (current_.kind == Tok::Or) {
      shift();
      f = disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (current_.kind == Tok::And) {
      shift();
      f = conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (current_.kind) {
      case Tok::Not:
        shift();
        return negate(parse_unary());
      case Tok::Delta:
        shift();
        return delta(parse_unary());
      case Tok::Nabla:
        shift();
        return nabla(parse_unary());
      case Tok::Box:
        shift();
        return box(parse_unary());
      default:
        return parse_primary();
    }
  }

  Formula parse_primary() {
    switch (current_.kind) {
      case Tok::Atom: {
        Formula f = atom(current_.text);
        shift();
        return f;
      }
      case Tok::Top:
        shift();
        return top();
      case Tok::Bot:
        shift();
        return bot();
      case Tok::LParen: {
        shift();
        Formula f = parse_iff();
        if (current_.kind != Tok::RParen) fail("expected ')'");
        shift();
        return f;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + current_.text + "'");
    }
  }

  Lexer lexer_;
  Token current_{Tok::End, "", 1, 1};
};

}  // namespace

Formula parse(std::string_view text, ParseOptions options) { return Parser(text, options).parse_all(); }

}  // namespace cwb
