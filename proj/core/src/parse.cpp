// Copyright 2026 The dcat Authors
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

#include "dcat/parse.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "dcat/errors.hpp"

namespace dcat {
namespace {

enum class Tok {
  Ident, Star, Plus, Dot, Comma,
  LParen, RParen, LBrace, RBrace,
  Less, Greater, LBracket, RBracket,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t start = i;
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '*': k = Tok::Star; break;
      case '+': k = Tok::Plus; break;
      case '.': k = Tok::Dot; break;
      case ',': k = Tok::Comma; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case '<': k = Tok::Less; break;
      case '>': k = Tok::Greater; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", i);
    }
    out.push_back({k, std::string(1, s[i]), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula formula_all() {
    Formula f = formula();
    expect_end();
    return f;
  }

  RawTerm term_all() {
    RawTerm t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token eat() { return toks_[i_++]; }

  Token expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + what, peek().pos);
    return eat();
  }

  void expect_end() {
    if (peek().kind != Tok::End)
      throw ParseError("unexpected trailing input", peek().pos);
  }

  Formula formula() {
    Formula f = formula_product();
    while (peek().kind == Tok::Plus) {
      eat();
      f = Formula::sum(f, formula_product());
    }
    return f;
  }

  Formula formula_product() {
    Formula f = formula_atom();
    while (peek().kind == Tok::Star) {
      eat();
      f = Formula::product(f, formula_atom());
    }
    return f;
  }

  Formula formula_atom() {
    if (peek().kind == Tok::LParen) {
      eat();
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek().kind == Tok::Ident) {
      Token t = eat();
      if (t.text == "I") return Formula::const_i();
      if (t.text == "O") return Formula::const_o();
      if (!std::islower(static_cast<unsigned char>(t.text[0])))
        throw ParseError("letter names begin with a lowercase character, got '" +
                             t.text + "'",
                         t.pos);
      return Formula::letter(t.text);
    }
    throw ParseError("expected a formula", peek().pos);
  }

  RawTerm term() {
    RawTerm t = term_product();
    while (peek().kind == Tok::Plus) {
      eat();
      t = RawTerm::plus(std::move(t), term_product());
    }
    return t;
  }

  RawTerm term_product() {
    RawTerm t = term_composition();
    while (peek().kind == Tok::Star) {
      eat();
      t = RawTerm::times(std::move(t), term_composition());
    }
    return t;
  }

  RawTerm term_composition() {
    RawTerm t = term_atom();
    if (peek().kind == Tok::Dot) {
      eat();
      return RawTerm::compose(std::move(t), term_composition());
    }
    return t;
  }

  RawTerm term_atom() {
    switch (peek().kind) {
      case Tok::LParen: {
        eat();
        RawTerm t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Less: {
        eat();
        RawTerm f = term();
        expect(Tok::Comma, "','");
        RawTerm g = term();
        expect(Tok::Greater, "'>'");
        return RawTerm::pair(std::move(f), std::move(g));
      }
      case Tok::LBracket: {
        eat();
        RawTerm f = term();
        expect(Tok::Comma, "','");
        RawTerm g = term();
        expect(Tok::RBracket, "']'");
        return RawTerm::copair(std::move(f), std::move(g));
      }
      case Tok::Ident:
        return term_head();
      default:
        throw ParseError("expected a term", peek().pos);
    }
  }

  RawTerm term_head() {
    Token head = eat();
    const std::string& h = head.text;
    if (h == "id") return RawTerm::id(braced_formula());
    if (h == "k") return RawTerm::k(braced_formula());
    if (h == "l") return RawTerm::l(braced_formula());
    if (h == "w") return RawTerm::w(braced_formula());
    if (h == "m") return RawTerm::m(braced_formula());
    if (h == "k1" || h == "k2" || h == "l1" || h == "l2") {
      auto [a, b] = braced_formula_pair();
      if (h == "k1") return RawTerm::k1(std::move(a), std::move(b));
      if (h == "k2") return RawTerm::k2(std::move(a), std::move(b));
      if (h == "l1") return RawTerm::l1(std::move(a), std::move(b));
      return RawTerm::l2(std::move(a), std::move(b));
    }
    if (h == "K1" || h == "K2" || h == "L1" || h == "L2") {
      Formula p = braced_formula();
      expect(Tok::LParen, "'('");
      RawTerm body = term();
      expect(Tok::RParen, "')'");
      if (h == "K1") return RawTerm::gk1(std::move(p), std::move(body));
      if (h == "K2") return RawTerm::gk2(std::move(p), std::move(body));
      if (h == "L1") return RawTerm::gl1(std::move(p), std::move(body));
      return RawTerm::gl2(std::move(p), std::move(body));
    }
    throw ParseError("unknown term head '" + h + "'", head.pos);
  }

  Formula braced_formula() {
    expect(Tok::LBrace, "'{'");
    Formula f = formula();
    expect(Tok::RBrace, "'}'");
    return f;
  }

  std::pair<Formula, Formula> braced_formula_pair() {
    expect(Tok::LBrace, "'{'");
    Formula a = formula();
    expect(Tok::Comma, "','");
    Formula b = formula();
    expect(Tok::RBrace, "'}'");
    return {std::move(a), std::move(b)};
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).formula_all(); }

RawTerm parse_term(std::string_view text) { return Parser(text).term_all(); }

}  // namespace dcat
