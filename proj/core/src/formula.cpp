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

#include "dcat/formula.hpp"

#include <cctype>
#include <vector>

#include "dcat/errors.hpp"

namespace dcat {

const char* theory_name(Theory t) {
  return t == Theory::Sesquicartesian ? "sesqui" : "dicart";
}

Theory theory_from_name(const std::string& s) {
  if (s == "sesqui" || s == "sesquicartesian") return Theory::Sesquicartesian;
  if (s == "dicart" || s == "dicartesian") return Theory::Dicartesian;
  throw Error("unknown theory '" + s + "' (expected sesqui or dicart)");
}

struct Formula::Node {
  Kind kind;
  std::string name;            // Letter only
  std::vector<Formula> kids;   // two entries for Product/Sum
};

namespace {

bool valid_letter_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Formula Formula::letter(std::string name) {
  if (!valid_letter_name(name)) {
    throw Error("invalid letter name '" + name +
                "' (want a lowercase letter followed by letters or digits)");
  }
  return Formula(std::make_shared<const Node>(Node{Kind::Letter, std::move(name), {}}));
}

Formula Formula::const_i() {
  static const Formula i(std::make_shared<const Node>(Node{Kind::ConstI, {}, {}}));
  return i;
}

Formula Formula::const_o() {
  static const Formula o(std::make_shared<const Node>(Node{Kind::ConstO, {}, {}}));
  return o;
}

Formula Formula::product(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Product, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::sum(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Sum, {}, {std::move(left), std::move(right)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::letter_name() const {
  if (kind() != Kind::Letter) throw InternalError("letter_name on non-letter formula");
  return node_->name;
}

const Formula& Formula::left() const {
  if (!is_binary()) throw InternalError("left() on atomic formula");
  return node_->kids[0];
}

const Formula& Formula::right() const {
  if (!is_binary()) throw InternalError("right() on atomic formula");
  return node_->kids[1];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Letter:
      return a.node_->name == b.node_->name;
    case Formula::Kind::ConstI:
    case Formula::Kind::ConstO:
      return true;
    case Formula::Kind::Product:
    case Formula::Kind::Sum:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::size_t letter_count(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Letter: return 1;
    case Formula::Kind::ConstI:
    case Formula::Kind::ConstO: return 0;
    default: return letter_count(a.left()) + letter_count(a.right());
  }
}

std::size_t formula_size(const Formula& a) {
  return a.is_binary() ? 1 + formula_size(a.left()) + formula_size(a.right()) : 1;
}

bool contains_letter(const Formula& a) {
  if (a.kind() == Formula::Kind::Letter) return true;
  return a.is_binary() && (contains_letter(a.left()) || contains_letter(a.right()));
}

bool contains_const_i(const Formula& a) {
  if (a.kind() == Formula::Kind::ConstI) return true;
  return a.is_binary() && (contains_const_i(a.left()) || contains_const_i(a.right()));
}

bool contains_product(const Formula& a) {
  if (a.kind() == Formula::Kind::Product) return true;
  return a.is_binary() && (contains_product(a.left()) || contains_product(a.right()));
}

bool contains_sum(const Formula& a) {
  if (a.kind() == Formula::Kind::Sum) return true;
  return a.is_binary() && (contains_sum(a.left()) || contains_sum(a.right()));
}

Formula substitute_letters(const Formula& a, const Formula& replacement) {
  switch (a.kind()) {
    case Formula::Kind::Letter: return replacement;
    case Formula::Kind::ConstI:
    case Formula::Kind::ConstO: return a;
    case Formula::Kind::Product:
      return Formula::product(substitute_letters(a.left(), replacement),
                              substitute_letters(a.right(), replacement));
    case Formula::Kind::Sum:
      return Formula::sum(substitute_letters(a.left(), replacement),
                          substitute_letters(a.right(), replacement));
  }
  throw InternalError("substitute_letters: bad formula kind");
}

namespace {

// Precedence: atoms 2, * is 1, + is 0. Both operators left-associative.
int formula_prec(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Product: return 1;
    case Formula::Kind::Sum: return 0;
    default: return 2;
  }
}

void print_rec(const Formula& a, std::string& out) {
  switch (a.kind()) {
    case Formula::Kind::Letter: out += a.letter_name(); return;
    case Formula::Kind::ConstI: out += 'I'; return;
    case Formula::Kind::ConstO: out += 'O'; return;
    default: break;
  }
  const int prec = formula_prec(a);
  const bool left_parens = formula_prec(a.left()) < prec;
  const bool right_parens = formula_prec(a.right()) <= prec;
  if (left_parens) out += '(';
  print_rec(a.left(), out);
  if (left_parens) out += ')';
  out += a.kind() == Formula::Kind::Product ? " * " : " + ";
  if (right_parens) out += '(';
  print_rec(a.right(), out);
  if (right_parens) out += ')';
}

}  // namespace

std::string print_formula(const Formula& a) {
  std::string out;
  print_rec(a, out);
  return out;
}

}  // namespace dcat
