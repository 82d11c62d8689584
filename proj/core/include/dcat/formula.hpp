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

#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace dcat {

// The two theories this library works with. Sesquicartesian drops the
// terminal-object structure: no k{A} terms and no I in any formula.
enum class Theory { Sesquicartesian, Dicartesian };

const char* theory_name(Theory t);           // "sesqui" | "dicart"
Theory theory_from_name(const std::string&); // throws Error on anything else

// An object formula: letters and the constants I, O closed under * and +.
// Values are immutable; copies share structure.
class Formula {
 public:
  enum class Kind { Letter, ConstI, ConstO, Product, Sum };

  static Formula letter(std::string name);  // validates identifier shape
  static Formula const_i();
  static Formula const_o();
  static Formula product(Formula left, Formula right);
  static Formula sum(Formula left, Formula right);

  Kind kind() const;
  bool is_binary() const {
    return kind() == Kind::Product || kind() == Kind::Sum;
  }
  const std::string& letter_name() const;  // Letter nodes only
  const Formula& left() const;             // binary nodes only
  const Formula& right() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Number of letter occurrences, counted left to right. This is the ordinal
// |A| that the graphical functor assigns to A.
std::size_t letter_count(const Formula& a);

// Node count: letters and constants weigh 1, binary nodes 1 + children.
std::size_t formula_size(const Formula& a);

bool contains_letter(const Formula& a);
bool contains_const_i(const Formula& a);
bool contains_product(const Formula& a);
bool contains_sum(const Formula& a);

// Replaces every letter occurrence by `replacement`, keeping shape.
Formula substitute_letters(const Formula& a, const Formula& replacement);

// Canonical text: "*" binds tighter than "+", both left-associative, parens
// only where required. parse_formula(print_formula(a)) == a.
std::string print_formula(const Formula& a);

}  // namespace dcat
