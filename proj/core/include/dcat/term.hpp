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
#include <vector>

#include "dcat/formula.hpp"

namespace dcat {

// Arrow-term constructors. The first nine are the primitive atoms, the next
// three the primitive operations, the final six the Gentzen-style sugar
// (projections/injections fused with a term, plus pairing and copairing).
enum class TermKind {
  Id,       // id{A}      : A -> A
  K,        // k{A}       : A -> I        (dicartesian only)
  L,        // l{A}       : O -> A
  K1,       // k1{A,B}    : A*B -> A
  K2,       // k2{A,B}    : A*B -> B
  W,        // w{A}       : A -> A*A
  L1,       // l1{A,B}    : A -> A+B
  L2,       // l2{A,B}    : B -> A+B
  M,        // m{A}       : A+A -> A
  Compose,  // g . f      : A -> C   for f : A -> B, g : B -> C
  Times,    // f * g      : A*C -> B*D
  Plus,     // f + g      : A+C -> B+D
  GK1,      // K1{B}(f)   : A*B -> C  for f : A -> C   (= f . k1{A,B})
  GK2,      // K2{A}(f)   : A*B -> C  for f : B -> C   (= f . k2{A,B})
  GL1,      // L1{B}(f)   : C -> A+B  for f : C -> A   (= l1{A,B} . f)
  GL2,      // L2{A}(f)   : C -> A+B  for f : C -> B   (= l2{A,B} . f)
  Pair,     // <f, g>     : C -> A*B  for f : C -> A, g : C -> B
  Copair,   // [f, g]     : A+B -> C  for f : A -> C, g : B -> C
};

bool is_atom_kind(TermKind k);    // Id..M
bool is_sugar_kind(TermKind k);   // GK1..Copair

// Untyped term tree, exactly what the parser produces. Immutable.
class RawTerm {
 public:
  static RawTerm id(Formula a);
  static RawTerm k(Formula a);
  static RawTerm l(Formula a);
  static RawTerm k1(Formula a, Formula b);
  static RawTerm k2(Formula a, Formula b);
  static RawTerm w(Formula a);
  static RawTerm l1(Formula a, Formula b);
  static RawTerm l2(Formula a, Formula b);
  static RawTerm m(Formula a);
  static RawTerm compose(RawTerm g, RawTerm f);  // g after f
  static RawTerm times(RawTerm f, RawTerm g);
  static RawTerm plus(RawTerm f, RawTerm g);
  static RawTerm gk1(Formula b, RawTerm f);
  static RawTerm gk2(Formula a, RawTerm f);
  static RawTerm gl1(Formula b, RawTerm f);
  static RawTerm gl2(Formula a, RawTerm f);
  static RawTerm pair(RawTerm f, RawTerm g);
  static RawTerm copair(RawTerm f, RawTerm g);

  TermKind kind() const;
  std::size_t formula_count() const;
  const Formula& formula(std::size_t i) const;
  std::size_t child_count() const;
  const RawTerm& child(std::size_t i) const;

  friend bool operator==(const RawTerm& a, const RawTerm& b);
  friend bool operator!=(const RawTerm& a, const RawTerm& b) { return !(a == b); }

 private:
  struct Node;
  explicit RawTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static RawTerm make(TermKind k, std::vector<Formula> fs, std::vector<RawTerm> kids);
  std::shared_ptr<const Node> node_;
};

// A typecheck-validated term: every node carries its source and target. The
// only way to build one is through the checked constructors below or through
// typecheck(), so a Term is well typed by construction.
class Term {
 public:
  static Term id(Formula a);
  static Term k(Formula a);
  static Term l(Formula a);
  static Term k1(Formula a, Formula b);
  static Term k2(Formula a, Formula b);
  static Term w(Formula a);
  static Term l1(Formula a, Formula b);
  static Term l2(Formula a, Formula b);
  static Term m(Formula a);
  static Term compose(Term g, Term f);  // throws TypeMismatch on bad middle
  static Term times(Term f, Term g);
  static Term plus(Term f, Term g);
  static Term gk1(Formula b, Term f);
  static Term gk2(Formula a, Term f);
  static Term gl1(Formula b, Term f);
  static Term gl2(Formula a, Term f);
  static Term pair(Term f, Term g);    // throws unless sources agree
  static Term copair(Term f, Term g);  // throws unless targets agree

  TermKind kind() const;
  const Formula& source() const;
  const Formula& target() const;
  std::size_t formula_count() const;
  const Formula& formula(std::size_t i) const;
  std::size_t child_count() const;
  const Term& child(std::size_t i) const;

  // Structural equality on the syntax; endpoint annotations are derived and
  // therefore not compared.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(TermKind k, std::vector<Formula> fs, std::vector<Term> kids,
                   Formula src, Formula tgt);
  std::shared_ptr<const Node> node_;
};

// Validates and annotates a raw term. Under Sesquicartesian, k{A} nodes and
// any occurrence of I raise TheoryViolation.
Term typecheck(const RawTerm& t, Theory theory);

// Re-validates language membership of an already typed term.
void check_theory(const Term& t, Theory theory);

// Strips annotations back to the parser-level tree.
RawTerm raw_of(const Term& t);

// Unfolds all sugar nodes into their defining primitive combinations:
// K1{B}(f) = f . k1{A,B}, <f, g> = (f * g) . w{C}, and so on. The result has
// the same endpoints and the same graph.
Term desugar(const Term& t);

// Term-node count (formula parameters not included).
std::size_t term_size(const Term& t);
std::size_t term_size(const RawTerm& t);

// Canonical text. "." binds tighter than "*" which binds tighter than "+";
// "." is right-associative, the others left-associative.
// parse_term(print_term(t)) == t structurally.
std::string print_term(const RawTerm& t);
std::string print_term(const Term& t);

}  // namespace dcat
