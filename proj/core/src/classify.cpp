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

#include "dcat/classify.hpp"

#include "dcat/errors.hpp"
#include "dcat/parse.hpp"
#include "dcat/rewrite.hpp"

namespace dcat {

bool is_constant(const Formula& a) { return !contains_letter(a); }

namespace {

// The primitive isomorphism witnesses, one row per connective over already
// evaluated sides. Stored as term text so the table is auditable; rows
// mentioning I or k never come up sesquicartesianly.
struct IsoRow {
  bool product;
  ConstKind left, right, result;
  const char* forward;
  const char* backward;
};

constexpr IsoRow kIsoTable[] = {
    {true, ConstKind::O, ConstKind::O, ConstKind::O, "k1{O, O}", "w{O}"},
    {true, ConstKind::O, ConstKind::I, ConstKind::O, "k1{O, I}", "(id{O} * k{O}) . w{O}"},
    {true, ConstKind::I, ConstKind::O, ConstKind::O, "k2{I, O}", "(k{O} * id{O}) . w{O}"},
    {true, ConstKind::I, ConstKind::I, ConstKind::I, "k1{I, I}", "(id{I} * k{I}) . w{I}"},
    {false, ConstKind::O, ConstKind::O, ConstKind::O, "m{O} . (id{O} + l{O})", "l1{O, O}"},
    {false, ConstKind::O, ConstKind::I, ConstKind::I, "m{I} . (l{I} + id{I})", "l2{O, I}"},
    {false, ConstKind::I, ConstKind::O, ConstKind::I, "m{I} . (id{I} + l{I})", "l1{I, O}"},
    {false, ConstKind::I, ConstKind::I, ConstKind::I, "m{I}", "l1{I, I}"},
};

const IsoRow& iso_row(bool product, ConstKind left, ConstKind right) {
  for (const IsoRow& row : kIsoTable) {
    if (row.product == product && row.left == left && row.right == right) return row;
  }
  throw InternalError("isomorphism table lookup failed");
}

// Composition that swallows identity legs, keeping witnesses small.
Term compose_skip(const Term& g, const Term& f) {
  if (is_complex_identity(f)) return g;
  if (is_complex_identity(g)) return f;
  return Term::compose(g, f);
}

ConstClass classify_rec(const Formula& a, Theory theory) {
  switch (a.kind()) {
    case Formula::Kind::ConstO:
      return {ConstKind::O, Term::id(a), Term::id(a)};
    case Formula::Kind::ConstI:
      return {ConstKind::I, Term::id(a), Term::id(a)};
    case Formula::Kind::Product:
    case Formula::Kind::Sum: {
      bool product = a.kind() == Formula::Kind::Product;
      ConstClass lc = classify_rec(a.left(), theory);
      ConstClass rc = classify_rec(a.right(), theory);
      const IsoRow& row = iso_row(product, lc.kind, rc.kind);
      Term fwd = typecheck(parse_term(row.forward), theory);
      Term bwd = typecheck(parse_term(row.backward), theory);
      Term layer_fwd = product ? Term::times(lc.forward, rc.forward)
                               : Term::plus(lc.forward, rc.forward);
      Term layer_bwd = product ? Term::times(lc.backward, rc.backward)
                               : Term::plus(lc.backward, rc.backward);
      return {row.result, compose_skip(fwd, layer_fwd), compose_skip(layer_bwd, bwd)};
    }
    case Formula::Kind::Letter:
      break;
  }
  throw InternalError("classify_rec on a letter");
}

}  // namespace

ConstClass classify_constant(const Formula& a, Theory theory) {
  if (!is_constant(a)) {
    throw NotConstant("a letter occurs in " + print_formula(a));
  }
  if (theory == Theory::Sesquicartesian && contains_const_i(a)) {
    throw TheoryViolation("I does not exist sesquicartesianly: " + print_formula(a));
  }
  return classify_rec(a, theory);
}

bool is_contradiction(const Formula& c) {
  return classify_constant(substitute_letters(c, Formula::const_i()), Theory::Dicartesian)
             .kind == ConstKind::O;
}

bool is_tautology(const Formula& c) {
  return classify_constant(substitute_letters(c, Formula::const_o()), Theory::Dicartesian)
             .kind == ConstKind::I;
}

bool is_o_normal(const Formula& a) {
  if (!a.is_binary()) return true;
  if (!is_o_normal(a.left()) || !is_o_normal(a.right())) return false;
  if (a.kind() != Formula::Kind::Product) return true;
  if (is_contradiction(a.right()) && contains_sum(a.left())) return false;
  if (is_contradiction(a.left()) && contains_sum(a.right())) return false;
  return true;
}

bool is_i_normal(const Formula& b) {
  if (!b.is_binary()) return true;
  if (!is_i_normal(b.left()) || !is_i_normal(b.right())) return false;
  if (b.kind() != Formula::Kind::Sum) return true;
  if (is_tautology(b.right()) && contains_product(b.left())) return false;
  if (is_tautology(b.left()) && contains_product(b.right())) return false;
  return true;
}

}  // namespace dcat
