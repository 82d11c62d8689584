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

#include "dcat/term.hpp"

#include <vector>

#include "dcat/errors.hpp"

namespace dcat {

bool is_atom_kind(TermKind k) {
  switch (k) {
    case TermKind::Id:
    case TermKind::K:
    case TermKind::L:
    case TermKind::K1:
    case TermKind::K2:
    case TermKind::W:
    case TermKind::L1:
    case TermKind::L2:
    case TermKind::M:
      return true;
    default:
      return false;
  }
}

bool is_sugar_kind(TermKind k) {
  switch (k) {
    case TermKind::GK1:
    case TermKind::GK2:
    case TermKind::GL1:
    case TermKind::GL2:
    case TermKind::Pair:
    case TermKind::Copair:
      return true;
    default:
      return false;
  }
}

struct RawTerm::Node {
  TermKind kind;
  std::vector<Formula> formulas;
  std::vector<RawTerm> children;
};

RawTerm RawTerm::make(TermKind k, std::vector<Formula> fs, std::vector<RawTerm> kids) {
  return RawTerm(std::make_shared<const Node>(Node{k, std::move(fs), std::move(kids)}));
}

RawTerm RawTerm::id(Formula a) { return make(TermKind::Id, {std::move(a)}, {}); }
RawTerm RawTerm::k(Formula a) { return make(TermKind::K, {std::move(a)}, {}); }
RawTerm RawTerm::l(Formula a) { return make(TermKind::L, {std::move(a)}, {}); }
RawTerm RawTerm::k1(Formula a, Formula b) {
  return make(TermKind::K1, {std::move(a), std::move(b)}, {});
}
RawTerm RawTerm::k2(Formula a, Formula b) {
  return make(TermKind::K2, {std::move(a), std::move(b)}, {});
}
RawTerm RawTerm::w(Formula a) { return make(TermKind::W, {std::move(a)}, {}); }
RawTerm RawTerm::l1(Formula a, Formula b) {
  return make(TermKind::L1, {std::move(a), std::move(b)}, {});
}
RawTerm RawTerm::l2(Formula a, Formula b) {
  return make(TermKind::L2, {std::move(a), std::move(b)}, {});
}
RawTerm RawTerm::m(Formula a) { return make(TermKind::M, {std::move(a)}, {}); }
RawTerm RawTerm::compose(RawTerm g, RawTerm f) {
  return make(TermKind::Compose, {}, {std::move(g), std::move(f)});
}
RawTerm RawTerm::times(RawTerm f, RawTerm g) {
  return make(TermKind::Times, {}, {std::move(f), std::move(g)});
}
RawTerm RawTerm::plus(RawTerm f, RawTerm g) {
  return make(TermKind::Plus, {}, {std::move(f), std::move(g)});
}
RawTerm RawTerm::gk1(Formula b, RawTerm f) {
  return make(TermKind::GK1, {std::move(b)}, {std::move(f)});
}
RawTerm RawTerm::gk2(Formula a, RawTerm f) {
  return make(TermKind::GK2, {std::move(a)}, {std::move(f)});
}
RawTerm RawTerm::gl1(Formula b, RawTerm f) {
  return make(TermKind::GL1, {std::move(b)}, {std::move(f)});
}
RawTerm RawTerm::gl2(Formula a, RawTerm f) {
  return make(TermKind::GL2, {std::move(a)}, {std::move(f)});
}
RawTerm RawTerm::pair(RawTerm f, RawTerm g) {
  return make(TermKind::Pair, {}, {std::move(f), std::move(g)});
}
RawTerm RawTerm::copair(RawTerm f, RawTerm g) {
  return make(TermKind::Copair, {}, {std::move(f), std::move(g)});
}

TermKind RawTerm::kind() const { return node_->kind; }
std::size_t RawTerm::formula_count() const { return node_->formulas.size(); }
const Formula& RawTerm::formula(std::size_t i) const { return node_->formulas.at(i); }
std::size_t RawTerm::child_count() const { return node_->children.size(); }
const RawTerm& RawTerm::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const RawTerm& a, const RawTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.formula_count() != b.formula_count() || a.child_count() != b.child_count())
    return false;
  for (std::size_t i = 0; i < a.formula_count(); ++i)
    if (a.formula(i) != b.formula(i)) return false;
  for (std::size_t i = 0; i < a.child_count(); ++i)
    if (a.child(i) != b.child(i)) return false;
  return true;
}

struct Term::Node {
  TermKind kind;
  std::vector<Formula> formulas;
  std::vector<Term> children;
  Formula source;
  Formula target;
};

namespace {

[[noreturn]] void type_error(const std::string& what, const Formula& a,
                             const Formula& b) {
  throw TypeMismatch(what + ": " + print_formula(a) + " vs " + print_formula(b));
}

}  // namespace

Term Term::make(TermKind k, std::vector<Formula> fs, std::vector<Term> kids,
                Formula src, Formula tgt) {
  return Term(std::make_shared<const Node>(
      Node{k, std::move(fs), std::move(kids), std::move(src), std::move(tgt)}));
}

Term Term::id(Formula a) { return make(TermKind::Id, {a}, {}, a, a); }
Term Term::k(Formula a) {
  return make(TermKind::K, {a}, {}, a, Formula::const_i());
}
Term Term::l(Formula a) {
  return make(TermKind::L, {a}, {}, Formula::const_o(), a);
}
Term Term::k1(Formula a, Formula b) {
  return make(TermKind::K1, {a, b}, {}, Formula::product(a, b), a);
}
Term Term::k2(Formula a, Formula b) {
  return make(TermKind::K2, {a, b}, {}, Formula::product(a, b), b);
}
Term Term::w(Formula a) {
  return make(TermKind::W, {a}, {}, a, Formula::product(a, a));
}
Term Term::l1(Formula a, Formula b) {
  return make(TermKind::L1, {a, b}, {}, a, Formula::sum(a, b));
}
Term Term::l2(Formula a, Formula b) {
  return make(TermKind::L2, {a, b}, {}, b, Formula::sum(a, b));
}
Term Term::m(Formula a) {
  return make(TermKind::M, {a}, {}, Formula::sum(a, a), a);
}

Term Term::compose(Term g, Term f) {
  if (f.target() != g.source())
    type_error("composition middle mismatch", f.target(), g.source());
  Formula src = f.source(), tgt = g.target();
  return make(TermKind::Compose, {}, {std::move(g), std::move(f)}, std::move(src),
              std::move(tgt));
}

Term Term::times(Term f, Term g) {
  Formula src = Formula::product(f.source(), g.source());
  Formula tgt = Formula::product(f.target(), g.target());
  return make(TermKind::Times, {}, {std::move(f), std::move(g)}, std::move(src),
              std::move(tgt));
}

Term Term::plus(Term f, Term g) {
  Formula src = Formula::sum(f.source(), g.source());
  Formula tgt = Formula::sum(f.target(), g.target());
  return make(TermKind::Plus, {}, {std::move(f), std::move(g)}, std::move(src),
              std::move(tgt));
}

Term Term::gk1(Formula b, Term f) {
  Formula src = Formula::product(f.source(), b);
  Formula tgt = f.target();
  return make(TermKind::GK1, {std::move(b)}, {std::move(f)}, std::move(src),
              std::move(tgt));
}

Term Term::gk2(Formula a, Term f) {
  Formula src = Formula::product(a, f.source());
  Formula tgt = f.target();
  return make(TermKind::GK2, {std::move(a)}, {std::move(f)}, std::move(src),
              std::move(tgt));
}

Term Term::gl1(Formula b, Term f) {
  Formula src = f.source();
  Formula tgt = Formula::sum(f.target(), b);
  return make(TermKind::GL1, {std::move(b)}, {std::move(f)}, std::move(src),
              std::move(tgt));
}

Term Term::gl2(Formula a, Term f) {
  Formula src = f.source();
  Formula tgt = Formula::sum(a, f.target());
  return make(TermKind::GL2, {std::move(a)}, {std::move(f)}, std::move(src),
              std::move(tgt));
}

Term Term::pair(Term f, Term g) {
  if (f.source() != g.source())
    type_error("pair components must share a source", f.source(), g.source());
  Formula src = f.source();
  Formula tgt = Formula::product(f.target(), g.target());
  return make(TermKind::Pair, {}, {std::move(f), std::move(g)}, std::move(src),
              std::move(tgt));
}

Term Term::copair(Term f, Term g) {
  if (f.target() != g.target())
    type_error("copair components must share a target", f.target(), g.target());
  Formula src = Formula::sum(f.source(), g.source());
  Formula tgt = f.target();
  return make(TermKind::Copair, {}, {std::move(f), std::move(g)}, std::move(src),
              std::move(tgt));
}

TermKind Term::kind() const { return node_->kind; }
const Formula& Term::source() const { return node_->source; }
const Formula& Term::target() const { return node_->target; }
std::size_t Term::formula_count() const { return node_->formulas.size(); }
const Formula& Term::formula(std::size_t i) const { return node_->formulas.at(i); }
std::size_t Term::child_count() const { return node_->children.size(); }
const Term& Term::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.formula_count() != b.formula_count() || a.child_count() != b.child_count())
    return false;
  for (std::size_t i = 0; i < a.formula_count(); ++i)
    if (a.formula(i) != b.formula(i)) return false;
  for (std::size_t i = 0; i < a.child_count(); ++i)
    if (a.child(i) != b.child(i)) return false;
  return true;
}

namespace {

void check_formula_language(const Formula& a, Theory theory) {
  if (theory == Theory::Sesquicartesian && contains_const_i(a)) {
    throw TheoryViolation("formula " + print_formula(a) +
                          " uses I, which the sesquicartesian language lacks");
  }
}

}  // namespace

Term typecheck(const RawTerm& t, Theory theory) {
  if (t.kind() == TermKind::K && theory == Theory::Sesquicartesian) {
    throw TheoryViolation("k{...} terms do not exist in the sesquicartesian theory");
  }
  for (std::size_t i = 0; i < t.formula_count(); ++i) {
    check_formula_language(t.formula(i), theory);
  }
  switch (t.kind()) {
    case TermKind::Id: return Term::id(t.formula(0));
    case TermKind::K: return Term::k(t.formula(0));
    case TermKind::L: return Term::l(t.formula(0));
    case TermKind::K1: return Term::k1(t.formula(0), t.formula(1));
    case TermKind::K2: return Term::k2(t.formula(0), t.formula(1));
    case TermKind::W: return Term::w(t.formula(0));
    case TermKind::L1: return Term::l1(t.formula(0), t.formula(1));
    case TermKind::L2: return Term::l2(t.formula(0), t.formula(1));
    case TermKind::M: return Term::m(t.formula(0));
    case TermKind::Compose:
      return Term::compose(typecheck(t.child(0), theory), typecheck(t.child(1), theory));
    case TermKind::Times:
      return Term::times(typecheck(t.child(0), theory), typecheck(t.child(1), theory));
    case TermKind::Plus:
      return Term::plus(typecheck(t.child(0), theory), typecheck(t.child(1), theory));
    case TermKind::GK1: return Term::gk1(t.formula(0), typecheck(t.child(0), theory));
    case TermKind::GK2: return Term::gk2(t.formula(0), typecheck(t.child(0), theory));
    case TermKind::GL1: return Term::gl1(t.formula(0), typecheck(t.child(0), theory));
    case TermKind::GL2: return Term::gl2(t.formula(0), typecheck(t.child(0), theory));
    case TermKind::Pair:
      return Term::pair(typecheck(t.child(0), theory), typecheck(t.child(1), theory));
    case TermKind::Copair:
      return Term::copair(typecheck(t.child(0), theory), typecheck(t.child(1), theory));
  }
  throw InternalError("typecheck: bad term kind");
}

void check_theory(const Term& t, Theory theory) {
  if (theory == Theory::Dicartesian) return;
  if (t.kind() == TermKind::K) {
    throw TheoryViolation("k{...} terms do not exist in the sesquicartesian theory");
  }
  for (std::size_t i = 0; i < t.formula_count(); ++i) {
    check_formula_language(t.formula(i), theory);
  }
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    check_theory(t.child(i), theory);
  }
}

RawTerm raw_of(const Term& t) {
  switch (t.kind()) {
    case TermKind::Id: return RawTerm::id(t.formula(0));
    case TermKind::K: return RawTerm::k(t.formula(0));
    case TermKind::L: return RawTerm::l(t.formula(0));
    case TermKind::K1: return RawTerm::k1(t.formula(0), t.formula(1));
    case TermKind::K2: return RawTerm::k2(t.formula(0), t.formula(1));
    case TermKind::W: return RawTerm::w(t.formula(0));
    case TermKind::L1: return RawTerm::l1(t.formula(0), t.formula(1));
    case TermKind::L2: return RawTerm::l2(t.formula(0), t.formula(1));
    case TermKind::M: return RawTerm::m(t.formula(0));
    case TermKind::Compose: return RawTerm::compose(raw_of(t.child(0)), raw_of(t.child(1)));
    case TermKind::Times: return RawTerm::times(raw_of(t.child(0)), raw_of(t.child(1)));
    case TermKind::Plus: return RawTerm::plus(raw_of(t.child(0)), raw_of(t.child(1)));
    case TermKind::GK1: return RawTerm::gk1(t.formula(0), raw_of(t.child(0)));
    case TermKind::GK2: return RawTerm::gk2(t.formula(0), raw_of(t.child(0)));
    case TermKind::GL1: return RawTerm::gl1(t.formula(0), raw_of(t.child(0)));
    case TermKind::GL2: return RawTerm::gl2(t.formula(0), raw_of(t.child(0)));
    case TermKind::Pair: return RawTerm::pair(raw_of(t.child(0)), raw_of(t.child(1)));
    case TermKind::Copair: return RawTerm::copair(raw_of(t.child(0)), raw_of(t.child(1)));
  }
  throw InternalError("raw_of: bad term kind");
}

Term desugar(const Term& t) {
  switch (t.kind()) {
    case TermKind::Id:
    case TermKind::K:
    case TermKind::L:
    case TermKind::K1:
    case TermKind::K2:
    case TermKind::W:
    case TermKind::L1:
    case TermKind::L2:
    case TermKind::M:
      return t;
    case TermKind::Compose:
      return Term::compose(desugar(t.child(0)), desugar(t.child(1)));
    case TermKind::Times:
      return Term::times(desugar(t.child(0)), desugar(t.child(1)));
    case TermKind::Plus:
      return Term::plus(desugar(t.child(0)), desugar(t.child(1)));
    case TermKind::GK1: {
      Term f = desugar(t.child(0));
      return Term::compose(f, Term::k1(t.child(0).source(), t.formula(0)));
    }
    case TermKind::GK2: {
      Term f = desugar(t.child(0));
      return Term::compose(f, Term::k2(t.formula(0), t.child(0).source()));
    }
    case TermKind::GL1: {
      Term f = desugar(t.child(0));
      return Term::compose(Term::l1(t.child(0).target(), t.formula(0)), f);
    }
    case TermKind::GL2: {
      Term f = desugar(t.child(0));
      return Term::compose(Term::l2(t.formula(0), t.child(0).target()), f);
    }
    case TermKind::Pair: {
      Term f = desugar(t.child(0));
      Term g = desugar(t.child(1));
      Formula c = t.source();
      return Term::compose(Term::times(std::move(f), std::move(g)), Term::w(c));
    }
    case TermKind::Copair: {
      Term f = desugar(t.child(0));
      Term g = desugar(t.child(1));
      Formula c = t.target();
      return Term::compose(Term::m(c), Term::plus(std::move(f), std::move(g)));
    }
  }
  throw InternalError("desugar: bad term kind");
}

namespace {

template <typename T>
std::size_t size_rec(const T& t) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < t.child_count(); ++i) n += size_rec(t.child(i));
  return n;
}

// Precedence: delimited forms 3, "." 2, "*" 1, "+" 0.
template <typename T>
int term_prec(const T& t) {
  switch (t.kind()) {
    case TermKind::Compose: return 2;
    case TermKind::Times: return 1;
    case TermKind::Plus: return 0;
    default: return 3;
  }
}

template <typename T>
void print_term_rec(const T& t, std::string& out) {
  auto bracketed = [&out](const T& u, bool parens) {
    if (parens) out += '(';
    print_term_rec(u, out);
    if (parens) out += ')';
  };
  auto braces1 = [&t](const char* head) {
    return std::string(head) + "{" + print_formula(t.formula(0)) + "}";
  };
  auto braces2 = [&t](const char* head) {
    return std::string(head) + "{" + print_formula(t.formula(0)) + ", " +
           print_formula(t.formula(1)) + "}";
  };
  switch (t.kind()) {
    case TermKind::Id: out += braces1("id"); return;
    case TermKind::K: out += braces1("k"); return;
    case TermKind::L: out += braces1("l"); return;
    case TermKind::K1: out += braces2("k1"); return;
    case TermKind::K2: out += braces2("k2"); return;
    case TermKind::W: out += braces1("w"); return;
    case TermKind::L1: out += braces2("l1"); return;
    case TermKind::L2: out += braces2("l2"); return;
    case TermKind::M: out += braces1("m"); return;
    case TermKind::Compose:
      // Right-associative: the later arrow needs parens when itself a
      // composition, the earlier arrow only below "." precedence.
      bracketed(t.child(0), term_prec(t.child(0)) < 2 ||
                                t.child(0).kind() == TermKind::Compose);
      out += " . ";
      bracketed(t.child(1), term_prec(t.child(1)) < 2);
      return;
    case TermKind::Times:
      bracketed(t.child(0), term_prec(t.child(0)) < 1);
      out += " * ";
      bracketed(t.child(1), term_prec(t.child(1)) < 1 ||
                                t.child(1).kind() == TermKind::Times);
      return;
    case TermKind::Plus:
      bracketed(t.child(0), false);
      out += " + ";
      bracketed(t.child(1), t.child(1).kind() == TermKind::Plus);
      return;
    case TermKind::GK1:
    case TermKind::GK2:
    case TermKind::GL1:
    case TermKind::GL2: {
      const char* head = t.kind() == TermKind::GK1   ? "K1"
                         : t.kind() == TermKind::GK2 ? "K2"
                         : t.kind() == TermKind::GL1 ? "L1"
                                                     : "L2";
      out += braces1(head);
      out += '(';
      print_term_rec(t.child(0), out);
      out += ')';
      return;
    }
    case TermKind::Pair:
    case TermKind::Copair:
      out += t.kind() == TermKind::Pair ? '<' : '[';
      print_term_rec(t.child(0), out);
      out += ", ";
      print_term_rec(t.child(1), out);
      out += t.kind() == TermKind::Pair ? '>' : ']';
      return;
  }
}

}  // namespace

std::size_t term_size(const Term& t) { return size_rec(t); }
std::size_t term_size(const RawTerm& t) { return size_rec(t); }

std::string print_term(const RawTerm& t) {
  std::string out;
  print_term_rec(t, out);
  return out;
}

std::string print_term(const Term& t) {
  std::string out;
  print_term_rec(t, out);
  return out;
}

}  // namespace dcat
