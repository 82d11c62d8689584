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

#include "dcat/rewrite.hpp"

#include <optional>
#include <utility>

#include "dcat/errors.hpp"

namespace dcat {

namespace {

bool all_children(const Term& t, bool (*p)(const Term&)) {
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    if (!p(t.child(i))) return false;
  }
  return true;
}

bool contains_compose(const Term& t) {
  if (t.kind() == TermKind::Compose) return true;
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    if (contains_compose(t.child(i))) return true;
  }
  return false;
}

}  // namespace

bool is_gentzen_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::Id:
    case TermKind::K:
    case TermKind::L:
      return true;
    case TermKind::Compose:
    case TermKind::GK1:
    case TermKind::GK2:
    case TermKind::GL1:
    case TermKind::GL2:
    case TermKind::Pair:
    case TermKind::Copair:
      return all_children(t, is_gentzen_term);
    default:
      return false;
  }
}

bool is_cut_free(const Term& t) { return is_gentzen_term(t) && !contains_compose(t); }

bool is_k_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::L:
    case TermKind::L1:
    case TermKind::L2:
    case TermKind::M:
    case TermKind::GL1:
    case TermKind::GL2:
    case TermKind::Copair:
      return false;
    default:
      return all_children(t, is_k_term);
  }
}

bool is_l_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::K:
    case TermKind::K1:
    case TermKind::K2:
    case TermKind::W:
    case TermKind::GK1:
    case TermKind::GK2:
    case TermKind::Pair:
      return false;
    default:
      return all_children(t, is_l_term);
  }
}

bool is_complex_identity(const Term& t) {
  switch (t.kind()) {
    case TermKind::Id:
      return true;
    case TermKind::Compose:
    case TermKind::Times:
    case TermKind::Plus:
      return all_children(t, is_complex_identity);
    default:
      return false;
  }
}

std::size_t degree(const Term& t) {
  std::size_t n = 0;
  switch (t.kind()) {
    case TermKind::GK1:
    case TermKind::GK2:
    case TermKind::GL1:
    case TermKind::GL2:
    case TermKind::Pair:
    case TermKind::Copair:
      n = 1;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < t.child_count(); ++i) n += degree(t.child(i));
  return n;
}

Term to_gentzen(const Term& t) {
  switch (t.kind()) {
    case TermKind::Id:
    case TermKind::K:
    case TermKind::L:
      return t;
    case TermKind::K1:
      return Term::gk1(t.formula(1), Term::id(t.formula(0)));
    case TermKind::K2:
      return Term::gk2(t.formula(0), Term::id(t.formula(1)));
    case TermKind::L1:
      return Term::gl1(t.formula(1), Term::id(t.formula(0)));
    case TermKind::L2:
      return Term::gl2(t.formula(0), Term::id(t.formula(1)));
    case TermKind::W:
      return Term::pair(Term::id(t.formula(0)), Term::id(t.formula(0)));
    case TermKind::M:
      return Term::copair(Term::id(t.formula(0)), Term::id(t.formula(0)));
    case TermKind::Compose:
      return Term::compose(to_gentzen(t.child(0)), to_gentzen(t.child(1)));
    case TermKind::Times: {
      const Term& f = t.child(0);
      const Term& g = t.child(1);
      return Term::pair(Term::gk1(g.source(), to_gentzen(f)),
                        Term::gk2(f.source(), to_gentzen(g)));
    }
    case TermKind::Plus: {
      const Term& f = t.child(0);
      const Term& g = t.child(1);
      return Term::copair(Term::gl1(g.target(), to_gentzen(f)),
                          Term::gl2(f.target(), to_gentzen(g)));
    }
    case TermKind::GK1:
      return Term::gk1(t.formula(0), to_gentzen(t.child(0)));
    case TermKind::GK2:
      return Term::gk2(t.formula(0), to_gentzen(t.child(0)));
    case TermKind::GL1:
      return Term::gl1(t.formula(0), to_gentzen(t.child(0)));
    case TermKind::GL2:
      return Term::gl2(t.formula(0), to_gentzen(t.child(0)));
    case TermKind::Pair:
      return Term::pair(to_gentzen(t.child(0)), to_gentzen(t.child(1)));
    case TermKind::Copair:
      return Term::copair(to_gentzen(t.child(0)), to_gentzen(t.child(1)));
  }
  throw InternalError("to_gentzen: bad term kind");
}

namespace {

// Degrees of the compositions-with-cut-free-operands inside t.
void topmost_cut_degrees(const Term& t, std::vector<std::size_t>* out) {
  if (t.kind() == TermKind::Compose && !contains_compose(t.child(0)) &&
      !contains_compose(t.child(1))) {
    out->push_back(degree(t));
    return;
  }
  for (std::size_t i = 0; i < t.child_count(); ++i) topmost_cut_degrees(t.child(i), out);
}

// One reduction of a composition g . f with both operands cut-free. The case
// order is fixed so overlaps (say f a copairing under g a projection) resolve
// the same way every run.
std::pair<Term, const char*> reduce_cut(const Term& cut) {
  const Term& g = cut.child(0);
  const Term& f = cut.child(1);
  if (f.kind() == TermKind::Id) return {g, "cat1"};
  if (g.kind() == TermKind::Id) return {f, "cat1"};
  if (f.kind() == TermKind::L) return {Term::l(cut.target()), "l"};
  if (g.kind() == TermKind::K) return {Term::k(cut.source()), "k"};
  if (f.kind() == TermKind::GK1) {
    return {Term::gk1(f.formula(0), Term::compose(g, f.child(0))), "K1"};
  }
  if (f.kind() == TermKind::GK2) {
    return {Term::gk2(f.formula(0), Term::compose(g, f.child(0))), "K1"};
  }
  if (g.kind() == TermKind::GL1) {
    return {Term::gl1(g.formula(0), Term::compose(g.child(0), f)), "L1"};
  }
  if (g.kind() == TermKind::GL2) {
    return {Term::gl2(g.formula(0), Term::compose(g.child(0), f)), "L1"};
  }
  if (f.kind() == TermKind::Copair) {
    return {Term::copair(Term::compose(g, f.child(0)), Term::compose(g, f.child(1))), "L3"};
  }
  if (g.kind() == TermKind::Pair) {
    return {Term::pair(Term::compose(g.child(0), f), Term::compose(g.child(1), f)), "K3"};
  }
  if (g.kind() == TermKind::GK1 && f.kind() == TermKind::Pair) {
    return {Term::compose(g.child(0), f.child(0)), "K2"};
  }
  if (g.kind() == TermKind::GK2 && f.kind() == TermKind::Pair) {
    return {Term::compose(g.child(0), f.child(1)), "K2"};
  }
  if (g.kind() == TermKind::Copair && f.kind() == TermKind::GL1) {
    return {Term::compose(g.child(0), f.child(0)), "L2"};
  }
  if (g.kind() == TermKind::Copair && f.kind() == TermKind::GL2) {
    return {Term::compose(g.child(1), f.child(0)), "L2"};
  }
  throw InternalError("cut reduction has no case for " + print_term(cut));
}

Term with_child(const Term& t, std::size_t index, Term sub) {
  switch (t.kind()) {
    case TermKind::Compose:
      return index == 0 ? Term::compose(std::move(sub), t.child(1))
                        : Term::compose(t.child(0), std::move(sub));
    case TermKind::Times:
      return index == 0 ? Term::times(std::move(sub), t.child(1))
                        : Term::times(t.child(0), std::move(sub));
    case TermKind::Plus:
      return index == 0 ? Term::plus(std::move(sub), t.child(1))
                        : Term::plus(t.child(0), std::move(sub));
    case TermKind::Pair:
      return index == 0 ? Term::pair(std::move(sub), t.child(1))
                        : Term::pair(t.child(0), std::move(sub));
    case TermKind::Copair:
      return index == 0 ? Term::copair(std::move(sub), t.child(1))
                        : Term::copair(t.child(0), std::move(sub));
    case TermKind::GK1:
      return Term::gk1(t.formula(0), std::move(sub));
    case TermKind::GK2:
      return Term::gk2(t.formula(0), std::move(sub));
    case TermKind::GL1:
      return Term::gl1(t.formula(0), std::move(sub));
    case TermKind::GL2:
      return Term::gl2(t.formula(0), std::move(sub));
    default:
      throw InternalError("with_child on a leaf term");
  }
}

// Reduces the leftmost-innermost topmost cut, or returns nothing if t is
// already cut-free. Checks the termination measure: every composition left
// behind by the reduction has strictly smaller degree than the reduced one.
std::optional<Term> reduce_leftmost(const Term& t, CutStep* step) {
  if (!contains_compose(t)) return std::nullopt;
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    if (auto r = reduce_leftmost(t.child(i), step)) return with_child(t, i, std::move(*r));
  }
  if (t.kind() != TermKind::Compose) {
    throw InternalError("composition found but no topmost cut below " + print_term(t));
  }
  auto [result, rule] = reduce_cut(t);
  step->rule = rule;
  step->cut_degree = degree(t);
  step->residual_degrees.clear();
  topmost_cut_degrees(result, &step->residual_degrees);
  for (std::size_t d : step->residual_degrees) {
    if (d >= step->cut_degree) {
      throw InternalError("cut reduction did not decrease the degree measure at " +
                          print_term(t));
    }
  }
  return result;
}

}  // namespace

Term cut_eliminate_traced(const Term& t, std::vector<CutStep>& steps) {
  Term cur = to_gentzen(t);
  CutStep step{};
  while (auto r = reduce_leftmost(cur, &step)) {
    steps.push_back(step);
    cur = std::move(*r);
  }
  return cur;
}

Term cut_eliminate(const Term& t) {
  std::vector<CutStep> steps;
  return cut_eliminate_traced(t, steps);
}

namespace {

// Composition-free factors of t, outermost first, equal to t as a composite.
// Factor lists under * and + are aligned by padding the shorter side at the
// outer end with identities on that side's final target.
std::vector<Term> flatten_factors(const Term& t) {
  switch (t.kind()) {
    case TermKind::Compose: {
      std::vector<Term> out = flatten_factors(t.child(0));
      std::vector<Term> inner = flatten_factors(t.child(1));
      out.insert(out.end(), inner.begin(), inner.end());
      return out;
    }
    case TermKind::Times:
    case TermKind::Plus: {
      std::vector<Term> ls = flatten_factors(t.child(0));
      std::vector<Term> rs = flatten_factors(t.child(1));
      while (ls.size() < rs.size()) ls.insert(ls.begin(), Term::id(t.child(0).target()));
      while (rs.size() < ls.size()) rs.insert(rs.begin(), Term::id(t.child(1).target()));
      std::vector<Term> out;
      out.reserve(ls.size());
      for (std::size_t i = 0; i < ls.size(); ++i) {
        out.push_back(t.kind() == TermKind::Times ? Term::times(ls[i], rs[i])
                                                  : Term::plus(ls[i], rs[i]));
      }
      return out;
    }
    default:
      return {t};
  }
}

// factor = lPart . kPart where kPart keeps the k/w-side atoms and lPart the
// l/m-side atoms, each padded with identities in the other's positions.
std::pair<Term, Term> split_factor(const Term& t) {
  switch (t.kind()) {
    case TermKind::Id:
      return {t, t};
    case TermKind::K:
    case TermKind::K1:
    case TermKind::K2:
    case TermKind::W:
      return {t, Term::id(t.target())};
    case TermKind::L:
    case TermKind::L1:
    case TermKind::L2:
    case TermKind::M:
      return {Term::id(t.source()), t};
    case TermKind::Times: {
      auto [ka, la] = split_factor(t.child(0));
      auto [kb, lb] = split_factor(t.child(1));
      return {Term::times(ka, kb), Term::times(la, lb)};
    }
    case TermKind::Plus: {
      auto [ka, la] = split_factor(t.child(0));
      auto [kb, lb] = split_factor(t.child(1));
      return {Term::plus(ka, kb), Term::plus(la, lb)};
    }
    default:
      throw InternalError("split_factor on a non-factor term " + print_term(t));
  }
}

}  // namespace

std::vector<Term> factorize(const Term& t) {
  std::vector<Term> out;
  for (const Term& f : flatten_factors(desugar(t))) {
    if (is_complex_identity(f)) continue;
    if (is_k_term(f) || is_l_term(f)) {
      out.push_back(f);
      continue;
    }
    auto [k, l] = split_factor(f);
    out.push_back(std::move(l));
    out.push_back(std::move(k));
  }
  if (out.empty()) out.push_back(Term::id(t.source()));
  return out;
}

namespace {

// f . g rewritten as l . k with k on the k/w side and l on the l/m side;
// a missing part means that side is an identity and gets dropped.
struct Commuted {
  std::optional<Term> k;
  std::optional<Term> l;
};

Commuted commute(const Term& f, const Term& g) {
  if (is_complex_identity(f)) return {std::nullopt, g};
  if (is_complex_identity(g)) return {f, std::nullopt};
  if (f.kind() == TermKind::K) return {Term::k(g.source()), std::nullopt};
  if (g.kind() == TermKind::L) return {std::nullopt, Term::l(f.target())};
  if (f.kind() == TermKind::W) return {Term::w(g.source()), Term::times(g, g)};
  if (g.kind() == TermKind::M) return {Term::plus(f, f), Term::m(f.target())};
  if ((f.kind() == TermKind::K1 || f.kind() == TermKind::K2) &&
      g.kind() == TermKind::Times) {
    bool first = f.kind() == TermKind::K1;
    Term k = first ? Term::k1(g.child(0).source(), g.child(1).source())
                   : Term::k2(g.child(0).source(), g.child(1).source());
    return {std::move(k), g.child(first ? 0 : 1)};
  }
  if (f.kind() == TermKind::Plus && (g.kind() == TermKind::L1 || g.kind() == TermKind::L2)) {
    bool first = g.kind() == TermKind::L1;
    Term l = first ? Term::l1(f.child(0).target(), f.child(1).target())
                   : Term::l2(f.child(0).target(), f.child(1).target());
    return {f.child(first ? 0 : 1), std::move(l)};
  }
  if ((f.kind() == TermKind::Times && g.kind() == TermKind::Times) ||
      (f.kind() == TermKind::Plus && g.kind() == TermKind::Plus)) {
    bool product = f.kind() == TermKind::Times;
    Commuted a = commute(f.child(0), g.child(0));
    Commuted b = commute(f.child(1), g.child(1));
    Commuted out;
    if (a.k || b.k) {
      Term left = a.k ? *a.k : Term::id(g.child(0).source());
      Term right = b.k ? *b.k : Term::id(g.child(1).source());
      out.k = product ? Term::times(left, right) : Term::plus(left, right);
    }
    if (a.l || b.l) {
      Term left = a.l ? *a.l : Term::id(f.child(0).target());
      Term right = b.l ? *b.l : Term::id(f.child(1).target());
      out.l = product ? Term::times(left, right) : Term::plus(left, right);
    }
    return out;
  }
  throw InternalError("no commutation case for " + print_term(f) + " after " + print_term(g));
}

}  // namespace

KLDecomposition kl_normalize(const Term& t) {
  std::vector<Term> fs = factorize(t);
  // Resolve every adjacent k/w-side factor applied after an l/m-side one.
  for (std::size_t i = 0; i + 1 < fs.size();) {
    if (!(is_k_term(fs[i]) && !is_k_term(fs[i + 1]))) {
      ++i;
      continue;
    }
    Commuted c = commute(fs[i], fs[i + 1]);
    std::vector<Term> repl;
    if (c.l && !is_complex_identity(*c.l)) repl.push_back(std::move(*c.l));
    if (c.k && !is_complex_identity(*c.k)) repl.push_back(std::move(*c.k));
    fs.erase(fs.begin() + i, fs.begin() + i + 2);
    fs.insert(fs.begin() + i, repl.begin(), repl.end());
    if (i > 0) --i;
  }
  std::vector<Term> ks, ls;
  for (Term& f : fs) (is_k_term(f) ? ks : ls).push_back(std::move(f));
  std::optional<Term> k, l;
  for (const Term& f : ks) k = k ? Term::compose(std::move(*k), f) : f;
  if (!k) k = Term::id(t.source());
  for (const Term& f : ls) l = l ? Term::compose(std::move(*l), f) : f;
  if (!l) l = Term::id(k->target());
  return {std::move(*k), std::move(*l)};
}

}  // namespace dcat
