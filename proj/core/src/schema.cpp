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

#include "dcat/schema.hpp"

#include <algorithm>

#include "dcat/errors.hpp"
#include "dcat/oracle.hpp"

namespace dcat {
namespace {

using Instance = std::optional<std::pair<Term, Term>>;

// Metavariable sampling. Formula metavariables stay small regardless of the
// requested budget; term metavariables use it directly.
Formula mv_formula(std::mt19937_64& rng, Theory theory, std::size_t budget) {
  std::size_t b = std::min<std::size_t>(std::max<std::size_t>(budget, 1), 4);
  return random_formula(b, theory, rng);
}

Term mv_term(std::mt19937_64& rng, Theory theory, std::size_t budget) {
  return random_term(std::max<std::size_t>(budget, 1), theory, rng);
}

Term mv_term_from(const Formula& a, std::mt19937_64& rng, Theory theory,
                  std::size_t budget) {
  return random_term(a, std::max<std::size_t>(budget, 1), theory, rng);
}

// Term of the given type, or the identity completion when unreachable. The
// bool marks the fallback so callers can retarget the free endpoint.
std::pair<Term, bool> mv_term_into(const Formula& a, const Formula& b,
                                   std::mt19937_64& rng, Theory theory,
                                   std::size_t budget) {
  auto t = random_term_typed(a, b, std::max<std::size_t>(budget, 1), theory, rng);
  if (t) return {*t, false};
  return {Term::id(b), true};
}

// Wraps a hand-built left side with the entry's own forward reading, so a
// sampler failure is an implementation bug, not a silent skip.
Instance close_sample(const EquationSchema& s, Term lhs) {
  auto rhs = s.forward(lhs);
  if (!rhs)
    throw InternalError("schema " + s.name + " rejects its own sample " +
                        print_term(lhs));
  return std::make_pair(std::move(lhs), std::move(*rhs));
}

bool both_children_are(const Term& t, TermKind k) {
  return t.child(0).kind() == k && t.child(1).kind() == k;
}

std::vector<EquationSchema> build_registry() {
  std::vector<EquationSchema> reg;

  // 1_B . f = f
  {
    EquationSchema s;
    s.name = "cat1";
    s.variant = 1;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Id)
        return std::nullopt;
      return t.child(1);
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      return Term::compose(Term::id(t.target()), t);
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f = mv_term(rng, th, b);
      return close_sample(s, Term::compose(Term::id(f.target()), f));
    };
    reg.push_back(s);
  }
  // f . 1_A = f
  {
    EquationSchema s;
    s.name = "cat1";
    s.variant = 2;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(1).kind() != TermKind::Id)
        return std::nullopt;
      return t.child(0);
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      return Term::compose(t, Term::id(t.source()));
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f = mv_term(rng, th, b);
      return close_sample(s, Term::compose(f, Term::id(f.source())));
    };
    reg.push_back(s);
  }
  // h . (g . f) = (h . g) . f
  {
    EquationSchema s;
    s.name = "cat2";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(1).kind() != TermKind::Compose)
        return std::nullopt;
      const Term& gf = t.child(1);
      return Term::compose(Term::compose(t.child(0), gf.child(0)), gf.child(1));
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Compose)
        return std::nullopt;
      const Term& hg = t.child(0);
      return Term::compose(hg.child(0), Term::compose(hg.child(1), t.child(1)));
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f = mv_term(rng, th, b);
      Term g = mv_term_from(f.target(), rng, th, b);
      Term h = mv_term_from(g.target(), rng, th, b);
      return close_sample(s, Term::compose(h, Term::compose(g, f)));
    };
    reg.push_back(s);
  }
  // 1_A * 1_B = 1_{A*B}
  {
    EquationSchema s;
    s.name = "x1";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Times || !both_children_are(t, TermKind::Id))
        return std::nullopt;
      return Term::id(t.source());
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Id ||
          t.formula(0).kind() != Formula::Kind::Product)
        return std::nullopt;
      return Term::times(Term::id(t.formula(0).left()),
                         Term::id(t.formula(0).right()));
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Formula a = mv_formula(rng, th, b);
      Formula c = mv_formula(rng, th, b);
      return close_sample(s, Term::times(Term::id(a), Term::id(c)));
    };
    reg.push_back(s);
  }
  // (g1 . g2) * (f1 . f2) = (g1 * f1) . (g2 * f2)
  {
    EquationSchema s;
    s.name = "x2";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Times || !both_children_are(t, TermKind::Compose))
        return std::nullopt;
      const Term& g = t.child(0);
      const Term& f = t.child(1);
      return Term::compose(Term::times(g.child(0), f.child(0)),
                           Term::times(g.child(1), f.child(1)));
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || !both_children_are(t, TermKind::Times))
        return std::nullopt;
      const Term& o = t.child(0);
      const Term& i = t.child(1);
      return Term::times(Term::compose(o.child(0), i.child(0)),
                         Term::compose(o.child(1), i.child(1)));
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term g2 = mv_term(rng, th, b);
      Term g1 = mv_term_from(g2.target(), rng, th, b);
      Term f2 = mv_term(rng, th, b);
      Term f1 = mv_term_from(f2.target(), rng, th, b);
      return close_sample(
          s, Term::times(Term::compose(g1, g2), Term::compose(f1, f2)));
    };
    reg.push_back(s);
  }
  // k^i_{B1,B2} . (f1 * f2) = f_i . k^i_{A1,A2}
  for (int i = 1; i <= 2; ++i) {
    EquationSchema s;
    s.name = "k^i";
    s.variant = i;
    s.sesqui_ok = true;
    TermKind proj = i == 1 ? TermKind::K1 : TermKind::K2;
    s.forward = [proj, i](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != proj ||
          t.child(1).kind() != TermKind::Times)
        return std::nullopt;
      const Term& k = t.child(0);
      const Term& f1 = t.child(1).child(0);
      const Term& f2 = t.child(1).child(1);
      if (k.formula(0) != f1.target() || k.formula(1) != f2.target())
        return std::nullopt;
      const Term& fi = i == 1 ? f1 : f2;
      Term ka = i == 1 ? Term::k1(f1.source(), f2.source())
                       : Term::k2(f1.source(), f2.source());
      return Term::compose(fi, ka);
    };
    s.backward = [proj, i](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(1).kind() != proj)
        return std::nullopt;
      const Term& fi = t.child(0);
      const Term& k = t.child(1);
      // The missing factor defaults to the identity on the other component.
      if (i == 1) {
        if (fi.source() != k.formula(0)) return std::nullopt;
        const Formula& a2 = k.formula(1);
        return Term::compose(Term::k1(fi.target(), a2),
                             Term::times(fi, Term::id(a2)));
      }
      if (fi.source() != k.formula(1)) return std::nullopt;
      const Formula& a1 = k.formula(0);
      return Term::compose(Term::k2(a1, fi.target()),
                           Term::times(Term::id(a1), fi));
    };
    s.sample = [s, i](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f1 = mv_term(rng, th, b);
      Term f2 = mv_term(rng, th, b);
      Term k = i == 1 ? Term::k1(f1.target(), f2.target())
                      : Term::k2(f1.target(), f2.target());
      return close_sample(s, Term::compose(k, Term::times(f1, f2)));
    };
    reg.push_back(s);
  }
  // w_B . f = (f * f) . w_A
  {
    EquationSchema s;
    s.name = "w";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::W)
        return std::nullopt;
      const Term& f = t.child(1);
      if (t.child(0).formula(0) != f.target()) return std::nullopt;
      return Term::compose(Term::times(f, f), Term::w(f.source()));
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Times ||
          t.child(1).kind() != TermKind::W)
        return std::nullopt;
      const Term& f = t.child(0).child(0);
      if (t.child(0).child(1) != f || t.child(1).formula(0) != f.source())
        return std::nullopt;
      return Term::compose(Term::w(f.target()), f);
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f = mv_term(rng, th, b);
      return close_sample(s, Term::compose(Term::w(f.target()), f));
    };
    reg.push_back(s);
  }
  // k^i_{A,A} . w_A = 1_A
  for (int i = 1; i <= 2; ++i) {
    EquationSchema s;
    s.name = "kw1";
    s.variant = i;
    s.sesqui_ok = true;
    TermKind proj = i == 1 ? TermKind::K1 : TermKind::K2;
    s.forward = [proj](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != proj ||
          t.child(1).kind() != TermKind::W)
        return std::nullopt;
      const Term& k = t.child(0);
      const Formula& a = t.child(1).formula(0);
      if (k.formula(0) != a || k.formula(1) != a) return std::nullopt;
      return Term::id(a);
    };
    s.backward = [i](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Id) return std::nullopt;
      const Formula& a = t.formula(0);
      Term k = i == 1 ? Term::k1(a, a) : Term::k2(a, a);
      return Term::compose(k, Term::w(a));
    };
    s.sample = [s, i](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Formula a = mv_formula(rng, th, b);
      Term k = i == 1 ? Term::k1(a, a) : Term::k2(a, a);
      return close_sample(s, Term::compose(k, Term::w(a)));
    };
    reg.push_back(s);
  }
  // (k^1_{A,B} * k^2_{A,B}) . w_{A*B} = 1_{A*B}
  {
    EquationSchema s;
    s.name = "kw2";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Times ||
          t.child(1).kind() != TermKind::W)
        return std::nullopt;
      const Term& p1 = t.child(0).child(0);
      const Term& p2 = t.child(0).child(1);
      if (p1.kind() != TermKind::K1 || p2.kind() != TermKind::K2)
        return std::nullopt;
      if (p1.formula(0) != p2.formula(0) || p1.formula(1) != p2.formula(1))
        return std::nullopt;
      Formula ab = Formula::product(p1.formula(0), p1.formula(1));
      if (t.child(1).formula(0) != ab) return std::nullopt;
      return Term::id(ab);
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Id ||
          t.formula(0).kind() != Formula::Kind::Product)
        return std::nullopt;
      const Formula& a = t.formula(0).left();
      const Formula& c = t.formula(0).right();
      return Term::compose(Term::times(Term::k1(a, c), Term::k2(a, c)),
                           Term::w(t.formula(0)));
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Formula a = mv_formula(rng, th, b);
      Formula c = mv_formula(rng, th, b);
      return close_sample(
          s, Term::compose(Term::times(Term::k1(a, c), Term::k2(a, c)),
                           Term::w(Formula::product(a, c))));
    };
    reg.push_back(s);
  }
  // f = k_A for every f : A -> I (type-directed, no backward reading)
  {
    EquationSchema s;
    s.name = "k";
    s.variant = 0;
    s.sesqui_ok = false;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() == TermKind::K || t.target().kind() != Formula::Kind::ConstI)
        return std::nullopt;
      return Term::k(t.source());
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      if (th == Theory::Sesquicartesian) return std::nullopt;
      Term g = mv_term(rng, th, b);
      return close_sample(s, Term::compose(Term::k(g.target()), g));
    };
    reg.push_back(s);
  }
  // k^1_{O,O} = k^2_{O,O}
  {
    EquationSchema s;
    s.name = "kO";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::K1 ||
          t.formula(0).kind() != Formula::Kind::ConstO ||
          t.formula(1).kind() != Formula::Kind::ConstO)
        return std::nullopt;
      return Term::k2(Formula::const_o(), Formula::const_o());
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::K2 ||
          t.formula(0).kind() != Formula::Kind::ConstO ||
          t.formula(1).kind() != Formula::Kind::ConstO)
        return std::nullopt;
      return Term::k1(Formula::const_o(), Formula::const_o());
    };
    s.sample = [s](std::mt19937_64&, Theory, std::size_t) -> Instance {
      return close_sample(s, Term::k1(Formula::const_o(), Formula::const_o()));
    };
    reg.push_back(s);
  }
  // 1_A + 1_B = 1_{A+B}
  {
    EquationSchema s;
    s.name = "+1";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Plus || !both_children_are(t, TermKind::Id))
        return std::nullopt;
      return Term::id(t.source());
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Id || t.formula(0).kind() != Formula::Kind::Sum)
        return std::nullopt;
      return Term::plus(Term::id(t.formula(0).left()),
                        Term::id(t.formula(0).right()));
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Formula a = mv_formula(rng, th, b);
      Formula c = mv_formula(rng, th, b);
      return close_sample(s, Term::plus(Term::id(a), Term::id(c)));
    };
    reg.push_back(s);
  }
  // (g1 . g2) + (f1 . f2) = (g1 + f1) . (g2 + f2)
  {
    EquationSchema s;
    s.name = "+2";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Plus || !both_children_are(t, TermKind::Compose))
        return std::nullopt;
      const Term& g = t.child(0);
      const Term& f = t.child(1);
      return Term::compose(Term::plus(g.child(0), f.child(0)),
                           Term::plus(g.child(1), f.child(1)));
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || !both_children_are(t, TermKind::Plus))
        return std::nullopt;
      const Term& o = t.child(0);
      const Term& i = t.child(1);
      return Term::plus(Term::compose(o.child(0), i.child(0)),
                        Term::compose(o.child(1), i.child(1)));
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term g2 = mv_term(rng, th, b);
      Term g1 = mv_term_from(g2.target(), rng, th, b);
      Term f2 = mv_term(rng, th, b);
      Term f1 = mv_term_from(f2.target(), rng, th, b);
      return close_sample(
          s, Term::plus(Term::compose(g1, g2), Term::compose(f1, f2)));
    };
    reg.push_back(s);
  }
  // (f1 + f2) . l^i_{A1,A2} = l^i_{B1,B2} . f_i
  for (int i = 1; i <= 2; ++i) {
    EquationSchema s;
    s.name = "l^i";
    s.variant = i;
    s.sesqui_ok = true;
    TermKind inj = i == 1 ? TermKind::L1 : TermKind::L2;
    s.forward = [inj, i](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Plus ||
          t.child(1).kind() != inj)
        return std::nullopt;
      const Term& f1 = t.child(0).child(0);
      const Term& f2 = t.child(0).child(1);
      const Term& l = t.child(1);
      if (l.formula(0) != f1.source() || l.formula(1) != f2.source())
        return std::nullopt;
      const Term& fi = i == 1 ? f1 : f2;
      Term lb = i == 1 ? Term::l1(f1.target(), f2.target())
                       : Term::l2(f1.target(), f2.target());
      return Term::compose(lb, fi);
    };
    s.backward = [inj, i](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != inj)
        return std::nullopt;
      const Term& l = t.child(0);
      const Term& fi = t.child(1);
      if (i == 1) {
        if (fi.target() != l.formula(0)) return std::nullopt;
        const Formula& b2 = l.formula(1);
        return Term::compose(Term::plus(fi, Term::id(b2)),
                             Term::l1(fi.source(), b2));
      }
      if (fi.target() != l.formula(1)) return std::nullopt;
      const Formula& b1 = l.formula(0);
      return Term::compose(Term::plus(Term::id(b1), fi),
                           Term::l2(b1, fi.source()));
    };
    s.sample = [s, i](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f1 = mv_term(rng, th, b);
      Term f2 = mv_term(rng, th, b);
      Term l = i == 1 ? Term::l1(f1.source(), f2.source())
                      : Term::l2(f1.source(), f2.source());
      return close_sample(s, Term::compose(Term::plus(f1, f2), l));
    };
    reg.push_back(s);
  }
  // f . m_A = m_B . (f + f)
  {
    EquationSchema s;
    s.name = "m";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(1).kind() != TermKind::M)
        return std::nullopt;
      const Term& f = t.child(0);
      if (t.child(1).formula(0) != f.source()) return std::nullopt;
      return Term::compose(Term::m(f.target()), Term::plus(f, f));
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::M ||
          t.child(1).kind() != TermKind::Plus)
        return std::nullopt;
      const Term& f = t.child(1).child(0);
      if (t.child(1).child(1) != f || t.child(0).formula(0) != f.target())
        return std::nullopt;
      return Term::compose(f, Term::m(f.source()));
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f = mv_term(rng, th, b);
      return close_sample(s, Term::compose(f, Term::m(f.source())));
    };
    reg.push_back(s);
  }
  // m_A . l^i_{A,A} = 1_A
  for (int i = 1; i <= 2; ++i) {
    EquationSchema s;
    s.name = "lm1";
    s.variant = i;
    s.sesqui_ok = true;
    TermKind inj = i == 1 ? TermKind::L1 : TermKind::L2;
    s.forward = [inj](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::M ||
          t.child(1).kind() != inj)
        return std::nullopt;
      const Formula& a = t.child(0).formula(0);
      if (t.child(1).formula(0) != a || t.child(1).formula(1) != a)
        return std::nullopt;
      return Term::id(a);
    };
    s.backward = [i](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Id) return std::nullopt;
      const Formula& a = t.formula(0);
      Term l = i == 1 ? Term::l1(a, a) : Term::l2(a, a);
      return Term::compose(Term::m(a), l);
    };
    s.sample = [s, i](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Formula a = mv_formula(rng, th, b);
      Term l = i == 1 ? Term::l1(a, a) : Term::l2(a, a);
      return close_sample(s, Term::compose(Term::m(a), l));
    };
    reg.push_back(s);
  }
  // m_{A+B} . (l^1_{A,B} + l^2_{A,B}) = 1_{A+B}
  {
    EquationSchema s;
    s.name = "lm2";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::M ||
          t.child(1).kind() != TermKind::Plus)
        return std::nullopt;
      const Term& i1 = t.child(1).child(0);
      const Term& i2 = t.child(1).child(1);
      if (i1.kind() != TermKind::L1 || i2.kind() != TermKind::L2)
        return std::nullopt;
      if (i1.formula(0) != i2.formula(0) || i1.formula(1) != i2.formula(1))
        return std::nullopt;
      Formula ab = Formula::sum(i1.formula(0), i1.formula(1));
      if (t.child(0).formula(0) != ab) return std::nullopt;
      return Term::id(ab);
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Id || t.formula(0).kind() != Formula::Kind::Sum)
        return std::nullopt;
      const Formula& a = t.formula(0).left();
      const Formula& c = t.formula(0).right();
      return Term::compose(Term::m(t.formula(0)),
                           Term::plus(Term::l1(a, c), Term::l2(a, c)));
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Formula a = mv_formula(rng, th, b);
      Formula c = mv_formula(rng, th, b);
      return close_sample(
          s, Term::compose(Term::m(Formula::sum(a, c)),
                           Term::plus(Term::l1(a, c), Term::l2(a, c))));
    };
    reg.push_back(s);
  }
  // f = l_A for every f : O -> A (type-directed, no backward reading)
  {
    EquationSchema s;
    s.name = "l";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() == TermKind::L || t.source().kind() != Formula::Kind::ConstO)
        return std::nullopt;
      return Term::l(t.target());
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Formula a = mv_formula(rng, th, b);
      Term g = mv_term_from(a, rng, th, b);
      return close_sample(s, Term::compose(g, Term::l(a)));
    };
    reg.push_back(s);
  }
  // l^1_{I,I} = l^2_{I,I}
  {
    EquationSchema s;
    s.name = "lI";
    s.variant = 0;
    s.sesqui_ok = false;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::L1 ||
          t.formula(0).kind() != Formula::Kind::ConstI ||
          t.formula(1).kind() != Formula::Kind::ConstI)
        return std::nullopt;
      return Term::l2(Formula::const_i(), Formula::const_i());
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::L2 ||
          t.formula(0).kind() != Formula::Kind::ConstI ||
          t.formula(1).kind() != Formula::Kind::ConstI)
        return std::nullopt;
      return Term::l1(Formula::const_i(), Formula::const_i());
    };
    s.sample = [s](std::mt19937_64&, Theory th, std::size_t) -> Instance {
      if (th == Theory::Sesquicartesian) return std::nullopt;
      return close_sample(s, Term::l1(Formula::const_i(), Formula::const_i()));
    };
    reg.push_back(s);
  }
  // g . K^i f = K^i (g . f), on the unfolded reading g.(f.k^i) = (g.f).k^i
  for (int i = 1; i <= 2; ++i) {
    EquationSchema s;
    s.name = "K1";
    s.variant = i;
    s.sesqui_ok = true;
    TermKind proj = i == 1 ? TermKind::K1 : TermKind::K2;
    s.forward = [proj](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(1).kind() != TermKind::Compose ||
          t.child(1).child(1).kind() != proj)
        return std::nullopt;
      const Term& fk = t.child(1);
      return Term::compose(Term::compose(t.child(0), fk.child(0)), fk.child(1));
    };
    s.backward = [proj](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Compose ||
          t.child(1).kind() != proj)
        return std::nullopt;
      const Term& gf = t.child(0);
      return Term::compose(gf.child(0), Term::compose(gf.child(1), t.child(1)));
    };
    s.sample = [s, i](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f = mv_term(rng, th, b);
      Formula c = mv_formula(rng, th, b);
      Term k = i == 1 ? Term::k1(f.source(), c) : Term::k2(c, f.source());
      Term g = mv_term_from(f.target(), rng, th, b);
      return close_sample(s, Term::compose(g, Term::compose(f, k)));
    };
    reg.push_back(s);
  }
  // K^i g . <f1, f2> = g . f_i, on the unfolded pairing (f1 * f2) . w
  for (int i = 1; i <= 2; ++i) {
    EquationSchema s;
    s.name = "K2";
    s.variant = i;
    s.sesqui_ok = true;
    TermKind proj = i == 1 ? TermKind::K1 : TermKind::K2;
    s.forward = [proj, i](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Compose ||
          t.child(1).kind() != TermKind::Compose)
        return std::nullopt;
      const Term& gk = t.child(0);
      const Term& pw = t.child(1);
      if (gk.child(1).kind() != proj || pw.child(0).kind() != TermKind::Times ||
          pw.child(1).kind() != TermKind::W)
        return std::nullopt;
      const Term& f1 = pw.child(0).child(0);
      const Term& f2 = pw.child(0).child(1);
      const Formula& c = pw.child(1).formula(0);
      if (f1.source() != c || f2.source() != c) return std::nullopt;
      if (gk.child(1).formula(0) != f1.target() ||
          gk.child(1).formula(1) != f2.target())
        return std::nullopt;
      return Term::compose(gk.child(0), i == 1 ? f1 : f2);
    };
    s.backward = [i](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose) return std::nullopt;
      const Term& g = t.child(0);
      const Term& fi = t.child(1);
      const Formula& c = fi.source();
      // The dropped pairing component defaults to the identity on the source.
      Term k = i == 1 ? Term::k1(fi.target(), c) : Term::k2(c, fi.target());
      Term prod = i == 1 ? Term::times(fi, Term::id(c))
                         : Term::times(Term::id(c), fi);
      return Term::compose(Term::compose(g, k),
                           Term::compose(prod, Term::w(c)));
    };
    s.sample = [s, i](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Formula c = mv_formula(rng, th, b);
      Term f1 = mv_term_from(c, rng, th, b);
      Term f2 = mv_term_from(c, rng, th, b);
      Term k = i == 1 ? Term::k1(f1.target(), f2.target())
                      : Term::k2(f1.target(), f2.target());
      Term g = mv_term_from(i == 1 ? f1.target() : f2.target(), rng, th, b);
      return close_sample(
          s, Term::compose(Term::compose(g, k),
                           Term::compose(Term::times(f1, f2), Term::w(c))));
    };
    reg.push_back(s);
  }
  // <g1, g2> . f = <g1 . f, g2 . f>
  {
    EquationSchema s;
    s.name = "K3";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Compose)
        return std::nullopt;
      const Term& pw = t.child(0);
      const Term& f = t.child(1);
      if (pw.child(0).kind() != TermKind::Times ||
          pw.child(1).kind() != TermKind::W)
        return std::nullopt;
      const Term& g1 = pw.child(0).child(0);
      const Term& g2 = pw.child(0).child(1);
      const Formula& c = pw.child(1).formula(0);
      if (g1.source() != c || g2.source() != c || f.target() != c)
        return std::nullopt;
      return Term::compose(
          Term::times(Term::compose(g1, f), Term::compose(g2, f)),
          Term::w(f.source()));
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Times ||
          t.child(1).kind() != TermKind::W)
        return std::nullopt;
      const Term& c1 = t.child(0).child(0);
      const Term& c2 = t.child(0).child(1);
      if (c1.kind() != TermKind::Compose || c2.kind() != TermKind::Compose)
        return std::nullopt;
      const Term& f = c1.child(1);
      if (c2.child(1) != f || t.child(1).formula(0) != f.source())
        return std::nullopt;
      return Term::compose(
          Term::compose(Term::times(c1.child(0), c2.child(0)),
                        Term::w(f.target())),
          f);
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f = mv_term(rng, th, b);
      Term g1 = mv_term_from(f.target(), rng, th, b);
      Term g2 = mv_term_from(f.target(), rng, th, b);
      return close_sample(
          s, Term::compose(Term::compose(Term::times(g1, g2),
                                         Term::w(f.target())),
                           f));
    };
    reg.push_back(s);
  }
  // L^i g . f = L^i (g . f), on the unfolded reading (l^i.g).f = l^i.(g.f)
  for (int i = 1; i <= 2; ++i) {
    EquationSchema s;
    s.name = "L1";
    s.variant = i;
    s.sesqui_ok = true;
    TermKind inj = i == 1 ? TermKind::L1 : TermKind::L2;
    s.forward = [inj](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Compose ||
          t.child(0).child(0).kind() != inj)
        return std::nullopt;
      const Term& lg = t.child(0);
      return Term::compose(lg.child(0), Term::compose(lg.child(1), t.child(1)));
    };
    s.backward = [inj](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != inj ||
          t.child(1).kind() != TermKind::Compose)
        return std::nullopt;
      const Term& gf = t.child(1);
      return Term::compose(Term::compose(t.child(0), gf.child(0)), gf.child(1));
    };
    s.sample = [s, i](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f = mv_term(rng, th, b);
      Term g = mv_term_from(f.target(), rng, th, b);
      Formula c = mv_formula(rng, th, b);
      Term l = i == 1 ? Term::l1(g.target(), c) : Term::l2(c, g.target());
      return close_sample(s, Term::compose(Term::compose(l, g), f));
    };
    reg.push_back(s);
  }
  // [g1, g2] . L^i f = g_i . f, on the unfolded copairing m . (g1 + g2)
  for (int i = 1; i <= 2; ++i) {
    EquationSchema s;
    s.name = "L2";
    s.variant = i;
    s.sesqui_ok = true;
    TermKind inj = i == 1 ? TermKind::L1 : TermKind::L2;
    s.forward = [inj, i](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::Compose ||
          t.child(1).kind() != TermKind::Compose)
        return std::nullopt;
      const Term& mp = t.child(0);
      const Term& lf = t.child(1);
      if (mp.child(0).kind() != TermKind::M ||
          mp.child(1).kind() != TermKind::Plus || lf.child(0).kind() != inj)
        return std::nullopt;
      const Term& g1 = mp.child(1).child(0);
      const Term& g2 = mp.child(1).child(1);
      const Formula& d = mp.child(0).formula(0);
      if (g1.target() != d || g2.target() != d) return std::nullopt;
      if (lf.child(0).formula(0) != g1.source() ||
          lf.child(0).formula(1) != g2.source())
        return std::nullopt;
      return Term::compose(i == 1 ? g1 : g2, lf.child(1));
    };
    s.backward = [i](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose) return std::nullopt;
      const Term& g = t.child(0);
      const Term& f = t.child(1);
      const Formula& d = g.target();
      // The dropped copairing component defaults to the identity on the target.
      Term l = i == 1 ? Term::l1(g.source(), d) : Term::l2(d, g.source());
      Term sum = i == 1 ? Term::plus(g, Term::id(d))
                        : Term::plus(Term::id(d), g);
      return Term::compose(Term::compose(Term::m(d), sum),
                           Term::compose(l, f));
    };
    s.sample = [s, i](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f = mv_term(rng, th, b);
      Term gi = mv_term_from(f.target(), rng, th, b);
      Formula other = mv_formula(rng, th, b);
      auto [go, fell_back] = mv_term_into(other, gi.target(), rng, th, b);
      if (fell_back) other = gi.target();
      Term l = i == 1 ? Term::l1(f.target(), other)
                      : Term::l2(other, f.target());
      Term sum = i == 1 ? Term::plus(gi, go) : Term::plus(go, gi);
      return close_sample(
          s, Term::compose(Term::compose(Term::m(gi.target()), sum),
                           Term::compose(l, f)));
    };
    reg.push_back(s);
  }
  // g . [f1, f2] = [g . f1, g . f2]
  {
    EquationSchema s;
    s.name = "L3";
    s.variant = 0;
    s.sesqui_ok = true;
    s.forward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(1).kind() != TermKind::Compose)
        return std::nullopt;
      const Term& g = t.child(0);
      const Term& mp = t.child(1);
      if (mp.child(0).kind() != TermKind::M ||
          mp.child(1).kind() != TermKind::Plus)
        return std::nullopt;
      const Term& f1 = mp.child(1).child(0);
      const Term& f2 = mp.child(1).child(1);
      const Formula& c = mp.child(0).formula(0);
      if (f1.target() != c || f2.target() != c || g.source() != c)
        return std::nullopt;
      return Term::compose(
          Term::m(g.target()),
          Term::plus(Term::compose(g, f1), Term::compose(g, f2)));
    };
    s.backward = [](const Term& t) -> std::optional<Term> {
      if (t.kind() != TermKind::Compose || t.child(0).kind() != TermKind::M ||
          t.child(1).kind() != TermKind::Plus)
        return std::nullopt;
      const Term& c1 = t.child(1).child(0);
      const Term& c2 = t.child(1).child(1);
      if (c1.kind() != TermKind::Compose || c2.kind() != TermKind::Compose)
        return std::nullopt;
      const Term& g = c1.child(0);
      if (c2.child(0) != g || t.child(0).formula(0) != g.target())
        return std::nullopt;
      const Term& f1 = c1.child(1);
      const Term& f2 = c2.child(1);
      if (f1.target() != f2.target()) return std::nullopt;
      return Term::compose(g, Term::compose(Term::m(f1.target()),
                                            Term::plus(f1, f2)));
    };
    s.sample = [s](std::mt19937_64& rng, Theory th, std::size_t b) -> Instance {
      Term f1 = mv_term(rng, th, b);
      Formula other = mv_formula(rng, th, b);
      auto [f2, fell_back] = mv_term_into(other, f1.target(), rng, th, b);
      (void)fell_back;
      Term g = mv_term_from(f1.target(), rng, th, b);
      return close_sample(
          s, Term::compose(g, Term::compose(Term::m(f1.target()),
                                            Term::plus(f1, f2))));
    };
    reg.push_back(s);
  }
  return reg;
}

}  // namespace

const std::vector<EquationSchema>& schema_registry() {
  static const std::vector<EquationSchema> reg = build_registry();
  return reg;
}

std::vector<std::string> schema_names() {
  std::vector<std::string> names;
  for (const auto& s : schema_registry())
    if (std::find(names.begin(), names.end(), s.name) == names.end())
      names.push_back(s.name);
  return names;
}

const EquationSchema* find_schema(const std::string& name, int variant) {
  for (const auto& s : schema_registry())
    if (s.name == name && s.variant == variant) return &s;
  return nullptr;
}

}  // namespace dcat
