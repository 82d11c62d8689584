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

#include "dcat/decide.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "json.hpp"

#include "dcat/classify.hpp"
#include "dcat/errors.hpp"
#include "dcat/graph.hpp"

namespace dcat {

const char* verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Equal:
      return "equal";
    case VerdictKind::NotEqual:
      return "not-equal";
    case VerdictKind::Unknown:
      return "unknown";
  }
  throw InternalError("verdict_name: bad kind");
}

Verdict decide_equal(const Term& f, const Term& g, Theory theory) {
  check_theory(f, theory);
  check_theory(g, theory);
  if (f.source() != g.source() || f.target() != g.target()) {
    throw TypeMismatch("cannot compare " + print_formula(f.source()) + " -> " +
                       print_formula(f.target()) + " with " + print_formula(g.source()) +
                       " -> " + print_formula(g.target()));
  }
  Relation gf = graph_of(f);
  Relation gg = graph_of(g);
  if (gf != gg) return {VerdictKind::NotEqual, ""};
  if (theory == Theory::Sesquicartesian) return {VerdictKind::Equal, "sesqui-coherence"};
  if (gf.empty()) return {VerdictKind::Equal, "empty-graphs"};
  if (is_o_normal(f.source())) return {VerdictKind::Equal, "o-normal-source"};
  if (is_i_normal(f.target())) return {VerdictKind::Equal, "i-normal-target"};
  return {VerdictKind::Unknown,
          "graphs agree, but the source is not O-normal and the target is not I-normal, "
          "where dicartesian equality is undecided"};
}

std::string verdict_json(const Verdict& v, const Relation& graph_f, const Relation& graph_g) {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_name(v.kind);
  j["justification"] = v.justification;
  j["graph_f"] = nlohmann::ordered_json::parse(to_json(graph_f));
  j["graph_g"] = nlohmann::ordered_json::parse(to_json(graph_g));
  return j.dump();
}

namespace {

void check_formula_theory(const Formula& a, Theory theory) {
  if (theory == Theory::Sesquicartesian && contains_const_i(a)) {
    throw TheoryViolation("I does not exist sesquicartesianly: " + print_formula(a));
  }
}

using HomsetMemo = std::map<std::string, std::vector<Term>>;

const std::vector<Term>& enum_rec(const Formula& a, const Formula& b, Theory theory,
                                  HomsetMemo& memo) {
  std::string key = print_formula(a) + " |- " + print_formula(b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<Term> out;
  if (a == b) out.push_back(Term::id(a));
  if (theory == Theory::Dicartesian && b.kind() == Formula::Kind::ConstI) {
    out.push_back(Term::k(a));
  }
  if (a.kind() == Formula::Kind::ConstO) out.push_back(Term::l(b));
  if (a.kind() == Formula::Kind::Product) {
    for (const Term& t : enum_rec(a.left(), b, theory, memo)) {
      out.push_back(Term::gk1(a.right(), t));
    }
    for (const Term& t : enum_rec(a.right(), b, theory, memo)) {
      out.push_back(Term::gk2(a.left(), t));
    }
  }
  if (b.kind() == Formula::Kind::Sum) {
    for (const Term& t : enum_rec(a, b.left(), theory, memo)) {
      out.push_back(Term::gl1(b.right(), t));
    }
    for (const Term& t : enum_rec(a, b.right(), theory, memo)) {
      out.push_back(Term::gl2(b.left(), t));
    }
  }
  if (b.kind() == Formula::Kind::Product) {
    for (const Term& t1 : enum_rec(a, b.left(), theory, memo)) {
      for (const Term& t2 : enum_rec(a, b.right(), theory, memo)) {
        out.push_back(Term::pair(t1, t2));
      }
    }
  }
  if (a.kind() == Formula::Kind::Sum) {
    for (const Term& t1 : enum_rec(a.left(), b, theory, memo)) {
      for (const Term& t2 : enum_rec(a.right(), b, theory, memo)) {
        out.push_back(Term::copair(t1, t2));
      }
    }
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

std::vector<Term> enumerate_cut_free(const Formula& a, const Formula& b, Theory theory) {
  check_formula_theory(a, theory);
  check_formula_theory(b, theory);
  HomsetMemo memo;
  return enum_rec(a, b, theory, memo);
}

Homset enumerate_homset(const Formula& a, const Formula& b, Theory theory) {
  Homset out{{}, true};
  for (const Term& t : enumerate_cut_free(a, b, theory)) {
    Relation r = graph_of(t);
    bool seen = std::any_of(out.classes.begin(), out.classes.end(),
                            [&](const HomsetClass& c) { return c.graph == r; });
    if (!seen) out.classes.push_back({std::move(r), t});
  }
  if (theory == Theory::Dicartesian) {
    bool all_empty = std::all_of(out.classes.begin(), out.classes.end(),
                                 [](const HomsetClass& c) { return c.graph.empty(); });
    out.certified_exact = all_empty || is_o_normal(a) || is_i_normal(b);
  }
  return out;
}

namespace {

Formula obj_tower_o(Formula x, std::size_t n) {
  Formula out = Formula::product(std::move(x), Formula::const_o());
  for (std::size_t i = 0; i < n; ++i) {
    out = Formula::product(Formula::sum(std::move(out), Formula::const_i()),
                           Formula::const_o());
  }
  return out;
}

Formula obj_tower_i(Formula x, std::size_t n) {
  Formula out = Formula::sum(std::move(x), Formula::const_i());
  for (std::size_t i = 0; i < n; ++i) {
    out = Formula::sum(Formula::product(std::move(out), Formula::const_o()),
                       Formula::const_i());
  }
  return out;
}

Term arr_tower_o(Term h, std::size_t n) {
  Term out = Term::times(std::move(h), Term::id(Formula::const_o()));
  for (std::size_t i = 0; i < n; ++i) {
    out = Term::times(Term::plus(std::move(out), Term::id(Formula::const_i())),
                      Term::id(Formula::const_o()));
  }
  return out;
}

Term arr_tower_i(Term h, std::size_t n) {
  Term out = Term::plus(std::move(h), Term::id(Formula::const_i()));
  for (std::size_t i = 0; i < n; ++i) {
    out = Term::plus(Term::times(std::move(out), Term::id(Formula::const_o())),
                     Term::id(Formula::const_i()));
  }
  return out;
}

}  // namespace

CounterexamplePair counterexample_family(const Formula& a, std::size_t n) {
  Formula i = Formula::const_i();
  Formula o = Formula::const_o();
  Term f = Term::compose(
      arr_tower_i(Term::times(Term::l1(a, i), Term::id(o)), n),
      Term::k1(obj_tower_i(Formula::product(a, o), n), o));
  Term g = Term::compose(
      Term::l1(obj_tower_o(Formula::sum(a, i), n), i),
      arr_tower_o(Term::plus(Term::k1(a, o), Term::id(i)), n));
  return {std::move(f), std::move(g)};
}

}  // namespace dcat
