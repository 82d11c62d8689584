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

// Release gate: every criterion below must print PASS. Each criterion is
// independent, timed, and bounded; a criterion also fails by exceeding its
// time limit or by throwing.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "dcat/classify.hpp"
#include "dcat/decide.hpp"
#include "dcat/graph.hpp"
#include "dcat/oracle.hpp"
#include "dcat/parse.hpp"
#include "dcat/relation.hpp"
#include "dcat/rewrite.hpp"
#include "dcat/schema.hpp"
#include "dcat/term.hpp"

namespace {

using namespace dcat;

Formula F(const char* text) { return parse_formula(text); }
Term T(const char* text, Theory th = Theory::Dicartesian) {
  return typecheck(parse_term(text), th);
}

struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

void c01_golden_values(Checker& c) {
  c.expect(letter_count(F("(p * (q + p)) + (I * p)")) == 4, "letter count of the four-letter formula");

  c.expect(graph_of(T("id{O * p}")) == Relation(1, 1, {{0, 0}}),
           "graph of id{O * p}");
  c.expect(graph_of(T("l{O * p} . k1{O, p}")) == Relation(1, 1),
           "graph of l{O * p} . k1{O, p}");

  auto fs = factorize(T("(k1{a, b} * l1{c, d}) + (w{e} + l{f})"));
  c.expect(fs.size() == 2, "two factors");
  if (fs.size() == 2) {
    c.expect(fs[0] == T("(id{a} * l1{c, d}) + (id{e * e} + l{f})"),
             "outer factor of the two-factor split");
    c.expect(fs[1] == T("(k1{a, b} * id{c}) + (w{e} + id{O})"),
             "inner factor of the two-factor split");
  }
}

void c02_graph_functoriality(Checker& c) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Theory th = i % 2 ? Theory::Dicartesian : Theory::Sesquicartesian;
    Term f = random_term(12, th, i);
    Term g = random_term(f.target(), 12, th, i + 1000000);
    Term gf = Term::compose(g, f);
    if (graph_of(gf) != compose(graph_of(g), graph_of(f))) {
      c.expect(false, "functoriality breaks at seed " + std::to_string(i) +
                          ": " + print_term(gf));
      return;
    }
    ++checked;
  }
  c.expect(checked == 1000, "checked 1000 composable pairs");
}

void c03_equation_soundness(Checker& c) {
  std::size_t schemas = 0;
  for (const auto& s : schema_registry()) {
    ++schemas;
    std::mt19937_64 rng(1000 + schemas);
    for (int i = 0; i < 100; ++i) {
      auto inst = s.sample(rng, Theory::Dicartesian, 4);
      if (!inst) {
        c.expect(false, s.name + " failed to sample");
        return;
      }
      if (graph_of(inst->first) != graph_of(inst->second)) {
        c.expect(false, s.name + " instance with unequal graphs: " +
                            print_term(inst->first) + " vs " +
                            print_term(inst->second));
        return;
      }
    }
  }
  c.expect(schemas == 33, "all schema variants sampled");
}

void c04_cut_elimination(Checker& c) {
  for (Theory th : {Theory::Sesquicartesian, Theory::Dicartesian}) {
    for (const Term& t : corpus::exhaustive_terms(th)) {
      std::vector<CutStep> steps;
      Term r = cut_eliminate_traced(t, steps);
      bool ok = is_cut_free(r) && is_gentzen_term(r) &&
                r.source() == t.source() && r.target() == t.target() &&
                graph_of(r) == graph_of(t);
      for (const CutStep& s : steps) {
        for (std::size_t d : s.residual_degrees) ok = ok && d < s.cut_degree;
      }
      if (!ok) {
        c.expect(false, "cut elimination misbehaves on " + print_term(t));
        return;
      }
    }
  }
}

void c05_kl_normalization(Checker& c) {
  auto pin = kl_normalize(T("w{p} . m{p}"));
  c.expect(pin.kPart == T("w{p + p}") && pin.lPart == T("m{p} * m{p}"),
           "two-sided diagonal-codiagonal split");
  for (Theory th : {Theory::Sesquicartesian, Theory::Dicartesian}) {
    for (const Term& t : corpus::exhaustive_terms(th)) {
      KLDecomposition kl = kl_normalize(t);
      Term whole = Term::compose(kl.lPart, kl.kPart);
      bool ok = is_k_term(kl.kPart) && is_l_term(kl.lPart) &&
                whole.source() == t.source() && whole.target() == t.target() &&
                graph_of(whole) == graph_of(t);
      if (!ok) {
        c.expect(false, "normalization misbehaves on " + print_term(t));
        return;
      }
    }
  }
}

void c06_homset_counts(Checker& c) {
  auto count = [&](const char* a, const char* b) {
    return enumerate_homset(F(a), F(b), Theory::Sesquicartesian).classes.size();
  };
  c.expect(count("p", "p") == 1, "Hom(p, p)");
  c.expect(count("p * p", "p") == 2, "Hom(p * p, p)");
  c.expect(count("p", "p + p") == 2, "Hom(p, p + p)");
  c.expect(count("O * p", "O * p") == 2, "Hom(O * p, O * p)");
  c.expect(enumerate_homset(F("O * p"), F("O * p"), Theory::Sesquicartesian)
               .certified_exact,
           "counts certified exact");
}

void c07_small_scale_faithfulness(Checker& c) {
  auto bySize = corpus::formulas_by_size(5, Theory::Sesquicartesian);
  std::vector<Formula> formulas;
  for (const auto& bucket : bySize) {
    formulas.insert(formulas.end(), bucket.begin(), bucket.end());
  }
  std::size_t pairs = 0;
  for (const Formula& a : formulas) {
    for (const Formula& b : formulas) {
      if (formula_size(a) + formula_size(b) > 7) continue;
      ++pairs;
      FaithfulnessReport rep =
          verify_faithfulness_small(a, b, Theory::Sesquicartesian);
      if (!rep.partitions_match || rep.budget_exhausted ||
          !rep.mixed_pairs.empty() || !rep.unresolved_pairs.empty()) {
        c.expect(false, "hom-set " + print_formula(a) + " -> " +
                            print_formula(b) + " not certified: " + to_json(rep));
        return;
      }
    }
  }
  c.expect(pairs == 356, "all 356 formula pairs visited, none exhausted");
}

void c08_undecided_family(Checker& c) {
  Formula src = Formula::product(F("p"), Formula::const_o());
  Formula tgt = Formula::sum(F("p"), Formula::const_i());
  for (std::size_t n = 0; n <= 3; ++n) {
    src = Formula::product(Formula::sum(src, Formula::const_i()), Formula::const_o());
    tgt = Formula::sum(Formula::product(tgt, Formula::const_o()), Formula::const_i());
    auto [f, g] = counterexample_family(F("p"), n);
    std::string at = " at n = " + std::to_string(n);
    c.expect(f.source() == src && g.source() == src, "source formula" + at);
    c.expect(f.target() == tgt && g.target() == tgt, "target formula" + at);
    c.expect(f != g, "members structurally distinct" + at);
    c.expect(graph_of(f) == graph_of(g), "equal graphs" + at);
    c.expect(!is_o_normal(src), "source escapes the O-normal condition" + at);
    c.expect(!is_i_normal(tgt), "target escapes the I-normal condition" + at);
    c.expect(decide_equal(f, g, Theory::Dicartesian).kind == VerdictKind::Unknown,
             "verdict undecided" + at);
  }
}

void c09_restricted_verdicts(Checker& c) {
  Verdict v = decide_equal(T("(m{p} * m{p}) . w{p + p}"),
                           T("m{p * p} . (w{p} + w{p})"), Theory::Dicartesian);
  c.expect(v.kind == VerdictKind::Equal && v.justification == "o-normal-source",
           "the two normal forms of the split diagonal are identified");

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Formula a = random_constant_formula(9, Theory::Dicartesian, seed);
    ConstClass cls = classify_constant(a, Theory::Dicartesian);
    Formula pole =
        cls.kind == ConstKind::O ? Formula::const_o() : Formula::const_i();
    Verdict back = decide_equal(Term::compose(cls.backward, cls.forward),
                                Term::id(a), Theory::Dicartesian);
    Verdict fwd = decide_equal(Term::compose(cls.forward, cls.backward),
                               Term::id(pole), Theory::Dicartesian);
    bool ok = back.kind == VerdictKind::Equal && fwd.kind == VerdictKind::Equal &&
              back.justification == "empty-graphs" &&
              fwd.justification == "empty-graphs";
    if (!ok) {
      c.expect(false, "witness roundtrip not identified on " + print_formula(a) +
                          " (seed " + std::to_string(seed) + ")");
      return;
    }
  }
}

void c10_no_arrow_i_to_o(Checker& c) {
  c.expect(enumerate_cut_free(F("I"), F("O"), Theory::Dicartesian).empty(),
           "no cut-free term of type I -> O");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden-values", 1.0, c01_golden_values},
      {2, "graph-functoriality", 10.0, c02_graph_functoriality},
      {3, "equation-soundness", 30.0, c03_equation_soundness},
      {4, "cut-elimination", 60.0, c04_cut_elimination},
      {5, "kl-normalization", 60.0, c05_kl_normalization},
      {6, "homset-counts", 5.0, c06_homset_counts},
      {7, "small-scale-faithfulness", 600.0, c07_small_scale_faithfulness},
      {8, "undecided-family", 1.0, c08_undecided_family},
      {9, "restricted-verdicts", 10.0, c09_restricted_verdicts},
      {10, "no-arrow-I-to-O", 1.0, c10_no_arrow_i_to_o},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Checker ck;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(ck);
    } catch (const std::exception& e) {
      ck.failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (elapsed > cr.limit_seconds) {
      ck.failures.push_back("time limit exceeded: " + std::to_string(elapsed) +
                            "s > " + std::to_string(cr.limit_seconds) + "s");
    }
    bool pass = ck.failures.empty();
    failed += pass ? 0 : 1;
    std::printf("criterion %2d  %-26s  %s  %8.3fs\n", cr.id, cr.name,
                pass ? "PASS" : "FAIL", elapsed);
    for (const std::string& f : ck.failures) {
      std::printf("              - %s\n", f.c_str());
    }
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
