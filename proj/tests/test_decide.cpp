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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "json.hpp"

#include "dcat/classify.hpp"
#include "dcat/decide.hpp"
#include "dcat/errors.hpp"
#include "dcat/graph.hpp"
#include "dcat/oracle.hpp"
#include "dcat/parse.hpp"
#include "dcat/rewrite.hpp"

namespace {

using namespace dcat;

Formula F(const char* text) { return parse_formula(text); }
Term T(const char* text, Theory th = Theory::Dicartesian) {
  return typecheck(parse_term(text), th);
}

}  // namespace

TEST_CASE("sesquicartesian equality is exactly graph equality") {
  Verdict both_empty = decide_equal(T("k1{O,O}", Theory::Sesquicartesian),
                                    T("k2{O,O}", Theory::Sesquicartesian),
                                    Theory::Sesquicartesian);
  CHECK(both_empty.kind == VerdictKind::Equal);
  CHECK(both_empty.justification == "sesqui-coherence");

  Verdict differ = decide_equal(T("id{O * p}", Theory::Sesquicartesian),
                                T("l{O * p} . k1{O,p}", Theory::Sesquicartesian),
                                Theory::Sesquicartesian);
  CHECK(differ.kind == VerdictKind::NotEqual);
}

TEST_CASE("dicartesian verdicts name the result that justifies them") {
  Verdict v = decide_equal(T("(m{p} * m{p}) . w{p + p}"),
                           T("m{p * p} . (w{p} + w{p})"), Theory::Dicartesian);
  CHECK(v.kind == VerdictKind::Equal);
  CHECK(v.justification == "o-normal-source");

  Verdict empty = decide_equal(T("k{O * O}"), T("k{O} . k1{O,O}"),
                               Theory::Dicartesian);
  CHECK(empty.kind == VerdictKind::Equal);
  CHECK(empty.justification == "empty-graphs");

  // Target I-normal, source not O-normal, graphs nonempty and equal.
  Term f = T("k1{p, (q + q) * O}");
  Term g = T("id{p} . k1{p, (q + q) * O}");
  REQUIRE_FALSE(is_o_normal(f.source()));
  REQUIRE(is_i_normal(f.target()));
  Verdict itgt = decide_equal(f, g, Theory::Dicartesian);
  CHECK(itgt.kind == VerdictKind::Equal);
  CHECK(itgt.justification == "i-normal-target");

  Verdict ne = decide_equal(T("k1{p,p}"), T("k2{p,p}"), Theory::Dicartesian);
  CHECK(ne.kind == VerdictKind::NotEqual);
}

TEST_CASE("the undecided dicartesian region answers unknown") {
  auto [f, g] = counterexample_family(F("p"), 0);
  Verdict v = decide_equal(f, g, Theory::Dicartesian);
  CHECK(v.kind == VerdictKind::Unknown);
  CHECK(!v.justification.empty());
}

TEST_CASE("decide_equal refuses differently-typed inputs") {
  CHECK_THROWS_AS(decide_equal(T("id{p}"), T("id{q}"), Theory::Dicartesian),
                  TypeMismatch);
  CHECK_THROWS_AS(decide_equal(T("w{p}"), T("id{p}"), Theory::Dicartesian),
                  TypeMismatch);
}

TEST_CASE("decide_equal is reflexive and symmetric") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Theory th = seed % 2 ? Theory::Dicartesian : Theory::Sesquicartesian;
    Term f = random_term(10, th, seed);
    Verdict self = decide_equal(f, f, th);
    CHECK(self.kind != VerdictKind::NotEqual);
    if (th == Theory::Sesquicartesian) CHECK(self.kind == VerdictKind::Equal);

    Term g = random_term(f.source(), 10, th, seed + 3571);
    if (g.target() == f.target()) {
      Verdict fg = decide_equal(f, g, th);
      Verdict gf = decide_equal(g, f, th);
      CHECK(fg.kind == gf.kind);
    }
  }
}

TEST_CASE("not-equal verdicts always come from differing graphs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Theory th = seed % 2 ? Theory::Dicartesian : Theory::Sesquicartesian;
    Term f = random_term(9, th, seed);
    Term g = random_term(f.source(), 9, th, seed + 13);
    if (g.target() != f.target()) continue;
    Verdict v = decide_equal(f, g, th);
    if (v.kind == VerdictKind::NotEqual) {
      CHECK(graph_of(f) != graph_of(g));
    } else if (v.kind == VerdictKind::Equal) {
      CHECK(graph_of(f) == graph_of(g));
    }
  }
}

TEST_CASE("verdicts serialize with both graphs") {
  Term f = T("id{p}");
  Verdict v = decide_equal(f, f, Theory::Sesquicartesian);
  auto j = nlohmann::json::parse(verdict_json(v, graph_of(f), graph_of(f)));
  CHECK(j["verdict"] == "equal");
  CHECK(j["justification"] == "sesqui-coherence");
  CHECK(j["graph_f"]["dom"] == 1);
  CHECK(j["graph_g"]["pairs"].size() == 1);
}

TEST_CASE("cut-free enumeration is deterministic and shrinks endpoints") {
  auto once = enumerate_cut_free(F("p * p"), F("p"), Theory::Sesquicartesian);
  auto twice = enumerate_cut_free(F("p * p"), F("p"), Theory::Sesquicartesian);
  REQUIRE(once.size() == twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i] == twice[i]);
    CHECK(is_cut_free(once[i]));
    CHECK(once[i].source() == F("p * p"));
    CHECK(once[i].target() == F("p"));
  }
  CHECK(!once.empty());
}

TEST_CASE("hom-set counts at small types") {
  auto pp = enumerate_homset(F("p"), F("p"), Theory::Sesquicartesian);
  REQUIRE(pp.classes.size() == 1);
  CHECK(pp.certified_exact);
  CHECK(pp.classes[0].representative == Term::id(F("p")));

  auto proj = enumerate_homset(F("p * p"), F("p"), Theory::Sesquicartesian);
  REQUIRE(proj.classes.size() == 2);
  CHECK(proj.certified_exact);
  std::set<std::string> graphs;
  for (const auto& c : proj.classes) graphs.insert(to_json(c.graph));
  CHECK(graphs.count(R"({"dom":2,"cod":1,"pairs":[[0,0]]})") == 1);
  CHECK(graphs.count(R"({"dom":2,"cod":1,"pairs":[[1,0]]})") == 1);

  CHECK(enumerate_homset(F("p"), F("p + p"), Theory::Sesquicartesian)
            .classes.size() == 2);

  auto oxp = enumerate_homset(F("O * p"), F("O * p"), Theory::Sesquicartesian);
  REQUIRE(oxp.classes.size() == 2);
  std::set<std::string> oxpGraphs;
  for (const auto& c : oxp.classes) oxpGraphs.insert(to_json(c.graph));
  CHECK(oxpGraphs.count(R"({"dom":1,"cod":1,"pairs":[[0,0]]})") == 1);
  CHECK(oxpGraphs.count(R"({"dom":1,"cod":1,"pairs":[]})") == 1);
}

TEST_CASE("hom-set representatives are honest members of their class") {
  for (auto [a, b] : {std::pair{"p * p", "p * p"}, {"p + p", "p"},
                      {"O * p", "p * O"}, {"p", "p * p"}}) {
    Homset h = enumerate_homset(F(a), F(b), Theory::Sesquicartesian);
    for (const auto& c : h.classes) {
      CHECK(graph_of(c.representative) == c.graph);
      CHECK(c.representative.source() == F(a));
      CHECK(c.representative.target() == F(b));
    }
  }
}

TEST_CASE("no arrow inhabits I -> O") {
  CHECK(enumerate_cut_free(F("I"), F("O"), Theory::Dicartesian).empty());
  CHECK(enumerate_homset(F("I"), F("O"), Theory::Dicartesian).classes.empty());
  CHECK(enumerate_cut_free(F("I * I"), F("O + O"), Theory::Dicartesian).empty());
}

TEST_CASE("the counterexample family stays in the undecided region") {
  Formula expect_src = F("(p * O + I) * O");
  Formula expect_tgt = F("(p + I) * O + I");
  for (std::size_t n = 0; n <= 3; ++n) {
    auto [f, g] = counterexample_family(F("p"), n);
    CHECK(f.source() == g.source());
    CHECK(f.target() == g.target());
    if (n == 0) {
      CHECK(f.source() == expect_src);
      CHECK(f.target() == expect_tgt);
      CHECK(graph_of(f) == Relation(1, 1, {{0, 0}}));
    }
    CHECK(f != g);
    CHECK(graph_of(f) == graph_of(g));
    CHECK_FALSE(is_o_normal(f.source()));
    CHECK_FALSE(is_i_normal(f.target()));
    CHECK(decide_equal(f, g, Theory::Dicartesian).kind == VerdictKind::Unknown);
  }
}
