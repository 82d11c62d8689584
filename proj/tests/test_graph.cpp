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

#include "dcat/formula.hpp"
#include "dcat/graph.hpp"
#include "dcat/oracle.hpp"
#include "dcat/parse.hpp"
#include "dcat/relation.hpp"
#include "dcat/term.hpp"

namespace {

using namespace dcat;

Relation G(const char* text, Theory th = Theory::Dicartesian) {
  return graph_of(typecheck(parse_term(text), th));
}

}  // namespace

TEST_CASE("graphs of the atoms") {
  CHECK(G("id{p}") == Relation::identity(1));
  CHECK(G("id{p * q + r}") == Relation::identity(3));
  CHECK(G("k1{p,q}") == Relation(2, 1, {{0, 0}}));
  CHECK(G("k2{p,q}") == Relation(2, 1, {{1, 0}}));
  CHECK(G("w{p}") == Relation(1, 2, {{0, 0}, {0, 1}}));
  CHECK(G("w{p + q}") == Relation(2, 4, {{0, 0}, {0, 2}, {1, 1}, {1, 3}}));
  CHECK(G("l1{p,q}") == Relation(1, 2, {{0, 0}}));
  CHECK(G("l2{p,q}") == Relation(1, 2, {{0, 1}}));
  CHECK(G("m{p}") == Relation(2, 1, {{0, 0}, {1, 0}}));
  CHECK(G("m{p * p}") == Relation(4, 2, {{0, 0}, {1, 1}, {2, 0}, {3, 1}}));
  CHECK(G("k{p * q}") == Relation(2, 0));
  CHECK(G("l{p + q}") == Relation(0, 2));
}

TEST_CASE("same pair set, different arrows: id, first projection, first injection") {
  CHECK(G("id{p}").pairs() == G("k1{p,q}").pairs());
  CHECK(G("id{p}").pairs() == G("l1{p,q}").pairs());
  CHECK(G("id{p}") != G("k1{p,q}"));
  CHECK(G("id{p}") != G("l1{p,q}"));
  CHECK(G("k1{p,q}") != G("l1{p,q}"));
}

TEST_CASE("dimensions count letter occurrences, constants contribute nothing") {
  CHECK(G("id{O * p}") == Relation(1, 1, {{0, 0}}));
  CHECK(G("l{O * p} . k1{O, p}") == Relation(1, 1));
  CHECK(G("l{p * O} . k2{p, O}") == Relation(1, 1));
  CHECK(G("id{(p * (q + p)) + (I * p)}") == Relation::identity(4));
  CHECK(G("w{O}", Theory::Sesquicartesian) == Relation(0, 0));
}

TEST_CASE("product and sum of arrows shift the second block") {
  CHECK(G("k1{p,q} * id{r}") == Relation(3, 2, {{0, 0}, {2, 1}}));
  CHECK(G("k1{p,q} + id{r}") == Relation(3, 2, {{0, 0}, {2, 1}}));
  CHECK(G("w{p} + m{q}") == Relation(3, 3, {{0, 0}, {0, 1}, {1, 2}, {2, 2}}));
}

TEST_CASE("composition of graphs is the graph of the composition") {
  CHECK(G("w{p} . m{p}") ==
        Relation(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(G("m{p} . l1{p,p}") == Relation(1, 1, {{0, 0}}));
  CHECK(G("k1{p,p} . w{p}") == Relation::identity(1));
}

TEST_CASE("fused constructors have the graphs of their definitions") {
  CHECK(G("K1{q}(id{p})") == G("id{p} . k1{p,q}"));
  CHECK(G("K2{q}(w{p})") == G("w{p} . k2{q,p}"));
  CHECK(G("L1{q}(id{p})") == G("l1{p,q} . id{p}"));
  CHECK(G("<id{p}, id{p}>") == G("w{p}"));
  CHECK(G("[id{p}, id{p}]") == G("m{p}"));
}

TEST_CASE("identity terms map to identity relations") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    Formula a = random_formula(7, Theory::Dicartesian, rng);
    CHECK(graph_of(Term::id(a)) == Relation::identity(letter_count(a)));
  }
}

TEST_CASE("the graph map respects composition on random pairs") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Theory th = seed % 2 ? Theory::Dicartesian : Theory::Sesquicartesian;
    Term f = random_term(9, th, seed);
    Term g = random_term(f.target(), 9, th, seed + 7919);
    Term gf = Term::compose(g, f);
    CHECK(graph_of(gf) == compose(graph_of(g), graph_of(f)));
  }
}

TEST_CASE("product and sum of arrows agree with shift_union on random pairs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Term f = random_term(8, Theory::Dicartesian, seed);
    Term g = random_term(8, Theory::Dicartesian, seed + 104729);
    Relation want = shift_union(graph_of(f), graph_of(g),
                                letter_count(f.source()), letter_count(f.target()));
    CHECK(graph_of(Term::times(f, g)) == want);
    CHECK(graph_of(Term::plus(f, g)) == want);
  }
}

TEST_CASE("desugaring never changes the graph") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Theory th = seed % 2 ? Theory::Dicartesian : Theory::Sesquicartesian;
    Term t = random_term(10, th, seed);
    CHECK(graph_of(desugar(t)) == graph_of(t));
  }
}
