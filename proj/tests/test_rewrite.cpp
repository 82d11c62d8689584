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

#include <vector>

#include "corpus.hpp"
#include "dcat/graph.hpp"
#include "dcat/oracle.hpp"
#include "dcat/parse.hpp"
#include "dcat/rewrite.hpp"
#include "dcat/term.hpp"

namespace {

using namespace dcat;

Term T(const char* text, Theory th = Theory::Dicartesian) {
  return typecheck(parse_term(text), th);
}

bool mentions_kind(const Term& t, TermKind k) {
  if (t.kind() == k) return true;
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    if (mentions_kind(t.child(i), k)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("term-class predicates") {
  CHECK(is_gentzen_term(T("K1{q}(id{p})")));
  CHECK(is_gentzen_term(T("k{p} . K1{q}(id{p})")));
  CHECK_FALSE(is_gentzen_term(T("k1{p,q}")));
  CHECK_FALSE(is_gentzen_term(T("id{p} * id{q}")));

  CHECK(is_cut_free(T("<id{p}, id{p}>")));
  CHECK_FALSE(is_cut_free(T("id{p} . id{p}")));
  CHECK_FALSE(is_cut_free(T("<id{p} . id{p}, id{p}>")));

  CHECK(is_k_term(T("k1{p * q, p * q} . w{p * q}")));
  CHECK_FALSE(is_k_term(T("m{p}")));
  CHECK_FALSE(is_k_term(T("L1{q}(k1{p,q})")));
  CHECK(is_l_term(T("m{p} . l2{p,p}")));
  CHECK(is_l_term(T("[id{p}, id{p}]")));
  CHECK_FALSE(is_l_term(T("w{p}")));
  CHECK_FALSE(is_l_term(T("<id{p}, id{p}>")));
  // Identities are both.
  CHECK(is_k_term(T("id{p}")));
  CHECK(is_l_term(T("id{p}")));

  CHECK(is_complex_identity(T("id{p} * id{q}")));
  CHECK(is_complex_identity(T("id{p} . id{p}")));
  CHECK(is_complex_identity(T("id{p + q}")));
  CHECK_FALSE(is_complex_identity(T("w{p}")));
}

TEST_CASE("degree counts derived-operation nodes") {
  CHECK(degree(T("id{p}")) == 0);
  CHECK(degree(T("<id{p}, id{p}>")) == 1);
  CHECK(degree(T("K1{q}(<id{p}, id{p}>)")) == 2);
  CHECK(degree(T("[L1{q}(id{p}), L2{p}(id{q})]")) == 3);
}

TEST_CASE("to_gentzen rewrites the product-sum layer and keeps compositions") {
  CHECK(to_gentzen(T("k1{p,q}")) == T("K1{q}(id{p})"));
  CHECK(to_gentzen(T("w{p}")) == T("<id{p}, id{p}>"));
  CHECK(to_gentzen(T("id{p} . id{p}")) == T("id{p} . id{p}"));

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Theory th = seed % 2 ? Theory::Dicartesian : Theory::Sesquicartesian;
    Term t = random_term(9, th, seed);
    Term g = to_gentzen(t);
    CHECK(is_gentzen_term(g));
    CHECK(g.source() == t.source());
    CHECK(g.target() == t.target());
    CHECK(graph_of(g) == graph_of(t));
  }
}

TEST_CASE("cut elimination removes every composition") {
  CHECK(cut_eliminate(T("k1{p,p} . w{p}")) == T("id{p}"));
  CHECK(cut_eliminate(T("m{p} . l1{p,p}")) == T("id{p}"));
  CHECK(cut_eliminate(T("id{p}")) == T("id{p}"));
  CHECK(cut_eliminate(T("id{p} . id{p} . id{p}")) == T("id{p}"));

  // Arrows into I collapse to k.
  CHECK(cut_eliminate(T("k{p} . k1{p,q}")) == T("k{p * q}"));
  CHECK(cut_eliminate(T("k{p * q}")) == T("k{p * q}"));
  // Arrows out of O collapse to l.
  CHECK(cut_eliminate(T("l1{p,q} . l{p}")) == T("l{p + q}"));
}

TEST_CASE("cut elimination preserves type and graph on both exhaustive corpora") {
  for (Theory th : {Theory::Sesquicartesian, Theory::Dicartesian}) {
    for (const Term& t : corpus::exhaustive_terms(th)) {
      Term r = cut_eliminate(t);
      REQUIRE(is_cut_free(r));
      REQUIRE(is_gentzen_term(r));
      REQUIRE(r.source() == t.source());
      REQUIRE(r.target() == t.target());
      REQUIRE(graph_of(r) == graph_of(t));
    }
  }
}

TEST_CASE("every reduction step strictly decreases the cut degree") {
  std::size_t steps_seen = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Theory th = seed % 2 ? Theory::Dicartesian : Theory::Sesquicartesian;
    Term t = random_term(11, th, seed);
    std::vector<CutStep> steps;
    Term r = cut_eliminate_traced(t, steps);
    CHECK(is_cut_free(r));
    for (const CutStep& s : steps) {
      ++steps_seen;
      for (std::size_t d : s.residual_degrees) {
        CHECK(d < s.cut_degree);
      }
    }
  }
  CHECK(steps_seen > 100);  // the sample actually exercises reductions
}

TEST_CASE("no k constructor ever appears in sesquicartesian outputs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Term t = random_term(10, Theory::Sesquicartesian, seed);
    CHECK_FALSE(mentions_kind(cut_eliminate(t), TermKind::K));
    auto kl = kl_normalize(t);
    CHECK_FALSE(mentions_kind(kl.kPart, TermKind::K));
    CHECK_FALSE(mentions_kind(kl.lPart, TermKind::K));
  }
}

TEST_CASE("factorize splits into composition-free factors without identities") {
  auto factors = factorize(T("w{p} . m{p}"));
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == T("w{p}"));
  CHECK(factors[1] == T("m{p}"));

  auto single = factorize(T("id{p}"));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == T("id{p}"));

  // A complex identity collapses to one identity factor.
  auto collapsed = factorize(T("id{p} . id{p} * id{q}"));
  REQUIRE(collapsed.size() == 1);
  CHECK(is_complex_identity(collapsed[0]));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Term t = random_term(10, Theory::Dicartesian, seed);
    auto fs = factorize(t);
    REQUIRE(!fs.empty());
    Term rebuilt = fs.back();
    for (std::size_t i = fs.size(); i-- > 1;) {
      CHECK_FALSE(mentions_kind(fs[i - 1], TermKind::Compose));
      rebuilt = Term::compose(fs[i - 1], rebuilt);
    }
    CHECK_FALSE(mentions_kind(fs.back(), TermKind::Compose));
    CHECK(rebuilt.source() == t.source());
    CHECK(rebuilt.target() == t.target());
    CHECK(graph_of(rebuilt) == graph_of(t));
    if (fs.size() > 1) {
      for (const Term& f : fs) CHECK_FALSE(is_complex_identity(f));
    }
  }
}

TEST_CASE("factorize splits a mixed factor into one l-side and one k-side layer") {
  auto fs = factorize(T("(k1{a, b} * l1{c, d}) + (w{e} + l{f})"));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == T("(id{a} * l1{c, d}) + (id{e * e} + l{f})"));
  CHECK(fs[1] == T("(k1{a, b} * id{c}) + (w{e} + id{O})"));
}

TEST_CASE("kl_normalize yields an l-side term after a k-side term") {
  auto kl = kl_normalize(T("w{p} . m{p}"));
  CHECK(kl.kPart == T("w{p + p}"));
  CHECK(kl.lPart == T("m{p} * m{p}"));

  auto idkl = kl_normalize(T("id{p}"));
  CHECK(idkl.kPart == T("id{p}"));
  CHECK(idkl.lPart == T("id{p}"));

  auto kkl = kl_normalize(T("k1{p,q}"));
  CHECK(kkl.kPart == T("k1{p,q}"));
  CHECK(kkl.lPart == T("id{p}"));
}

TEST_CASE("kl_normalize output is well-formed on both exhaustive corpora") {
  for (Theory th : {Theory::Sesquicartesian, Theory::Dicartesian}) {
    for (const Term& t : corpus::exhaustive_terms(th)) {
      KLDecomposition kl = kl_normalize(t);
      REQUIRE(is_k_term(kl.kPart));
      REQUIRE(is_l_term(kl.lPart));
      Term whole = Term::compose(kl.lPart, kl.kPart);
      REQUIRE(whole.source() == t.source());
      REQUIRE(whole.target() == t.target());
      REQUIRE(graph_of(whole) == graph_of(t));
    }
  }
}

TEST_CASE("normalizers are deterministic") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Term t = random_term(10, Theory::Dicartesian, seed);
    CHECK(cut_eliminate(t) == cut_eliminate(t));
    CHECK(to_gentzen(t) == to_gentzen(t));
    auto a = kl_normalize(t);
    auto b = kl_normalize(t);
    CHECK(a.kPart == b.kPart);
    CHECK(a.lPart == b.lPart);
  }
}
