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

#include <random>
#include <string>
#include <vector>

#include "dcat/errors.hpp"
#include "dcat/relation.hpp"

namespace {

using dcat::Relation;

Relation random_relation(std::size_t dom, std::size_t cod, std::mt19937_64& rng) {
  std::vector<Relation::Pair> pairs;
  for (std::size_t x = 0; x < dom; ++x) {
    for (std::size_t y = 0; y < cod; ++y) {
      if (rng() % 3 == 0) pairs.emplace_back(x, y);
    }
  }
  return Relation(dom, cod, std::move(pairs));
}

}  // namespace

TEST_CASE("identity relations") {
  CHECK(Relation::identity(0) == Relation(0, 0));
  CHECK(Relation::identity(1) == Relation(1, 1, {{0, 0}}));
  CHECK(Relation::identity(3) == Relation(3, 3, {{0, 0}, {1, 1}, {2, 2}}));
}

TEST_CASE("pairs are stored in canonical order, duplicates collapse") {
  Relation r(2, 2, {{1, 1}, {0, 0}, {1, 1}, {0, 1}});
  CHECK(r.pairs() == std::vector<Relation::Pair>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(r.contains(0, 1));
  CHECK_FALSE(r.contains(1, 0));
}

TEST_CASE("out-of-range pairs are rejected") {
  CHECK_THROWS_AS(Relation(1, 1, {{1, 0}}), dcat::DimensionMismatch);
  CHECK_THROWS_AS(Relation(1, 1, {{0, 1}}), dcat::DimensionMismatch);
  CHECK_NOTHROW(Relation(0, 0));
}

TEST_CASE("equality compares dimensions, not just the pair set") {
  // The same pair set at different dimensions is a different arrow.
  Relation a(1, 1, {{0, 0}});
  Relation b(2, 1, {{0, 0}});
  Relation c(1, 2, {{0, 0}});
  CHECK(a != b);
  CHECK(a != c);
  CHECK(b != c);
  CHECK(Relation(1, 0) != Relation(0, 1));
}

TEST_CASE("composition follows the middle-element rule") {
  Relation w(1, 2, {{0, 0}, {0, 1}});
  Relation m(2, 1, {{0, 0}, {1, 0}});
  CHECK(compose(w, m) == Relation(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(compose(m, w) == Relation(1, 1, {{0, 0}}));
  CHECK(compose(Relation(0, 1), Relation(1, 0)) == Relation(1, 1));
}

TEST_CASE("composition dimension mismatch throws") {
  CHECK_THROWS_AS(compose(Relation(1, 1, {{0, 0}}), Relation(1, 2)),
                  dcat::DimensionMismatch);
}

TEST_CASE("category laws hold on random relations") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    std::size_t n0 = rng() % 5, n1 = rng() % 5, n2 = rng() % 5, n3 = rng() % 5;
    Relation f = random_relation(n0, n1, rng);
    Relation g = random_relation(n1, n2, rng);
    Relation h = random_relation(n2, n3, rng);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK(compose(Relation::identity(n1), f) == f);
    CHECK(compose(f, Relation::identity(n0)) == f);
  }
}

TEST_CASE("shift_union places the second block past the first") {
  CHECK(shift_union(Relation::identity(1), Relation::identity(1), 1, 1) ==
        Relation::identity(2));
  Relation k1(2, 1, {{0, 0}});
  Relation idr = Relation::identity(1);
  CHECK(shift_union(k1, idr, 2, 1) == Relation(3, 2, {{0, 0}, {2, 1}}));
  Relation f(2, 3, {{1, 2}});
  CHECK(shift_union(Relation(0, 0), f, 0, 0) == f);
}

TEST_CASE("shift_union demands shifts equal to the first block's dimensions") {
  CHECK_THROWS_AS(shift_union(Relation(1, 1), Relation(1, 1), 2, 1),
                  dcat::DimensionMismatch);
  CHECK_THROWS_AS(shift_union(Relation(1, 1), Relation(1, 1), 1, 0),
                  dcat::DimensionMismatch);
}

TEST_CASE("json form lists dimensions and ordered pairs") {
  Relation r(2, 1, {{1, 0}, {0, 0}});
  CHECK(dcat::to_json(r) == R"({"dom":2,"cod":1,"pairs":[[0,0],[1,0]]})");
  CHECK(dcat::to_json(Relation(1, 1)) == R"({"dom":1,"cod":1,"pairs":[]})");
}

TEST_CASE("dot form emits one node per ordinal and one edge per pair") {
  std::string dot = dcat::to_dot(Relation(1, 2, {{0, 0}, {0, 1}}));
  CHECK(dot.find("s0") != std::string::npos);
  CHECK(dot.find("t1") != std::string::npos);
  CHECK(dot.find("s0 -- t0") != std::string::npos);
  CHECK(dot.find("s0 -- t1") != std::string::npos);
}
