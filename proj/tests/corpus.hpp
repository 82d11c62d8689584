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

// Exhaustive enumeration of small well-typed terms, shared by the rewrite
// and acceptance suites.

#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dcat/formula.hpp"
#include "dcat/term.hpp"

namespace corpus {

// Formulas over the single letter p plus the constants the theory admits,
// grouped by exact formula_size. Binary nodes weigh 1 + both children, so
// every occupied slot has odd index.
inline std::vector<std::vector<dcat::Formula>> formulas_by_size(
    std::size_t maxSize, dcat::Theory theory) {
  using dcat::Formula;
  std::vector<std::vector<Formula>> bySize(maxSize + 1);
  if (maxSize >= 1) {
    bySize[1].push_back(Formula::letter("p"));
    bySize[1].push_back(Formula::const_o());
    if (theory == dcat::Theory::Dicartesian) bySize[1].push_back(Formula::const_i());
  }
  for (std::size_t s = 3; s <= maxSize; s += 2) {
    for (std::size_t ls = 1; ls + 2 <= s; ls += 2) {
      std::size_t rs = s - 1 - ls;
      for (const Formula& l : bySize[ls]) {
        for (const Formula& r : bySize[rs]) {
          bySize[s].push_back(Formula::product(l, r));
          bySize[s].push_back(Formula::sum(l, r));
        }
      }
    }
  }
  return bySize;
}

// Size of the written expression: term constructors plus the formula
// parameters they carry. Bounding this total keeps the enumeration finite;
// plain term_size does not, since id{A} weighs 1 for every A.
inline std::size_t weight(const dcat::Term& t) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < t.formula_count(); ++i) {
    n += dcat::formula_size(t.formula(i));
  }
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    n += weight(t.child(i));
  }
  return n;
}

// Every well-typed term of weight <= maxWeight, each exactly once (a term
// tree has a unique root constructor and child split, and each combination
// is visited once). Cached per (theory, bound); the reference stays valid.
inline const std::vector<dcat::Term>& exhaustive_terms(dcat::Theory theory,
                                                       std::size_t maxWeight = 7) {
  using dcat::Formula;
  using dcat::Term;
  static std::map<std::pair<int, std::size_t>, std::vector<Term>> cache;
  auto key = std::make_pair(static_cast<int>(theory), maxWeight);
  if (auto hit = cache.find(key); hit != cache.end()) return hit->second;

  const auto fml = formulas_by_size(maxWeight, theory);
  std::vector<std::vector<Term>> byWeight(maxWeight + 1);

  for (std::size_t w = 2; w <= maxWeight; ++w) {
    // Atoms carrying one formula.
    if (w - 1 < fml.size()) {
      for (const Formula& a : fml[w - 1]) {
        byWeight[w].push_back(Term::id(a));
        byWeight[w].push_back(Term::w(a));
        byWeight[w].push_back(Term::m(a));
        byWeight[w].push_back(Term::l(a));
        if (theory == dcat::Theory::Dicartesian) byWeight[w].push_back(Term::k(a));
      }
    }
    // Atoms carrying two formulas.
    for (std::size_t sa = 1; sa + 1 < w; sa += 2) {
      std::size_t sb = w - 1 - sa;
      if (sb < 1 || sb >= fml.size() || sb % 2 == 0) continue;
      for (const Formula& a : fml[sa]) {
        for (const Formula& b : fml[sb]) {
          byWeight[w].push_back(Term::k1(a, b));
          byWeight[w].push_back(Term::k2(a, b));
          byWeight[w].push_back(Term::l1(a, b));
          byWeight[w].push_back(Term::l2(a, b));
        }
      }
    }
    // Fused projections/injections: one formula plus one child.
    for (std::size_t sb = 1; sb + 1 < w; sb += 2) {
      std::size_t wf = w - 1 - sb;
      if (wf < 2) continue;
      for (const Formula& b : fml[sb]) {
        for (const Term& f : byWeight[wf]) {
          byWeight[w].push_back(Term::gk1(b, f));
          byWeight[w].push_back(Term::gk2(b, f));
          byWeight[w].push_back(Term::gl1(b, f));
          byWeight[w].push_back(Term::gl2(b, f));
        }
      }
    }
    // Binary constructors; x is child 0, y is child 1.
    for (std::size_t wx = 2; wx + 2 < w; ++wx) {
      std::size_t wy = w - 1 - wx;
      for (const Term& x : byWeight[wx]) {
        for (const Term& y : byWeight[wy]) {
          byWeight[w].push_back(Term::times(x, y));
          byWeight[w].push_back(Term::plus(x, y));
          if (x.source() == y.source()) byWeight[w].push_back(Term::pair(x, y));
          if (x.target() == y.target()) byWeight[w].push_back(Term::copair(x, y));
          if (y.target() == x.source()) byWeight[w].push_back(Term::compose(x, y));
        }
      }
    }
  }

  std::vector<Term> all;
  for (auto& bucket : byWeight) {
    all.insert(all.end(), bucket.begin(), bucket.end());
  }
  return cache.emplace(key, std::move(all)).first->second;
}

}  // namespace corpus
