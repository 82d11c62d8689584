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

#include "dcat/graph.hpp"

#include <vector>

#include "dcat/errors.hpp"
#include "dcat/formula.hpp"

namespace dcat {

namespace {

// Recursion over the primitive constructors only; graph_of desugars up front
// so pair/copair and the one-sided operations never reach this switch.
Relation graph_rec(const Term& t) {
  using Pair = Relation::Pair;
  switch (t.kind()) {
    case TermKind::Id:
      return Relation::identity(letter_count(t.formula(0)));
    case TermKind::K:
      return Relation(letter_count(t.formula(0)), 0);
    case TermKind::L:
      return Relation(0, letter_count(t.formula(0)));
    case TermKind::K1: {
      std::size_t na = letter_count(t.formula(0)), nb = letter_count(t.formula(1));
      std::vector<Pair> ps;
      for (std::size_t i = 0; i < na; ++i) ps.emplace_back(i, i);
      return Relation(na + nb, na, std::move(ps));
    }
    case TermKind::K2: {
      std::size_t na = letter_count(t.formula(0)), nb = letter_count(t.formula(1));
      std::vector<Pair> ps;
      for (std::size_t j = 0; j < nb; ++j) ps.emplace_back(na + j, j);
      return Relation(na + nb, nb, std::move(ps));
    }
    case TermKind::W: {
      std::size_t n = letter_count(t.formula(0));
      std::vector<Pair> ps;
      for (std::size_t i = 0; i < n; ++i) {
        ps.emplace_back(i, i);
        ps.emplace_back(i, i + n);
      }
      return Relation(n, 2 * n, std::move(ps));
    }
    case TermKind::L1: {
      std::size_t na = letter_count(t.formula(0)), nb = letter_count(t.formula(1));
      std::vector<Pair> ps;
      for (std::size_t i = 0; i < na; ++i) ps.emplace_back(i, i);
      return Relation(na, na + nb, std::move(ps));
    }
    case TermKind::L2: {
      std::size_t na = letter_count(t.formula(0)), nb = letter_count(t.formula(1));
      std::vector<Pair> ps;
      for (std::size_t j = 0; j < nb; ++j) ps.emplace_back(j, na + j);
      return Relation(nb, na + nb, std::move(ps));
    }
    case TermKind::M: {
      std::size_t n = letter_count(t.formula(0));
      std::vector<Pair> ps;
      for (std::size_t i = 0; i < n; ++i) {
        ps.emplace_back(i, i);
        ps.emplace_back(i + n, i);
      }
      return Relation(2 * n, n, std::move(ps));
    }
    case TermKind::Compose:
      return compose(graph_rec(t.child(0)), graph_rec(t.child(1)));
    case TermKind::Times:
    case TermKind::Plus: {
      Relation gf = graph_rec(t.child(0));
      Relation gg = graph_rec(t.child(1));
      std::size_t ds = gf.dom(), cs = gf.cod();
      return shift_union(gf, gg, ds, cs);
    }
    case TermKind::GK1:
    case TermKind::GK2:
    case TermKind::GL1:
    case TermKind::GL2:
    case TermKind::Pair:
    case TermKind::Copair:
      break;
  }
  throw InternalError("graph_rec: derived constructor survived desugaring");
}

}  // namespace

Relation graph_of(const Term& t) { return graph_rec(desugar(t)); }

}  // namespace dcat
