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

#ifndef DCAT_SCHEMA_HPP_
#define DCAT_SCHEMA_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dcat/formula.hpp"
#include "dcat/term.hpp"

namespace dcat {

// One directed-rewrite view of an equation between arrow terms. Matchers
// work on desugared trees and are applied at the root of a subterm; they
// return the replacement on a match and nullopt otherwise. Every replacement
// has the same endpoints as the matched term (given a well-typed input).
//
// "forward" rewrites the displayed left side to the right side. "backward"
// is the reverse reading where that reading is functional; the two
// type-directed collapse rules keep it empty, since "anything of this type"
// cannot be recovered from their right sides.
struct EquationSchema {
  std::string name;
  int variant;  // 1 or 2 for the schema families indexed by a side, else 0
  bool sesqui_ok;
  std::function<std::optional<Term>(const Term&)> forward;
  std::function<std::optional<Term>(const Term&)> backward;
  // Seeded random instance: a (left, right) pair of well-typed terms related
  // by one application of the schema at the root. sizeBudget bounds the
  // random subterms used as metavariable values. Returns nullopt when the
  // schema does not exist in the given theory.
  std::function<std::optional<std::pair<Term, Term>>(std::mt19937_64&, Theory,
                                                     std::size_t)>
      sample;
};

// All equation forms, in presentation order. Families indexed by a side
// contribute one entry per index, so the list is longer than the name set.
const std::vector<EquationSchema>& schema_registry();

// The distinct schema names, in first-appearance order.
std::vector<std::string> schema_names();

// Registry lookup; nullptr when no entry carries that name and variant.
const EquationSchema* find_schema(const std::string& name, int variant);

}  // namespace dcat

#endif  // DCAT_SCHEMA_HPP_
