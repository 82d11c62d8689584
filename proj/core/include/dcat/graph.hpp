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

#pragma once

#include "dcat/relation.hpp"
#include "dcat/term.hpp"

namespace dcat {

// The graph of a term: a relation between the letter occurrences of its
// source and those of its target, numbered left to right. Identities,
// projections and injections relate each occurrence to its copy; w{A} and
// m{A} fan occurrences out and in; k{A} and l{A} have empty graphs.
// Composition, "*" and "+" act by relational composition and disjoint union,
// and the sugar forms have the graphs of their expansions.
Relation graph_of(const Term& t);

}  // namespace dcat
