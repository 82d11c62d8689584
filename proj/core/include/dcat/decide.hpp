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

#ifndef DCAT_DECIDE_HPP_
#define DCAT_DECIDE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "dcat/formula.hpp"
#include "dcat/relation.hpp"
#include "dcat/term.hpp"

namespace dcat {

enum class VerdictKind { Equal, NotEqual, Unknown };

// Equal carries the tag of the coherence result invoked (sesqui-coherence,
// empty-graphs, o-normal-source or i-normal-target); Unknown carries a plain
// reason. NotEqual needs no justification: the graphs differ, and the graph
// map respects composition, so no equation chain can identify the terms.
struct Verdict {
  VerdictKind kind;
  std::string justification;
};

const char* verdict_name(VerdictKind kind);

// Sesquicartesianly, equality of arrows is exactly equality of graphs.
// Dicartesianly, different graphs still refute equality, and equal graphs
// prove it when both are empty, the source is O-normal, or the target is
// I-normal; the remaining region is answered Unknown. Inputs must share
// source and target (TypeMismatch otherwise).
Verdict decide_equal(const Term& f, const Term& g, Theory theory);

// {"verdict":...,"justification":...,"graph_f":...,"graph_g":...}
std::string verdict_json(const Verdict& v, const Relation& graph_f, const Relation& graph_g);

// All cut-free Gentzen terms of type a -> b, in a fixed deterministic order.
// Finite: every generation rule shrinks the combined formula size.
std::vector<Term> enumerate_cut_free(const Formula& a, const Formula& b, Theory theory);

struct HomsetClass {
  Relation graph;
  Term representative;  // first generated cut-free term with this graph
};

// certified_exact: the class count provably equals the hom-set cardinality.
// Always true sesquicartesianly; dicartesianly it needs every same-graph
// pair to fall inside the decided region.
struct Homset {
  std::vector<HomsetClass> classes;
  bool certified_exact;
};

Homset enumerate_homset(const Formula& a, const Formula& b, Theory theory);

// A pair of structurally different arrows with equal graphs whose source is
// not O-normal and whose target is not I-normal, so decide_equal answers
// Unknown. Exists only in the dicartesian language.
struct CounterexamplePair {
  Term f;
  Term g;
};

CounterexamplePair counterexample_family(const Formula& a, std::size_t n);

}  // namespace dcat

#endif  // DCAT_DECIDE_HPP_
