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

#ifndef DCAT_REWRITE_HPP_
#define DCAT_REWRITE_HPP_

#include <cstddef>
#include <vector>

#include "dcat/term.hpp"

namespace dcat {

// Gentzen terms are built from id{A}, k{A}, l{A} with the derived operations
// K1/K2/L1/L2, pairing and copairing, plus composition. Cut-free means no
// composition node at all.
bool is_gentzen_term(const Term& t);
bool is_cut_free(const Term& t);

// A K-term never mentions the l- or m-side constructors (l, l1, l2, m, and
// the derived L1/L2/copairing); an L-term never mentions the k- or w-side
// ones (k, k1, k2, w, and the derived K1/K2/pairing).
bool is_k_term(const Term& t);
bool is_l_term(const Term& t);

// Identities combined by composition, * and + only.
bool is_complex_identity(const Term& t);

// Number of derived-operation nodes (K1, K2, L1, L2, pair, copair).
std::size_t degree(const Term& t);

// Rewrites *, +, and the primitive projections/injections/diagonal/codiagonal
// into derived operations. Keeps compositions; preserves type and graph.
Term to_gentzen(const Term& t);

// One cut-reduction step: `rule` names the equation applied, `cut_degree` is
// the degree of the reduced composition, `residual_degrees` the degrees of
// the compositions it leaves behind (each strictly smaller, checked).
struct CutStep {
  const char* rule;
  std::size_t cut_degree;
  std::vector<std::size_t> residual_degrees;
};

// Translates to a Gentzen term and removes every composition by repeatedly
// reducing the leftmost-innermost composition whose operands are already
// cut-free. Deterministic; preserves type and graph.
Term cut_eliminate(const Term& t);
Term cut_eliminate_traced(const Term& t, std::vector<CutStep>& steps);

// Splits t into composition-free factors f_n, ..., f_1 (outermost first)
// with t equal to their composite. Every mixed factor is further split so
// each returned factor avoids either the k/w side or the l/m side entirely;
// identity factors are dropped unless the whole list collapses to a single
// identity.
std::vector<Term> factorize(const Term& t);

// t equals lPart . kPart with kPart a K-term and lPart an L-term.
struct KLDecomposition {
  Term kPart;
  Term lPart;
};

// Factorizes, then bubbles k/w-side factors rightward past l/m-side factors
// until the composite reads as an L-term after a K-term.
KLDecomposition kl_normalize(const Term& t);

}  // namespace dcat

#endif  // DCAT_REWRITE_HPP_
