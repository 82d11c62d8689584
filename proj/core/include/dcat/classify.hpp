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

#ifndef DCAT_CLASSIFY_HPP_
#define DCAT_CLASSIFY_HPP_

#include "dcat/formula.hpp"
#include "dcat/term.hpp"

namespace dcat {

// True iff the formula mentions no letter.
bool is_constant(const Formula& a);

enum class ConstKind { O, I };

// Every constant object is isomorphic to O (always, in the sesquicartesian
// theory) or to I (possible only dicartesianly). forward : A -> kind and
// backward : kind -> A witness the isomorphism; both composites have empty
// graphs, so they are provably the identities.
struct ConstClass {
  ConstKind kind;
  Term forward;
  Term backward;
};

// Throws NotConstant when a letter occurs; TheoryViolation when I occurs
// under the sesquicartesian theory.
ConstClass classify_constant(const Formula& a, Theory theory);

// A contradiction admits an arrow to O, a tautology one from I (both read in
// the dicartesian theory). Decided by evaluating the substitution instance
// with every letter replaced by I, respectively O.
bool is_contradiction(const Formula& c);
bool is_tautology(const Formula& c);

// O-normal: no product has a contradiction on one side and a + inside the
// other. I-normal dually: no sum has a tautology on one side and a * inside
// the other. These syntactic conditions mark the types on which equality of
// graphs is known to imply equality of arrows dicartesianly.
bool is_o_normal(const Formula& a);
bool is_i_normal(const Formula& b);

}  // namespace dcat

#endif  // DCAT_CLASSIFY_HPP_
