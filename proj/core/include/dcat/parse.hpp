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

#include <string_view>

#include "dcat/formula.hpp"
#include "dcat/term.hpp"

namespace dcat {

// Text front end, inverse to print_formula / print_term.
//
// Formulas: lowercase-led letters, the constants I and O, "*" and "+"
// (both left-associative, "*" tighter), parentheses.
//
// Terms: brace-parameterized atoms id{A}, k{A}, l{A}, k1{A, B}, k2{A, B},
// w{A}, l1{A, B}, l2{A, B}, m{A}; the operations "." (right-associative,
// tightest), "*", "+"; the Gentzen forms K1{B}(t), K2{A}(t), L1{B}(t),
// L2{A}(t); pairing <s, t> and copairing [s, t]; parentheses.
//
// Both throw ParseError carrying the byte offset of the offending token and
// insist on consuming the whole input.
Formula parse_formula(std::string_view text);
RawTerm parse_term(std::string_view text);

}  // namespace dcat
