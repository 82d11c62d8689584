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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcat {

// Base of all errors caused by bad input. The CLI maps these to exit code 64.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed formula or term text. `position` is a 0-based byte offset.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Ill-typed term: composition middles differ, pair sources differ, and so on.
struct TypeMismatch : Error {
  using Error::Error;
};

// Term or formula falls outside the requested theory's language fragment.
struct TheoryViolation : Error {
  using Error::Error;
};

// Relation operands whose endpoint ordinals do not line up.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Constant-object classification applied to a formula containing letters.
struct NotConstant : Error {
  using Error::Error;
};

// A broken internal invariant: always a bug, never bad input. Exit code 70.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace dcat
