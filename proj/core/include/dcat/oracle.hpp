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

#ifndef DCAT_ORACLE_HPP_
#define DCAT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dcat/formula.hpp"
#include "dcat/term.hpp"

namespace dcat {

// Limits for the equational-closure search. max_steps counts frontier
// expansions (terms popped for rewriting); size_slack is added to the
// largest desugared input size to cap intermediate term growth, which the
// duplicating equations would otherwise make unbounded.
struct Budget {
  std::size_t max_steps = 100000;
  std::size_t size_slack = 6;
};

// One edge of a connecting rewrite chain. The step carries the term it
// arrives at; `forward` selects the schema reading that was applied, and
// `reversed` means the edge is traversed against that reading: applying the
// reading to `result` yields the step's starting term instead.
struct TraceStep {
  std::string schema;
  int variant;
  bool forward;
  bool reversed;
  std::vector<std::size_t> path;  // child indices from the root
  Term result;
};

struct ClosureGraph;  // internal exploration record, kept for traces

// Partition of the input terms under the discovered rewrite edges.
// class_of[i] numbers classes by first appearance, so inputs i and j are
// connected iff class_of[i] == class_of[j]. budget_exhausted reports that
// the step cap stopped the search; missing links are then unresolved, never
// refuted.
struct ClosureResult {
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;
  bool budget_exhausted = false;
  std::size_t steps_used = 0;
  std::size_t terms_seen = 0;

  bool connected(std::size_t i, std::size_t j) const {
    return class_of[i] == class_of[j];
  }
  // Rewrite chain from input i to input j over the explored edges, or
  // nullopt when they ended up in different classes.
  std::optional<std::vector<TraceStep>> trace(std::size_t i, std::size_t j) const;

  std::shared_ptr<const ClosureGraph> graph;
  std::vector<std::size_t> input_ids;  // node ids of the (desugared) inputs
};

// Saturates the inputs under all schema instances, applied at every subterm
// position in both readings, breadth-first by term size. All inputs must
// share one type and typecheck in the theory.
ClosureResult equational_closure(const std::vector<Term>& terms, Theory theory,
                                 const Budget& budget = {});

// Checks a recorded chain: starting from `start` (desugared), every step's
// schema application reproduces the recorded term, ending at `end`.
bool replay_trace(const Term& start, const std::vector<TraceStep>& steps,
                  const Term& end);

// Random generators. All are deterministic per rng state / seed; sizeBudget
// bounds the node count of the result. Under Sesquicartesian no I and no
// k{A} is ever produced.
Formula random_formula(std::size_t sizeBudget, Theory theory, std::mt19937_64& rng);
Formula random_formula(std::size_t sizeBudget, Theory theory, std::uint64_t seed);

// Letterless formulas only (for the constant-object classifier).
Formula random_constant_formula(std::size_t sizeBudget, Theory theory,
                                std::mt19937_64& rng);
Formula random_constant_formula(std::size_t sizeBudget, Theory theory,
                                std::uint64_t seed);

// Well-typed term out of the given source; falls back to id{source} when the
// budget allows nothing else.
Term random_term(const Formula& source, std::size_t sizeBudget, Theory theory,
                 std::mt19937_64& rng);
Term random_term(const Formula& source, std::size_t sizeBudget, Theory theory,
                 std::uint64_t seed);

// Same, with a freshly generated random source.
Term random_term(std::size_t sizeBudget, Theory theory, std::mt19937_64& rng);
Term random_term(std::size_t sizeBudget, Theory theory, std::uint64_t seed);

// Cut-free term of type a -> b, chosen randomly among the typing rules that
// can complete; nullopt when the hom-set is empty.
std::optional<Term> random_term_typed(const Formula& a, const Formula& b,
                                      std::size_t sizeBudget, Theory theory,
                                      std::mt19937_64& rng);

// Whether any cut-free term of type a -> b exists in the theory.
bool homset_inhabited(const Formula& a, const Formula& b, Theory theory);

struct SoundnessViolation {
  std::string schema;
  int variant;
  std::string left;
  std::string right;
  std::string left_graph;
  std::string right_graph;
};

// Result of sampling schema instances and comparing both sides' graphs.
struct SoundnessReport {
  Theory theory;
  std::uint64_t seed = 0;
  std::size_t samples_requested = 0;
  std::size_t instances_checked = 0;
  std::vector<SoundnessViolation> violations;

  bool ok() const { return violations.empty(); }
};

std::string to_json(const SoundnessReport& r);

// Samples the registry round-robin (restricted to the theory's schemas) and
// checks graph equality of every instance's two sides.
SoundnessReport verify_soundness(std::size_t sampleSize, std::size_t sizeBudget,
                                 Theory theory, std::uint64_t seed);

// Exhaustive check of one hom-set: closure classes of all cut-free terms
// must coincide with their graph classes. unresolved_pairs lists same-graph
// pairs the closure failed to connect; with budget_exhausted set they are
// unresolved, otherwise they falsify the claimed completeness. mixed_pairs
// lists connected pairs with different graphs, which falsify soundness.
struct FaithfulnessReport {
  std::string source;
  std::string target;
  Theory theory;
  std::size_t term_count = 0;
  std::size_t closure_classes = 0;
  std::size_t graph_classes = 0;
  bool partitions_match = false;
  bool budget_exhausted = false;
  std::size_t steps_used = 0;
  std::vector<std::pair<std::string, std::string>> mixed_pairs;
  std::vector<std::pair<std::string, std::string>> unresolved_pairs;

  bool ok() const { return partitions_match && !budget_exhausted; }
};

std::string to_json(const FaithfulnessReport& r);

FaithfulnessReport verify_faithfulness_small(const Formula& a, const Formula& b,
                                             Theory theory,
                                             const Budget& budget = {});

}  // namespace dcat

#endif  // DCAT_ORACLE_HPP_
