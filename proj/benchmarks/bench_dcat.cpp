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

#include <benchmark/benchmark.h>

#include <vector>

#include "dcat/decide.hpp"
#include "dcat/graph.hpp"
#include "dcat/oracle.hpp"
#include "dcat/parse.hpp"
#include "dcat/rewrite.hpp"
#include "dcat/term.hpp"

namespace {

using namespace dcat;

std::vector<Term> sample_terms(std::size_t count, std::size_t size, Theory th) {
  std::vector<Term> out;
  out.reserve(count);
  for (std::uint64_t seed = 0; seed < count; ++seed) {
    out.push_back(random_term(size, th, seed));
  }
  return out;
}

void BM_graph_of(benchmark::State& state) {
  auto terms = sample_terms(64, static_cast<std::size_t>(state.range(0)),
                            Theory::Dicartesian);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph_of(terms[i++ % terms.size()]));
  }
}
BENCHMARK(BM_graph_of)->Arg(8)->Arg(16)->Arg(32);

void BM_cut_eliminate(benchmark::State& state) {
  auto terms = sample_terms(64, static_cast<std::size_t>(state.range(0)),
                            Theory::Dicartesian);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cut_eliminate(terms[i++ % terms.size()]));
  }
}
BENCHMARK(BM_cut_eliminate)->Arg(8)->Arg(16)->Arg(32);

void BM_kl_normalize(benchmark::State& state) {
  auto terms = sample_terms(64, static_cast<std::size_t>(state.range(0)),
                            Theory::Dicartesian);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kl_normalize(terms[i++ % terms.size()]));
  }
}
BENCHMARK(BM_kl_normalize)->Arg(8)->Arg(16)->Arg(32);

void BM_decide_equal(benchmark::State& state) {
  auto fs = sample_terms(64, 12, Theory::Sesquicartesian);
  std::size_t i = 0;
  for (auto _ : state) {
    const Term& f = fs[i++ % fs.size()];
    benchmark::DoNotOptimize(decide_equal(f, f, Theory::Sesquicartesian));
  }
}
BENCHMARK(BM_decide_equal);

void BM_closure_two_diagonal_forms(benchmark::State& state) {
  std::vector<Term> pair = {
      typecheck(parse_term("(m{p} * m{p}) . w{p + p}"), Theory::Dicartesian),
      typecheck(parse_term("m{p * p} . (w{p} + w{p})"), Theory::Dicartesian)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(equational_closure(pair, Theory::Dicartesian));
  }
}
BENCHMARK(BM_closure_two_diagonal_forms);

void BM_enumerate_homset(benchmark::State& state) {
  Formula a = parse_formula("O * p");
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_homset(a, a, Theory::Sesquicartesian));
  }
}
BENCHMARK(BM_enumerate_homset);

}  // namespace

BENCHMARK_MAIN();
