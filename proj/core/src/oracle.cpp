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

#include "dcat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <utility>

#include "json.hpp"

#include "dcat/decide.hpp"
#include "dcat/errors.hpp"
#include "dcat/graph.hpp"
#include "dcat/relation.hpp"
#include "dcat/schema.hpp"

namespace dcat {
namespace {

// Uniform draw from [0, n). The tiny modulo bias is irrelevant here and the
// result is reproducible across standard libraries, which distribution
// classes are not.
std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

const char* const kLetters[] = {"p", "q", "r"};

Formula random_atom(Theory theory, bool letters, std::mt19937_64& rng) {
  std::vector<Formula> pool;
  if (letters)
    for (const char* name : kLetters) pool.push_back(Formula::letter(name));
  pool.push_back(Formula::const_o());
  if (theory == Theory::Dicartesian) pool.push_back(Formula::const_i());
  return pool[pick(rng, pool.size())];
}

Formula random_formula_rec(std::size_t budget, Theory theory, bool letters,
                           std::mt19937_64& rng) {
  if (budget < 3 || pick(rng, 4) == 0) return random_atom(theory, letters, rng);
  std::size_t lb = 1 + pick(rng, budget - 2);
  std::size_t rb = budget - 1 - lb;
  Formula l = random_formula_rec(lb, theory, letters, rng);
  Formula r = random_formula_rec(rb, theory, letters, rng);
  return pick(rng, 2) == 0 ? Formula::product(l, r) : Formula::sum(l, r);
}

using InhabitedMemo = std::map<std::string, bool>;

bool inhabited_rec(const Formula& a, const Formula& b, Theory theory,
                   InhabitedMemo& memo) {
  std::string key = print_formula(a) + " |- " + print_formula(b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  memo[key] = false;  // guards the recursion; every rule shrinks the pair
  bool yes = a == b ||
             (theory == Theory::Dicartesian &&
              b.kind() == Formula::Kind::ConstI) ||
             a.kind() == Formula::Kind::ConstO;
  if (!yes && a.kind() == Formula::Kind::Product)
    yes = inhabited_rec(a.left(), b, theory, memo) ||
          inhabited_rec(a.right(), b, theory, memo);
  if (!yes && b.kind() == Formula::Kind::Sum)
    yes = inhabited_rec(a, b.left(), theory, memo) ||
          inhabited_rec(a, b.right(), theory, memo);
  if (!yes && b.kind() == Formula::Kind::Product)
    yes = inhabited_rec(a, b.left(), theory, memo) &&
          inhabited_rec(a, b.right(), theory, memo);
  if (!yes && a.kind() == Formula::Kind::Sum)
    yes = inhabited_rec(a.left(), b, theory, memo) &&
          inhabited_rec(a.right(), b, theory, memo);
  memo[key] = yes;
  return yes;
}

std::optional<Term> typed_rec(const Formula& a, const Formula& b,
                              std::size_t budget, Theory theory,
                              std::mt19937_64& rng, InhabitedMemo& memo) {
  if (!inhabited_rec(a, b, theory, memo)) return std::nullopt;
  enum Rule { RId, RK, RL, RGK1, RGK2, RGL1, RGL2, RPair, RCopair };
  std::vector<Rule> rules;
  if (a == b) rules.push_back(RId);
  if (theory == Theory::Dicartesian && b.kind() == Formula::Kind::ConstI)
    rules.push_back(RK);
  if (a.kind() == Formula::Kind::ConstO) rules.push_back(RL);
  // With the budget spent, stick to the single-node closers when available.
  if (budget > 1 || rules.empty()) {
    if (a.kind() == Formula::Kind::Product) {
      if (inhabited_rec(a.left(), b, theory, memo)) rules.push_back(RGK1);
      if (inhabited_rec(a.right(), b, theory, memo)) rules.push_back(RGK2);
    }
    if (b.kind() == Formula::Kind::Sum) {
      if (inhabited_rec(a, b.left(), theory, memo)) rules.push_back(RGL1);
      if (inhabited_rec(a, b.right(), theory, memo)) rules.push_back(RGL2);
    }
    if (b.kind() == Formula::Kind::Product &&
        inhabited_rec(a, b.left(), theory, memo) &&
        inhabited_rec(a, b.right(), theory, memo))
      rules.push_back(RPair);
    if (a.kind() == Formula::Kind::Sum &&
        inhabited_rec(a.left(), b, theory, memo) &&
        inhabited_rec(a.right(), b, theory, memo))
      rules.push_back(RCopair);
  }
  if (rules.empty()) return std::nullopt;
  std::size_t sub = budget > 1 ? budget - 1 : 1;
  std::size_t half = budget > 2 ? (budget - 1) / 2 : 1;
  switch (rules[pick(rng, rules.size())]) {
    case RId:
      return Term::id(a);
    case RK:
      return Term::k(a);
    case RL:
      return Term::l(b);
    case RGK1:
      if (auto f = typed_rec(a.left(), b, sub, theory, rng, memo))
        return Term::gk1(a.right(), *f);
      return std::nullopt;
    case RGK2:
      if (auto f = typed_rec(a.right(), b, sub, theory, rng, memo))
        return Term::gk2(a.left(), *f);
      return std::nullopt;
    case RGL1:
      if (auto f = typed_rec(a, b.left(), sub, theory, rng, memo))
        return Term::gl1(b.right(), *f);
      return std::nullopt;
    case RGL2:
      if (auto f = typed_rec(a, b.right(), sub, theory, rng, memo))
        return Term::gl2(b.left(), *f);
      return std::nullopt;
    case RPair: {
      auto f = typed_rec(a, b.left(), half, theory, rng, memo);
      auto g = typed_rec(a, b.right(), half, theory, rng, memo);
      if (f && g) return Term::pair(*f, *g);
      return std::nullopt;
    }
    case RCopair: {
      auto f = typed_rec(a.left(), b, half, theory, rng, memo);
      auto g = typed_rec(a.right(), b, half, theory, rng, memo);
      if (f && g) return Term::copair(*f, *g);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Term random_term_rec(const Formula& a, std::size_t budget, Theory theory,
                     std::mt19937_64& rng) {
  if (budget <= 1 && pick(rng, 8) != 0) return Term::id(a);
  enum Choice {
    CId,
    CCompose,
    CTimes,
    CPlus,
    CW,
    CK1,
    CK2,
    CM,
    CL1,
    CL2,
    CK,
    CL,
    CGK1,
    CGK2,
    CGL1,
    CGL2,
    CPair,
    CCopair,
  };
  std::vector<Choice> choices{CId, CW, CL1, CL2};
  bool binary = budget >= 3;
  if (binary) {
    // Composition dominates so random terms exercise the rewrites.
    choices.insert(choices.end(), {CCompose, CCompose, CCompose, CPair});
  }
  if (budget >= 2) choices.insert(choices.end(), {CGL1, CGL2});
  if (a.kind() == Formula::Kind::Product) {
    choices.insert(choices.end(), {CK1, CK2});
    if (binary) choices.push_back(CTimes);
    if (budget >= 2) choices.insert(choices.end(), {CGK1, CGK2});
  }
  if (a.kind() == Formula::Kind::Sum) {
    if (a.left() == a.right()) choices.push_back(CM);
    if (binary) {
      choices.push_back(CPlus);
      choices.push_back(CCopair);
    }
  }
  if (a.kind() == Formula::Kind::ConstO) choices.push_back(CL);
  if (theory == Theory::Dicartesian) choices.push_back(CK);
  std::size_t lb = binary ? 1 + pick(rng, budget - 2) : 1;
  std::size_t rb = binary ? budget - 1 - lb : 1;
  switch (choices[pick(rng, choices.size())]) {
    case CId:
      return Term::id(a);
    case CCompose: {
      Term f = random_term_rec(a, lb, theory, rng);
      Term g = random_term_rec(f.target(), rb, theory, rng);
      return Term::compose(g, f);
    }
    case CTimes:
      return Term::times(random_term_rec(a.left(), lb, theory, rng),
                         random_term_rec(a.right(), rb, theory, rng));
    case CPlus:
      return Term::plus(random_term_rec(a.left(), lb, theory, rng),
                        random_term_rec(a.right(), rb, theory, rng));
    case CW:
      return Term::w(a);
    case CK1:
      return Term::k1(a.left(), a.right());
    case CK2:
      return Term::k2(a.left(), a.right());
    case CM:
      return Term::m(a.left());
    case CL1:
      return Term::l1(a, random_formula_rec(2, theory, true, rng));
    case CL2:
      return Term::l2(random_formula_rec(2, theory, true, rng), a);
    case CK:
      return Term::k(a);
    case CL:
      return Term::l(random_formula_rec(3, theory, true, rng));
    case CGK1:
      return Term::gk1(a.right(),
                       random_term_rec(a.left(), budget - 1, theory, rng));
    case CGK2:
      return Term::gk2(a.left(),
                       random_term_rec(a.right(), budget - 1, theory, rng));
    case CGL1:
      return Term::gl1(random_formula_rec(2, theory, true, rng),
                       random_term_rec(a, budget - 1, theory, rng));
    case CGL2:
      return Term::gl2(random_formula_rec(2, theory, true, rng),
                       random_term_rec(a, budget - 1, theory, rng));
    case CPair:
      return Term::pair(random_term_rec(a, lb, theory, rng),
                        random_term_rec(a, rb, theory, rng));
    case CCopair: {
      Term f = random_term_rec(a.left(), lb, theory, rng);
      InhabitedMemo memo;
      auto g = typed_rec(a.right(), f.target(), rb, theory, rng, memo);
      if (g) return Term::copair(f, *g);
      return Term::id(a);  // copairing target unreachable from the right leg
    }
  }
  return Term::id(a);
}

// Position bookkeeping over desugared trees: only the three binary
// operations carry children there.

const Term& subterm_at(const Term& t, const std::vector<std::size_t>& path,
                       std::size_t depth) {
  if (depth == path.size()) return t;
  return subterm_at(t.child(path[depth]), path, depth + 1);
}

Term rebuild_binary(const Term& t, std::size_t idx, const Term& nc) {
  Term c0 = idx == 0 ? nc : t.child(0);
  Term c1 = idx == 1 ? nc : t.child(1);
  switch (t.kind()) {
    case TermKind::Compose:
      return Term::compose(c0, c1);
    case TermKind::Times:
      return Term::times(c0, c1);
    case TermKind::Plus:
      return Term::plus(c0, c1);
    default:
      throw InternalError("closure path descends into a leaf at " +
                          print_term(t));
  }
}

Term replace_at(const Term& t, const std::vector<std::size_t>& path,
                std::size_t depth, const Term& repl) {
  if (depth == path.size()) return repl;
  return rebuild_binary(
      t, path[depth],
      replace_at(t.child(path[depth]), path, depth + 1, repl));
}

void collect_paths(const Term& t, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  out.push_back(cur);
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    cur.push_back(i);
    collect_paths(t.child(i), cur, out);
    cur.pop_back();
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  void grow() { parent.push_back(parent.size()); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

struct ClosureGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    std::size_t schema;  // registry index
    bool forward;
    std::vector<std::size_t> path;
  };
  std::vector<Term> terms;
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> adj;  // node -> incident edge indices
};

ClosureResult equational_closure(const std::vector<Term>& terms, Theory theory,
                                 const Budget& budget) {
  if (terms.empty()) {
    ClosureResult empty;
    empty.graph = std::make_shared<ClosureGraph>();
    return empty;
  }
  for (const Term& t : terms) {
    check_theory(t, theory);
    if (t.source() != terms.front().source() ||
        t.target() != terms.front().target())
      throw TypeMismatch("closure inputs must share one type; got " +
                         print_formula(terms.front().source()) + " -> " +
                         print_formula(terms.front().target()) + " and " +
                         print_formula(t.source()) + " -> " +
                         print_formula(t.target()));
  }

  auto graph = std::make_shared<ClosureGraph>();
  ClosureGraph& g = *graph;
  UnionFind uf;
  std::map<std::string, std::size_t> index;
  // Breadth-first by rewrite distance from the inputs, so short connecting
  // chains are found before the small-term flood the size-increasing
  // readings generate; size breaks ties.
  using Ranked = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::priority_queue<Ranked, std::vector<Ranked>, std::greater<Ranked>> frontier;

  auto intern = [&](const Term& t, std::size_t depth) {
    auto [it, fresh] = index.try_emplace(print_term(t), g.terms.size());
    if (fresh) {
      g.terms.push_back(t);
      g.adj.emplace_back();
      uf.grow();
      frontier.emplace(depth, term_size(t), it->second);
    }
    return it->second;
  };

  ClosureResult result;
  std::size_t cap = 0;
  for (const Term& t : terms) {
    Term d = desugar(t);
    cap = std::max(cap, term_size(d));
    result.input_ids.push_back(intern(d, 0));
  }
  cap += budget.size_slack;

  auto all_connected = [&] {
    for (std::size_t id : result.input_ids)
      if (uf.find(id) != uf.find(result.input_ids.front())) return false;
    return true;
  };

  const auto& registry = schema_registry();
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < registry.size(); ++i)
    if (theory == Theory::Dicartesian || registry[i].sesqui_ok)
      active.push_back(i);

  bool done = all_connected();
  std::vector<bool> expanded;
  while (!done && !frontier.empty()) {
    if (result.steps_used == budget.max_steps) {
      result.budget_exhausted = true;
      break;
    }
    auto [depth, size, id] = frontier.top();
    (void)size;
    frontier.pop();
    if (id < expanded.size() && expanded[id]) continue;
    if (id >= expanded.size()) expanded.resize(id + 1, false);
    expanded[id] = true;
    ++result.steps_used;

    Term term = g.terms[id];
    std::vector<std::vector<std::size_t>> paths;
    std::vector<std::size_t> scratch;
    collect_paths(term, scratch, paths);
    for (const auto& path : paths) {
      const Term& sub = subterm_at(term, path, 0);
      for (std::size_t si : active) {
        for (bool fwd : {true, false}) {
          const auto& apply = fwd ? registry[si].forward : registry[si].backward;
          if (!apply) continue;
          auto replaced = apply(sub);
          if (!replaced) continue;
          Term next = replace_at(term, path, 0, *replaced);
          if (term_size(next) > cap) continue;
          std::size_t nid = intern(next, depth + 1);
          std::size_t eid = g.edges.size();
          g.edges.push_back({id, nid, si, fwd, path});
          g.adj[id].push_back(eid);
          g.adj[nid].push_back(eid);
          if (uf.unite(id, nid) && all_connected()) {
            done = true;
            break;
          }
        }
        if (done) break;
      }
      if (done) break;
    }
  }

  result.terms_seen = g.terms.size();
  result.graph = graph;

  std::map<std::size_t, std::size_t> roots;
  for (std::size_t id : result.input_ids) {
    auto it = roots.try_emplace(uf.find(id), roots.size()).first;
    result.class_of.push_back(it->second);
  }
  result.class_count = roots.size();
  return result;
}

std::optional<std::vector<TraceStep>> ClosureResult::trace(std::size_t i,
                                                           std::size_t j) const {
  if (!connected(i, j)) return std::nullopt;
  const ClosureGraph& g = *graph;
  std::size_t from = input_ids[i];
  std::size_t to = input_ids[j];
  if (from == to) return std::vector<TraceStep>{};

  std::vector<std::size_t> via(g.terms.size(), SIZE_MAX);  // incoming edge
  std::queue<std::size_t> bfs;
  bfs.push(from);
  via[from] = SIZE_MAX - 1;  // visited marker for the origin
  while (!bfs.empty() && via[to] == SIZE_MAX) {
    std::size_t u = bfs.front();
    bfs.pop();
    for (std::size_t eid : g.adj[u]) {
      const auto& e = g.edges[eid];
      std::size_t v = e.from == u ? e.to : e.from;
      if (via[v] != SIZE_MAX) continue;
      via[v] = eid;
      bfs.push(v);
    }
  }
  if (via[to] == SIZE_MAX)
    throw InternalError("closure classes agree but no edge path was recorded");

  std::vector<TraceStep> steps;
  const auto& registry = schema_registry();
  for (std::size_t v = to; v != from;) {
    const auto& e = g.edges[via[v]];
    bool reversed = e.to != v;
    std::size_t u = reversed ? e.to : e.from;
    steps.push_back({registry[e.schema].name, registry[e.schema].variant,
                     e.forward, reversed, e.path, g.terms[v]});
    v = u;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

bool replay_trace(const Term& start, const std::vector<TraceStep>& steps,
                  const Term& end) {
  Term cur = desugar(start);
  for (const TraceStep& step : steps) {
    const EquationSchema* schema = find_schema(step.schema, step.variant);
    if (!schema) return false;
    const auto& apply = step.forward ? schema->forward : schema->backward;
    if (!apply) return false;
    // A reversed step claims the application carries step.result back to the
    // current term; a plain one that it carries the current term forward.
    const Term& source = step.reversed ? step.result : cur;
    const Term& expect = step.reversed ? cur : step.result;
    auto replaced = apply(subterm_at(source, step.path, 0));
    if (!replaced) return false;
    if (replace_at(source, step.path, 0, *replaced) != expect) return false;
    cur = step.result;
  }
  return cur == desugar(end);
}

Formula random_formula(std::size_t sizeBudget, Theory theory,
                       std::mt19937_64& rng) {
  return random_formula_rec(std::max<std::size_t>(sizeBudget, 1), theory, true,
                            rng);
}

Formula random_formula(std::size_t sizeBudget, Theory theory,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_formula(sizeBudget, theory, rng);
}

Formula random_constant_formula(std::size_t sizeBudget, Theory theory,
                                std::mt19937_64& rng) {
  return random_formula_rec(std::max<std::size_t>(sizeBudget, 1), theory, false,
                            rng);
}

Formula random_constant_formula(std::size_t sizeBudget, Theory theory,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_constant_formula(sizeBudget, theory, rng);
}

Term random_term(const Formula& source, std::size_t sizeBudget, Theory theory,
                 std::mt19937_64& rng) {
  if (sizeBudget <= 1) return Term::id(source);
  return random_term_rec(source, sizeBudget, theory, rng);
}

Term random_term(const Formula& source, std::size_t sizeBudget, Theory theory,
                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_term(source, sizeBudget, theory, rng);
}

Term random_term(std::size_t sizeBudget, Theory theory, std::mt19937_64& rng) {
  Formula source =
      random_formula(std::min<std::size_t>(std::max<std::size_t>(sizeBudget, 1), 4),
                     theory, rng);
  return random_term(source, sizeBudget, theory, rng);
}

Term random_term(std::size_t sizeBudget, Theory theory, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_term(sizeBudget, theory, rng);
}

std::optional<Term> random_term_typed(const Formula& a, const Formula& b,
                                      std::size_t sizeBudget, Theory theory,
                                      std::mt19937_64& rng) {
  InhabitedMemo memo;
  return typed_rec(a, b, std::max<std::size_t>(sizeBudget, 1), theory, rng,
                   memo);
}

bool homset_inhabited(const Formula& a, const Formula& b, Theory theory) {
  InhabitedMemo memo;
  return inhabited_rec(a, b, theory, memo);
}

SoundnessReport verify_soundness(std::size_t sampleSize, std::size_t sizeBudget,
                                 Theory theory, std::uint64_t seed) {
  SoundnessReport report;
  report.theory = theory;
  report.seed = seed;
  report.samples_requested = sampleSize;

  std::mt19937_64 rng(seed);
  const auto& registry = schema_registry();
  std::vector<const EquationSchema*> active;
  for (const auto& s : registry)
    if (theory == Theory::Dicartesian || s.sesqui_ok) active.push_back(&s);

  for (std::size_t i = 0; i < sampleSize; ++i) {
    const EquationSchema& s = *active[i % active.size()];
    auto inst = s.sample(rng, theory, sizeBudget);
    if (!inst) continue;
    const auto& [left, right] = *inst;
    check_theory(left, theory);
    check_theory(right, theory);
    ++report.instances_checked;
    Relation gl = graph_of(left);
    Relation gr = graph_of(right);
    if (left.source() != right.source() || left.target() != right.target() ||
        gl != gr)
      report.violations.push_back({s.name, s.variant, print_term(left),
                                   print_term(right), to_json(gl), to_json(gr)});
  }
  return report;
}

std::string to_json(const SoundnessReport& r) {
  nlohmann::ordered_json j;
  j["theory"] = theory_name(r.theory);
  j["seed"] = r.seed;
  j["samples_requested"] = r.samples_requested;
  j["instances_checked"] = r.instances_checked;
  j["ok"] = r.ok();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"schema", v.schema},
                               {"variant", v.variant},
                               {"left", v.left},
                               {"right", v.right},
                               {"left_graph", nlohmann::ordered_json::parse(v.left_graph)},
                               {"right_graph", nlohmann::ordered_json::parse(v.right_graph)}});
  return j.dump();
}

FaithfulnessReport verify_faithfulness_small(const Formula& a, const Formula& b,
                                             Theory theory,
                                             const Budget& budget) {
  FaithfulnessReport report;
  report.source = print_formula(a);
  report.target = print_formula(b);
  report.theory = theory;

  std::vector<Term> terms = enumerate_cut_free(a, b, theory);
  report.term_count = terms.size();
  if (terms.empty()) {
    report.partitions_match = true;
    return report;
  }

  std::vector<Relation> graphs;
  graphs.reserve(terms.size());
  for (const Term& t : terms) graphs.push_back(graph_of(t));
  std::vector<std::vector<std::size_t>> groups;  // term indices per graph class
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool placed = false;
    for (auto& group : groups)
      if (graphs[group.front()] == graphs[i]) {
        group.push_back(i);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({i});
  }
  report.graph_classes = groups.size();

  // The schemas preserve graphs, so closure classes refine graph classes and
  // the closure only has to reunite each graph class. Running it per class
  // lets the connected early exit fire instead of saturating the whole
  // reachable space, which the mixed-class hom-sets would make unbounded in
  // practice. A cross-class merge would be a schema soundness bug; those are
  // checked instance-wise by verify_soundness.
  for (const auto& group : groups) {
    if (group.size() < 2) {
      ++report.closure_classes;
      continue;
    }
    std::vector<Term> members;
    for (std::size_t i : group) members.push_back(terms[i]);
    ClosureResult closure = equational_closure(members, theory, budget);
    report.closure_classes += closure.class_count;
    report.budget_exhausted |= closure.budget_exhausted;
    report.steps_used += closure.steps_used;
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j)
        if (!closure.connected(i, j))
          report.unresolved_pairs.emplace_back(print_term(terms[group[i]]),
                                               print_term(terms[group[j]]));
  }
  report.partitions_match = report.closure_classes == report.graph_classes;
  return report;
}

std::string to_json(const FaithfulnessReport& r) {
  nlohmann::ordered_json j;
  j["source"] = r.source;
  j["target"] = r.target;
  j["theory"] = theory_name(r.theory);
  j["term_count"] = r.term_count;
  j["closure_classes"] = r.closure_classes;
  j["graph_classes"] = r.graph_classes;
  j["partitions_match"] = r.partitions_match;
  j["budget_exhausted"] = r.budget_exhausted;
  j["steps_used"] = r.steps_used;
  j["ok"] = r.ok();
  auto pairs = [](const std::vector<std::pair<std::string, std::string>>& ps) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [x, y] : ps) arr.push_back({{"left", x}, {"right", y}});
    return arr;
  };
  j["mixed_pairs"] = pairs(r.mixed_pairs);
  j["unresolved_pairs"] = pairs(r.unresolved_pairs);
  return j.dump();
}

}  // namespace dcat
