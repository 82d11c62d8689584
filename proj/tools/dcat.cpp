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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dcat/classify.hpp"
#include "dcat/decide.hpp"
#include "dcat/errors.hpp"
#include "dcat/graph.hpp"
#include "dcat/oracle.hpp"
#include "dcat/parse.hpp"
#include "dcat/relation.hpp"
#include "dcat/rewrite.hpp"
#include "dcat/term.hpp"

namespace {

using nlohmann::ordered_json;

// Arguments starting with "@" name a file holding the actual text.
std::string read_input(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::string path = arg.substr(1);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dcat::Error("cannot read input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  return text;
}

dcat::Term input_term(const std::string& arg, dcat::Theory theory) {
  return dcat::typecheck(dcat::parse_term(read_input(arg)), theory);
}

dcat::Formula input_formula(const std::string& arg, dcat::Theory theory) {
  dcat::Formula f = dcat::parse_formula(read_input(arg));
  if (theory == dcat::Theory::Sesquicartesian && dcat::contains_const_i(f))
    throw dcat::TheoryViolation("I does not exist sesquicartesianly: " +
                                dcat::print_formula(f));
  return f;
}

struct Options {
  std::string theory = "sesqui";
  std::string a, b;
  std::string format = "json";
  std::string mode = "cut";
  std::string base = "p";
  std::size_t n = 0;
  bool list = false;
  std::size_t samples = 1000;
  std::size_t size_budget = 6;
  std::uint64_t seed = 0;
  dcat::Budget budget;
};

int run_check(const Options& opt) {
  dcat::Theory theory = dcat::theory_from_name(opt.theory);
  dcat::Term f = input_term(opt.a, theory);
  dcat::Term g = input_term(opt.b, theory);
  dcat::Verdict v = dcat::decide_equal(f, g, theory);
  std::cout << dcat::verdict_json(v, dcat::graph_of(f), dcat::graph_of(g))
            << "\n";
  switch (v.kind) {
    case dcat::VerdictKind::Equal:
      return 0;
    case dcat::VerdictKind::NotEqual:
      return 1;
    case dcat::VerdictKind::Unknown:
      return 2;
  }
  return 70;
}

int run_graph(const Options& opt) {
  dcat::Theory theory = dcat::theory_from_name(opt.theory);
  dcat::Relation r = dcat::graph_of(input_term(opt.a, theory));
  std::cout << (opt.format == "dot" ? dcat::to_dot(r) : dcat::to_json(r) + "\n");
  return 0;
}

int run_normalize(const Options& opt) {
  dcat::Theory theory = dcat::theory_from_name(opt.theory);
  dcat::Term t = input_term(opt.a, theory);
  if (opt.mode == "kl") {
    dcat::KLDecomposition d = dcat::kl_normalize(t);
    std::cout << "k: " << dcat::print_term(d.kPart) << "\n"
              << "l: " << dcat::print_term(d.lPart) << "\n";
  } else {
    std::cout << dcat::print_term(dcat::cut_eliminate(t)) << "\n";
  }
  return 0;
}

int run_homset(const Options& opt) {
  dcat::Theory theory = dcat::theory_from_name(opt.theory);
  dcat::Formula a = input_formula(opt.a, theory);
  dcat::Formula b = input_formula(opt.b, theory);
  dcat::Homset h = dcat::enumerate_homset(a, b, theory);
  ordered_json j;
  j["source"] = dcat::print_formula(a);
  j["target"] = dcat::print_formula(b);
  j["theory"] = dcat::theory_name(theory);
  j["class_count"] = h.classes.size();
  j["certified_exact"] = h.certified_exact;
  j["classes"] = ordered_json::array();
  for (const auto& c : h.classes)
    j["classes"].push_back(
        {{"representative", dcat::print_term(c.representative)},
         {"graph", ordered_json::parse(dcat::to_json(c.graph))}});
  if (opt.list) {
    j["terms"] = ordered_json::array();
    for (const dcat::Term& t : dcat::enumerate_cut_free(a, b, theory)) {
      dcat::Relation g = dcat::graph_of(t);
      std::size_t cls = 0;
      while (cls < h.classes.size() && !(h.classes[cls].graph == g)) ++cls;
      j["terms"].push_back(
          {{"term", dcat::print_term(t)}, {"class", cls}});
    }
  }
  std::cout << j.dump() << "\n";
  return 0;
}

int run_classify(const Options& opt) {
  dcat::Theory theory = dcat::theory_from_name(opt.theory);
  dcat::Formula a = input_formula(opt.a, theory);
  ordered_json j;
  j["formula"] = dcat::print_formula(a);
  j["constant"] = dcat::is_constant(a);
  if (dcat::is_constant(a)) {
    dcat::ConstClass c = dcat::classify_constant(a, theory);
    j["kind"] = c.kind == dcat::ConstKind::O ? "O" : "I";
    j["forward"] = dcat::print_term(c.forward);
    j["backward"] = dcat::print_term(c.backward);
  }
  j["contradiction"] = dcat::is_contradiction(a);
  j["tautology"] = dcat::is_tautology(a);
  j["o_normal"] = dcat::is_o_normal(a);
  j["i_normal"] = dcat::is_i_normal(a);
  std::cout << j.dump() << "\n";
  return 0;
}

int run_counterexample(const Options& opt) {
  // The family lives in the full language: its types use I by construction.
  dcat::Formula base = input_formula(opt.base, dcat::Theory::Dicartesian);
  dcat::CounterexamplePair pair = dcat::counterexample_family(base, opt.n);
  dcat::Relation graph = dcat::graph_of(pair.f);
  if (!(dcat::graph_of(pair.g) == graph))
    throw dcat::InternalError("counterexample family graphs diverge at n = " +
                              std::to_string(opt.n));
  ordered_json j;
  j["n"] = opt.n;
  j["f"] = dcat::print_term(pair.f);
  j["g"] = dcat::print_term(pair.g);
  j["source"] = dcat::print_formula(pair.f.source());
  j["target"] = dcat::print_formula(pair.f.target());
  j["graph"] = ordered_json::parse(dcat::to_json(graph));
  std::cout << j.dump() << "\n";
  return 0;
}

int run_soundness(const Options& opt) {
  dcat::Theory theory = dcat::theory_from_name(opt.theory);
  dcat::SoundnessReport report =
      dcat::verify_soundness(opt.samples, opt.size_budget, theory, opt.seed);
  std::cout << dcat::to_json(report) << "\n";
  return report.ok() ? 0 : 70;
}

int run_faithfulness(const Options& opt) {
  dcat::Theory theory = dcat::theory_from_name(opt.theory);
  dcat::Formula a = input_formula(opt.a, theory);
  dcat::Formula b = input_formula(opt.b, theory);
  dcat::FaithfulnessReport report =
      dcat::verify_faithfulness_small(a, b, theory, opt.budget);
  std::cout << dcat::to_json(report) << "\n";
  if (!report.mixed_pairs.empty()) return 70;
  if (report.budget_exhausted) return 2;
  return report.partitions_match ? 0 : 70;
}

void add_theory_option(CLI::App* cmd, Options& opt) {
  cmd->add_option("--theory", opt.theory, "Theory: sesqui or dicart")
      ->check(CLI::IsMember({"sesqui", "dicart"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Arrow terms of free sesquicartesian and dicartesian categories:\n"
      "equality checking, normalization, graphs, hom-sets, and the\n"
      "brute-force equation oracle. Term and formula arguments may be\n"
      "given inline or as @path to read a file."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dcat 0.1.0");
  Options opt;
  if (const char* env = std::getenv("DCAT_BUDGET_STEPS"))
    opt.budget.max_steps = std::strtoull(env, nullptr, 10);

  CLI::App* check = app.add_subcommand("check", "Decide equality of two terms");
  check->add_option("f", opt.a, "first term")->required();
  check->add_option("g", opt.b, "second term")->required();
  add_theory_option(check, opt);

  CLI::App* graph = app.add_subcommand("graph", "Print a term's graph");
  graph->add_option("f", opt.a, "term")->required();
  graph->add_option("--format", opt.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  add_theory_option(graph, opt);

  CLI::App* normalize =
      app.add_subcommand("normalize", "Cut elimination or K-L decomposition");
  normalize->add_option("f", opt.a, "term")->required();
  normalize->add_option("--mode", opt.mode, "cut or kl")
      ->check(CLI::IsMember({"cut", "kl"}))
      ->capture_default_str();
  add_theory_option(normalize, opt);

  CLI::App* homset = app.add_subcommand(
      "homset", "Graph classes of the cut-free terms between two formulas");
  homset->add_option("A", opt.a, "source formula")->required();
  homset->add_option("B", opt.b, "target formula")->required();
  homset->add_flag("--list", opt.list, "also list every cut-free term");
  add_theory_option(homset, opt);

  CLI::App* classify = app.add_subcommand(
      "classify", "Constant class and normality flags of a formula");
  classify->add_option("A", opt.a, "formula")->required();
  add_theory_option(classify, opt);

  CLI::App* counterexample = app.add_subcommand(
      "counterexample",
      "Distinct dicartesian term pair with one graph and undecided equality");
  counterexample->add_option("--base", opt.base, "base formula")
      ->capture_default_str();
  counterexample->add_option("--n", opt.n, "tower height")->required();

  CLI::App* oracle =
      app.add_subcommand("oracle", "Brute-force equation verification");
  oracle->require_subcommand(1);
  CLI::App* soundness = oracle->add_subcommand(
      "soundness", "Random schema instances must preserve graphs");
  soundness->add_option("--samples", opt.samples, "instances to draw")
      ->capture_default_str();
  soundness->add_option("--size-budget", opt.size_budget,
                        "size budget for random subterms")
      ->capture_default_str();
  soundness->add_option("--seed", opt.seed, "random seed")
      ->capture_default_str();
  add_theory_option(soundness, opt);

  CLI::App* faithfulness = oracle->add_subcommand(
      "faithfulness",
      "Closure classes of one hom-set must match its graph classes");
  faithfulness->add_option("A", opt.a, "source formula")->required();
  faithfulness->add_option("B", opt.b, "target formula")->required();
  faithfulness
      ->add_option("--max-steps", opt.budget.max_steps, "closure step cap")
      ->capture_default_str();
  faithfulness
      ->add_option("--size-slack", opt.budget.size_slack,
                   "allowed term growth over the largest input")
      ->capture_default_str();
  add_theory_option(faithfulness, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (*check) return run_check(opt);
    if (*graph) return run_graph(opt);
    if (*normalize) return run_normalize(opt);
    if (*homset) return run_homset(opt);
    if (*classify) return run_classify(opt);
    if (*counterexample) return run_counterexample(opt);
    if (*soundness) return run_soundness(opt);
    if (*faithfulness) return run_faithfulness(opt);
  } catch (const dcat::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const dcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
  return 64;
}
