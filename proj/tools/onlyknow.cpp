// Command-line front end.
//
// Exit codes: 0 sat / valid / yes, 1 unsat / invalid / no, 2 usage or input
// error, 3 time budget exhausted.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "onlyknow/autoepistemic.hpp"
#include "onlyknow/classify.hpp"
#include "onlyknow/corpus.hpp"
#include "onlyknow/decision.hpp"
#include "onlyknow/finite_semantics.hpp"
#include "onlyknow/k45_tableau.hpp"
#include "onlyknow/kripke.hpp"
#include "onlyknow/normal_form.hpp"
#include "onlyknow/syntax.hpp"

using namespace onlyknow;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;
constexpr int kTimeout = 3;

struct Config {
  std::string format = "text";
  double time_budget = 0;  // seconds, 0 = unlimited
  int agents = 0;          // 0 = highest index mentioned
  bool json_lines() const { return format == "json-lines"; }

  std::optional<int> agent_bound() const { return agents > 0 ? std::optional<int>(agents) : std::nullopt; }

  DecisionOptions decision(bool trace = false) const {
    DecisionOptions o;
    o.trace = trace;
    if (time_budget > 0) {
      o.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(time_budget));
    }
    return o;
  }
};

long long millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int emit(const Config& cfg, const std::string& input, const std::string& verdict, Clock::time_point start,
         const std::optional<std::string>& counterexample = std::nullopt) {
  if (cfg.json_lines()) {
    json j;
    j["input"] = input;
    j["verdict"] = verdict;
    j["millis"] = millis_since(start);
    if (counterexample) j["counterexample"] = *counterexample;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << verdict << "\n";
    if (counterexample) std::cout << "counterexample: " << *counterexample << "\n";
  }
  return verdict == "SAT" || verdict == "VALID" || verdict == "YES" ? kYes : kNo;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_trace(const std::vector<TraceStep>& trace) {
  for (const TraceStep& s : trace) {
    std::cout << std::string(2 * static_cast<std::size_t>(s.level), ' ') << s.rule << " [depth " << s.modal_depth
              << "] " << print(s.formula) << "\n";
  }
}

int run_decide(const Config& cfg, const std::string& text, const std::string& mode, bool trace) {
  const auto start = Clock::now();
  const Formula f = parse(text, cfg.agent_bound());
  Decider decider(cfg.decision(trace));
  try {
    const Verdict v = mode == "sat" ? decider.consistent(f) : decider.valid(f);
    if (trace && !cfg.json_lines()) print_trace(v.trace);
    return emit(cfg, text, to_string(v.status), start);
  } catch (const TimeBudgetExceeded&) {
    const std::string partial = "partial: " + std::to_string(decider.disjuncts_examined()) + " disjuncts examined";
    if (cfg.json_lines()) {
      json j;
      j["input"] = text;
      j["verdict"] = "TIMEOUT";
      j["millis"] = millis_since(start);
      j["partial"] = partial;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "TIMEOUT (" << partial << ")\n";
    }
    return kTimeout;
  }
}

json batch_line(const Config& cfg, const std::string& line, const std::string& mode) {
  const auto start = Clock::now();
  json out;
  CorpusEntry entry;
  const bool structured = !line.empty() && line.front() == '{';
  try {
    if (structured) {
      entry = corpus_entry_from_json(line);
    } else {
      entry.formula = line;
      entry.mode = mode;
      entry.semantics = "ax";
      entry.agents = cfg.agents;
    }
    out["input"] = entry.formula;
    const EntryResult r = run_entry(entry, cfg.decision());
    out["verdict"] = r.verdict;
    out["millis"] = millis_since(start);
    if (r.counterexample) out["counterexample"] = *r.counterexample;
    if (!entry.expected.empty()) {
      out["expected"] = entry.expected;
      out["match"] = entry.expected == r.verdict;
    }
  } catch (const TimeBudgetExceeded&) {
    if (!out.contains("input")) out["input"] = line;
    out["verdict"] = "TIMEOUT";
    out["millis"] = millis_since(start);
  } catch (const std::exception& e) {
    if (!out.contains("input")) out["input"] = line;
    out["verdict"] = "ERROR";
    out["millis"] = millis_since(start);
    out["error"] = e.what();
  }
  return out;
}

int run_batch(const Config& cfg, const std::string& path, const std::string& mode, int jobs) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  std::vector<json> results(lines.size());
  jobs = std::max(1, jobs);
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t k = static_cast<std::size_t>(t); k < lines.size(); k += static_cast<std::size_t>(jobs)) {
        results[k] = batch_line(cfg, lines[k], mode);
      }
    });
  }
  for (auto& w : workers) w.join();
  int code = kYes;
  for (const json& r : results) {
    std::cout << r.dump() << "\n";
    const std::string verdict = r["verdict"];
    if (verdict == "ERROR") code = kError;
    if (verdict == "TIMEOUT" && code != kError) code = kTimeout;
    if (r.contains("match") && !r["match"].get<bool>() && code == kYes) code = kNo;
  }
  return code;
}

void print_classes(const Formula& f, AgentId agent, int agents) {
  const FormulaClass c = classify(f, agent, agents);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "propositional: " << yn(c.propositional) << "\n"
            << "basic: " << yn(c.basic) << "\n"
            << agent << "-objective: " << yn(c.i_objective) << "\n"
            << agent << "-subjective: " << yn(c.i_subjective) << "\n"
            << "onl-minus: " << yn(c.in_onl_minus) << "\n"
            << "onl-plus: " << yn(c.in_onl_plus) << "\n"
            << "modal depth: " << c.modal_depth << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reasoning about only knowing with many agents"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--time-budget", cfg.time_budget, "Seconds per query (also ONLYKNOW_TIME_BUDGET)");

  std::string formula;
  auto add_formula = [&](CLI::App* sub) { sub->add_option("formula", formula, "Formula")->required(); };
  auto add_agents = [&](CLI::App* sub) {
    sub->add_option("--agents", cfg.agents, "Agent count (default: highest index mentioned)")->check(CLI::PositiveNumber);
  };

  auto* parse_cmd = app.add_subcommand("parse", "Parse and print a formula");
  add_formula(parse_cmd);
  add_agents(parse_cmd);

  int agent = 1;
  auto* classify_cmd = app.add_subcommand("classify", "Syntactic classes of a formula");
  add_formula(classify_cmd);
  add_agents(classify_cmd);
  classify_cmd->add_option("--agent", agent, "Agent for objectivity / subjectivity")->check(CLI::PositiveNumber);

  std::size_t limit = 0;
  auto* nf_cmd = app.add_subcommand("nf", "Normal-form disjuncts, one per line");
  add_formula(nf_cmd);
  add_agents(nf_cmd);
  nf_cmd->add_option("--limit", limit, "Stop after this many disjuncts");

  std::string mode = "valid";
  bool trace = false;
  auto* decide_cmd = app.add_subcommand("decide", "Decide satisfiability or validity");
  add_formula(decide_cmd);
  add_agents(decide_cmd);
  decide_cmd->add_option("--mode", mode, "sat or valid")->check(CLI::IsMember({"sat", "valid"}));
  decide_cmd->add_flag("--trace", trace, "Print the recursion trace");

  std::string witness_path;
  auto* k45_cmd = app.add_subcommand("k45", "K45 tableau satisfiability for basic formulas");
  add_formula(k45_cmd);
  add_agents(k45_cmd);
  k45_cmd->add_option("--witness", witness_path, "Write a satisfying model as JSON");

  std::string phi_list;
  std::string semantics = "extended";
  int bound = 2;
  auto* oracle_cmd = app.add_subcommand("oracle", "Single-agent validity by enumeration");
  add_formula(oracle_cmd);
  oracle_cmd->add_option("--phi", phi_list, "Alphabet, e.g. p,q")->required();
  oracle_cmd->add_option("--semantics", semantics, "levesque or extended")
      ->check(CLI::IsMember({"levesque", "extended"}));
  oracle_cmd->add_option("--bound", bound, "Largest alphabet to enumerate");

  auto* reduce_cmd = app.add_subcommand("reduce", "Rewrite N away over a finite alphabet");
  add_formula(reduce_cmd);
  reduce_cmd->add_option("--phi", phi_list, "Alphabet, e.g. p,q")->required();

  std::string model_path;
  std::string world;
  std::string kripke_semantics = "basic";
  auto* kripke_cmd = app.add_subcommand("kripke", "Finite Kripke structures");
  kripke_cmd->require_subcommand(1);
  auto* kcheck = kripke_cmd->add_subcommand("check", "Evaluate a formula at a world");
  kcheck->add_option("model", model_path, "Model JSON file")->required();
  kcheck->add_option("formula", formula, "Formula")->required();
  kcheck->add_option("--world", world, "World name")->required();
  kcheck->add_option("--semantics", kripke_semantics, "basic, naive or fixed")
      ->check(CLI::IsMember({"basic", "naive", "fixed"}));
  auto* kvalidate = kripke_cmd->add_subcommand("validate", "Check transitivity and Euclideanness");
  kvalidate->add_option("model", model_path, "Model JSON file")->required();

  std::string kb;
  std::string query;
  auto* believes_cmd = app.add_subcommand("believes", "Does O_i kb entail L_i query?");
  believes_cmd->add_option("--agent", agent, "Agent")->check(CLI::PositiveNumber);
  believes_cmd->add_option("--kb", kb, "Knowledge base")->required();
  believes_cmd->add_option("--query", query, "Query")->required();
  add_agents(believes_cmd);

  auto* okn_cmd = app.add_subcommand("okn-sets", "World sets W with: w in W iff (W, w) |= formula");
  add_formula(okn_cmd);
  okn_cmd->add_option("--phi", phi_list, "Alphabet, e.g. p")->required();
  okn_cmd->add_option("--bound", bound, "Largest alphabet to enumerate");

  std::string batch_path;
  int jobs = 1;
  auto* batch_cmd = app.add_subcommand("batch", "Decide every line of a file (formula text or corpus JSON)");
  batch_cmd->add_option("file", batch_path, "Input file")->required();
  batch_cmd->add_option("--mode", mode, "Mode for plain formula lines")->check(CLI::IsMember({"sat", "valid"}));
  batch_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_agents(batch_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  if (cfg.time_budget == 0) {
    if (const char* env = std::getenv("ONLYKNOW_TIME_BUDGET")) {
      try {
        cfg.time_budget = std::stod(env);
      } catch (const std::exception&) {
        std::cerr << "error: ONLYKNOW_TIME_BUDGET is not a number\n";
        return kError;
      }
    }
  }

  try {
    const auto start = Clock::now();
    if (*parse_cmd) {
      std::cout << print(parse(formula, cfg.agent_bound())) << "\n";
      return kYes;
    }
    if (*classify_cmd) {
      print_classes(parse(formula, cfg.agent_bound()), agent, cfg.agents);
      return kYes;
    }
    if (*nf_cmd) {
      DisjunctStream stream(parse(formula, cfg.agent_bound()));
      std::size_t n = 0;
      while (limit == 0 || n < limit) {
        auto d = stream.next();
        if (!d) break;
        std::cout << print(d->to_formula()) << "\n";
        ++n;
      }
      if (n == 0) std::cout << "false\n";
      return kYes;
    }
    if (*decide_cmd) return run_decide(cfg, formula, mode, trace);
    if (*k45_cmd) {
      const K45Result r = k45_sat(parse(formula, cfg.agent_bound()), cfg.agents, !witness_path.empty());
      if (r.witness) {
        std::ofstream out(witness_path);
        if (!out) throw Error("cannot write " + witness_path);
        out << kripke_to_json(*r.witness) << "\n";
      }
      return emit(cfg, formula, r.satisfiable ? "SAT" : "UNSAT", start);
    }
    if (*oracle_cmd) {
      const Alphabet phi = Alphabet::from_list(phi_list);
      const OracleResult r = oracle_valid(parse(formula), phi, semantics == "levesque" ? Semantics::levesque : Semantics::extended, bound);
      std::optional<std::string> cex;
      if (r.counterexample) cex = describe(phi, *r.counterexample);
      return emit(cfg, formula, r.valid ? "VALID" : "INVALID", start, cex);
    }
    if (*reduce_cmd) {
      std::cout << print(reduce_n_to_l(parse(formula), Alphabet::from_list(phi_list))) << "\n";
      return kYes;
    }
    if (*kcheck) {
      const KripkeStructure m = kripke_from_json(read_file(model_path));
      const Formula f = parse(formula);
      const int w = m.index_of(world);
      bool holds = false;
      if (kripke_semantics == "basic") holds = check_basic(m, w, f);
      if (kripke_semantics == "naive") holds = check_naive_n(m, w, f);
      if (kripke_semantics == "fixed") holds = check_fixed_n(m, w, f);
      emit(cfg, formula, holds ? "TRUE" : "FALSE", start);
      return holds ? kYes : kNo;
    }
    if (*kvalidate) {
      const ValidationReport r = validate(kripke_from_json(read_file(model_path)));
      for (const Violation& v : r.transitivity) {
        std::cout << "agent " << v.agent << " not transitive: " << v.u << " -> " << v.v << " -> " << v.w << " but not "
                  << v.u << " -> " << v.w << "\n";
      }
      for (const Violation& v : r.euclidean) {
        std::cout << "agent " << v.agent << " not Euclidean: " << v.u << " -> " << v.v << ", " << v.u << " -> " << v.w
                  << " but not " << v.v << " -> " << v.w << "\n";
      }
      std::cout << (r.ok() ? "K45" : "NOT K45") << "\n";
      return r.ok() ? kYes : kNo;
    }
    if (*believes_cmd) {
      const BeliefQuery q{agent, parse(kb, cfg.agent_bound()), parse(query, cfg.agent_bound())};
      try {
        return emit(cfg, "O" + std::to_string(agent) + " (" + kb + ") -> L" + std::to_string(agent) + " (" + query + ")",
                    believes(q, cfg.decision()) ? "YES" : "NO", start);
      } catch (const TimeBudgetExceeded&) {
        std::cout << "TIMEOUT (partial: no verdict)\n";
        return kTimeout;
      }
    }
    if (*okn_cmd) {
      const Alphabet phi = Alphabet::from_list(phi_list);
      const auto sets = only_knowing_sets(parse(formula), phi, bound);
      for (WorldSet s : sets) std::cout << phi.describe(s) << "\n";
      if (sets.empty()) std::cout << "none\n";
      return kYes;
    }
    if (*batch_cmd) return run_batch(cfg, batch_path, mode, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
