#include "onlyknow/corpus.hpp"

#include <fstream>
#include <map>

#include <json.hpp>

#include "onlyknow/classify.hpp"
#include "onlyknow/decision.hpp"
#include "onlyknow/finite_semantics.hpp"
#include "onlyknow/k45_tableau.hpp"
#include "onlyknow/syntax.hpp"

namespace onlyknow {

Profile profile_from_string(std::string_view name) {
  if (name == "basic") return Profile::basic;
  if (name == "onl_minus") return Profile::onl_minus;
  if (name == "full") return Profile::full;
  throw Error("unknown profile '" + std::string(name) + "'");
}

FormulaGenerator::FormulaGenerator(std::uint64_t seed, GeneratorOptions options)
    : rng_(seed), options_(options) {
  if (options_.atoms < 1 || options_.atoms > 3) throw Error("generator supports 1 to 3 atoms");
  if (options_.agents < 1) throw Error("generator needs at least one agent");
}

Formula FormulaGenerator::leaf() {
  static const char* const names[] = {"p", "q", "r"};
  if (pick(12) == 0) return Formula::constant(pick(2) == 0);
  return Formula::atom(names[pick(static_cast<std::uint64_t>(options_.atoms))]);
}

// `scope`: 0 at top level, the agent of every enclosing modality if they
// agree, -1 otherwise.
Formula FormulaGenerator::grow(int fuel, int depth_left, int scope) {
  if (fuel <= 1 || (fuel < options_.max_size && pick(6) == 0)) return leaf();
  const std::uint64_t choice = pick(10);
  if (choice >= 6 && depth_left > 0) {
    const AgentId agent = 1 + static_cast<AgentId>(pick(static_cast<std::uint64_t>(options_.agents)));
    const int inner = scope == 0 || scope == agent ? agent : -1;
    switch (options_.profile) {
      case Profile::basic:
        return make_L(agent, grow(fuel - 1, depth_left - 1, inner));
      case Profile::onl_minus: {
        const bool n_allowed = scope == 0 || scope == agent;
        if (n_allowed && pick(2) == 0) return make_N(agent, grow(fuel - 1, depth_left - 1, inner));
        return make_L(agent, grow(fuel - 1, depth_left - 1, inner));
      }
      case Profile::full: {
        const std::uint64_t op = pick(options_.allow_val ? 5 : 4);
        if (op == 4) return make_val(grow(fuel - 1, depth_left - 1, scope));
        if (op < 2) return make_L(agent, grow(fuel - 1, depth_left - 1, inner));
        return make_N(agent, grow(fuel - 1, depth_left - 1, inner));
      }
    }
  }
  if (choice == 0 || choice >= 6) return make_not(grow(fuel - 1, depth_left, scope));
  const int left = 1 + static_cast<int>(pick(static_cast<std::uint64_t>(std::max(1, fuel - 2))));
  const Formula a = grow(left, depth_left, scope);
  const Formula b = grow(fuel - 1 - left, depth_left, scope);
  switch (choice) {
    case 1:
    case 2:
      return make_and(a, b);
    case 3:
      return make_or(a, b);
    case 4:
      return make_implies(a, b);
    default:
      return pick(2) == 0 ? make_iff(a, b) : make_and(a, b);
  }
}

Formula FormulaGenerator::next() { return grow(options_.max_size, options_.max_depth, 0); }

Formula generate_random(std::uint64_t seed, const GeneratorOptions& options) {
  return FormulaGenerator(seed, options).next();
}

namespace {

Formula substitute(const Formula& f, const std::map<std::string, Formula>& by) {
  switch (f.op()) {
    case Op::Atom: {
      auto it = by.find(f.name());
      return it == by.end() ? f : it->second;
    }
    case Op::Not:
      return make_not(substitute(f.lhs(), by));
    case Op::And:
      return make_and(substitute(f.lhs(), by), substitute(f.rhs(), by));
    case Op::Or:
      return make_or(substitute(f.lhs(), by), substitute(f.rhs(), by));
    case Op::Implies:
      return make_implies(substitute(f.lhs(), by), substitute(f.rhs(), by));
    case Op::Iff:
      return make_iff(substitute(f.lhs(), by), substitute(f.rhs(), by));
    default:
      return f;
  }
}

class InstanceBuilder {
 public:
  InstanceBuilder(const std::vector<Formula>& pool, int agents, std::uint64_t seed)
      : pool_(pool), agents_(agents), rng_(seed) {
    if (pool_.empty()) throw Error("axiom pool is empty");
    for (const Formula& f : pool_) {
      if (is_propositional(f)) propositional_.push_back(f);
    }
  }

  AgentId agent() { return 1 + static_cast<AgentId>(rng_() % static_cast<std::uint64_t>(agents_)); }
  const Formula& any() { return pool_[rng_() % pool_.size()]; }

  std::optional<Formula> objective(AgentId i) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const Formula& f = any();
      if (is_objective_for(f, i)) return f;
    }
    return std::nullopt;
  }

  Formula subjective(AgentId i) {
    const Formula a = any();
    const Formula b = any();
    switch (rng_() % 6) {
      case 0:
        return make_L(i, a);
      case 1:
        return make_N(i, a);
      case 2:
        return make_not(make_L(i, a));
      case 3:
        return make_or(make_L(i, a), make_not(make_N(i, b)));
      case 4:
        return make_O(i, a);
      default:
        return make_and(make_L(i, a), make_not(make_L(i, b)));
    }
  }

  std::optional<Formula> build(const std::string& scheme) {
    const AgentId i = agent();
    if (scheme == "A1") {
      static const std::vector<Formula> skeletons = {
          parse("a -> (b -> a)"),          parse("(a -> (b -> c)) -> ((a -> b) -> (a -> c))"),
          parse("(~a -> ~b) -> (b -> a)"), parse("a | ~a"),
          parse("~(a & b) <-> ~a | ~b"),   parse("a & b -> a"),
          parse("a -> a | b"),
      };
      const Formula& s = skeletons[rng_() % skeletons.size()];
      if (prop_sat(make_not(s))) return std::nullopt;
      return substitute(s, {{"a", any()}, {"b", any()}, {"c", any()}});
    }
    if (scheme == "A2" || scheme == "A3") {
      const Formula a = any();
      const Formula b = any();
      auto m = [&](const Formula& x) { return scheme == "A2" ? make_L(i, x) : make_N(i, x); };
      return make_implies(m(make_implies(a, b)), make_implies(m(a), m(b)));
    }
    if (scheme == "A4") {
      const Formula s = subjective(i);
      if (!is_subjective_for(s, i)) return std::nullopt;
      return make_implies(s, make_and(make_L(i, s), make_N(i, s)));
    }
    if (scheme == "A5'") {
      const auto a = objective(i);
      if (!a) return std::nullopt;
      return make_implies(make_con(make_not(*a)), make_implies(make_N(i, *a), make_not(make_L(i, *a))));
    }
    if (scheme == "V1") {
      const Formula a = any();
      const Formula b = any();
      return make_implies(make_and(make_val(a), make_val(make_implies(a, b))), make_val(b));
    }
    if (scheme == "V2") {
      if (propositional_.empty()) return std::nullopt;
      const Formula& a = propositional_[rng_() % propositional_.size()];
      if (!prop_sat(a)) return std::nullopt;
      return make_con(a);
    }
    if (scheme == "V3") {
      const auto alpha = objective(i);
      const auto gamma = objective(i);
      if (!alpha || !gamma) return std::nullopt;
      std::vector<Formula> premises;
      std::vector<Formula> state{make_L(i, *alpha), make_N(i, *gamma)};
      const std::uint64_t k = rng_() % 3;
      const std::uint64_t m = rng_() % 3;
      for (std::uint64_t j = 0; j < k; ++j) {
        const auto beta = objective(i);
        if (!beta) return std::nullopt;
        premises.push_back(make_con(make_and(*alpha, *beta)));
        state.push_back(make_not(make_L(i, make_not(*beta))));
      }
      for (std::uint64_t l = 0; l < m; ++l) {
        const auto delta = objective(i);
        if (!delta) return std::nullopt;
        premises.push_back(make_con(make_and(*gamma, *delta)));
        state.push_back(make_not(make_N(i, make_not(*delta))));
      }
      premises.push_back(make_val(make_or(*alpha, *gamma)));
      return make_implies(conjunction(premises), make_con(conjunction(state)));
    }
    if (scheme == "V4") {
      const auto a = objective(i);
      const Formula b = subjective(i);
      if (!a || !is_subjective_for(b, i)) return std::nullopt;
      return make_implies(make_and(make_con(*a), make_con(b)), make_con(make_and(*a, b)));
    }
    throw Error("unknown axiom scheme '" + scheme + "'");
  }

 private:
  const std::vector<Formula>& pool_;
  std::vector<Formula> propositional_;
  int agents_;
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<Formula> axiom_pool(std::uint64_t seed, std::size_t size, int agents) {
  static const char* const fixed[] = {
      "p",          "q",           "~p",          "p & q",          "p | ~q",           "p -> q",
      "true",       "false",       "p & ~p",      "L1 p",           "N1 ~p",            "L2 p",
      "N2 q",       "O2 p",        "~L2 ~p",      "L2 (p | L1 q)",  "q & N2 L1 p",      "L1 L2 p",
      "N1 L2 p",    "O1 ~O2 p",    "L2 p -> q",   "V p",            "C (p & q)",        "V (L1 p -> L1 L1 p)",
      "C L2 p",     "L1 false",    "N2 false",    "~N1 (p | q)",    "L1 p <-> N1 p",    "C ~O2 p",
  };
  std::vector<Formula> pool;
  for (const char* text : fixed) {
    Formula f = parse(text);
    if (max_agent(f) <= agents) pool.push_back(f);
  }
  GeneratorOptions g;
  g.profile = Profile::full;
  g.max_depth = 2;
  g.atoms = 3;
  g.agents = agents;
  g.max_size = 6;
  FormulaGenerator gen(seed, g);
  while (pool.size() < size) pool.push_back(gen.next());
  pool.resize(std::min(pool.size(), std::max(size, std::size_t{1})));
  return pool;
}

std::vector<AxiomInstance> axiom_instances(const std::vector<Formula>& pool, int agents, std::uint64_t seed,
                                           std::size_t per_scheme) {
  static const char* const schemes[] = {"A1", "A2", "A3", "A4", "A5'", "V1", "V2", "V3", "V4"};
  InstanceBuilder builder(pool, agents, seed);
  std::vector<AxiomInstance> out;
  for (const char* scheme : schemes) {
    std::size_t made = 0;
    for (int attempt = 0; made < per_scheme && attempt < 1000; ++attempt) {
      if (auto f = builder.build(scheme)) {
        out.push_back({scheme, *f});
        ++made;
      }
    }
    if (made < per_scheme) throw Error(std::string("could not instantiate scheme ") + scheme);
  }
  return out;
}

void CrossCheckReport::merge(const CrossCheckReport& other) {
  checked += other.checked;
  unsatisfiable += other.unsatisfiable;
  disagreements.insert(disagreements.end(), other.disagreements.begin(), other.disagreements.end());
}

namespace {

// Odd samples conjoin three draws so that unsatisfiable formulas are common.
Formula draw(FormulaGenerator& gen, std::size_t k) {
  Formula f = gen.next();
  if (k % 2 == 1) f = make_and(f, make_and(gen.next(), gen.next()));
  return f;
}

const char* sat_word(bool b) { return b ? "SAT" : "UNSAT"; }

}  // namespace

CrossCheckReport cross_check_basic(std::uint64_t seed, std::size_t samples) {
  GeneratorOptions g;
  g.profile = Profile::basic;
  FormulaGenerator gen(seed, g);
  CrossCheckReport r;
  for (std::size_t k = 0; k < samples; ++k) {
    const Formula f = draw(gen, k);
    for (const Formula& h : {f, make_not(f)}) {
      const bool tableau = k45_sat(h).satisfiable;
      const bool ax = consistent_ax(h).holds();
      ++r.checked;
      if (!ax) ++r.unsatisfiable;
      if (tableau != ax) {
        r.disagreements.push_back({"basic", print(h), std::string("tableau ") + sat_word(tableau) + ", decision " + sat_word(ax)});
      }
    }
  }
  return r;
}

CrossCheckReport cross_check_single_agent(std::uint64_t seed, std::size_t samples) {
  GeneratorOptions g;
  g.profile = Profile::full;
  g.atoms = 2;
  g.agents = 1;
  g.allow_val = false;
  FormulaGenerator gen(seed, g);
  const Alphabet phi({"p", "q"});
  CrossCheckReport r;
  for (std::size_t k = 0; k < samples; ++k) {
    const Formula f = draw(gen, k);
    for (const Formula& h : {f, make_not(f)}) {
      // h is satisfiable iff ~h is not valid.
      const bool oracle = !oracle_valid(make_not(h), phi, Semantics::extended).valid;
      const bool ax = consistent_ax(h).holds();
      ++r.checked;
      if (!ax) ++r.unsatisfiable;
      if (oracle != ax) {
        r.disagreements.push_back({"single-agent", print(h), std::string("oracle ") + sat_word(oracle) + ", decision " + sat_word(ax)});
      }
    }
  }
  return r;
}

CrossCheckReport cross_check(std::uint64_t seed, std::size_t samples) {
  CrossCheckReport r = cross_check_basic(seed, samples);
  r.merge(cross_check_single_agent(seed, samples));
  return r;
}

CorpusEntry corpus_entry_from_json(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("corpus line is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("formula")) throw Error("corpus entry needs a \"formula\" field");
  CorpusEntry e;
  e.formula = j.at("formula").get<std::string>();
  e.expected = j.value("expected", "");
  e.semantics = j.value("semantics", "ax");
  e.provenance = j.value("provenance", "");
  e.mode = j.value("mode", "valid");
  e.agents = j.value("agents", 0);
  e.phi = j.value("phi", "");
  return e;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path);
  std::vector<CorpusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(corpus_entry_from_json(line));
  }
  return out;
}

EntryResult run_entry(const CorpusEntry& e, const DecisionOptions& options) {
  const std::optional<int> agents = e.agents > 0 ? std::optional<int>(e.agents) : std::nullopt;
  const Formula f = parse(e.formula, agents);
  if (e.semantics == "ax") {
    if (e.mode == "sat") return {to_string(consistent_ax(f, options).status), std::nullopt};
    if (e.mode == "valid") return {to_string(valid_ax(f, options).status), std::nullopt};
    throw Error("unknown mode '" + e.mode + "'");
  }
  if (e.semantics == "k45") return {k45_sat(f, e.agents).satisfiable ? "SAT" : "UNSAT", std::nullopt};
  if (e.semantics == "levesque" || e.semantics == "extended") {
    const auto names = atoms_of(f);
    const Alphabet phi = e.phi.empty() ? Alphabet(std::vector<std::string>(names.begin(), names.end()))
                                       : Alphabet::from_list(e.phi);
    const auto r = oracle_valid(f, phi, e.semantics == "levesque" ? Semantics::levesque : Semantics::extended);
    EntryResult out{r.valid ? "VALID" : "INVALID", std::nullopt};
    if (r.counterexample) out.counterexample = describe(phi, *r.counterexample);
    return out;
  }
  throw Error("unknown semantics '" + e.semantics + "'");
}

}  // namespace onlyknow
