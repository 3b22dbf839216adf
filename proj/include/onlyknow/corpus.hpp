// Seeded formula generation, axiom-instance generation, oracle cross checks
// and the json-lines regression corpus.

#ifndef ONLYKNOW_CORPUS_HPP
#define ONLYKNOW_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "onlyknow/decision.hpp"
#include "onlyknow/formula.hpp"

namespace onlyknow {

enum class Profile {
  basic,      // no N, no Val
  onl_minus,  // N_j only where every enclosing modality belongs to j; no Val
  full,       // everything, Val included when allowed
};

Profile profile_from_string(std::string_view name);

struct GeneratorOptions {
  Profile profile = Profile::basic;
  int max_depth = 3;  // nesting_depth bound
  int atoms = 3;      // drawn from p, q, r
  int agents = 2;
  int max_size = 12;  // rough bound on connectives
  bool allow_val = true;
};

/// Reproducible across platforms: only raw mt19937_64 outputs are used.
class FormulaGenerator {
 public:
  FormulaGenerator(std::uint64_t seed, GeneratorOptions options);
  Formula next();

 private:
  std::uint64_t pick(std::uint64_t n) { return rng_() % n; }
  Formula leaf();
  Formula grow(int fuel, int depth_left, int scope);

  std::mt19937_64 rng_;
  GeneratorOptions options_;
};

/// First formula of the stream for `seed`.
Formula generate_random(std::uint64_t seed, const GeneratorOptions& options);

struct AxiomInstance {
  std::string scheme;  // "A1", "A2", "A3", "A4", "A5'", "V1", "V2", "V3", "V4"
  Formula formula;
};

/// Formulas to instantiate schemes with: fixed ones plus seeded random ones.
std::vector<Formula> axiom_pool(std::uint64_t seed, std::size_t size, int agents = 2);

/// `per_scheme` instances of every scheme. Side conditions (tautology of the
/// propositional skeleton, i-objectivity, i-subjectivity, propositional
/// satisfiability) are checked on each instance; failing candidates are
/// redrawn.
std::vector<AxiomInstance> axiom_instances(const std::vector<Formula>& pool, int agents, std::uint64_t seed,
                                           std::size_t per_scheme);

struct Disagreement {
  std::string suite;
  std::string formula;
  std::string detail;
};

struct CrossCheckReport {
  std::size_t checked = 0;
  std::size_t unsatisfiable = 0;  // per the decision procedure
  std::vector<Disagreement> disagreements;

  bool ok() const { return disagreements.empty(); }
  void merge(const CrossCheckReport& other);
};

/// Random basic formulas (3 atoms, 2 agents, depth <= 3): tableau
/// satisfiability against consistent_ax, for each sample and its negation.
CrossCheckReport cross_check_basic(std::uint64_t seed, std::size_t samples);
/// Random single-agent Val-free formulas over {p, q} and their negations:
/// consistent_ax against the extended-semantics oracle.
CrossCheckReport cross_check_single_agent(std::uint64_t seed, std::size_t samples);
CrossCheckReport cross_check(std::uint64_t seed, std::size_t samples);

struct CorpusEntry {
  std::string formula;
  std::string expected;   // SAT, UNSAT, VALID, INVALID
  std::string semantics;  // ax, k45, levesque, extended
  std::string provenance;
  std::string mode;       // sat or valid (ax entries)
  int agents = 0;
  std::string phi;        // alphabet for levesque / extended entries
};

CorpusEntry corpus_entry_from_json(std::string_view line);
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct EntryResult {
  std::string verdict;
  std::optional<std::string> counterexample;  // oracle entries
};

/// Decides the entry under its semantics.
EntryResult run_entry(const CorpusEntry& e, const DecisionOptions& options = {});

}  // namespace onlyknow

#endif  // ONLYKNOW_CORPUS_HPP
