// Finite multi-agent Kripke structures.
//
// JSON form:
//   {"worlds": {"w": ["p"], "v": []},
//    "relations": {"1": [["w", "v"], ["v", "v"]]}}
// Atoms not listed at a world are false there; agents without an entry have
// empty accessibility relations.

#ifndef ONLYKNOW_KRIPKE_HPP
#define ONLYKNOW_KRIPKE_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "onlyknow/formula.hpp"

namespace onlyknow {

class KripkeStructure {
 public:
  /// Adds a world and returns its index. Names must be unique.
  int add_world(const std::string& name, std::set<std::string> true_atoms = {});
  void add_edge(AgentId agent, int from, int to);
  void add_edge(AgentId agent, const std::string& from, const std::string& to);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int w) const { return names_.at(w); }
  int index_of(const std::string& name) const;
  bool holds(int w, const std::string& atom) const { return valuation_.at(w).count(atom) > 0; }
  const std::set<std::string>& true_atoms(int w) const { return valuation_.at(w); }
  /// K_i(w), ascending.
  const std::set<int>& successors(AgentId agent, int w) const;
  std::set<AgentId> agents() const;
  const std::set<std::pair<int, int>>& relation(AgentId agent) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::set<std::string>> valuation_;
  std::map<AgentId, std::set<std::pair<int, int>>> relations_;
  std::map<AgentId, std::vector<std::set<int>>> successors_;
};

/// Throws Error on malformed input or dangling world references.
KripkeStructure kripke_from_json(std::string_view text);
std::string kripke_to_json(const KripkeStructure& m);

struct Violation {
  AgentId agent = 0;
  // u -> v and v -> w but not u -> w (transitivity), or
  // u -> v and u -> w but not v -> w (Euclidean).
  std::string u, v, w;
};

struct ValidationReport {
  std::vector<Violation> transitivity;
  std::vector<Violation> euclidean;

  bool ok() const { return transitivity.empty() && euclidean.empty(); }
};

ValidationReport validate(const KripkeStructure& m);

/// Standard evaluation. Throws FragmentError unless `f` is basic.
bool check_basic(const KripkeStructure& m, int world, const Formula& f);
/// N_i a holds at w iff a holds at every world outside K_i(w).
bool check_naive_n(const KripkeStructure& m, int world, const Formula& f);
/// As check_naive_n, restricted to worlds w' with K_i(w') = K_i(w).
bool check_fixed_n(const KripkeStructure& m, int world, const Formula& f);

}  // namespace onlyknow

#endif  // ONLYKNOW_KRIPKE_HPP
