#include "onlyknow/kripke.hpp"

#include <json.hpp>

#include "onlyknow/classify.hpp"

namespace onlyknow {

int KripkeStructure::add_world(const std::string& name, std::set<std::string> true_atoms) {
  for (const std::string& n : names_) {
    if (n == name) throw Error("duplicate world '" + name + "'");
  }
  names_.push_back(name);
  valuation_.push_back(std::move(true_atoms));
  for (auto& [agent, succ] : successors_) succ.emplace_back();
  return size() - 1;
}

void KripkeStructure::add_edge(AgentId agent, int from, int to) {
  if (agent < 1) throw Error("agent index must be positive");
  if (from < 0 || from >= size() || to < 0 || to >= size()) throw Error("edge refers to an unknown world");
  relations_[agent].insert({from, to});
  auto& succ = successors_[agent];
  succ.resize(size());
  succ[from].insert(to);
}

void KripkeStructure::add_edge(AgentId agent, const std::string& from, const std::string& to) {
  add_edge(agent, index_of(from), index_of(to));
}

int KripkeStructure::index_of(const std::string& name) const {
  for (int k = 0; k < size(); ++k) {
    if (names_[k] == name) return k;
  }
  throw Error("unknown world '" + name + "'");
}

const std::set<int>& KripkeStructure::successors(AgentId agent, int w) const {
  static const std::set<int> none;
  auto it = successors_.find(agent);
  if (it == successors_.end()) return none;
  return it->second.at(w);
}

std::set<AgentId> KripkeStructure::agents() const {
  std::set<AgentId> out;
  for (const auto& [agent, rel] : relations_) out.insert(agent);
  return out;
}

const std::set<std::pair<int, int>>& KripkeStructure::relation(AgentId agent) const {
  static const std::set<std::pair<int, int>> none;
  auto it = relations_.find(agent);
  return it == relations_.end() ? none : it->second;
}

KripkeStructure kripke_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("model is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("worlds") || !j["worlds"].is_object()) {
    throw Error("model needs a \"worlds\" object");
  }
  KripkeStructure m;
  for (const auto& [name, atoms] : j["worlds"].items()) {
    if (!atoms.is_array()) throw Error("atoms of world '" + name + "' must be a list");
    std::set<std::string> truths;
    for (const auto& a : atoms) truths.insert(a.get<std::string>());
    m.add_world(name, std::move(truths));
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_object()) throw Error("\"relations\" must be an object");
    for (const auto& [agent, pairs] : j["relations"].items()) {
      int index = 0;
      try {
        index = std::stoi(agent);
      } catch (const std::exception&) {
        throw Error("agent key '" + agent + "' is not a number");
      }
      if (index < 1) throw Error("agent key '" + agent + "' must be positive");
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2) throw Error("relation entries must be [from, to] pairs");
        const auto from = p[0].get<std::string>();
        const auto to = p[1].get<std::string>();
        m.add_edge(index, from, to);
      }
    }
  }
  return m;
}

std::string kripke_to_json(const KripkeStructure& m) {
  nlohmann::ordered_json j;
  j["worlds"] = nlohmann::ordered_json::object();
  for (int w = 0; w < m.size(); ++w) j["worlds"][m.name(w)] = m.true_atoms(w);
  j["relations"] = nlohmann::ordered_json::object();
  for (AgentId agent : m.agents()) {
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& [u, v] : m.relation(agent)) pairs.push_back({m.name(u), m.name(v)});
    j["relations"][std::to_string(agent)] = pairs;
  }
  return j.dump(2);
}

ValidationReport validate(const KripkeStructure& m) {
  ValidationReport report;
  for (AgentId agent : m.agents()) {
    for (const auto& [u, v] : m.relation(agent)) {
      for (int w : m.successors(agent, v)) {
        if (!m.successors(agent, u).count(w)) report.transitivity.push_back({agent, m.name(u), m.name(v), m.name(w)});
      }
      for (int w : m.successors(agent, u)) {
        if (!m.successors(agent, v).count(w)) report.euclidean.push_back({agent, m.name(u), m.name(v), m.name(w)});
      }
    }
  }
  return report;
}

namespace {

enum class NMode { none, naive, fixed };

bool eval(const KripkeStructure& m, int w, const Formula& f, NMode mode) {
  switch (f.op()) {
    case Op::Atom:
      return m.holds(w, f.name());
    case Op::True:
      return true;
    case Op::False:
      return false;
    case Op::Not:
      return !eval(m, w, f.lhs(), mode);
    case Op::And:
      return eval(m, w, f.lhs(), mode) && eval(m, w, f.rhs(), mode);
    case Op::Or:
      return eval(m, w, f.lhs(), mode) || eval(m, w, f.rhs(), mode);
    case Op::Implies:
      return !eval(m, w, f.lhs(), mode) || eval(m, w, f.rhs(), mode);
    case Op::Iff:
      return eval(m, w, f.lhs(), mode) == eval(m, w, f.rhs(), mode);
    case Op::L:
      for (int v : m.successors(f.agent(), w)) {
        if (!eval(m, v, f.lhs(), mode)) return false;
      }
      return true;
    case Op::N: {
      if (mode == NMode::none) throw FragmentError("N is not interpreted by the basic semantics");
      const auto& known = m.successors(f.agent(), w);
      for (int v = 0; v < m.size(); ++v) {
        if (known.count(v)) continue;
        if (mode == NMode::fixed && m.successors(f.agent(), v) != known) continue;
        if (!eval(m, v, f.lhs(), mode)) return false;
      }
      return true;
    }
    case Op::Val:
      throw FragmentError("Val has no Kripke semantics");
  }
  return false;
}

void check_world(const KripkeStructure& m, int world, const Formula& f) {
  if (mentions(f, Op::Val)) throw FragmentError("Val has no Kripke semantics");
  if (world < 0 || world >= m.size()) throw Error("unknown world index " + std::to_string(world));
}

}  // namespace

bool check_basic(const KripkeStructure& m, int world, const Formula& f) {
  if (!is_basic(f)) throw FragmentError("check_basic needs a basic formula");
  check_world(m, world, f);
  return eval(m, world, f, NMode::none);
}

bool check_naive_n(const KripkeStructure& m, int world, const Formula& f) {
  check_world(m, world, f);
  return eval(m, world, f, NMode::naive);
}

bool check_fixed_n(const KripkeStructure& m, int world, const Formula& f) {
  check_world(m, world, f);
  return eval(m, world, f, NMode::fixed);
}

}  // namespace onlyknow
