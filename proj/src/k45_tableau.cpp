#include "onlyknow/k45_tableau.hpp"

#include <map>
#include <set>
#include <vector>

#include "onlyknow/classify.hpp"

namespace onlyknow {

namespace {

Formula nnf_signed(const Formula& f, bool positive) {
  switch (f.op()) {
    case Op::Atom:
      return positive ? f : make_not(f);
    case Op::True:
    case Op::False:
      return Formula::constant(f.is(Op::True) == positive);
    case Op::Not:
      return nnf_signed(f.lhs(), !positive);
    case Op::And:
    case Op::Or: {
      const Formula a = nnf_signed(f.lhs(), positive);
      const Formula b = nnf_signed(f.rhs(), positive);
      return (f.is(Op::And) == positive) ? make_and(a, b) : make_or(a, b);
    }
    case Op::Implies: {
      const Formula a = nnf_signed(f.lhs(), !positive);
      const Formula b = nnf_signed(f.rhs(), positive);
      return positive ? make_or(a, b) : make_and(a, b);
    }
    case Op::Iff: {
      const Formula a = nnf_signed(f.lhs(), true);
      const Formula na = nnf_signed(f.lhs(), false);
      const Formula b = nnf_signed(f.rhs(), positive);
      const Formula nb = nnf_signed(f.rhs(), !positive);
      return make_or(make_and(a, b), make_and(na, nb));
    }
    case Op::L: {
      const Formula body = make_L(f.agent(), nnf_signed(f.lhs(), true));
      return positive ? body : make_not(body);
    }
    case Op::N:
    case Op::Val:
      break;
  }
  throw FragmentError("the K45 tableau accepts basic formulas only");
}

bool is_modal_literal(const Formula& f) { return f.is(Op::L) || (f.is(Op::Not) && f.lhs().is(Op::L)); }

const Formula& modal_atom(const Formula& lit) { return lit.is(Op::Not) ? lit.lhs() : lit; }

void top_level_atoms(const Formula& f, AgentId agent, std::set<Formula>& out) {
  switch (f.op()) {
    case Op::L:
      if (f.agent() == agent && out.insert(f).second) top_level_atoms(f.lhs(), agent, out);
      return;
    case Op::Not:
      top_level_atoms(f.lhs(), agent, out);
      return;
    case Op::And:
    case Op::Or:
      top_level_atoms(f.lhs(), agent, out);
      top_level_atoms(f.rhs(), agent, out);
      return;
    default:
      return;
  }
}

using Label = std::set<Formula>;

class Tableau {
 public:
  struct Node {
    Label literals;
    std::map<AgentId, std::vector<int>> children;
  };

  std::optional<int> satisfy(const Label& label, AgentId via) {
    const auto key = std::make_pair(std::vector<Formula>(label.begin(), label.end()), via);
    if (failed_.count(key)) return std::nullopt;
    auto result = saturate(std::vector<Formula>(label.begin(), label.end()), {}, via);
    if (!result) failed_.insert(key);
    return result;
  }

  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  static bool clashes(const Label& lits, const Formula& lit) {
    if (lit.is(Op::Not)) return lits.count(lit.lhs()) > 0;
    return lits.count(make_not(lit)) > 0;
  }

  std::optional<int> saturate(std::vector<Formula> pending, Label lits, AgentId via) {
    while (!pending.empty()) {
      const Formula f = pending.back();
      pending.pop_back();
      switch (f.op()) {
        case Op::True:
          continue;
        case Op::False:
          return std::nullopt;
        case Op::And:
          pending.push_back(f.rhs());
          pending.push_back(f.lhs());
          continue;
        case Op::Or: {
          auto left = pending;
          left.push_back(f.lhs());
          if (auto r = saturate(std::move(left), lits, via)) return r;
          pending.push_back(f.rhs());
          continue;
        }
        default:
          if (clashes(lits, f)) return std::nullopt;
          lits.insert(f);
      }
    }
    return cut(std::move(lits), via);
  }

  std::optional<int> cut(Label lits, AgentId via) {
    std::map<AgentId, std::set<Formula>> candidates;
    for (const Formula& lit : lits) {
      if (!is_modal_literal(lit)) continue;
      const Formula& atom = modal_atom(lit);
      if (atom.agent() == via) continue;
      top_level_atoms(atom.lhs(), atom.agent(), candidates[atom.agent()]);
    }
    for (const auto& [agent, atoms] : candidates) {
      for (const Formula& c : atoms) {
        if (lits.count(c) || lits.count(make_not(c))) continue;
        for (const Formula& choice : {c, make_not(c)}) {
          Label next = lits;
          next.insert(choice);
          if (auto r = cut(std::move(next), via)) return r;
        }
        return std::nullopt;
      }
    }
    return expand(lits, via);
  }

  std::optional<int> expand(const Label& lits, AgentId via) {
    Node node;
    node.literals = lits;
    std::set<AgentId> agents;
    for (const Formula& lit : lits) {
      if (is_modal_literal(lit) && modal_atom(lit).agent() != via) agents.insert(modal_atom(lit).agent());
    }
    for (AgentId agent : agents) {
      Label shared;
      for (const Formula& lit : lits) {
        if (!is_modal_literal(lit) || modal_atom(lit).agent() != agent) continue;
        shared.insert(lit);
        if (lit.is(Op::L)) shared.insert(lit.lhs());
      }
      for (const Formula& lit : lits) {
        if (!lit.is(Op::Not) || !lit.lhs().is(Op::L) || lit.lhs().agent() != agent) continue;
        Label child = shared;
        child.insert(nnf_signed(lit.lhs().lhs(), false));
        auto c = satisfy(child, agent);
        if (!c) return std::nullopt;
        node.children[agent].push_back(*c);
      }
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  std::set<std::pair<std::vector<Formula>, AgentId>> failed_;
  std::vector<Node> nodes_;
};

KripkeStructure build_witness(const std::vector<Tableau::Node>& nodes, int root) {
  KripkeStructure m;
  std::map<int, int> world_of{{root, 0}};
  std::vector<int> order{root};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& [agent, kids] : nodes[order[k]].children) {
      for (int c : kids) {
        if (world_of.emplace(c, static_cast<int>(order.size())).second) order.push_back(c);
      }
    }
  }
  for (int n : order) {
    std::set<std::string> truths;
    for (const Formula& lit : nodes[n].literals) {
      if (lit.is(Op::Atom)) truths.insert(lit.name());
    }
    m.add_world("w" + std::to_string(world_of[n]), std::move(truths));
  }
  for (int n : order) {
    for (const auto& [agent, kids] : nodes[n].children) {
      for (int c : kids) {
        m.add_edge(agent, world_of[n], world_of[c]);
        for (int d : kids) m.add_edge(agent, world_of[c], world_of[d]);
      }
    }
  }
  return m;
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_signed(f, true); }

K45Result k45_sat(const Formula& f, int agents, bool want_witness) {
  if (!is_basic(f)) throw FragmentError("the K45 tableau accepts basic formulas only");
  if (agents > 0 && max_agent(f) > agents) throw Error("formula mentions an agent above " + std::to_string(agents));
  Tableau t;
  K45Result r;
  const auto root = t.satisfy(Label{nnf(f)}, 0);
  r.satisfiable = root.has_value();
  if (root && want_witness) r.witness = build_witness(t.nodes(), *root);
  return r;
}

bool k45_independent(const Formula& f, const Formula& g) {
  return k45_sat(make_and(f, g)).satisfiable && k45_sat(make_and(f, make_not(g))).satisfiable;
}

}  // namespace onlyknow
