#include "onlyknow/classify.hpp"

#include <algorithm>
#include <functional>

namespace onlyknow {

namespace {

// Boolean combination whose leaves all satisfy `leaf_ok`.
bool boolean_over(const Formula& f, const std::function<bool(const Formula&)>& leaf_ok) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return true;
    case Op::Not:
      return boolean_over(f.lhs(), leaf_ok);
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
      return boolean_over(f.lhs(), leaf_ok) && boolean_over(f.rhs(), leaf_ok);
    default:
      return leaf_ok(f);
  }
}

// `scope` is the single agent whose modalities enclose us, 0 at top level,
// -1 once two different agents have been crossed.
bool onl_minus_from(const Formula& f, int scope) {
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return true;
    case Op::Val:
      return false;
    case Op::Not:
      return onl_minus_from(f.lhs(), scope);
    case Op::L:
    case Op::N: {
      if (f.is(Op::N) && scope != 0 && scope != f.agent()) return false;
      const int inner = scope == 0 || scope == f.agent() ? f.agent() : -1;
      return onl_minus_from(f.lhs(), inner);
    }
    default:
      return onl_minus_from(f.lhs(), scope) && onl_minus_from(f.rhs(), scope);
  }
}

}  // namespace

bool is_propositional(const Formula& f) {
  return boolean_over(f, [](const Formula& g) { return g.is(Op::Atom); });
}

bool is_basic(const Formula& f) { return !mentions(f, Op::N) && !mentions(f, Op::Val); }

bool is_objective_for(const Formula& f, AgentId agent) {
  return boolean_over(f, [agent](const Formula& g) { return g.is(Op::Atom) || (g.is_modal() && g.agent() != agent); });
}

bool is_subjective_for(const Formula& f, AgentId agent) {
  return boolean_over(f, [agent](const Formula& g) { return g.is_modal() && g.agent() == agent; });
}

bool in_onl_minus(const Formula& f) { return onl_minus_from(f, 0); }

FormulaClass classify(const Formula& f, AgentId agent, int agents) {
  FormulaClass c;
  c.propositional = is_propositional(f);
  c.basic = is_basic(f);
  c.i_objective = is_objective_for(f, agent);
  c.i_subjective = is_subjective_for(f, agent);
  c.in_onl_minus = in_onl_minus(f);
  const auto mentioned = agents_of(f);
  c.in_onl_plus = agents <= 0 || mentioned.empty() || *mentioned.rbegin() <= agents;
  c.modal_depth = nesting_depth(f);
  return c;
}

int depth(const Formula& f) {
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return 0;
    case Op::Val:
      throw FragmentError("depth is undefined for Val formulas; eliminate Val first");
    case Op::Not:
      return depth(f.lhs());
    case Op::L:
    case Op::N:
      return 1 + depth(f.lhs());
    default:
      return std::max(depth(f.lhs()), depth(f.rhs()));
  }
}

Formula build_independent(AgentId agent, int agents, int bound, const std::string& atom) {
  if (agents < 2) throw Error("build_independent needs at least two agents");
  if (agent < 1 || agent > agents) throw Error("agent index out of range");
  if (bound < 0) throw Error("depth bound must be non-negative");
  const AgentId other = agent == 1 ? 2 : 1;
  Formula f = Formula::atom(atom);
  for (int k = 0; k <= bound; ++k) f = make_L(other, make_L(agent, f));
  return f;
}

}  // namespace onlyknow
