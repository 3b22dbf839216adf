// Syntactic classes of formulas.
//
// An i-objective formula is a Boolean combination of atoms and L_j/N_j
// formulas with j != i; it says nothing about agent i's own beliefs. An
// i-subjective formula is a Boolean combination of L_i/N_i formulas. The
// Boolean constants are both.

#ifndef ONLYKNOW_CLASSIFY_HPP
#define ONLYKNOW_CLASSIFY_HPP

#include <string>

#include "onlyknow/formula.hpp"

namespace onlyknow {

struct FormulaClass {
  bool propositional = false;
  bool basic = false;  // no N, no Val
  bool i_objective = false;
  bool i_subjective = false;
  bool in_onl_minus = false;
  bool in_onl_plus = false;
  int modal_depth = 0;  // nesting_depth: L, N and Val count one level each

  friend bool operator==(const FormulaClass&, const FormulaClass&) = default;
};

/// Flags of `f` relative to agent `agent`. `agents` bounds the indices
/// accepted by in_onl_plus; 0 means "whatever f mentions".
FormulaClass classify(const Formula& f, AgentId agent, int agents = 0);

bool is_propositional(const Formula& f);
bool is_basic(const Formula& f);
bool is_objective_for(const Formula& f, AgentId agent);
bool is_subjective_for(const Formula& f, AgentId agent);
/// No N_j inside the scope of an L_i or N_i with i != j, and no Val.
bool in_onl_minus(const Formula& f);

/// Modal depth of a Val-free formula: L and N both add one.
/// Throws FragmentError on Val.
int depth(const Formula& f);

/// (L_j L_i)^(bound+1) p with j the smallest agent other than i. The result
/// is an i-objective basic formula independent of every consistent
/// i-objective basic formula of depth <= bound. Requires agents >= 2.
Formula build_independent(AgentId agent, int agents, int bound, const std::string& atom);

}  // namespace onlyknow

#endif  // ONLYKNOW_CLASSIFY_HPP
