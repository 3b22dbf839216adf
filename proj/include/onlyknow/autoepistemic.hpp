// Belief queries against an only-known knowledge base.
//
// "All agent i knows is kb" is O_i kb. Agent i then believes q iff
// O_i kb -> L_i q is valid; because O_i kb pins down i's epistemic state,
// the answer is nonmonotonic in kb.

#ifndef ONLYKNOW_AUTOEPISTEMIC_HPP
#define ONLYKNOW_AUTOEPISTEMIC_HPP

#include <vector>

#include "onlyknow/decision.hpp"
#include "onlyknow/finite_semantics.hpp"

namespace onlyknow {

struct BeliefQuery {
  AgentId agent = 1;
  Formula kb;
  Formula query;
};

bool believes(const BeliefQuery& q, DecisionOptions options = {});

/// O_i kb is consistent.
bool kb_coherent(AgentId agent, const Formula& kb, DecisionOptions options = {});

/// Every W over `phi` such that for every world w: w in W iff (W, w) |= alpha.
/// Ascending by bitmask. Throws Error when |phi| > bound.
std::vector<WorldSet> only_knowing_sets(const Formula& alpha, const Alphabet& phi, int bound = 2);

}  // namespace onlyknow

#endif  // ONLYKNOW_AUTOEPISTEMIC_HPP
