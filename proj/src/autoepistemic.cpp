#include "onlyknow/autoepistemic.hpp"

namespace onlyknow {

bool believes(const BeliefQuery& q, DecisionOptions options) {
  return valid_ax(make_implies(make_O(q.agent, q.kb), make_L(q.agent, q.query)), options).holds();
}

bool kb_coherent(AgentId agent, const Formula& kb, DecisionOptions options) {
  return consistent_ax(make_O(agent, kb), options).holds();
}

std::vector<WorldSet> only_knowing_sets(const Formula& alpha, const Alphabet& phi, int bound) {
  if (phi.size() > bound) {
    throw Error("alphabet of " + std::to_string(phi.size()) + " atoms exceeds the enumeration bound " +
                std::to_string(bound));
  }
  require_single_agent(alpha, phi);
  std::vector<WorldSet> out;
  const WorldSet all = phi.all_worlds();
  for (WorldSet W = 0;; ++W) {
    bool fixed_point = true;
    for (World w = 0; w < phi.world_count() && fixed_point; ++w) {
      fixed_point = (((W >> w) & 1) != 0) == eval(phi, Situation{W, w}, alpha);
    }
    if (fixed_point) out.push_back(W);
    if (W == all) break;
  }
  return out;
}

}  // namespace onlyknow
