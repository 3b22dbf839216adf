// Tableau satisfiability for basic formulas over transitive, Euclidean
// frames (K45 for every agent, no seriality).
//
// A node whose label is Boolean-saturated opens one i-successor for every
// ~L_i a it contains; the successor receives ~a, every b with L_i b, and all
// of the node's L_i / ~L_i literals. Because the i-successors of a world see
// exactly each other, a successor reached through agent i never opens
// i-successors of its own; it shares its siblings. To keep siblings in
// agreement about agent i, the parent first decides every L_i c occurring
// at the top level of one of its L_i arguments (analytic cut).

#ifndef ONLYKNOW_K45_TABLEAU_HPP
#define ONLYKNOW_K45_TABLEAU_HPP

#include <optional>

#include "onlyknow/formula.hpp"
#include "onlyknow/kripke.hpp"

namespace onlyknow {

struct K45Result {
  bool satisfiable = false;
  /// Present when requested and satisfiable; the formula holds at world 0.
  std::optional<KripkeStructure> witness;
};

/// Throws FragmentError unless `f` is basic. `agents` > 0 additionally
/// rejects agent indices above it.
K45Result k45_sat(const Formula& f, int agents = 0, bool want_witness = false);

/// Both f & g and f & ~g are satisfiable.
bool k45_independent(const Formula& f, const Formula& g);

/// Negation normal form over atoms, L_i and ~L_i.
Formula nnf(const Formula& f);

}  // namespace onlyknow

#endif  // ONLYKNOW_K45_TABLEAU_HPP
