// Disjunctive normal form for Val-free formulas.
//
// Every Val-free formula is provably equivalent to a disjunction of
//
//   sigma & /\_i ( L_i a_i & ~L_i f_i1 & ... & N_i g_i & ~N_i h_i1 & ... )
//
// with sigma propositional and every a, f, g, h i-objective. The rewrite
// runs in two stages:
//
//   1. flatten_modalities pushes each L_i / N_i through its argument until
//      the argument is i-objective. The argument is Shannon-split on its
//      top-level i-subjective atoms s, and M_i(s | o) becomes s | M_i(o).
//   2. DisjunctStream enumerates the disjuncts of the flattened Boolean
//      skeleton by splitting on its leftmost atom, true branch first. Only
//      the current path is kept in memory, so a formula with exponentially
//      many disjuncts is walked in space linear in its size.

#ifndef ONLYKNOW_NORMAL_FORM_HPP
#define ONLYKNOW_NORMAL_FORM_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "onlyknow/formula.hpp"

namespace onlyknow {

/// Constant folding, double-negation removal and duplicate / complementary
/// operand detection in And and Or chains. L_i true and N_i true fold to
/// true; Val of a constant folds to the constant. Preserves provable
/// equivalence.
Formula simplify(const Formula& f);

/// Equivalent formula in which every L_i / N_i has an i-objective argument.
/// Never increases modal depth. Throws FragmentError on Val.
Formula flatten_modalities(const Formula& f);

/// A signed skeleton atom: a propositional atom or a flattened modal formula.
struct Literal {
  Formula atom;
  bool positive = true;

  Formula to_formula() const { return positive ? atom : make_not(atom); }
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// The modal literals of one agent before positive conjuncts are merged.
struct BlockLiterals {
  AgentId agent = 0;
  std::vector<Formula> pos_L;
  std::vector<Formula> neg_L;
  std::vector<Formula> pos_N;
  std::vector<Formula> neg_N;
};

/// One agent's part of a disjunct: L_i pos_L & /\ ~L_i neg_L & N_i pos_N &
/// /\ ~N_i neg_N. All stored formulas are i-objective.
struct AgentBlock {
  AgentId agent = 0;
  Formula pos_L = Formula::top();
  std::vector<Formula> neg_L;
  Formula pos_N = Formula::top();
  std::vector<Formula> neg_N;

  friend bool operator==(const AgentBlock&, const AgentBlock&) = default;
};

/// Collapses the positive L_i (resp. N_i) arguments into one conjunction;
/// absent positives become true.
AgentBlock merge_positive(const BlockLiterals& raw);

/// Live-instance accounting for disjuncts; used to check that streaming
/// never materializes more than one disjunct at a time.
class MaterializationToken {
 public:
  MaterializationToken();
  MaterializationToken(const MaterializationToken&);
  MaterializationToken(MaterializationToken&& other) noexcept;
  MaterializationToken& operator=(const MaterializationToken&);
  MaterializationToken& operator=(MaterializationToken&& other) noexcept;
  ~MaterializationToken();

  static long live();
  static long peak();
  /// Resets the peak to the current live count.
  static void reset_peak();

 private:
  bool active_ = true;
};

struct NormalFormDisjunct {
  Formula sigma = Formula::top();
  /// One block per mentioned agent, ascending by agent.
  std::vector<AgentBlock> blocks;
  MaterializationToken token;

  Formula to_formula() const;
};

/// Lazy enumeration of the disjuncts of a Val-free formula.
class DisjunctStream {
 public:
  explicit DisjunctStream(const Formula& f);

  /// The next disjunct, or nullopt once exhausted.
  std::optional<NormalFormDisjunct> next();

  /// Flattened skeleton being enumerated.
  const Formula& skeleton() const { return skeleton_; }
  std::size_t produced() const { return produced_; }
  /// Deepest split stack seen so far (the bookkeeping besides the current disjunct).
  std::size_t max_stack() const { return max_stack_; }

 private:
  struct Frame {
    Formula residue;
    std::size_t depth = 0;
    std::optional<Literal> literal;
  };

  Formula skeleton_;
  std::vector<Frame> stack_;
  std::vector<Literal> path_;
  std::size_t produced_ = 0;
  std::size_t max_stack_ = 0;
};

/// Convenience wrapper: DisjunctStream over `f`. Throws FragmentError on Val.
DisjunctStream to_normal_form(const Formula& f);

/// Disjunction of the remaining disjuncts of `stream`.
Formula reassemble(DisjunctStream& stream, std::size_t limit = 0);

/// Builds a disjunct from a satisfying path through the skeleton.
NormalFormDisjunct make_disjunct(const std::vector<Literal>& path);

/// Substitutes `value` for every Boolean-top-level occurrence of `atom`
/// (not below modalities) and simplifies the Boolean structure.
Formula assign(const Formula& f, const Formula& atom, bool value);

/// Leftmost Boolean-top-level atom (propositional or modal) of `f`
/// satisfying `want`, if any.
std::optional<Formula> leftmost_atom(const Formula& f, const std::function<bool(const Formula&)>& want);

}  // namespace onlyknow

#endif  // ONLYKNOW_NORMAL_FORM_HPP
