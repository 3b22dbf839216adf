// Single-agent semantics over a finite alphabet, by enumeration.
//
// A world is a truth assignment to the alphabet, encoded as a bitmask (bit k
// set iff atom k is true). A set of worlds is a bitmask over world indices,
// so alphabets are limited to six atoms.
//
//   eval    (W, w):        L quantifies over W, N over the complement of W.
//   eval_x  (W_L, W_N, w): L over W_L, N over W_N; W_L and W_N must together
//                          cover every world.

#ifndef ONLYKNOW_FINITE_SEMANTICS_HPP
#define ONLYKNOW_FINITE_SEMANTICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onlyknow/formula.hpp"

namespace onlyknow {

using World = std::uint32_t;
using WorldSet = std::uint64_t;

class Alphabet {
 public:
  static constexpr int kMaxAtoms = 6;

  explicit Alphabet(std::vector<std::string> atoms);
  /// "p,q" -> {p, q}.
  static Alphabet from_list(std::string_view comma_separated);

  int size() const { return static_cast<int>(atoms_.size()); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  /// Index of `atom`, or -1.
  int index(const std::string& atom) const;
  World world_count() const { return World{1} << size(); }
  WorldSet all_worlds() const;

  /// Conjunction of the literals true at `w`.
  Formula world_formula(World w) const;
  /// "p&~q" style name.
  std::string world_name(World w) const;
  std::string describe(WorldSet s) const;

 private:
  std::vector<std::string> atoms_;
};

struct Situation {
  WorldSet W = 0;
  World w = 0;
};

struct ExtendedSituation {
  WorldSet W_L = 0;
  WorldSet W_N = 0;
  World w = 0;
};

enum class Semantics { levesque, extended };

/// Throws FragmentError on Val or on more than one agent, Error on atoms
/// outside the alphabet.
bool eval(const Alphabet& phi, const Situation& s, const Formula& f);
/// Throws Error when W_L and W_N do not cover every world.
bool eval_x(const Alphabet& phi, const ExtendedSituation& s, const Formula& f);

struct OracleResult {
  bool valid = true;
  /// First falsifying situation in enumeration order. For levesque
  /// semantics W_N is the complement of W_L.
  std::optional<ExtendedSituation> counterexample;
  std::uint64_t situations = 0;
};

/// Enumerates every situation over `phi`: 2^(2^k) * 2^k for levesque,
/// 3^(2^k) * 2^k for extended (k = |phi|). Throws Error when k > bound.
/// Levesque order: W ascending, then w. Extended order: W_L descending,
/// W_N ascending, then w.
OracleResult oracle_valid(const Formula& f, const Alphabet& phi, Semantics semantics, int bound = 2);

/// W+ computed from its definition: the worlds satisfying every objective
/// formula believed at W. Objective formulas over a finite alphabet are
/// enumerated as disjunctions of world formulas. Throws Error when the
/// alphabet has more than four atoms.
WorldSet maximal_closure(WorldSet W, const Alphabet& phi);

/// N-free formula equivalent to `f` under levesque semantics over `phi`:
/// modalities are first flattened, then each N a becomes the conjunction of
/// ~L ~w over the worlds w falsifying a.
Formula reduce_n_to_l(const Formula& f, const Alphabet& phi);

/// Throws unless `f` is Val-free, mentions at most one agent and only atoms
/// of `phi`.
void require_single_agent(const Formula& f, const Alphabet& phi);

std::string describe(const Alphabet& phi, const ExtendedSituation& s);

}  // namespace onlyknow

#endif  // ONLYKNOW_FINITE_SEMANTICS_HPP
