// Formula AST for the multi-agent logic of only knowing.
//
// Formulas are immutable trees behind shared pointers; two handles compare
// equal iff the trees are structurally identical. Every node caches its
// structural hash, so equality, ordering and hashing are cheap enough to use
// formulas directly as keys in memo tables and label sets.
//
// O_i is not a node kind: it is expanded to L_i(a) & N_i(~a) by the parser.

#ifndef ONLYKNOW_FORMULA_HPP
#define ONLYKNOW_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace onlyknow {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation receives a formula outside its fragment
/// (e.g. Val where Val-free input is required, N in a basic-only routine).
class FragmentError : public Error {
 public:
  using Error::Error;
};

/// 1-based agent index.
using AgentId = int;

enum class Op : std::uint8_t { Atom, True, False, Not, And, Or, Implies, Iff, L, N, Val };

class Formula;

namespace detail {
struct Node;
}

class Formula {
 public:
  /// Default-constructed formulas are `true`.
  Formula();

  static Formula atom(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula constant(bool value) { return value ? top() : bottom(); }

  Op op() const;
  /// Agent of an L or N node; 0 otherwise.
  AgentId agent() const;
  /// Name of an atom; empty otherwise.
  const std::string& name() const;
  /// First child (Not, L, N, Val, binary lhs).
  const Formula& lhs() const;
  /// Second child of a binary connective.
  const Formula& rhs() const;
  std::size_t hash() const;
  /// Number of nodes in the tree.
  std::size_t size() const;

  bool is(Op o) const { return op() == o; }
  bool is_constant() const { return is(Op::True) || is(Op::False); }
  bool is_binary() const;
  bool is_modal() const { return is(Op::L) || is(Op::N); }
  /// Shares the same node (cheaper than ==, implies it).
  bool same_node(const Formula& other) const { return node_ == other.node_; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  /// Total order consistent with structural equality (hash first, then shape).
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct EmptyTag {};
  explicit Formula(EmptyTag) {}
  explicit Formula(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}
  friend Formula make_node(Op, AgentId, std::string, const Formula*, const Formula*);
  friend struct detail::Node;

  std::shared_ptr<const detail::Node> node_;
};

Formula make_not(Formula f);
Formula make_and(Formula a, Formula b);
Formula make_or(Formula a, Formula b);
Formula make_implies(Formula a, Formula b);
Formula make_iff(Formula a, Formula b);
Formula make_L(AgentId agent, Formula body);
Formula make_N(AgentId agent, Formula body);
Formula make_val(Formula body);
/// O_i a, i.e. L_i a & N_i ~a.
Formula make_O(AgentId agent, Formula body);
/// Con a, i.e. ~Val ~a.
Formula make_con(Formula body);

/// Left-associated conjunction; `true` when empty.
Formula conjunction(const std::vector<Formula>& parts);
/// Left-associated disjunction; `false` when empty.
Formula disjunction(const std::vector<Formula>& parts);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

std::set<std::string> atoms_of(const Formula& f);
/// Largest agent index mentioned; 0 when there is no modality.
AgentId max_agent(const Formula& f);
std::set<AgentId> agents_of(const Formula& f);
bool mentions(const Formula& f, Op op);

/// Modal depth with L, N and Val each counting one level.
int nesting_depth(const Formula& f);

namespace detail {
struct Node {
  Op op;
  AgentId agent = 0;
  std::string name;
  // Leaves carry empty handles here.
  Formula lhs{Formula::EmptyTag{}};
  Formula rhs{Formula::EmptyTag{}};
  std::size_t hash = 0;
  std::size_t size = 1;
};
}  // namespace detail

}  // namespace onlyknow

#endif  // ONLYKNOW_FORMULA_HPP
