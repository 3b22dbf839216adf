// Consistency and validity for the full language with Val.
//
// consistent(f):
//   1. replace every Val psi, innermost first, by true or false according to
//      valid(psi);
//   2. stream the normal-form disjuncts of the Val-free result;
//   3. a disjunct  sigma & S_1 & ... & S_n  is consistent iff sigma is
//      propositionally satisfiable and every agent block S_i is;
//   4. a block  L_i a & /\ ~L_i f_j & N_i g & /\ ~N_i h_l  is consistent iff
//      a & ~f_j and g & ~h_l are consistent for all j, l and a | g is valid.
// Every recursive call is on a formula of strictly smaller modal depth.

#ifndef ONLYKNOW_DECISION_HPP
#define ONLYKNOW_DECISION_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "onlyknow/formula.hpp"
#include "onlyknow/normal_form.hpp"

namespace onlyknow {

class TimeBudgetExceeded : public Error {
 public:
  TimeBudgetExceeded() : Error("time budget exceeded") {}
};

enum class Status { satisfiable, unsatisfiable, valid, invalid };

std::string to_string(Status s);

struct TraceStep {
  std::string rule;
  Formula formula;
  int level = 0;              // recursion nesting
  int modal_depth = 0;        // nesting_depth(formula)
  int parent_modal_depth = -1;  // depth of the enclosing call, -1 at top level
};

struct Verdict {
  Status status = Status::unsatisfiable;
  std::vector<TraceStep> trace;

  /// satisfiable or valid.
  bool holds() const { return status == Status::satisfiable || status == Status::valid; }
};

struct DecisionOptions {
  bool memoize = true;
  bool trace = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Not thread-safe; use one Decider per thread.
class Decider {
 public:
  explicit Decider(DecisionOptions options = {});

  Verdict consistent(const Formula& f);
  Verdict valid(const Formula& f);

  /// Replaces every Val subformula, innermost first, by its truth value and
  /// simplifies the result.
  Formula eliminate_val(const Formula& f);
  bool block_consistent(const AgentBlock& b);

  std::size_t memo_size() const { return memo_.size(); }
  /// Disjuncts examined since construction.
  std::size_t disjuncts_examined() const { return disjuncts_; }

 private:
  bool consistent_at(const Formula& f, int parent_depth);
  bool valid_at(const Formula& f, int parent_depth);
  bool block_at(const AgentBlock& b, int parent_depth);
  Formula eliminate_at(const Formula& f, int parent_depth);
  void note(const char* rule, const Formula& f, int parent_depth);
  void check_deadline() const;

  DecisionOptions options_;
  std::unordered_map<Formula, bool, FormulaHash> memo_;
  std::vector<TraceStep> trace_;
  int level_ = 0;
  std::size_t disjuncts_ = 0;
};

Verdict consistent_ax(const Formula& f, DecisionOptions options = {});
Verdict valid_ax(const Formula& f, DecisionOptions options = {});
Formula eliminate_val(const Formula& f);
bool block_consistent(const AgentBlock& b);

/// Classical satisfiability. Throws FragmentError on modal input.
bool prop_sat(const Formula& f);

}  // namespace onlyknow

#endif  // ONLYKNOW_DECISION_HPP
