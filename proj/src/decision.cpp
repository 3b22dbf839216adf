#include "onlyknow/decision.hpp"

#include "onlyknow/classify.hpp"

namespace onlyknow {

std::string to_string(Status s) {
  switch (s) {
    case Status::satisfiable:
      return "SAT";
    case Status::unsatisfiable:
      return "UNSAT";
    case Status::valid:
      return "VALID";
    case Status::invalid:
      return "INVALID";
  }
  return "?";
}

namespace {

bool is_literal(const Formula& f) { return f.is(Op::Atom) || (f.is(Op::Not) && f.lhs().is(Op::Atom)); }

// A simplified conjunction of literals has no complementary pair left.
bool literal_conjunction(const Formula& f) {
  if (f.is(Op::And)) return literal_conjunction(f.lhs()) && literal_conjunction(f.rhs());
  return is_literal(f);
}

// `f` is simplified.
bool split_sat(const Formula& f) {
  if (f.is_constant()) return f.is(Op::True);
  if (literal_conjunction(f)) return true;
  const auto atom = leftmost_atom(f, [](const Formula&) { return true; });
  return split_sat(assign(f, *atom, true)) || split_sat(assign(f, *atom, false));
}

// Scope guard for the recursion level.
struct Descend {
  explicit Descend(int& level) : level_(level) { ++level_; }
  ~Descend() { --level_; }
  int& level_;
};

}  // namespace

bool prop_sat(const Formula& f) {
  if (!is_propositional(f)) throw FragmentError("prop_sat needs a propositional formula");
  return split_sat(simplify(f));
}

Decider::Decider(DecisionOptions options) : options_(options) {}

void Decider::check_deadline() const {
  if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) throw TimeBudgetExceeded();
}

void Decider::note(const char* rule, const Formula& f, int parent_depth) {
  if (!options_.trace) return;
  trace_.push_back(TraceStep{rule, f, level_, nesting_depth(f), parent_depth});
}

Verdict Decider::consistent(const Formula& f) {
  trace_.clear();
  Verdict v;
  v.status = consistent_at(f, -1) ? Status::satisfiable : Status::unsatisfiable;
  v.trace = std::move(trace_);
  trace_.clear();
  return v;
}

Verdict Decider::valid(const Formula& f) {
  trace_.clear();
  Verdict v;
  v.status = valid_at(f, -1) ? Status::valid : Status::invalid;
  v.trace = std::move(trace_);
  trace_.clear();
  return v;
}

Formula Decider::eliminate_val(const Formula& f) { return simplify(eliminate_at(f, -1)); }

bool Decider::block_consistent(const AgentBlock& b) { return block_at(b, -1); }

Formula Decider::eliminate_at(const Formula& f, int parent_depth) {
  if (!mentions(f, Op::Val)) return f;
  switch (f.op()) {
    case Op::Val: {
      const Formula body = eliminate_at(f.lhs(), parent_depth);
      note("eliminate-val", f, parent_depth);
      return Formula::constant(valid_at(body, nesting_depth(f)));
    }
    case Op::Not:
      return make_not(eliminate_at(f.lhs(), parent_depth));
    case Op::L:
      return make_L(f.agent(), eliminate_at(f.lhs(), parent_depth));
    case Op::N:
      return make_N(f.agent(), eliminate_at(f.lhs(), parent_depth));
    case Op::And:
      return make_and(eliminate_at(f.lhs(), parent_depth), eliminate_at(f.rhs(), parent_depth));
    case Op::Or:
      return make_or(eliminate_at(f.lhs(), parent_depth), eliminate_at(f.rhs(), parent_depth));
    case Op::Implies:
      return make_implies(eliminate_at(f.lhs(), parent_depth), eliminate_at(f.rhs(), parent_depth));
    case Op::Iff:
      return make_iff(eliminate_at(f.lhs(), parent_depth), eliminate_at(f.rhs(), parent_depth));
    default:
      return f;
  }
}

bool Decider::valid_at(const Formula& f, int parent_depth) {
  note("valid", f, parent_depth);
  Descend d(level_);
  return !consistent_at(make_not(f), parent_depth);
}

bool Decider::consistent_at(const Formula& f, int parent_depth) {
  check_deadline();
  note("consistent", f, parent_depth);
  Descend descend(level_);
  const int depth = nesting_depth(f);
  const Formula g = simplify(eliminate_at(f, depth));
  if (g.is_constant()) return g.is(Op::True);
  if (options_.memoize) {
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;
  }
  bool result = false;
  DisjunctStream stream(g);
  while (auto d = stream.next()) {
    check_deadline();
    ++disjuncts_;
    if (options_.trace) note("disjunct", d->to_formula(), depth);
    bool ok = prop_sat(d->sigma);
    for (const AgentBlock& b : d->blocks) {
      if (!ok) break;
      ok = block_at(b, depth);
    }
    if (ok) {
      result = true;
      break;
    }
  }
  if (options_.memoize) memo_.emplace(g, result);
  return result;
}

bool Decider::block_at(const AgentBlock& b, int parent_depth) {
  if (!valid_at(make_or(b.pos_L, b.pos_N), parent_depth)) return false;
  for (const Formula& phi : b.neg_L) {
    if (!consistent_at(make_and(b.pos_L, make_not(phi)), parent_depth)) return false;
  }
  for (const Formula& psi : b.neg_N) {
    if (!consistent_at(make_and(b.pos_N, make_not(psi)), parent_depth)) return false;
  }
  return true;
}

Verdict consistent_ax(const Formula& f, DecisionOptions options) { return Decider(options).consistent(f); }

Verdict valid_ax(const Formula& f, DecisionOptions options) { return Decider(options).valid(f); }

Formula eliminate_val(const Formula& f) { return Decider().eliminate_val(f); }

bool block_consistent(const AgentBlock& b) { return Decider().block_consistent(b); }

}  // namespace onlyknow
