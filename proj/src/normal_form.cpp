#include "onlyknow/normal_form.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

namespace onlyknow {

namespace {

using LeafMap = std::function<Formula(const Formula&)>;

void collect_chain(const Formula& f, Op op, std::vector<Formula>& out) {
  if (f.is(op)) {
    collect_chain(f.lhs(), op, out);
    collect_chain(f.rhs(), op, out);
  } else {
    out.push_back(f);
  }
}

// And/Or over already simplified operands.
Formula combine(Op op, const std::vector<Formula>& operands) {
  const Op absorbing = op == Op::And ? Op::False : Op::True;
  const Op identity = op == Op::And ? Op::True : Op::False;
  std::vector<Formula> kept;
  std::set<Formula> seen;
  std::set<Formula> negated;  // x such that ~x is among the operands
  auto add = [&](const Formula& s) -> bool {
    if (s.is(absorbing)) return false;
    if (s.is(identity) || seen.count(s)) return true;
    if (s.is(Op::Not) ? seen.count(s.lhs()) > 0 : negated.count(s) > 0) return false;
    if (s.is(Op::Not)) negated.insert(s.lhs());
    seen.insert(s);
    kept.push_back(s);
    return true;
  };
  for (const Formula& s : operands) {
    if (s.is(op)) {
      std::vector<Formula> inner;
      collect_chain(s, op, inner);
      for (const Formula& t : inner) {
        if (!add(t)) return Formula::constant(op == Op::Or);
      }
    } else if (!add(s)) {
      return Formula::constant(op == Op::Or);
    }
  }
  if (kept.empty()) return Formula::constant(op == Op::And);
  return op == Op::And ? conjunction(kept) : disjunction(kept);
}

Formula negate(const Formula& f) {
  if (f.is(Op::True)) return Formula::bottom();
  if (f.is(Op::False)) return Formula::top();
  if (f.is(Op::Not)) return f.lhs();
  return make_not(f);
}

// Simplifies the Boolean structure of `f`; `leaf` rewrites atoms, constants,
// modal and Val nodes. Without `dedup`, And/Or chains whose operands all come
// back unchanged are kept as they are.
Formula rewrite(const Formula& f, const LeafMap& leaf, bool dedup) {
  switch (f.op()) {
    case Op::Not:
      return negate(rewrite(f.lhs(), leaf, dedup));
    case Op::And:
    case Op::Or: {
      std::vector<Formula> chain;
      collect_chain(f, f.op(), chain);
      bool changed = false;
      for (Formula& g : chain) {
        Formula h = rewrite(g, leaf, dedup);
        if (!h.same_node(g)) {
          changed = true;
          g = std::move(h);
        }
      }
      if (!changed && !dedup) return f;
      return combine(f.op(), chain);
    }
    case Op::Implies: {
      const Formula a = rewrite(f.lhs(), leaf, dedup);
      const Formula b = rewrite(f.rhs(), leaf, dedup);
      if (a.is(Op::False) || b.is(Op::True) || a == b) return Formula::top();
      if (a.is(Op::True)) return b;
      if (b.is(Op::False)) return negate(a);
      if (a == f.lhs() && b == f.rhs()) return f;
      return make_implies(a, b);
    }
    case Op::Iff: {
      const Formula a = rewrite(f.lhs(), leaf, dedup);
      const Formula b = rewrite(f.rhs(), leaf, dedup);
      if (a == b) return Formula::top();
      if (a.is(Op::True)) return b;
      if (b.is(Op::True)) return a;
      if (a.is(Op::False)) return negate(b);
      if (b.is(Op::False)) return negate(a);
      if ((a.is(Op::Not) && a.lhs() == b) || (b.is(Op::Not) && b.lhs() == a)) return Formula::bottom();
      if (a == f.lhs() && b == f.rhs()) return f;
      return make_iff(a, b);
    }
    default:
      return leaf(f);
  }
}

Formula deep_leaf(const Formula& f) {
  switch (f.op()) {
    case Op::L:
    case Op::N: {
      const Formula body = simplify(f.lhs());
      if (body.is(Op::True)) return Formula::top();
      if (body == f.lhs()) return f;
      return f.is(Op::L) ? make_L(f.agent(), body) : make_N(f.agent(), body);
    }
    case Op::Val: {
      const Formula body = simplify(f.lhs());
      if (body.is_constant()) return body;
      return body == f.lhs() ? f : make_val(body);
    }
    default:
      return f;
  }
}

bool find_leftmost(const Formula& f, const std::function<bool(const Formula&)>& want, std::optional<Formula>& out) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return false;
    case Op::Not:
      return find_leftmost(f.lhs(), want, out);
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
      return find_leftmost(f.lhs(), want, out) || find_leftmost(f.rhs(), want, out);
    default:
      if (!want(f)) return false;
      out = f;
      return true;
  }
}

Formula make_modal(Op op, AgentId agent, const Formula& body) {
  return op == Op::L ? make_L(agent, body) : make_N(agent, body);
}

// Clauses of M_i(body): one per Shannon path over the i-subjective atoms,
// each of the form  ~path | M_i(residue).
void shannon_clauses(Op op, AgentId agent, const Formula& body, std::vector<Literal>& path,
                     std::vector<Formula>& clauses) {
  if (body.is(Op::True)) return;
  const auto subjective = leftmost_atom(body, [agent](const Formula& g) { return g.is_modal() && g.agent() == agent; });
  if (!subjective) {
    std::vector<Formula> parts;
    // M_i false | M_i x  is just  M_i x.
    const bool subsumed = body.is(Op::False) && std::any_of(path.begin(), path.end(), [op](const Literal& l) {
                            return !l.positive && l.atom.op() == op;
                          });
    if (!subsumed) parts.push_back(make_modal(op, agent, body));
    for (const Literal& l : path) parts.push_back(l.positive ? make_not(l.atom) : l.atom);
    clauses.push_back(disjunction(parts));
    return;
  }
  for (bool value : {true, false}) {
    path.push_back(Literal{*subjective, value});
    shannon_clauses(op, agent, assign(body, *subjective, value), path, clauses);
    path.pop_back();
  }
}

Formula flatten(const Formula& f) {
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return f;
    case Op::Val:
      throw FragmentError("normal form requires a Val-free formula");
    case Op::Not:
      return make_not(flatten(f.lhs()));
    case Op::And:
      return make_and(flatten(f.lhs()), flatten(f.rhs()));
    case Op::Or:
      return make_or(flatten(f.lhs()), flatten(f.rhs()));
    case Op::Implies:
      return make_implies(flatten(f.lhs()), flatten(f.rhs()));
    case Op::Iff:
      return make_iff(flatten(f.lhs()), flatten(f.rhs()));
    case Op::L:
    case Op::N: {
      const Formula body = simplify(flatten(f.lhs()));
      std::vector<Literal> path;
      std::vector<Formula> clauses;
      shannon_clauses(f.op(), f.agent(), body, path, clauses);
      return conjunction(clauses);
    }
  }
  return f;
}

std::atomic<long> g_live{0};
std::atomic<long> g_peak{0};

void bump_live() {
  const long now = ++g_live;
  long seen = g_peak.load();
  while (now > seen && !g_peak.compare_exchange_weak(seen, now)) {
  }
}

}  // namespace

Formula simplify(const Formula& f) { return rewrite(f, deep_leaf, true); }

Formula assign(const Formula& f, const Formula& atom, bool value) {
  return rewrite(f, [&](const Formula& g) { return g == atom ? Formula::constant(value) : g; }, false);
}

std::optional<Formula> leftmost_atom(const Formula& f, const std::function<bool(const Formula&)>& want) {
  std::optional<Formula> out;
  find_leftmost(f, want, out);
  return out;
}

Formula flatten_modalities(const Formula& f) { return simplify(flatten(f)); }

AgentBlock merge_positive(const BlockLiterals& raw) {
  AgentBlock b;
  b.agent = raw.agent;
  b.pos_L = simplify(conjunction(raw.pos_L));
  b.pos_N = simplify(conjunction(raw.pos_N));
  b.neg_L = raw.neg_L;
  b.neg_N = raw.neg_N;
  return b;
}

MaterializationToken::MaterializationToken() { bump_live(); }
MaterializationToken::MaterializationToken(const MaterializationToken&) { bump_live(); }
MaterializationToken::MaterializationToken(MaterializationToken&& other) noexcept : active_(other.active_) {
  other.active_ = false;
}
MaterializationToken& MaterializationToken::operator=(const MaterializationToken&) {
  if (!active_) {
    active_ = true;
    bump_live();
  }
  return *this;
}
MaterializationToken& MaterializationToken::operator=(MaterializationToken&& other) noexcept {
  if (this != &other && other.active_) {
    if (active_) --g_live;
    active_ = true;
    other.active_ = false;
  }
  return *this;
}
MaterializationToken::~MaterializationToken() {
  if (active_) --g_live;
}
long MaterializationToken::live() { return g_live.load(); }
long MaterializationToken::peak() { return g_peak.load(); }
void MaterializationToken::reset_peak() { g_peak.store(g_live.load()); }

Formula NormalFormDisjunct::to_formula() const {
  std::vector<Formula> parts;
  if (!sigma.is(Op::True)) parts.push_back(sigma);
  for (const AgentBlock& b : blocks) {
    if (!b.pos_L.is(Op::True)) parts.push_back(make_L(b.agent, b.pos_L));
    for (const Formula& g : b.neg_L) parts.push_back(make_not(make_L(b.agent, g)));
    if (!b.pos_N.is(Op::True)) parts.push_back(make_N(b.agent, b.pos_N));
    for (const Formula& g : b.neg_N) parts.push_back(make_not(make_N(b.agent, g)));
  }
  return conjunction(parts);
}

NormalFormDisjunct make_disjunct(const std::vector<Literal>& path) {
  NormalFormDisjunct d;
  std::vector<Formula> sigma;
  std::map<AgentId, BlockLiterals> raw;
  for (const Literal& l : path) {
    const Formula& a = l.atom;
    if (!a.is_modal()) {
      sigma.push_back(l.to_formula());
      continue;
    }
    BlockLiterals& b = raw[a.agent()];
    b.agent = a.agent();
    if (a.is(Op::L)) {
      (l.positive ? b.pos_L : b.neg_L).push_back(a.lhs());
    } else {
      (l.positive ? b.pos_N : b.neg_N).push_back(a.lhs());
    }
  }
  d.sigma = conjunction(sigma);
  for (const auto& [agent, b] : raw) d.blocks.push_back(merge_positive(b));
  return d;
}

DisjunctStream::DisjunctStream(const Formula& f) : skeleton_(flatten_modalities(f)) {
  stack_.push_back(Frame{skeleton_, 0, std::nullopt});
}

std::optional<NormalFormDisjunct> DisjunctStream::next() {
  while (!stack_.empty()) {
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    path_.resize(frame.depth);
    Formula residue = frame.residue;
    if (frame.literal) {
      path_.push_back(*frame.literal);
      residue = assign(residue, frame.literal->atom, frame.literal->positive);
    }
    if (residue.is(Op::False)) continue;
    if (residue.is(Op::True)) {
      ++produced_;
      return make_disjunct(path_);
    }
    const auto atom = leftmost_atom(residue, [](const Formula&) { return true; });
    if (!atom) throw FragmentError("normal form requires a Val-free formula");
    const std::size_t depth = path_.size();
    stack_.push_back(Frame{residue, depth, Literal{*atom, false}});
    stack_.push_back(Frame{residue, depth, Literal{*atom, true}});
    max_stack_ = std::max(max_stack_, stack_.size());
  }
  return std::nullopt;
}

DisjunctStream to_normal_form(const Formula& f) { return DisjunctStream(f); }

Formula reassemble(DisjunctStream& stream, std::size_t limit) {
  std::vector<Formula> parts;
  while (limit == 0 || parts.size() < limit) {
    auto d = stream.next();
    if (!d) break;
    parts.push_back(d->to_formula());
  }
  return disjunction(parts);
}

}  // namespace onlyknow
