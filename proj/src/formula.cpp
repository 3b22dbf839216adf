#include "onlyknow/formula.hpp"

#include <algorithm>
#include <functional>

namespace onlyknow {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int compare(const Formula& a, const Formula& b);

int compare_nodes(const Formula& a, const Formula& b) {
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.agent() != b.agent()) return a.agent() < b.agent() ? -1 : 1;
  switch (a.op()) {
    case Op::Atom:
      return a.name().compare(b.name());
    case Op::True:
    case Op::False:
      return 0;
    case Op::Not:
    case Op::L:
    case Op::N:
    case Op::Val:
      return compare(a.lhs(), b.lhs());
    default:
      if (int c = compare(a.lhs(), b.lhs()); c != 0) return c;
      return compare(a.rhs(), b.rhs());
  }
}

int compare(const Formula& a, const Formula& b) {
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  return compare_nodes(a, b);
}

}  // namespace

Formula make_node(Op op, AgentId agent, std::string name, const Formula* lhs, const Formula* rhs) {
  auto node = std::make_shared<detail::Node>();
  node->op = op;
  node->agent = agent;
  std::size_t h = mix(static_cast<std::size_t>(op) + 1, static_cast<std::size_t>(agent));
  if (op == Op::Atom) h = mix(h, std::hash<std::string>{}(name));
  node->name = std::move(name);
  if (lhs) {
    h = mix(h, lhs->hash());
    node->size += lhs->size();
    node->lhs = *lhs;
  }
  if (rhs) {
    h = mix(h, rhs->hash());
    node->size += rhs->size();
    node->rhs = *rhs;
  }
  node->hash = h;
  return Formula(std::shared_ptr<const detail::Node>(std::move(node)));
}

Formula::Formula() : Formula(top()) {}

Formula Formula::atom(std::string name) {
  return make_node(Op::Atom, 0, std::move(name), nullptr, nullptr);
}

Formula Formula::top() {
  static const Formula t = make_node(Op::True, 0, {}, nullptr, nullptr);
  return t;
}

Formula Formula::bottom() {
  static const Formula f = make_node(Op::False, 0, {}, nullptr, nullptr);
  return f;
}

Op Formula::op() const { return node_->op; }
AgentId Formula::agent() const { return node_->agent; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

bool Formula::is_binary() const {
  switch (op()) {
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
      return true;
    default:
      return false;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return compare_nodes(a, b) == 0;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  return compare(a, b) < 0;
}

Formula make_not(Formula f) { return make_node(Op::Not, 0, {}, &f, nullptr); }
Formula make_and(Formula a, Formula b) { return make_node(Op::And, 0, {}, &a, &b); }
Formula make_or(Formula a, Formula b) { return make_node(Op::Or, 0, {}, &a, &b); }
Formula make_implies(Formula a, Formula b) { return make_node(Op::Implies, 0, {}, &a, &b); }
Formula make_iff(Formula a, Formula b) { return make_node(Op::Iff, 0, {}, &a, &b); }
Formula make_L(AgentId agent, Formula body) { return make_node(Op::L, agent, {}, &body, nullptr); }
Formula make_N(AgentId agent, Formula body) { return make_node(Op::N, agent, {}, &body, nullptr); }
Formula make_val(Formula body) { return make_node(Op::Val, 0, {}, &body, nullptr); }

Formula make_O(AgentId agent, Formula body) {
  return make_and(make_L(agent, body), make_N(agent, make_not(body)));
}

Formula make_con(Formula body) { return make_not(make_val(make_not(std::move(body)))); }

Formula conjunction(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) acc = make_and(acc, parts[k]);
  return acc;
}

Formula disjunction(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::bottom();
  Formula acc = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) acc = make_or(acc, parts[k]);
  return acc;
}

namespace {

template <typename Visit>
void walk(const Formula& f, Visit&& visit) {
  visit(f);
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return;
    case Op::Not:
    case Op::L:
    case Op::N:
    case Op::Val:
      walk(f.lhs(), visit);
      return;
    default:
      walk(f.lhs(), visit);
      walk(f.rhs(), visit);
  }
}

}  // namespace

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  walk(f, [&](const Formula& g) {
    if (g.is(Op::Atom)) out.insert(g.name());
  });
  return out;
}

AgentId max_agent(const Formula& f) {
  AgentId best = 0;
  walk(f, [&](const Formula& g) { best = std::max(best, g.agent()); });
  return best;
}

std::set<AgentId> agents_of(const Formula& f) {
  std::set<AgentId> out;
  walk(f, [&](const Formula& g) {
    if (g.is_modal()) out.insert(g.agent());
  });
  return out;
}

bool mentions(const Formula& f, Op op) {
  bool found = false;
  walk(f, [&](const Formula& g) { found = found || g.is(op); });
  return found;
}

int nesting_depth(const Formula& f) {
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return 0;
    case Op::Not:
      return nesting_depth(f.lhs());
    case Op::L:
    case Op::N:
    case Op::Val:
      return 1 + nesting_depth(f.lhs());
    default:
      return std::max(nesting_depth(f.lhs()), nesting_depth(f.rhs()));
  }
}

}  // namespace onlyknow
