#include "onlyknow/finite_semantics.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "onlyknow/normal_form.hpp"

namespace onlyknow {

Alphabet::Alphabet(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (size() > kMaxAtoms) throw Error("alphabets are limited to " + std::to_string(kMaxAtoms) + " atoms");
  std::vector<std::string> sorted = atoms_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("duplicate atom in alphabet");
}

Alphabet Alphabet::from_list(std::string_view comma_separated) {
  std::vector<std::string> atoms;
  std::string item;
  std::istringstream in{std::string(comma_separated)};
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (!item.empty()) atoms.push_back(item);
  }
  return Alphabet(std::move(atoms));
}

int Alphabet::index(const std::string& atom) const {
  for (int k = 0; k < size(); ++k) {
    if (atoms_[k] == atom) return k;
  }
  return -1;
}

WorldSet Alphabet::all_worlds() const {
  const World n = world_count();
  return n == 64 ? ~WorldSet{0} : (WorldSet{1} << n) - 1;
}

Formula Alphabet::world_formula(World w) const {
  std::vector<Formula> lits;
  for (int k = 0; k < size(); ++k) {
    const Formula a = Formula::atom(atoms_[k]);
    lits.push_back((w >> k) & 1 ? a : make_not(a));
  }
  return conjunction(lits);
}

std::string Alphabet::world_name(World w) const {
  if (size() == 0) return "*";
  std::string out;
  for (int k = 0; k < size(); ++k) {
    if (k) out += '&';
    if (!((w >> k) & 1)) out += '~';
    out += atoms_[k];
  }
  return out;
}

std::string Alphabet::describe(WorldSet s) const {
  std::string out = "{";
  bool first = true;
  for (World w = 0; w < world_count(); ++w) {
    if (!((s >> w) & 1)) continue;
    if (!first) out += ", ";
    out += world_name(w);
    first = false;
  }
  return out + "}";
}

std::string describe(const Alphabet& phi, const ExtendedSituation& s) {
  return "W_L=" + phi.describe(s.W_L) + " W_N=" + phi.describe(s.W_N) + " w=" + phi.world_name(s.w);
}

void require_single_agent(const Formula& f, const Alphabet& phi) {
  if (mentions(f, Op::Val)) throw FragmentError("finite semantics does not interpret Val");
  if (agents_of(f).size() > 1) throw FragmentError("finite semantics is single-agent");
  for (const std::string& a : atoms_of(f)) {
    if (phi.index(a) < 0) throw Error("atom '" + a + "' is not in the alphabet");
  }
}

namespace {

// L ranges over wl, N over wn.
struct Evaluator {
  const Alphabet& phi;
  World count;

  bool run(const Formula& f, WorldSet wl, WorldSet wn, World w) const {
    switch (f.op()) {
      case Op::Atom:
        return (w >> phi.index(f.name())) & 1;
      case Op::True:
        return true;
      case Op::False:
        return false;
      case Op::Not:
        return !run(f.lhs(), wl, wn, w);
      case Op::And:
        return run(f.lhs(), wl, wn, w) && run(f.rhs(), wl, wn, w);
      case Op::Or:
        return run(f.lhs(), wl, wn, w) || run(f.rhs(), wl, wn, w);
      case Op::Implies:
        return !run(f.lhs(), wl, wn, w) || run(f.rhs(), wl, wn, w);
      case Op::Iff:
        return run(f.lhs(), wl, wn, w) == run(f.rhs(), wl, wn, w);
      case Op::L:
      case Op::N: {
        const WorldSet domain = f.is(Op::L) ? wl : wn;
        for (World v = 0; v < count; ++v) {
          if (((domain >> v) & 1) && !run(f.lhs(), wl, wn, v)) return false;
        }
        return true;
      }
      case Op::Val:
        break;
    }
    throw FragmentError("finite semantics does not interpret Val");
  }
};

}  // namespace

bool eval(const Alphabet& phi, const Situation& s, const Formula& f) {
  require_single_agent(f, phi);
  const WorldSet all = phi.all_worlds();
  return Evaluator{phi, phi.world_count()}.run(f, s.W & all, ~s.W & all, s.w);
}

bool eval_x(const Alphabet& phi, const ExtendedSituation& s, const Formula& f) {
  require_single_agent(f, phi);
  const WorldSet all = phi.all_worlds();
  if (((s.W_L | s.W_N) & all) != all) throw Error("W_L and W_N must cover every world");
  return Evaluator{phi, phi.world_count()}.run(f, s.W_L & all, s.W_N & all, s.w);
}

OracleResult oracle_valid(const Formula& f, const Alphabet& phi, Semantics semantics, int bound) {
  if (phi.size() > bound) {
    throw Error("alphabet of " + std::to_string(phi.size()) + " atoms exceeds the enumeration bound " +
                std::to_string(bound));
  }
  require_single_agent(f, phi);
  const Evaluator ev{phi, phi.world_count()};
  const WorldSet all = phi.all_worlds();
  const World worlds = phi.world_count();
  OracleResult r;
  auto check = [&](WorldSet wl, WorldSet wn) {
    for (World w = 0; w < worlds; ++w) {
      ++r.situations;
      if (!ev.run(f, wl, wn, w)) {
        r.valid = false;
        r.counterexample = ExtendedSituation{wl, wn, w};
        return false;
      }
    }
    return true;
  };
  if (semantics == Semantics::levesque) {
    for (WorldSet W = 0;; ++W) {
      if (!check(W, ~W & all)) return r;
      if (W == all) break;
    }
    return r;
  }
  for (WorldSet wl = all;; --wl) {
    // W_N ranges over supersets of the complement of W_L, ascending.
    const WorldSet forced = ~wl & all;
    for (WorldSet extra = 0;; extra = (extra - wl) & wl) {
      if (!check(wl, forced | extra)) return r;
      if (extra == wl) break;
    }
    if (wl == 0) break;
  }
  return r;
}

WorldSet maximal_closure(WorldSet W, const Alphabet& phi) {
  if (phi.size() > 4) throw Error("maximal_closure enumerates objective formulas; at most four atoms");
  const World worlds = phi.world_count();
  const WorldSet all = phi.all_worlds();
  W &= all;
  WorldSet plus = all;
  for (WorldSet s = 0;; ++s) {
    std::vector<Formula> members;
    for (World v = 0; v < worlds; ++v) {
      if ((s >> v) & 1) members.push_back(phi.world_formula(v));
    }
    const Formula objective = disjunction(members);
    if (eval(phi, Situation{W, 0}, make_L(1, objective))) {
      for (World w = 0; w < worlds; ++w) {
        if (!eval(phi, Situation{W, w}, objective)) plus &= ~(WorldSet{1} << w);
      }
    }
    if (s == all) break;
  }
  return plus;
}

namespace {

Formula replace_n(const Formula& f, const Alphabet& phi) {
  switch (f.op()) {
    case Op::N: {
      const Formula body = f.lhs();
      std::vector<Formula> parts;
      for (World w = 0; w < phi.world_count(); ++w) {
        if (!eval(phi, Situation{0, w}, body)) parts.push_back(make_not(make_L(f.agent(), make_not(phi.world_formula(w)))));
      }
      return conjunction(parts);
    }
    case Op::L:
      return make_L(f.agent(), replace_n(f.lhs(), phi));
    case Op::Not:
      return make_not(replace_n(f.lhs(), phi));
    case Op::And:
      return make_and(replace_n(f.lhs(), phi), replace_n(f.rhs(), phi));
    case Op::Or:
      return make_or(replace_n(f.lhs(), phi), replace_n(f.rhs(), phi));
    case Op::Implies:
      return make_implies(replace_n(f.lhs(), phi), replace_n(f.rhs(), phi));
    case Op::Iff:
      return make_iff(replace_n(f.lhs(), phi), replace_n(f.rhs(), phi));
    default:
      return f;
  }
}

}  // namespace

Formula reduce_n_to_l(const Formula& f, const Alphabet& phi) {
  require_single_agent(f, phi);
  // After flattening every modal argument is objective, hence propositional.
  return simplify(replace_n(flatten_modalities(f), phi));
}

}  // namespace onlyknow
