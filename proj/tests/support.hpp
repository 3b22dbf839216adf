// Oracles for the test binaries. They share nothing with the library beyond
// the Formula type, so agreement with them is evidence, not tautology.

#ifndef ONLYKNOW_TESTS_SUPPORT_HPP
#define ONLYKNOW_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "onlyknow/formula.hpp"
#include "onlyknow/syntax.hpp"

namespace testing {

using onlyknow::Formula;
using onlyknow::Op;

inline Formula P(const char* text) { return onlyknow::parse(text); }

// Truth-table evaluation of a propositional formula.
inline bool truth(const Formula& f, const std::map<std::string, bool>& v) {
  switch (f.op()) {
    case Op::Atom: return v.at(f.name());
    case Op::True: return true;
    case Op::False: return false;
    case Op::Not: return !truth(f.lhs(), v);
    case Op::And: return truth(f.lhs(), v) && truth(f.rhs(), v);
    case Op::Or: return truth(f.lhs(), v) || truth(f.rhs(), v);
    case Op::Implies: return !truth(f.lhs(), v) || truth(f.rhs(), v);
    case Op::Iff: return truth(f.lhs(), v) == truth(f.rhs(), v);
    default: throw onlyknow::Error("truth: not propositional");
  }
}

inline bool truth_table_sat(const Formula& f) {
  const auto atoms = onlyknow::atoms_of(f);
  const std::vector<std::string> names(atoms.begin(), atoms.end());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << names.size()); ++m) {
    std::map<std::string, bool> v;
    for (std::size_t k = 0; k < names.size(); ++k) v[names[k]] = (m >> k) & 1;
    if (truth(f, v)) return true;
  }
  return false;
}

// A tiny Kripke structure: world w has valuation bits val[w] over `atoms`,
// rel[agent][u] is a bitmask of u's successors.
struct TinyModel {
  int worlds = 0;
  std::vector<std::string> atoms;
  std::vector<unsigned> val;
  std::map<int, std::vector<unsigned>> rel;

  bool holds(int w, const Formula& f) const {
    switch (f.op()) {
      case Op::Atom: {
        for (std::size_t k = 0; k < atoms.size(); ++k) {
          if (atoms[k] == f.name()) return (val[w] >> k) & 1;
        }
        return false;
      }
      case Op::True: return true;
      case Op::False: return false;
      case Op::Not: return !holds(w, f.lhs());
      case Op::And: return holds(w, f.lhs()) && holds(w, f.rhs());
      case Op::Or: return holds(w, f.lhs()) || holds(w, f.rhs());
      case Op::Implies: return !holds(w, f.lhs()) || holds(w, f.rhs());
      case Op::Iff: return holds(w, f.lhs()) == holds(w, f.rhs());
      case Op::L: {
        auto it = rel.find(f.agent());
        if (it == rel.end()) return true;
        for (int v = 0; v < worlds; ++v) {
          if (((it->second[w] >> v) & 1) && !holds(v, f.lhs())) return false;
        }
        return true;
      }
      default: throw onlyknow::Error("TinyModel: basic formulas only");
    }
  }
};

inline bool transitive_euclidean(const std::vector<unsigned>& r, int n) {
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!((r[u] >> v) & 1)) continue;
      if ((r[v] & ~r[u]) != 0) return false;           // u->v->x needs u->x
      if ((r[u] & ~r[v]) != 0) return false;           // u->v, u->x needs v->x
    }
  }
  return true;
}

// Every transitive Euclidean relation on n worlds, as successor masks.
inline std::vector<std::vector<unsigned>> k45_relations(int n) {
  std::vector<std::vector<unsigned>> out;
  const unsigned cells = static_cast<unsigned>(n * n);
  for (unsigned m = 0; m < (1u << cells); ++m) {
    std::vector<unsigned> r(n, 0);
    for (int u = 0; u < n; ++u) r[u] = (m >> (u * n)) & ((1u << n) - 1);
    if (transitive_euclidean(r, n)) out.push_back(r);
  }
  return out;
}

// Searches every K45 structure with up to `max_worlds` worlds for a model of
// the basic formula f. Finding one proves satisfiability; not finding one
// proves nothing.
inline bool small_model_exists(const Formula& f, int agents, int max_worlds) {
  const auto atom_set = onlyknow::atoms_of(f);
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  for (int n = 1; n <= max_worlds; ++n) {
    const auto rels = k45_relations(n);
    const unsigned vals = 1u << (atoms.size() * n);
    std::vector<std::size_t> pick(agents, 0);
    for (;;) {
      TinyModel m;
      m.worlds = n;
      m.atoms = atoms;
      for (int a = 0; a < agents; ++a) m.rel[a + 1] = rels[pick[a]];
      for (unsigned v = 0; v < vals; ++v) {
        m.val.assign(n, 0);
        for (int w = 0; w < n; ++w) m.val[w] = (v >> (w * atoms.size())) & ((1u << atoms.size()) - 1);
        // World 0 as the point of evaluation is enough: any world can be
        // renumbered to 0.
        if (m.holds(0, f)) return true;
      }
      int a = 0;
      while (a < agents && ++pick[a] == rels.size()) pick[a++] = 0;
      if (a == agents) break;
    }
  }
  return false;
}

}  // namespace testing

#endif  // ONLYKNOW_TESTS_SUPPORT_HPP
