#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support.hpp"
#include "onlyknow/corpus.hpp"
#include "onlyknow/kripke.hpp"
#include "onlyknow/syntax.hpp"

using namespace onlyknow;
using testing::P;

namespace {

KripkeStructure reflexive_point() {
  KripkeStructure m;
  m.add_world("w", {"p"});
  m.add_edge(1, "w", "w");
  return m;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(reflexive_point()).ok());

  KripkeStructure two;
  two.add_world("a");
  two.add_world("b");
  two.add_edge(1, "a", "b");
  const ValidationReport r = validate(two);
  CHECK(r.transitivity.empty());
  REQUIRE(r.euclidean.size() == 1);
  CHECK(r.euclidean[0].u == "a");
  CHECK(r.euclidean[0].v == "b");
  CHECK(r.euclidean[0].w == "b");
  two.add_edge(1, "b", "b");
  CHECK(validate(two).ok());

  KripkeStructure chain;
  chain.add_world("a");
  chain.add_world("b");
  chain.add_world("c");
  chain.add_edge(1, "a", "b");
  chain.add_edge(1, "b", "c");
  const ValidationReport c = validate(chain);
  REQUIRE_FALSE(c.transitivity.empty());
  CHECK(c.transitivity[0].u == "a");
  CHECK(c.transitivity[0].w == "c");
}

TEST_CASE("validate agrees with the bitmask frame oracle") {
  for (int n = 1; n <= 3; ++n) {
    const unsigned cells = static_cast<unsigned>(n * n);
    for (unsigned mask = 0; mask < (1u << cells); ++mask) {
      KripkeStructure m;
      std::vector<unsigned> r(n, 0);
      for (int w = 0; w < n; ++w) m.add_world("w" + std::to_string(w));
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if ((mask >> (u * n + v)) & 1) {
            m.add_edge(1, u, v);
            r[u] |= 1u << v;
          }
        }
      }
      CHECK(validate(m).ok() == testing::transitive_euclidean(r, n));
    }
  }
}

TEST_CASE("check_basic") {
  KripkeStructure m;
  m.add_world("w", {"p"});
  CHECK(check_basic(m, 0, P("L1 false")));
  CHECK(check_basic(m, 0, P("p & ~q")));
  CHECK_THROWS_AS(check_basic(m, 0, P("N1 p")), FragmentError);
  CHECK_THROWS_AS(check_basic(m, 3, P("p")), Error);
}

TEST_CASE("a one-world model satisfies L1 p & N1 p") {
  // N1 ranges over the worlds outside K1(w), and there are none.
  const KripkeStructure m = reflexive_point();
  CHECK(check_naive_n(m, 0, P("L1 p & N1 p")));
  CHECK(check_fixed_n(m, 0, P("L1 p & N1 p")));
  CHECK(check_naive_n(m, 0, P("N1 false")));
}

TEST_CASE("naive and fixed N differ on worlds with other belief states") {
  KripkeStructure m;
  const int wp = m.add_world("wp", {"p"});
  const int wq = m.add_world("wq", {"q"});
  m.add_edge(1, wp, wp);
  CHECK(check_naive_n(m, wp, P("N1 p")) == m.holds(wq, "p"));
  CHECK_FALSE(check_naive_n(m, wp, P("N1 p")));
  // wq has no 1-successors, so K1(wq) != K1(wp) and it is skipped.
  CHECK(check_fixed_n(m, wp, P("N1 p")));
  m.add_edge(1, wq, wp);
  CHECK_FALSE(check_fixed_n(m, wp, P("N1 p")));
}

TEST_CASE("the three checkers coincide on basic formulas") {
  KripkeStructure m;
  m.add_world("a", {"p"});
  m.add_world("b", {"q"});
  m.add_world("c", {"p", "r"});
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}) m.add_edge(1, u, v);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 2}}) m.add_edge(2, u, v);
  REQUIRE(validate(m).ok());
  FormulaGenerator gen(113, GeneratorOptions{});
  for (int k = 0; k < 300; ++k) {
    const Formula f = gen.next();
    INFO(print(f));
    for (int w = 0; w < m.size(); ++w) {
      const bool b = check_basic(m, w, f);
      CHECK(check_naive_n(m, w, f) == b);
      CHECK(check_fixed_n(m, w, f) == b);
    }
  }
}

TEST_CASE("json round trip") {
  const std::string text = R"({"worlds": {"u": ["p"], "v": []}, "relations": {"2": [["u", "v"], ["v", "v"]]}})";
  const KripkeStructure m = kripke_from_json(text);
  CHECK(m.size() == 2);
  CHECK(m.holds(m.index_of("u"), "p"));
  CHECK(m.successors(2, m.index_of("u")) == std::set<int>{m.index_of("v")});
  CHECK(m.successors(1, 0).empty());
  const KripkeStructure back = kripke_from_json(kripke_to_json(m));
  CHECK(back.size() == 2);
  CHECK(back.relation(2) == m.relation(2));
  CHECK_THROWS(kripke_from_json(R"({"worlds": {"u": []}, "relations": {"1": [["u", "x"]]}})"));
  CHECK_THROWS(kripke_from_json("not json"));
}
