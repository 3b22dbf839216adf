#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support.hpp"
#include "onlyknow/autoepistemic.hpp"
#include "onlyknow/corpus.hpp"
#include "onlyknow/syntax.hpp"

using namespace onlyknow;
using testing::P;

namespace {

bool bel(const char* kb, const char* query, AgentId agent = 1) { return believes({agent, P(kb), P(query)}); }

const Alphabet kP = Alphabet::from_list("p");

}  // namespace

TEST_CASE("believes examples") {
  CHECK(bel("~L1 L2 p -> ~L2 p", "~L2 p"));
  CHECK(bel("L2 p & (~L1 L2 p -> ~L2 p)", "L2 p"));
  CHECK_FALSE(bel("p", "q"));
  CHECK(bel("p", "p"));
  CHECK(bel("p", "p | q"));
  CHECK(bel("~L2 ~p -> p", "~L2 ~p -> p", 2));
}

TEST_CASE("a stronger knowledge base retracts a default belief") {
  CHECK(bel("~L1 L2 p -> ~L2 p", "~L2 p"));
  CHECK_FALSE(bel("L2 p & (~L1 L2 p -> ~L2 p)", "~L2 p"));
  CHECK(bel("~L1 ~p -> p", "p"));
  CHECK_FALSE(bel("(~L1 ~p -> p) & ~p", "p"));
}

TEST_CASE("kb_coherent") {
  CHECK(kb_coherent(1, P("p")));
  CHECK(kb_coherent(1, P("~O2 p")));
  // All 1 knows is false: L1 false & N1 true.
  CHECK(kb_coherent(1, P("false")));
  CHECK(kb_coherent(1, P("true")));
}

TEST_CASE("only-knowing sets of the default") {
  // alpha = ~L1 ~p -> p over {p}; worlds ~p (bit 0) and p (bit 1).
  //   W = {}:      L1 ~p holds, alpha true at both worlds; W should be all.
  //   W = {~p}:    L1 ~p holds, alpha true at both; ~p alone is not enough.
  //   W = {p}:     L1 ~p fails, alpha is p; exactly {p}. Fixed point.
  //   W = {~p, p}: L1 ~p fails, alpha is p; ~p is excluded, contradiction.
  const Formula alpha = P("~L1 ~p -> p");
  for (WorldSet W = 0; W < 4; ++W) {
    const bool at_not_p = eval(kP, Situation{W, 0}, alpha);
    const bool at_p = eval(kP, Situation{W, 1}, alpha);
    const bool fixed = at_not_p == ((W & 1) != 0) && at_p == ((W & 2) != 0);
    CHECK(fixed == (W == 0b10));
  }
  CHECK(only_knowing_sets(alpha, kP) == std::vector<WorldSet>{0b10});
  CHECK(only_knowing_sets(P("p"), kP) == std::vector<WorldSet>{0b10});
  CHECK(only_knowing_sets(P("true"), kP) == std::vector<WorldSet>{0b11});
  CHECK(only_knowing_sets(P("~L1 p -> p"), kP).empty());
  CHECK_THROWS(only_knowing_sets(P("p"), Alphabet::from_list("p,q,r")));
}

TEST_CASE("objective knowledge bases have exactly their models") {
  const Alphabet phi = Alphabet::from_list("p,q");
  GeneratorOptions o;
  o.max_depth = 0;
  o.atoms = 2;
  FormulaGenerator gen(127, o);
  for (int k = 0; k < 100; ++k) {
    const Formula alpha = gen.next();
    WorldSet models = 0;
    for (World w = 0; w < 4; ++w) {
      if (eval(phi, Situation{0, w}, alpha)) models |= WorldSet{1} << w;
    }
    INFO(print(alpha));
    CHECK(only_knowing_sets(alpha, phi) == std::vector<WorldSet>{models});
  }
}

TEST_CASE("belief is never contradictory for a coherent, non-empty state") {
  GeneratorOptions o;
  o.profile = Profile::full;
  o.max_depth = 2;
  FormulaGenerator gen(131, o);
  int coherent = 0;
  for (int k = 0; k < 300; ++k) {
    const Formula kb = gen.next();
    const Formula beta = gen.next();
    if (!consistent_ax(make_and(make_O(1, kb), make_not(make_L(1, Formula::bottom())))).holds()) continue;
    ++coherent;
    INFO(print(kb), " / ", print(beta));
    CHECK_FALSE((believes({1, kb, beta}) && believes({1, kb, make_not(beta)})));
  }
  CHECK(coherent > 100);
}

TEST_CASE("believes matches the only-knowing sets over one atom") {
  GeneratorOptions o;
  o.profile = Profile::full;
  o.allow_val = false;
  o.agents = 1;
  o.atoms = 1;
  o.max_depth = 2;
  FormulaGenerator gen(137, o);
  for (int k = 0; k < 400; ++k) {
    const Formula kb = gen.next();
    const Formula query = gen.next();
    bool everywhere = true;
    for (WorldSet W : only_knowing_sets(kb, kP)) {
      for (World w = 0; w < 2; ++w) {
        if (((W >> w) & 1) && !eval(kP, Situation{W, w}, query)) everywhere = false;
      }
    }
    INFO(print(kb), " / ", print(query));
    CHECK(believes({1, kb, query}) == everywhere);
  }
}
