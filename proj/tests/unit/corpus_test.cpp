#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "../support.hpp"
#include "onlyknow/classify.hpp"
#include "onlyknow/corpus.hpp"
#include "onlyknow/decision.hpp"
#include "onlyknow/normal_form.hpp"
#include "onlyknow/syntax.hpp"

using namespace onlyknow;
using testing::P;

namespace {

std::vector<CorpusEntry> all_entries() {
  std::vector<CorpusEntry> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(ONLYKNOW_CORPUS_DIR)) {
    if (e.path().extension() == ".jsonl") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    auto entries = load_corpus(f.string());
    out.insert(out.end(), entries.begin(), entries.end());
  }
  return out;
}

}  // namespace

TEST_CASE("generator is reproducible") {
  for (Profile p : {Profile::basic, Profile::onl_minus, Profile::full}) {
    GeneratorOptions o;
    o.profile = p;
    FormulaGenerator a(1, o), b(1, o), c(2, o);
    bool differs = false;
    for (int k = 0; k < 100; ++k) {
      const Formula x = a.next();
      CHECK(x == b.next());
      differs = differs || x != c.next();
    }
    CHECK(differs);
    CHECK(generate_random(1, o) == FormulaGenerator(1, o).next());
  }
}

TEST_CASE("profiles constrain the operators") {
  GeneratorOptions o;
  for (Profile p : {Profile::basic, Profile::onl_minus, Profile::full}) {
    o.profile = p;
    FormulaGenerator gen(139, o);
    bool saw_n = false, saw_val = false;
    for (int k = 0; k < 1000; ++k) {
      const Formula f = gen.next();
      INFO(print(f));
      saw_n = saw_n || mentions(f, Op::N);
      saw_val = saw_val || mentions(f, Op::Val);
      CHECK(nesting_depth(f) <= o.max_depth);
      CHECK(atoms_of(f).size() <= 3);
      CHECK(max_agent(f) <= 2);
      if (p == Profile::basic) CHECK(is_basic(f));
      if (p == Profile::onl_minus) CHECK(in_onl_minus(f));
    }
    CHECK(saw_n == (p != Profile::basic));
    CHECK(saw_val == (p == Profile::full));
  }
  CHECK(profile_from_string("onl_minus") == Profile::onl_minus);
  CHECK_THROWS(profile_from_string("nope"));
}

TEST_CASE("axiom instances satisfy their side conditions and are valid") {
  const auto pool = axiom_pool(1, 50);
  const auto instances = axiom_instances(pool, 2, 2, 6);
  CHECK(instances.size() == 9 * 6);
  for (const AxiomInstance& a : instances) {
    INFO(a.scheme, ": ", print(a.formula));
    CHECK(valid_ax(a.formula).holds());
  }
}

TEST_CASE("cross checks on a small sample") {
  const CrossCheckReport r = cross_check(3, 60);
  for (const Disagreement& d : r.disagreements) {
    INFO(d.suite, ": ", d.formula, " ", d.detail);
    CHECK(false);
  }
  CHECK(r.checked >= 240);
  CHECK(r.unsatisfiable > 0);
}

TEST_CASE("corpus entry parsing") {
  const CorpusEntry e = corpus_entry_from_json(R"({"formula": "p", "expected": "SAT", "mode": "sat", "provenance": "x"})");
  CHECK(e.semantics == "ax");
  CHECK(e.agents == 0);
  CHECK(run_entry(e).verdict == "SAT");
  CHECK_THROWS(corpus_entry_from_json("{}"));
  CHECK_THROWS(corpus_entry_from_json("[1"));
  CorpusEntry bad = e;
  bad.semantics = "s5";
  CHECK_THROWS(run_entry(bad));
}

TEST_CASE("oracle entries carry their counterexample") {
  CorpusEntry e;
  e.formula = "~L1 ~p -> N1 ~p";
  e.semantics = "extended";
  e.phi = "p";
  const EntryResult r = run_entry(e);
  CHECK(r.verdict == "INVALID");
  REQUIRE(r.counterexample);
  CHECK(*r.counterexample == "W_L={~p, p} W_N={p} w=~p");
}

TEST_CASE("every corpus entry reproduces") {
  const auto entries = all_entries();
  CHECK(entries.size() >= 40);
  for (const CorpusEntry& e : entries) {
    INFO(e.formula, " [", e.semantics, "] ", e.provenance);
    CHECK_FALSE(e.provenance.empty());
    CHECK(run_entry(e).verdict == e.expected);
  }
}

TEST_CASE("corpus formulas: duality and normal-form equivalence") {
  for (const CorpusEntry& e : all_entries()) {
    if (e.semantics != "ax") continue;
    const Formula f = parse(e.formula);
    INFO(e.formula);
    CHECK(valid_ax(f).holds() == !consistent_ax(make_not(f)).holds());
    const Formula g = eliminate_val(f);
    DisjunctStream s(g);
    CHECK(valid_ax(make_iff(g, reassemble(s))).holds());
  }
}
