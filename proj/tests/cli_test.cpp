#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("onlyknow_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// `args` is appended to the binary path verbatim; quote formulas.
Run run(const std::string& args, const std::string& env = "") {
  const fs::path out = scratch() / "out.txt";
  const fs::path err = scratch() / "err.txt";
  const std::string cmd =
      env + " " + std::string(ONLYKNOW_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write(const std::string& name, const std::string& content) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << content;
  return p;
}

// json-lines output without the timing field.
std::string without_millis(const std::string& lines) {
  std::istringstream in(lines);
  std::string out, line;
  while (std::getline(in, line)) {
    auto j = nlohmann::ordered_json::parse(line);
    j.erase("millis");
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("decide") {
  Run r = run("decide --mode valid --agents 2 \"O1(~L1 L2 p -> ~L2 p) -> L1 ~L2 p\"");
  CHECK(r.code == 0);
  CHECK(r.out == "VALID\n");

  r = run("decide --mode sat --agents 2 \"N1 ~O2 p & L1 ~O2 p\"");
  CHECK(r.code == 1);
  CHECK(r.out == "UNSAT\n");

  r = run("decide --mode sat \"O1 ~O2 p\"");
  CHECK(r.code == 0);
  CHECK(r.out == "SAT\n");
}

TEST_CASE("decide --trace prints one line per step before the verdict") {
  const Run r = run("decide --trace \"L1 p -> L1 L1 p\"");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("valid [depth 2] L1 p -> L1 L1 p\n", 0) == 0);
  CHECK(r.out.find("\nVALID\n") != std::string::npos);
}

TEST_CASE("errors exit with 2 and a message") {
  Run r = run("decide \"p &\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(r.out.empty());

  r = run("decide --agents 1 \"L2 p\"");
  CHECK(r.code == 2);

  r = run("frobnicate");
  CHECK(r.code == 2);

  r = run("oracle \"p\"");
  CHECK(r.code == 2);
}

TEST_CASE("time budget") {
  std::string f;
  for (int k = 1; k <= 16; ++k) f += "(p" + std::to_string(k) + " | L1 q" + std::to_string(k) + ") & ";
  f += "L1 false & N1 false";
  Run r = run("--time-budget 0.01 decide --mode sat \"" + f + "\"");
  CHECK(r.code == 3);
  CHECK(r.out.rfind("TIMEOUT (partial: ", 0) == 0);
  CHECK(r.out.find("UNSAT") == std::string::npos);

  r = run("decide --mode sat \"" + f + "\"", "ONLYKNOW_TIME_BUDGET=0.01");
  CHECK(r.code == 3);

  r = run("--format json-lines --time-budget 0.01 decide --mode sat \"" + f + "\"");
  CHECK(r.code == 3);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "TIMEOUT");
  CHECK(j.contains("partial"));
}

TEST_CASE("oracle") {
  Run r = run("oracle --phi p --semantics levesque \"~L1 ~p -> N1 ~p\"");
  CHECK(r.code == 0);
  CHECK(r.out == "VALID\n");

  r = run("oracle --phi p --semantics extended \"~L1 ~p -> N1 ~p\"");
  CHECK(r.code == 1);
  CHECK(r.out == "INVALID\ncounterexample: W_L={~p, p} W_N={p} w=~p\n");

  r = run("--format json-lines oracle --phi p \"~L1 ~p -> N1 ~p\"");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["input"] == "~L1 ~p -> N1 ~p");
  CHECK(j["verdict"] == "INVALID");
  CHECK(j["counterexample"] == "W_L={~p, p} W_N={p} w=~p");
  CHECK(j.contains("millis"));
}

TEST_CASE("parse, classify, nf, reduce") {
  CHECK(run("parse \"L1 p & N1 ~p\"").out == "O1 p\n");
  const Run c = run("classify --agent 1 \"q & N2 L1 p\"");
  CHECK(c.out.find("1-objective: yes") != std::string::npos);
  CHECK(run("nf \"L1 (p | L1 q)\"").out == "L1 p\nL1 q & ~L1 p\n");
  CHECK(run("nf --limit 1 \"L1 (p | L1 q)\"").out == "L1 p\n");
  CHECK(run("nf \"p & ~p\"").out == "false\n");
  CHECK(run("reduce --phi p \"N1 p\"").out == "~L1 p\n");
}

TEST_CASE("k45 with a witness file, then kripke check and validate") {
  const fs::path w = scratch() / "witness.json";
  Run r = run("k45 --witness " + w.string() + " \"L1 p & ~L1 q & ~L2 L1 p\"");
  CHECK(r.code == 0);
  CHECK(r.out == "SAT\n");
  REQUIRE(fs::exists(w));
  CHECK(run("kripke validate " + w.string()).code == 0);
  r = run("kripke check " + w.string() + " --world w0 \"L1 p & ~L1 q & ~L2 L1 p\"");
  CHECK(r.code == 0);
  CHECK(r.out == "TRUE\n");

  CHECK(run("k45 \"L1 p & ~L1 L1 p\"").code == 1);
  CHECK(run("k45 \"N1 p\"").code == 2);
}

TEST_CASE("kripke: the reflexive point") {
  const fs::path m = write("point.json", R"({"worlds": {"w": ["p"]}, "relations": {"1": [["w", "w"]]}})");
  for (const char* sem : {"naive", "fixed"}) {
    const Run r = run("kripke check " + m.string() + " --world w --semantics " + sem + " \"L1 p & N1 p\"");
    CHECK(r.code == 0);
    CHECK(r.out == "TRUE\n");
  }
  const Run v = run("kripke validate " + m.string());
  CHECK(v.code == 0);
  CHECK(v.out == "K45\n");

  const fs::path bad = write("bad.json", R"({"worlds": {"a": [], "b": []}, "relations": {"1": [["a", "b"]]}})");
  const Run b = run("kripke validate " + bad.string());
  CHECK(b.code == 1);
  CHECK(b.out.find("not Euclidean") != std::string::npos);
}

TEST_CASE("believes and okn-sets") {
  Run r = run("believes --agent 1 --kb \"~L1 ~p -> p\" --query p");
  CHECK(r.code == 0);
  CHECK(r.out == "YES\n");
  r = run("believes --kb \"L2 p & (~L1 L2 p -> ~L2 p)\" --query \"~L2 p\"");
  CHECK(r.code == 1);
  CHECK(r.out == "NO\n");
  CHECK(run("okn-sets --phi p \"~L1 ~p -> p\"").out == "{p}\n");
  CHECK(run("okn-sets --phi p \"~L1 p -> p\"").out == "none\n");
}

TEST_CASE("batch output is ordered and reproducible") {
  const fs::path corpus = fs::path(ONLYKNOW_CORPUS_DIR) / "regression.jsonl";
  const Run a = run("batch " + corpus.string());
  const Run b = run("batch --jobs 4 " + corpus.string());
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(without_millis(a.out) == without_millis(b.out));
  CHECK(without_millis(a.out) == without_millis(run("batch " + corpus.string()).out));
  CHECK(a.out.find("\"match\":false") == std::string::npos);

  const fs::path plain = write("plain.txt", "O1 p & L1 q\nL1 p & ~L1 q\n(\n");
  const Run p = run("batch --mode sat " + plain.string());
  CHECK(p.code == 2);
  std::istringstream lines(p.out);
  std::string line;
  std::vector<std::string> verdicts;
  while (std::getline(lines, line)) verdicts.push_back(nlohmann::json::parse(line)["verdict"]);
  CHECK(verdicts == std::vector<std::string>{"UNSAT", "SAT", "ERROR"});
}
