#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dfacons/counterexamples.hpp"
#include "dfacons/formats.hpp"
#include "dfacons/reduction.hpp"
#include "test_util.hpp"

using namespace dfacons;
namespace fs = std::filesystem;

namespace {

constexpr const char* kFig1Dimacs = "p cnf 3 3\n-1 0\n2 0\n3 0\n";

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() /
                 ("dfacons-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

CmdResult run_cli(const std::string& args) {
  const fs::path out_path = work_dir() / "stdout.txt";
  const fs::path err_path = work_dir() / "stderr.txt";
  const std::string cmd = std::string(DFACONS_CLI_PATH) + " " + args + " > " +
                          out_path.string() + " 2> " + err_path.string();
  const int status = std::system(cmd.c_str());
  CmdResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

int line_count(const std::string& text) {
  int count = 0;
  for (char c : text) count += c == '\n';
  return count;
}

}  // namespace

TEST_CASE("reduce writes a sample file and reports the instance size") {
  const fs::path cnf = work_dir() / "three.cnf";
  const fs::path sample = work_dir() / "three.sample";
  spit(cnf, kFig1Dimacs);

  const CmdResult gold =
      run_cli("reduce " + cnf.string() + " -o " + sample.string());
  CHECK(gold.exit_code == 0);
  CHECK(gold.out == "k=6 |P|=4 |N|=21\n");
  const Sample reread = parse_sample(slurp(sample));
  const Sample expected = gold_reduce(testutil::three_unit_clause_cnf()).sample;
  CHECK(reread.positives == expected.positives);
  CHECK(reread.negatives == expected.negatives);

  const CmdResult dlh = run_cli("reduce " + cnf.string() + " -o " +
                                sample.string() + " --construction dlh");
  CHECK(dlh.exit_code == 0);
  CHECK(dlh.out == "k=3 |P|=3 |N|=11\n");
}

TEST_CASE("reduce rejects impure formulas") {
  const fs::path cnf = work_dir() / "mixed.cnf";
  spit(cnf, "p cnf 2 1\n1 -2 0\n");
  const CmdResult result =
      run_cli("reduce " + cnf.string() + " -o " + (work_dir() / "x").string());
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("clause 0") != std::string::npos);
}

TEST_CASE("solve reports SAT with a table, UNSAT, and usage errors") {
  const fs::path cnf = work_dir() / "three.cnf";
  const fs::path gold_sample = work_dir() / "gold.sample";
  const fs::path dlh_sample = work_dir() / "dlh.sample";
  spit(cnf, kFig1Dimacs);
  REQUIRE(run_cli("reduce " + cnf.string() + " -o " + gold_sample.string())
              .exit_code == 0);
  REQUIRE(run_cli("reduce " + cnf.string() + " -o " + dlh_sample.string() +
                  " --construction dlh")
              .exit_code == 0);

  SUBCASE("satisfiable gold instance at k = n + m") {
    const CmdResult result = run_cli("solve " + gold_sample.string() + " --k 6");
    CHECK(result.exit_code == 0);
    REQUIRE(result.out.rfind("SAT\n", 0) == 0);
    const Dfa dfa = parse_dfa(result.out.substr(4));
    CHECK(is_consistent(dfa, parse_sample(slurp(gold_sample))));
  }

  SUBCASE("parallel mode answers the same") {
    const CmdResult result =
        run_cli("solve " + gold_sample.string() + " --k 6 --parallel");
    CHECK(result.exit_code == 0);
    CHECK(result.out.rfind("SAT\n", 0) == 0);
  }

  SUBCASE("dot output") {
    const CmdResult result =
        run_cli("solve " + gold_sample.string() + " --k 6 --dot");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("digraph") != std::string::npos);
  }

  SUBCASE("three states cannot separate the dlh instance") {
    const CmdResult result = run_cli("solve " + dlh_sample.string() + " --k 3");
    CHECK(result.exit_code == 20);
    CHECK(result.out == "UNSAT\n");
  }

  SUBCASE("an expired budget reports UNKNOWN") {
    const CmdResult result =
        run_cli("solve " + gold_sample.string() + " --k 6 --budget 0");
    CHECK(result.exit_code == 30);
    CHECK(result.out == "UNKNOWN\n");
  }

  SUBCASE("k must be positive") {
    const CmdResult result = run_cli("solve " + gold_sample.string() + " --k 0");
    CHECK(result.exit_code != 0);
    CHECK(result.exit_code != 20);
    CHECK(result.exit_code != 30);
  }
}

TEST_CASE("check validates automata against samples") {
  const FernauInstance inst = fernau_instance();
  const fs::path sample = work_dir() / "fernau.sample";
  const fs::path dfa_ok = work_dir() / "fernau.dfa";
  const fs::path dfa_bad = work_dir() / "fernau_bad.dfa";
  spit(sample, write_sample(inst.sample));
  spit(dfa_ok, write_dfa(inst.dfa));
  Dfa broken = inst.dfa;
  broken.transitions[0][1] = 11;  // send the initial state's b-edge to f
  spit(dfa_bad, write_dfa(broken));

  const CmdResult ok = run_cli("check " + sample.string() + " " + dfa_ok.string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "CONSISTENT\n");

  const CmdResult bad =
      run_cli("check " + sample.string() + " " + dfa_bad.string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.out == "VIOLATION b positive\n");

  SUBCASE("empty sample is consistent") {
    const fs::path empty = work_dir() / "empty.sample";
    spit(empty, write_sample(Sample{}));
    const CmdResult result =
        run_cli("check " + empty.string() + " " + dfa_ok.string());
    CHECK(result.exit_code == 0);
    CHECK(result.out == "CONSISTENT\n");
  }
}

TEST_CASE("witness and extract round-trip through files") {
  const fs::path cnf = work_dir() / "three.cnf";
  const fs::path dfa_path = work_dir() / "witness.dfa";
  const fs::path dot_path = work_dir() / "witness.dot";
  spit(cnf, kFig1Dimacs);

  const CmdResult witness =
      run_cli("witness " + cnf.string() + " 011 -o " + dfa_path.string() +
              " --dot " + dot_path.string());
  CHECK(witness.exit_code == 0);
  CHECK(slurp(dfa_path) == write_dfa(testutil::six_state_witness()));
  CHECK(slurp(dot_path).find("digraph") != std::string::npos);

  const CmdResult extract =
      run_cli("extract " + cnf.string() + " " + dfa_path.string());
  CHECK(extract.exit_code == 0);
  CHECK(extract.out == "011 SATISFIES\n");

  SUBCASE("a falsifying assignment is refused") {
    const CmdResult bad = run_cli("witness " + cnf.string() + " 111 -o " +
                                  (work_dir() / "no.dfa").string());
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("clause 0") != std::string::npos);
  }

  SUBCASE("assignment length must match") {
    const CmdResult bad = run_cli("witness " + cnf.string() + " 01 -o -");
    CHECK(bad.exit_code == 2);
  }
}

TEST_CASE("verify-paper prints one line per report") {
  const CmdResult result = run_cli("verify-paper");
  CHECK(result.exit_code == 0);
  CHECK(line_count(result.out) == 5);
  CHECK(result.out.find("fernau-lemma15") != std::string::npos);
  CHECK(result.out.find("UNSAT@k=3 PASS") != std::string::npos);
  std::istringstream lines(result.out);
  std::string line;
  while (std::getline(lines, line))
    CHECK(line.find(" PASS") != std::string::npos);
}

TEST_CASE("verify-paper --json emits one record per report") {
  const CmdResult result = run_cli("verify-paper --json");
  CHECK(result.exit_code == 0);
  CHECK(line_count(result.out) == 5);
  std::istringstream lines(result.out);
  std::string line;
  std::vector<std::string> names;
  while (std::getline(lines, line)) {
    const nlohmann::json record = nlohmann::json::parse(line);
    names.push_back(record.at("name").get<std::string>());
    CHECK(record.at("passed").get<bool>());
    CHECK(record.contains("claimed_bound"));
    CHECK(record.contains("consistency_verified"));
    CHECK(record.contains("seconds"));
  }
  CHECK(names == std::vector<std::string>{"fernau-lemma15", "dlh-thm621",
                                          "dlh-3state", "mealy-gap",
                                          "gold-fig1"});
}
