#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <map>
#include <sstream>

#include "dfacons/counterexamples.hpp"
#include "dfacons/formats.hpp"
#include "dfacons/reduction.hpp"
#include "dfacons/solver.hpp"
#include "test_util.hpp"

using namespace dfacons;

namespace {

Word a_run(int count) { return Word(static_cast<std::size_t>(count), 'a'); }

// Test-only reader for the deterministic DOT subset the library emits.
Dfa parse_dot_subset(const std::string& dot) {
  std::istringstream in(dot);
  std::string line;
  int initial = -1;
  std::map<int, bool> accepting;
  std::map<std::pair<int, int>, int> transitions;
  int max_state = -1, max_symbol = -1;
  while (std::getline(in, line)) {
    const std::size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line.rfind("__start -> n", 0) == 0) {
      initial = std::stoi(line.substr(12));
      continue;
    }
    if (line.rfind("n", 0) != 0) continue;
    const std::size_t arrow = line.find(" -> n");
    if (arrow != std::string::npos) {
      const int from = std::stoi(line.substr(1, arrow - 1));
      const int to = std::stoi(line.substr(arrow + 5));
      const std::size_t label_pos = line.find("label=\"");
      REQUIRE(label_pos != std::string::npos);
      for (std::size_t i = label_pos + 7; line[i] != '"'; ++i) {
        if (line[i] == ',') continue;
        const int symbol = line[i] - 'a';
        transitions[{from, symbol}] = to;
        max_symbol = std::max(max_symbol, symbol);
      }
      continue;
    }
    const std::size_t bracket = line.find(" [shape=");
    if (bracket == std::string::npos) continue;
    const int state = std::stoi(line.substr(1, bracket - 1));
    accepting[state] = line.find("doublecircle") != std::string::npos;
    max_state = std::max(max_state, state);
  }
  REQUIRE(initial >= 0);
  std::vector<std::vector<int>> table(max_state + 1,
                                      std::vector<int>(max_symbol + 1, -1));
  for (const auto& [key, to] : transitions) table[key.first][key.second] = to;
  std::set<int> acc;
  for (const auto& [state, is_acc] : accepting)
    if (is_acc) acc.insert(state);
  return Dfa(max_state + 1, Alphabet{max_symbol + 1}, std::move(table), initial,
             std::move(acc));
}

}  // namespace

TEST_CASE("the Lemma 15 instance matches its published set expressions") {
  const FernauInstance inst = fernau_instance();

  CHECK(inst.k == 12);
  CHECK(inst.cnf.variable_count == 4);
  CHECK(inst.cnf.clauses.size() == 6);
  CHECK(inst.sample.positives.size() == 16);
  CHECK(inst.sample.negatives.size() == 26);
  CHECK(inst.dfa.state_count == 12);
  CHECK(inst.labels.size() == 12);

  // independent re-expansion of the published set expressions
  std::set<Word> pos = {"", "b", a_run(12), a_run(11) + "b"};
  std::set<Word> neg;
  for (int i = 1; i <= 6; ++i) {
    pos.insert(a_run(i) + "bbb");
    if (i <= 3) pos.insert(a_run(i) + "bb");
    else {
      pos.insert(a_run(i) + "bba");
      neg.insert(a_run(i) + "bb");
    }
    neg.insert(a_run(i) + "b");
    neg.insert(a_run(i) + "ba");
  }
  for (int i = 1; i <= 11; ++i) neg.insert(a_run(i));
  CHECK(inst.sample.positives == pos);
  CHECK(inst.sample.negatives == neg);

  CHECK(is_consistent(inst.dfa, inst.sample));
  CHECK(!brute_force_sat(inst.cnf).has_value());
}

TEST_CASE("the Theorem 6.2.1 instance is reproduced by dlh_reduce") {
  const DlhInstance inst = dlh_instance();

  CHECK(inst.cnf.variable_count == 8);
  CHECK(inst.cnf.clauses.size() == 8);
  CHECK(inst.dfa.state_count == 9);

  // hand-counted from the listing: 1 + 3 positives; 14 a-powers, 5 negative
  // clause cores, and 15 + 30 variable-miss words for the positive and
  // negative clauses
  CHECK(inst.sample.positives.size() == 4);
  CHECK(inst.sample.negatives.size() == 64);

  const ReductionInstance generated = dlh_reduce(inst.cnf);
  CHECK(generated.sample.positives == inst.sample.positives);
  CHECK(generated.sample.negatives == inst.sample.negatives);
  CHECK(generated.k == 8);
  CHECK(generated.k_alt == 9);

  CHECK(inst.sample.positives.count(a_run(8)) == 1);
  CHECK(inst.sample.positives.count(a_run(2) + "b" + a_run(8) + "b") == 1);

  CHECK(is_consistent(inst.dfa, inst.sample));
  CHECK(!brute_force_sat(inst.cnf).has_value());

  // the sample needs exactly n + 1 = 9 states
  CHECK(min_states(inst.sample, 9) == 9);
}

TEST_CASE("three-state impossibility for the satisfiable formula") {
  const CounterexampleReport report = dlh_three_state_impossibility();
  CHECK(report.name == "dlh-3state");
  CHECK(report.formula_satisfiable == true);
  CHECK(report.claimed_bound == 3);
  CHECK(report.impossibility_verified == true);
  CHECK(!report.exhibited_dfa_states.has_value());
  CHECK(report.passed);
  CHECK(report.narrative.find("3-state") != std::string::npos);
}

TEST_CASE("mealy compactness gap") {
  const CounterexampleReport report = mealy_compactness_demo();
  CHECK(report.name == "mealy-gap");
  CHECK(!report.formula_satisfiable.has_value());
  CHECK(report.claimed_bound == 1);
  CHECK(report.exhibited_dfa_states == 2);
  CHECK(report.impossibility_verified == true);
  CHECK(report.consistency_verified);
  CHECK(report.passed);
}

TEST_CASE("verify_all runs the full battery in fixed order") {
  const std::vector<CounterexampleReport> reports = verify_all();
  REQUIRE(reports.size() == 5);
  CHECK(reports[0].name == "fernau-lemma15");
  CHECK(reports[1].name == "dlh-thm621");
  CHECK(reports[2].name == "dlh-3state");
  CHECK(reports[3].name == "mealy-gap");
  CHECK(reports[4].name == "gold-fig1");
  for (const CounterexampleReport& report : reports) {
    CAPTURE(report.name);
    CHECK(report.passed);
    CHECK(!report.narrative.empty());
    CHECK(report.seconds >= 0.0);
  }
}

TEST_CASE("the shipped data files match the stored instances") {
  const std::string dir = DFACONS_DATA_DIR;
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  const FernauInstance fernau = fernau_instance();
  CHECK(slurp(dir + "/fernau-lemma15.sample") == write_sample(fernau.sample));
  CHECK(slurp(dir + "/fernau-lemma15.dfa") == write_dfa(fernau.dfa));
  CHECK(parse_dimacs(slurp(dir + "/fernau-lemma15.cnf")) == fernau.cnf);

  const DlhInstance dlh = dlh_instance();
  CHECK(slurp(dir + "/dlh-thm621.dfa") == write_dfa(dlh.dfa));
  CHECK(parse_dimacs(slurp(dir + "/dlh-thm621.cnf")) == dlh.cnf);

  CHECK(parse_dimacs(slurp(dir + "/three-unit.cnf")) ==
        testutil::three_unit_clause_cnf());
}

TEST_CASE("dot export of the stored automata round-trips") {
  const FernauInstance fernau = fernau_instance();
  const DlhInstance dlh = dlh_instance();
  const Dfa witness = testutil::six_state_witness();

  for (const Dfa* dfa : {&fernau.dfa, &dlh.dfa, &witness}) {
    const Dfa reread = parse_dot_subset(to_dot(*dfa));
    CHECK(reread == *dfa);
  }
  // labeled rendering carries the same structure
  CHECK(parse_dot_subset(to_dot(fernau.dfa, fernau.labels)) == fernau.dfa);
}
