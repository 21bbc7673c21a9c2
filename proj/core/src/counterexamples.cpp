#include "dfacons/counterexamples.hpp"

#include <chrono>

#include "dfacons/reduction.hpp"
#include "dfacons/solver.hpp"

namespace dfacons {

namespace {

Word a_run(int count) { return Word(static_cast<std::size_t>(count), 'a'); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// (x|y)(y|z)(v|x)(~x|~z)(~v|~y)(~x|~y) with x,y,z,v as variables 0..3.
PureCnf fernau_cnf() {
  PureCnf cnf;
  cnf.variable_count = 4;
  cnf.clauses = {
      {Polarity::positive, {0, 1}}, {Polarity::positive, {1, 2}},
      {Polarity::positive, {0, 3}}, {Polarity::negative, {0, 2}},
      {Polarity::negative, {1, 3}}, {Polarity::negative, {0, 1}},
  };
  return cnf;
}

// Clauses 1..8 over x1..x8 (variables 0..7): three positive, five negative.
PureCnf dlh_cnf() {
  PureCnf cnf;
  cnf.variable_count = 8;
  cnf.clauses = {
      {Polarity::negative, {1, 2, 4}}, {Polarity::negative, {7}},
      {Polarity::positive, {0, 3, 7}}, {Polarity::positive, {0, 5, 7}},
      {Polarity::positive, {5, 6, 7}}, {Polarity::negative, {3, 5}},
      {Polarity::negative, {0, 5}},    {Polarity::negative, {0, 6}},
  };
  return cnf;
}

// ~x0 & x1 & x2 (the same clause list reads ~x1 & x2 & x3 when the
// variables are numbered from one).
PureCnf three_unit_clause_cnf() {
  PureCnf cnf;
  cnf.variable_count = 3;
  cnf.clauses = {
      {Polarity::negative, {0}},
      {Polarity::positive, {1}},
      {Polarity::positive, {2}},
  };
  return cnf;
}

MealyMachine last_symbol_mealy() {
  // single state, emits accept on a and reject on b
  return MealyMachine(1, Alphabet{2}, {{0, 0}}, {{true, false}}, 0);
}

}  // namespace

FernauInstance fernau_instance() {
  std::set<Word> pos = {Word{}, "b", a_run(12), a_run(11) + "b"};
  for (int i = 1; i <= 6; ++i) pos.insert(a_run(i) + "bbb");
  for (int i = 1; i <= 3; ++i) pos.insert(a_run(i) + "bb");
  for (int i = 4; i <= 6; ++i) pos.insert(a_run(i) + "bba");

  std::set<Word> neg;
  for (int i = 1; i <= 11; ++i) neg.insert(a_run(i));
  for (int i = 1; i <= 6; ++i) {
    neg.insert(a_run(i) + "b");
    neg.insert(a_run(i) + "ba");
  }
  for (int i = 4; i <= 6; ++i) neg.insert(a_run(i) + "bb");

  FernauInstance inst{
      Sample(Alphabet{2}, std::move(pos), std::move(neg)),
      12,
      Dfa(12, Alphabet{2},
          {
              // a-chain t,xy,yz,vx,!x!z,!v!y,!x!y,x,y,z,v,f with f back to t
              {1, 0},    // t: b loops
              {2, 7},    // xy -> x on b
              {3, 7},    // yz -> x
              {4, 7},    // vx -> x
              {5, 8},    // !x!z -> y
              {6, 8},    // !v!y -> y
              {7, 8},    // !x!y -> y
              {8, 0},    // x -> t
              {9, 11},   // y -> f
              {10, 9},   // z: b loops
              {11, 10},  // v: b loops
              {0, 0},    // f -> t on both letters
          },
          0, {0}),
      fernau_cnf(),
      {"t", "xy", "yz", "vx", "!x!z", "!v!y", "!x!y", "x", "y", "z", "v", "f"},
  };
  return inst;
}

DlhInstance dlh_instance() {
  PureCnf cnf = dlh_cnf();

  std::set<Word> pos = {a_run(8)};
  for (int i : {3, 4, 5}) pos.insert(a_run(i - 1) + "b" + a_run(8) + "b");

  std::set<Word> neg;
  for (int t = 1; t < 8; ++t) {
    neg.insert(a_run(t));
    neg.insert(a_run(8 + t));
  }
  for (int i : {1, 2, 6, 7, 8}) neg.insert(a_run(i - 1) + "b" + a_run(8) + "b");
  for (int i = 1; i <= 8; ++i) {
    const Clause& c = cnf.clauses[i - 1];
    for (int j = 1; j <= 8; ++j) {
      bool in_clause = false;
      for (int v : c.variables) in_clause |= v == j - 1;
      if (!in_clause) neg.insert(a_run(i - 1) + "b" + a_run(8 - j + 1));
    }
  }

  DlhInstance inst{
      Sample(Alphabet{2}, std::move(pos), std::move(neg)),
      Dfa(9, Alphabet{2},
          {
              // ring 1..8 on a, state 9 (index 8) absorbs everything
              {1, 8},  // 1 -> 9 on b
              {2, 8},  // 2 -> 9
              {3, 7},  // 3 -> 8
              {4, 7},  // 4 -> 8
              {5, 7},  // 5 -> 8
              {6, 8},  // 6 -> 9
              {7, 8},  // 7 -> 9
              {0, 0},  // 8 -> 1 on both letters
              {8, 8},  // 9 absorbs a, b
          },
          0, {0}),
      std::move(cnf),
      {"1", "2", "3", "4", "5", "6", "7", "8", "9"},
  };
  return inst;
}

CounterexampleReport dlh_three_state_impossibility() {
  const auto start = std::chrono::steady_clock::now();
  CounterexampleReport report;
  report.name = "dlh-3state";
  report.claimed_bound = 3;

  const PureCnf cnf = three_unit_clause_cnf();
  report.formula_satisfiable = brute_force_sat(cnf).has_value();

  const ReductionInstance inst = dlh_reduce(cnf);
  const std::optional<Dfa> solved = find_consistent_dfa(inst.sample, 3);
  const std::optional<Dfa> oracle = brute_force_oracle(inst.sample, 3);
  if (solved.has_value() != oracle.has_value())
    throw InternalError("solver and oracle disagree on the 3-state instance");
  report.impossibility_verified = !solved && !oracle;

  report.passed = report.formula_satisfiable.value() &&
                  report.impossibility_verified.value();
  report.seconds = seconds_since(start);
  report.narrative =
      "The construction applied to the satisfiable formula ~x1 & x2 & x3 "
      "admits no 3-state consistent DFA (backtracking solver and exhaustive "
      "oracle agree), contradicting the n-state bound of Claim 3.";
  return report;
}

CounterexampleReport mealy_compactness_demo() {
  const auto start = std::chrono::steady_clock::now();
  CounterexampleReport report;
  report.name = "mealy-gap";
  report.claimed_bound = 1;

  const MealyMachine machine = last_symbol_mealy();
  int checked = 0;
  bool agree = true;
  std::vector<Word> frontier = {""};
  for (int len = 1; len <= 6 && agree; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (char c : {'a', 'b'}) next.push_back(w + c);
    for (const Word& w : next) {
      agree = agree && mealy_output(machine, w) == (w.back() == 'a');
      ++checked;
    }
    frontier = std::move(next);
  }
  agree = agree && checked == 126;

  // all words of length <= 2, labeled by last-symbol membership
  std::set<Word> pos, neg{Word{}};
  for (char c1 : {'a', 'b'}) {
    (c1 == 'a' ? pos : neg).insert(Word(1, c1));
    for (char c2 : {'a', 'b'}) {
      Word w{c1, c2};
      (c2 == 'a' ? pos : neg).insert(w);
    }
  }
  const Sample sample(Alphabet{2}, std::move(pos), std::move(neg));
  const std::optional<int> needed = min_states(sample, 2);
  const bool one_state_ruled_out = !brute_force_oracle(sample, 1).has_value();

  report.exhibited_dfa_states = needed;
  report.impossibility_verified = one_state_ruled_out;
  report.consistency_verified = needed.has_value();
  report.passed = agree && needed == 2 && one_state_ruled_out;
  report.seconds = seconds_since(start);
  report.narrative =
      "Words ending in 'a' are recognized by a one-state Mealy transducer "
      "(checked against last-symbol membership on all 126 nonempty words up "
      "to length 6), while the minimal DFA consistent with the length <= 2 "
      "labeled sample needs two states; Mealy state counts do not transfer "
      "to DFAs. The three-state Mealy machines arising from Gold's matrix "
      "construction on ~x1 & x2 & x3 and x1 & x3 & ~x2 are not reproduced "
      "here and remain unchecked.";
  return report;
}

namespace {

CounterexampleReport fernau_report() {
  const auto start = std::chrono::steady_clock::now();
  CounterexampleReport report;
  report.name = "fernau-lemma15";
  report.claimed_bound = 12;

  const FernauInstance inst = fernau_instance();
  report.formula_satisfiable = brute_force_sat(inst.cnf).has_value();
  report.exhibited_dfa_states = inst.dfa.state_count;
  report.consistency_verified = is_consistent(inst.dfa, inst.sample);
  report.passed = !report.formula_satisfiable.value() &&
                  report.consistency_verified &&
                  inst.sample.positives.size() == 16 &&
                  inst.sample.negatives.size() == 26 &&
                  inst.dfa.state_count == 12;
  report.seconds = seconds_since(start);
  report.narrative =
      "A 12-state DFA is consistent with the sample the Lemma 15 "
      "construction derives from an unsatisfiable 4-variable formula, so "
      "that construction cannot prove hardness.";
  return report;
}

CounterexampleReport dlh_report() {
  const auto start = std::chrono::steady_clock::now();
  CounterexampleReport report;
  report.name = "dlh-thm621";
  report.claimed_bound = 9;

  const DlhInstance inst = dlh_instance();
  report.formula_satisfiable = brute_force_sat(inst.cnf).has_value();
  report.exhibited_dfa_states = inst.dfa.state_count;
  report.consistency_verified = is_consistent(inst.dfa, inst.sample);

  const ReductionInstance generated = dlh_reduce(inst.cnf);
  const bool sets_match = generated.sample.positives == inst.sample.positives &&
                          generated.sample.negatives == inst.sample.negatives;

  report.passed = !report.formula_satisfiable.value() &&
                  report.consistency_verified && sets_match &&
                  inst.dfa.state_count == 9;
  report.seconds = seconds_since(start);
  report.narrative =
      "The Theorem 6.2.1 construction applied to an unsatisfiable 8-variable "
      "formula admits a consistent DFA with n+1 = 9 states, contradicting "
      "the (n+1)-state lower bound of Claim 1; the generated word sets match "
      "the published listing exactly.";
  return report;
}

CounterexampleReport gold_fig1_report() {
  const auto start = std::chrono::steady_clock::now();
  CounterexampleReport report;
  report.name = "gold-fig1";
  report.claimed_bound = 6;

  const PureCnf cnf = three_unit_clause_cnf();
  const std::optional<Assignment> beta = brute_force_sat(cnf);
  report.formula_satisfiable = beta.has_value();

  bool witness_ok = false;
  bool extract_ok = false;
  if (beta) {
    const ReductionInstance inst = gold_reduce(cnf);
    const Dfa witness = witness_dfa(cnf, *beta);
    witness_ok = is_consistent(witness, inst.sample) && witness.state_count == 6;
    report.exhibited_dfa_states = witness.state_count;
    report.consistency_verified = witness_ok;
    if (const std::optional<Dfa> solved = find_consistent_dfa(inst.sample, inst.k))
      extract_ok = evaluate(cnf, extract_assignment(cnf, *solved));
  }

  report.passed = report.formula_satisfiable.value() && witness_ok && extract_ok;
  report.seconds = seconds_since(start);
  report.narrative =
      "Round trip on ~x0 & x1 & x2: the least satisfying assignment 011 "
      "yields a consistent 6-state witness, and the assignment extracted "
      "from a solver-found 6-state DFA satisfies the formula.";
  return report;
}

}  // namespace

std::vector<CounterexampleReport> run_all_reports() {
  std::vector<CounterexampleReport> reports;
  reports.push_back(fernau_report());
  reports.push_back(dlh_report());
  reports.push_back(dlh_three_state_impossibility());
  reports.push_back(mealy_compactness_demo());
  reports.push_back(gold_fig1_report());
  return reports;
}

std::vector<CounterexampleReport> verify_all() {
  std::vector<CounterexampleReport> reports = run_all_reports();
  std::string failures;
  for (const CounterexampleReport& report : reports) {
    if (!report.passed) {
      if (!failures.empty()) failures += ", ";
      failures += report.name;
    }
  }
  if (!failures.empty())
    throw Error("counterexample verification failed: " + failures);
  return reports;
}

}  // namespace dfacons
