#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfacons/automata.hpp"
#include "dfacons/cnf.hpp"

namespace dfacons {

// One machine-checked reproduction of a published claim (or refutation).
struct CounterexampleReport {
  std::string name;
  std::optional<bool> formula_satisfiable;  // empty when no formula is involved
  int claimed_bound = 0;
  std::optional<int> exhibited_dfa_states;
  bool consistency_verified = false;
  std::optional<bool> impossibility_verified;
  bool passed = false;
  double seconds = 0.0;
  std::string narrative;
};

// The published Lemma 15 instance: an unsatisfiable 4-variable, 6-clause
// formula, the derived sample (16 positive, 26 negative words), the claimed
// bound k = m + n + 2 = 12, and a 12-state automaton consistent with the
// sample. The published state names are kept as display labels.
struct FernauInstance {
  Sample sample;
  int k = 12;
  Dfa dfa;
  PureCnf cnf;
  std::vector<std::string> labels;
};
FernauInstance fernau_instance();

// The Theorem 6.2.1 instance: an unsatisfiable 8-variable, 8-clause pure
// formula, the derived sample, and a consistent automaton with n + 1 = 9
// states. The sample equals dlh_reduce applied to the formula.
struct DlhInstance {
  Sample sample;
  Dfa dfa;
  PureCnf cnf;
  std::vector<std::string> labels;
};
DlhInstance dlh_instance();

// dlh_reduce on the satisfiable formula ~x1 & x2 & x3 admits no 3-state
// consistent DFA; solver and exhaustive oracle must agree, a disagreement
// aborts with InternalError.
CounterexampleReport dlh_three_state_impossibility();

// Words ending in 'a' take one Mealy state but two DFA states: checks the
// one-state transducer against last-symbol membership on all 126 nonempty
// words up to length 6, then min_states = 2 and the k = 1 oracle failing on
// the length <= 2 labeled sample.
CounterexampleReport mealy_compactness_demo();

// All reports in fixed order: fernau-lemma15, dlh-thm621, dlh-3state,
// mealy-gap, gold-fig1.
std::vector<CounterexampleReport> run_all_reports();

// run_all_reports, then throw Error listing any report that failed.
std::vector<CounterexampleReport> verify_all();

}  // namespace dfacons
