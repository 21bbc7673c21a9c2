#pragma once

#include <optional>

#include "dfacons/automata.hpp"
#include "dfacons/cnf.hpp"

namespace dfacons {

enum class Construction { gold, dlh };

struct ReductionInstance {
  Sample sample;
  int k = 0;                 // state bound attached to the instance
  std::optional<int> k_alt;  // alternative published bound, when one exists
  Construction construction = Construction::gold;
  PureCnf cnf;               // source formula
};

// Clause-and-variable cycle construction with k = n + m.
//   P = {eps, a^k} plus a^i bb for every positive clause i,
//   N = the shorter a-powers, a^i bb for negative clauses, and the
//       a^i b a^(k-r) block that pins each clause state's b-transition
//       to a variable state of that clause.
ReductionInstance gold_reduce(const PureCnf& cnf);

// Variable-count-driven construction using 1-based clause and variable
// indices and the a^(i-1) b a^n b word shape. k is the n-state bound,
// k_alt the (n+1)-state one.
ReductionInstance dlh_reduce(const PureCnf& cnf);

// The k-state cycle automaton realizing a satisfying assignment: state 0 is
// initial and sole accepting, letter a steps around the cycle, each clause
// state's b-edge targets the smallest-index variable that satisfies the
// clause under `beta`, and each variable state's b-edge returns to state 0
// exactly when the variable is true.
Dfa witness_dfa(const PureCnf& cnf, const Assignment& beta);

// Reads the assignment back off a DFA with exactly n + m states that is
// consistent with gold_reduce(cnf).sample: relabel states along the a-run
// from the initial state, then x_j is true iff the b-edge of variable state
// m + j returns to state 0. The result always satisfies the formula.
Assignment extract_assignment(const PureCnf& cnf, const Dfa& dfa);

// Structural facts forced on every consistent (n+m)-state DFA for a
// gold_reduce instance: the a-run from the initial state visits n + m
// pairwise distinct states and closes into a cycle, and every clause
// state's b-edge lands on a variable state of that clause.
bool has_gold_structure(const PureCnf& cnf, const Dfa& dfa);

}  // namespace dfacons
