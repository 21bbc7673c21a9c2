#pragma once

#include <atomic>
#include <cstdint>
#include <optional>

#include "dfacons/automata.hpp"

namespace dfacons {

// Trie of all sample-word prefixes. Exact words carry their polarity as a
// node label; inner prefixes stay unlabeled. Node 0 is the root (eps) and
// node ids follow breadth-first order, children visited in symbol order.
struct PrefixTree {
  enum class Label : std::uint8_t { none, accept, reject };
  struct Node {
    std::vector<int> child;  // per symbol; -1 when the prefix does not occur
    Label label = Label::none;
  };
  Alphabet alphabet{};
  std::vector<Node> nodes;
};

PrefixTree build_prefix_tree(const Sample& sample);

enum class SolveStatus { found, exhausted, stopped };

struct SolveOptions {
  // Explore branches concurrently. Same yes/no answer, but the witness may
  // be any consistent automaton instead of the canonical sequential one.
  bool parallel = false;
  // Cooperative cancellation set by the caller; the search polls it and
  // returns SolveStatus::stopped without an answer.
  std::atomic<bool>* stop = nullptr;
};

struct SolveResult {
  SolveStatus status = SolveStatus::exhausted;
  std::optional<Dfa> dfa;
};

// Exact decision procedure for the consistency problem: find a complete DFA
// with at most k states consistent with the sample, or prove none exists.
// Backtracking assignment of prefix-tree nodes to state classes with
// determinization closure on every merge, label separation, and canonical
// color introduction as symmetry breaking. Transitions left unconstrained by
// the sample are completed as self-loops. Deterministic in sequential mode.
SolveResult solve_consistent(const Sample& sample, int k,
                             const SolveOptions& options = {});

// solve_consistent without cancellation: a DFA or nullopt.
std::optional<Dfa> find_consistent_dfa(const Sample& sample, int k);

// Smallest k <= k_max admitting a consistent DFA, or nullopt.
std::optional<int> min_states(const Sample& sample, int k_max);

// Independent oracle: enumerate every complete k-state DFA over the sample
// alphabet (initial state fixed to 0, all transition tables, all accepting
// sets) in a fixed canonical order and return the first consistent one.
// Guarded to k <= 3 over the binary alphabet.
std::optional<Dfa> brute_force_oracle(const Sample& sample, int k);

// Number of candidate automata the oracle examines: k^(L*k) * 2^k.
std::uint64_t oracle_search_space(int k, int alphabet_size);

inline constexpr int kOracleStateLimit = 3;

}  // namespace dfacons
