#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dfacons/errors.hpp"

namespace dfacons {

// Words are plain strings over the letters of a small alphabet.
using Word = std::string;

// The first `size` lowercase letters; the canonical alphabet is {a, b}.
struct Alphabet {
  int size = 2;

  bool contains(char c) const { return c >= 'a' && c < 'a' + size; }
  int index(char c) const { return c - 'a'; }
  char letter(int i) const { return static_cast<char>('a' + i); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// Shorter words first, ties broken lexicographically.
bool shortlex_less(std::string_view a, std::string_view b);

// Disjoint positive/negative word sets over a common alphabet.
struct Sample {
  Alphabet alphabet{};
  std::set<Word> positives;
  std::set<Word> negatives;

  Sample() = default;
  // Validates that all words are over `al` and that the sets are disjoint.
  Sample(Alphabet al, std::set<Word> pos, std::set<Word> neg);

  std::size_t size() const { return positives.size() + negatives.size(); }
};

// Complete DFA over dense state indices 0..state_count-1.
struct Dfa {
  int state_count = 1;
  Alphabet alphabet{};
  std::vector<std::vector<int>> transitions;  // [state][symbol index]
  int initial = 0;
  std::set<int> accepting;

  Dfa() : transitions{{0, 0}} {}
  Dfa(int states, Alphabet al, std::vector<std::vector<int>> trans, int init,
      std::set<int> acc);

  friend bool operator==(const Dfa&, const Dfa&) = default;
};

// Deterministic transducer emitting a binary accept/reject verdict on every
// transition. With the two-letter output alphabet it acts as an acceptor.
struct MealyMachine {
  int state_count = 1;
  Alphabet input_alphabet{};
  std::vector<std::vector<int>> transitions;     // [state][symbol index]
  std::vector<std::vector<bool>> accept_output;  // [state][symbol index]
  int initial = 0;

  MealyMachine() : transitions{{0, 0}}, accept_output{{false, false}} {}
  MealyMachine(int states, Alphabet al, std::vector<std::vector<int>> trans,
               std::vector<std::vector<bool>> out, int init);
};

// State reached from `state` after consuming `word`.
int run(const Dfa& dfa, int state, std::string_view word);

bool accepts(const Dfa& dfa, std::string_view word);

struct Violation {
  Word word;
  bool positive;  // polarity the word carries in the sample
};

// nullopt when consistent; otherwise the shortlex-least offending word
// (a rejected positive or an accepted negative).
std::optional<Violation> find_violation(const Dfa& dfa, const Sample& sample);

bool is_consistent(const Dfa& dfa, const Sample& sample);

// Output emitted on the final transition of the run of `word`.
// The empty word yields reject: transducers only emit when they move.
bool mealy_output(const MealyMachine& m, std::string_view word);

// Deterministic DOT rendering. Accepting states are double-circled, the
// initial state gets an unlabeled entry edge, and edges whose symbols share
// a target are merged into one "a,b" edge. `labels`, when nonempty, names
// state i labels[i]; default names are s0, s1, ...
std::string to_dot(const Dfa& dfa, const std::vector<std::string>& labels = {});

}  // namespace dfacons
