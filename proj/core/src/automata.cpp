#include "dfacons/automata.hpp"

#include <sstream>

namespace dfacons {

namespace {

std::string quote(std::string_view w) {
  std::string s = "\"";
  s += w;
  s += "\"";
  return s;
}

void check_words(const Alphabet& alphabet, const std::set<Word>& words) {
  for (const Word& w : words) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!alphabet.contains(w[i]))
        throw InputError(std::string("symbol '") + w[i] + "' at position " +
                         std::to_string(i) + " of word " + quote(w) +
                         " is not in the alphabet");
    }
  }
}

}  // namespace

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Sample::Sample(Alphabet al, std::set<Word> pos, std::set<Word> neg)
    : alphabet(al), positives(std::move(pos)), negatives(std::move(neg)) {
  if (alphabet.size < 1 || alphabet.size > 26)
    throw InputError("alphabet size must be between 1 and 26");
  check_words(alphabet, positives);
  check_words(alphabet, negatives);
  for (const Word& w : positives) {
    if (negatives.count(w))
      throw InputError("word " + quote(w) + " is both positive and negative");
  }
}

Dfa::Dfa(int states, Alphabet al, std::vector<std::vector<int>> trans,
         int init, std::set<int> acc)
    : state_count(states),
      alphabet(al),
      transitions(std::move(trans)),
      initial(init),
      accepting(std::move(acc)) {
  if (state_count < 1) throw InputError("a DFA needs at least one state");
  if (alphabet.size < 1 || alphabet.size > 26)
    throw InputError("alphabet size must be between 1 and 26");
  if (initial < 0 || initial >= state_count)
    throw InputError("initial state out of range");
  if (static_cast<int>(transitions.size()) != state_count)
    throw InputError("transition table must have one row per state");
  for (const auto& row : transitions) {
    if (static_cast<int>(row.size()) != alphabet.size)
      throw InputError("transition table must be total over the alphabet");
    for (int target : row) {
      if (target < 0 || target >= state_count)
        throw InputError("transition target out of range");
    }
  }
  for (int q : accepting) {
    if (q < 0 || q >= state_count)
      throw InputError("accepting state out of range");
  }
}

MealyMachine::MealyMachine(int states, Alphabet al,
                           std::vector<std::vector<int>> trans,
                           std::vector<std::vector<bool>> out, int init)
    : state_count(states),
      input_alphabet(al),
      transitions(std::move(trans)),
      accept_output(std::move(out)),
      initial(init) {
  if (state_count < 1) throw InputError("a Mealy machine needs at least one state");
  if (initial < 0 || initial >= state_count)
    throw InputError("initial state out of range");
  if (static_cast<int>(transitions.size()) != state_count ||
      static_cast<int>(accept_output.size()) != state_count)
    throw InputError("transition and output tables must have one row per state");
  for (int q = 0; q < state_count; ++q) {
    if (static_cast<int>(transitions[q].size()) != input_alphabet.size ||
        static_cast<int>(accept_output[q].size()) != input_alphabet.size)
      throw InputError("transition and output tables must be total");
    for (int target : transitions[q]) {
      if (target < 0 || target >= state_count)
        throw InputError("transition target out of range");
    }
  }
}

int run(const Dfa& dfa, int state, std::string_view word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (!dfa.alphabet.contains(c))
      throw InputError(std::string("symbol '") + c + "' at position " +
                       std::to_string(i) + " is not in the alphabet");
    state = dfa.transitions[state][dfa.alphabet.index(c)];
  }
  return state;
}

bool accepts(const Dfa& dfa, std::string_view word) {
  return dfa.accepting.count(run(dfa, dfa.initial, word)) > 0;
}

std::optional<Violation> find_violation(const Dfa& dfa, const Sample& sample) {
  if (!(sample.alphabet == dfa.alphabet))
    throw InputError("sample alphabet does not match the automaton alphabet");
  std::optional<Violation> worst;
  auto consider = [&](const Word& w, bool positive) {
    if (!worst || shortlex_less(w, worst->word)) worst = Violation{w, positive};
  };
  for (const Word& w : sample.positives)
    if (!accepts(dfa, w)) consider(w, true);
  for (const Word& w : sample.negatives)
    if (accepts(dfa, w)) consider(w, false);
  return worst;
}

bool is_consistent(const Dfa& dfa, const Sample& sample) {
  return !find_violation(dfa, sample).has_value();
}

bool mealy_output(const MealyMachine& m, std::string_view word) {
  bool out = false;  // empty input: nothing was emitted, report reject
  int state = m.initial;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (!m.input_alphabet.contains(c))
      throw InputError(std::string("symbol '") + c + "' at position " +
                       std::to_string(i) + " is not in the input alphabet");
    int s = m.input_alphabet.index(c);
    out = m.accept_output[state][s];
    state = m.transitions[state][s];
  }
  return out;
}

std::string to_dot(const Dfa& dfa, const std::vector<std::string>& labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != dfa.state_count)
    throw InputError("label list must name every state");
  std::ostringstream out;
  out << "digraph dfa {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=none label=\"\"];\n";
  for (int q = 0; q < dfa.state_count; ++q) {
    const std::string name =
        labels.empty() ? "s" + std::to_string(q) : labels[q];
    out << "  n" << q << " [shape="
        << (dfa.accepting.count(q) ? "doublecircle" : "circle") << " label=\""
        << name << "\"];\n";
  }
  out << "  __start -> n" << dfa.initial << ";\n";
  for (int q = 0; q < dfa.state_count; ++q) {
    // one edge per distinct target, symbols merged in alphabet order
    std::vector<std::pair<int, std::string>> edges;
    for (int s = 0; s < dfa.alphabet.size; ++s) {
      int target = dfa.transitions[q][s];
      bool merged = false;
      for (auto& [t, label] : edges) {
        if (t == target) {
          label += ',';
          label += dfa.alphabet.letter(s);
          merged = true;
          break;
        }
      }
      if (!merged) edges.emplace_back(target, std::string(1, dfa.alphabet.letter(s)));
    }
    for (const auto& [target, label] : edges)
      out << "  n" << q << " -> n" << target << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dfacons
