#include "dfacons/formats.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace dfacons {

namespace {

std::vector<Word> shortlex_sorted(const std::set<Word>& words) {
  std::vector<Word> out(words.begin(), words.end());
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  return out;
}

void write_word_line(std::ostringstream& out, const Alphabet& alphabet,
                     const Word& word, int label) {
  out << label << ' ' << word.size();
  for (char c : word) out << ' ' << alphabet.index(c);
  out << '\n';
}

}  // namespace

std::string write_sample(const Sample& sample) {
  std::ostringstream out;
  out << sample.size() << ' ' << sample.alphabet.size << '\n';
  for (const Word& w : shortlex_sorted(sample.positives))
    write_word_line(out, sample.alphabet, w, 1);
  for (const Word& w : shortlex_sorted(sample.negatives))
    write_word_line(out, sample.alphabet, w, 0);
  return out.str();
}

Sample parse_sample(std::string_view text) {
  std::istringstream in{std::string(text)};
  long count = -1, alphabet_size = -1;
  if (!(in >> count >> alphabet_size))
    throw InputError("sample file: malformed header");
  if (count < 0) throw InputError("sample file: negative word count");
  if (alphabet_size < 1 || alphabet_size > 26)
    throw InputError("sample file: alphabet size must be between 1 and 26");

  Alphabet alphabet{static_cast<int>(alphabet_size)};
  std::set<Word> pos, neg;
  for (long i = 0; i < count; ++i) {
    long label = -1, length = -1;
    if (!(in >> label >> length))
      throw InputError("sample file: truncated word line " + std::to_string(i));
    if (label != 0 && label != 1)
      throw InputError("sample file: label must be 0 or 1 on line " +
                       std::to_string(i));
    if (length < 0)
      throw InputError("sample file: negative length on line " + std::to_string(i));
    Word w;
    for (long j = 0; j < length; ++j) {
      long sym = -1;
      if (!(in >> sym))
        throw InputError("sample file: word line " + std::to_string(i) +
                         " is shorter than its declared length");
      if (sym < 0 || sym >= alphabet_size)
        throw InputError("sample file: symbol " + std::to_string(sym) +
                         " out of range on line " + std::to_string(i));
      w += alphabet.letter(static_cast<int>(sym));
    }
    const bool positive = label == 1;
    if ((positive ? neg : pos).count(w))
      throw InputError("sample file: word \"" + w + "\" appears with both labels");
    (positive ? pos : neg).insert(w);
  }
  std::string extra;
  if (in >> extra) throw InputError("sample file: trailing data after the last word");
  return Sample(alphabet, std::move(pos), std::move(neg));
}

std::string write_dfa(const Dfa& dfa) {
  std::ostringstream out;
  out << "states " << dfa.state_count << " initial " << dfa.initial << '\n';
  out << "accepting";
  for (int q : dfa.accepting) out << ' ' << q;
  out << '\n';
  for (int q = 0; q < dfa.state_count; ++q)
    for (int s = 0; s < dfa.alphabet.size; ++s)
      out << q << ' ' << dfa.alphabet.letter(s) << ' ' << dfa.transitions[q][s]
          << '\n';
  return out.str();
}

Dfa parse_dfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;

  if (!std::getline(in, line)) throw InputError("DFA file: missing header");
  std::istringstream header(line);
  std::string states_kw, initial_kw;
  long state_count = -1, initial = -1;
  if (!(header >> states_kw >> state_count >> initial_kw >> initial) ||
      states_kw != "states" || initial_kw != "initial")
    throw InputError("DFA file: malformed header");
  if (state_count < 1) throw InputError("DFA file: need at least one state");

  if (!std::getline(in, line)) throw InputError("DFA file: missing accepting line");
  std::istringstream acc_line(line);
  std::string accepting_kw;
  if (!(acc_line >> accepting_kw) || accepting_kw != "accepting")
    throw InputError("DFA file: malformed accepting line");
  std::set<int> accepting;
  long q;
  while (acc_line >> q) accepting.insert(static_cast<int>(q));
  if (!acc_line.eof()) throw InputError("DFA file: malformed accepting line");

  std::map<std::pair<long, int>, long> table;
  int max_symbol = -1;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    long from, to;
    std::string letter;
    if (!(row >> from)) continue;  // blank line
    if (!(row >> letter >> to) || letter.size() != 1 || letter[0] < 'a' ||
        letter[0] > 'z')
      throw InputError("DFA file: malformed transition line \"" + line + "\"");
    std::string extra;
    if (row >> extra)
      throw InputError("DFA file: malformed transition line \"" + line + "\"");
    int symbol = letter[0] - 'a';
    max_symbol = std::max(max_symbol, symbol);
    if (!table.emplace(std::make_pair(from, symbol), to).second)
      throw InputError("DFA file: duplicate transition for state " +
                       std::to_string(from) + " on '" + letter + "'");
  }
  if (max_symbol < 0) throw InputError("DFA file: no transitions");

  Alphabet alphabet{max_symbol + 1};
  std::vector<std::vector<int>> trans(state_count,
                                      std::vector<int>(alphabet.size, -1));
  for (const auto& [key, to] : table) {
    const auto& [from, symbol] = key;
    if (from < 0 || from >= state_count)
      throw InputError("DFA file: transition from unknown state " +
                       std::to_string(from));
    if (to < 0 || to >= state_count)
      throw InputError("DFA file: transition to unknown state " +
                       std::to_string(to));
    trans[from][symbol] = static_cast<int>(to);
  }
  for (long s = 0; s < state_count; ++s)
    for (int c = 0; c < alphabet.size; ++c)
      if (trans[s][c] < 0)
        throw InputError("DFA file: incomplete transition table, state " +
                         std::to_string(s) + " misses '" +
                         std::string(1, alphabet.letter(c)) + "'");

  return Dfa(static_cast<int>(state_count), alphabet, std::move(trans),
             static_cast<int>(initial), std::move(accepting));
}

}  // namespace dfacons
