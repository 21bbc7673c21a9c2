#pragma once

#include <string>
#include <string_view>

#include "dfacons/automata.hpp"

namespace dfacons {

// Abbadingo-style sample file:
//   <word count> <alphabet size>
//   <label> <length> <symbol> ... , label 1 = positive, symbols are
//   integers mapped 0 -> a, 1 -> b, ...
// Writer emits positives then negatives, each in shortlex order.
std::string write_sample(const Sample& sample);

// Strict reader for the grammar above. Duplicate words with conflicting
// labels are rejected.
Sample parse_sample(std::string_view text);

// DFA table file:
//   states <n> initial <i>
//   accepting <indices...>
//   <state> <letter> <target>   one line per (state, symbol)
std::string write_dfa(const Dfa& dfa);

// Reader for the grammar above; the transition table must be complete.
Dfa parse_dfa(std::string_view text);

}  // namespace dfacons
