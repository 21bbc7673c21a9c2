#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dfacons/errors.hpp"

namespace dfacons {

enum class Polarity { positive, negative };

// All literals of a pure clause share one polarity; `variables` holds the
// 0-based variable indices, strictly increasing, 1 to 3 of them.
struct Clause {
  Polarity polarity = Polarity::positive;
  std::vector<int> variables;

  friend bool operator==(const Clause&, const Clause&) = default;
};

// Conjunction of pure clauses. Clause order is significant: clause i drives
// the a^i word prefixes of the reductions.
struct PureCnf {
  int variable_count = 0;  // n; variables are x_0 .. x_{n-1}
  std::vector<Clause> clauses;

  friend bool operator==(const PureCnf&, const PureCnf&) = default;
};

using Assignment = std::vector<bool>;

// Throws InputError unless n >= 1, m >= 1 and every clause holds 1..3
// strictly increasing in-range variable indices.
void validate(const PureCnf& cnf);

// DIMACS CNF reader. External 1-based literals map to 0-based variables;
// comment lines, '%' terminator lines and trailing lone zeros are tolerated.
// Rejects mixed-polarity clauses (naming the clause index), clauses with
// more than three distinct variables, empty clauses and malformed headers.
PureCnf parse_dimacs(std::string_view text);

bool clause_satisfied(const Clause& clause, const Assignment& beta);
bool evaluate(const PureCnf& cnf, const Assignment& beta);

// Exhaustive satisfiability check, guarded to n <= 24. Returns the
// lexicographically least satisfying assignment (false < true, variable 0
// most significant) or nullopt when unsatisfiable.
std::optional<Assignment> brute_force_sat(const PureCnf& cnf);

inline constexpr int kBruteForceVarLimit = 24;

}  // namespace dfacons
