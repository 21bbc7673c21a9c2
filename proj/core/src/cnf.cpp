#include "dfacons/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>

namespace dfacons {

void validate(const PureCnf& cnf) {
  if (cnf.variable_count < 1)
    throw InputError("formula needs at least one variable");
  if (cnf.clauses.empty()) throw InputError("formula needs at least one clause");
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    const Clause& c = cnf.clauses[i];
    if (c.variables.empty() || c.variables.size() > 3)
      throw InputError("clause " + std::to_string(i) +
                       " must contain 1 to 3 distinct variables");
    for (std::size_t j = 0; j < c.variables.size(); ++j) {
      if (c.variables[j] < 0 || c.variables[j] >= cnf.variable_count)
        throw InputError("clause " + std::to_string(i) +
                         " references a variable out of range");
      if (j > 0 && c.variables[j] <= c.variables[j - 1])
        throw InputError("clause " + std::to_string(i) +
                         " variables must be strictly increasing");
    }
  }
}

PureCnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  long declared_vars = 0, declared_clauses = 0;
  std::vector<long> literals;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;           // blank line
    if (first == "c" || first[0] == 'c') continue;
    if (first == "%") continue;
    if (first == "p") {
      if (have_header) throw InputError("duplicate DIMACS header");
      std::string kind;
      if (!(ls >> kind >> declared_vars >> declared_clauses) || kind != "cnf")
        throw InputError("malformed DIMACS header");
      std::string rest;
      if (ls >> rest) throw InputError("malformed DIMACS header");
      if (declared_vars < 1) throw InputError("formula declares zero variables");
      if (declared_clauses < 1) throw InputError("formula declares zero clauses");
      have_header = true;
      continue;
    }
    if (!have_header)
      throw InputError("clause data before the DIMACS header");
    ls.clear();
    ls.str(line);
    long lit;
    while (ls >> lit) literals.push_back(lit);
    if (!ls.eof()) throw InputError("non-integer token in clause data");
  }
  if (!have_header) throw InputError("missing DIMACS header");

  PureCnf cnf;
  cnf.variable_count = static_cast<int>(declared_vars);
  std::set<long> current;
  for (long lit : literals) {
    if (lit == 0) {
      if (static_cast<long>(cnf.clauses.size()) == declared_clauses) {
        if (current.empty()) continue;  // stray terminator after the last clause
        throw InputError("more clauses than the header declares");
      }
      std::size_t index = cnf.clauses.size();
      if (current.empty())
        throw InputError("clause " + std::to_string(index) + " is empty");
      bool any_pos = false, any_neg = false;
      std::vector<int> vars;
      for (long l : current) (l > 0 ? any_pos : any_neg) = true;
      if (any_pos && any_neg)
        throw InputError("clause " + std::to_string(index) +
                         " mixes positive and negative literals");
      for (long l : current) vars.push_back(static_cast<int>(std::labs(l)) - 1);
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      if (vars.size() > 3)
        throw InputError("clause " + std::to_string(index) +
                         " has more than 3 distinct variables");
      cnf.clauses.push_back(
          {any_neg ? Polarity::negative : Polarity::positive, std::move(vars)});
      current.clear();
      continue;
    }
    if (std::labs(lit) > declared_vars)
      throw InputError("literal " + std::to_string(lit) + " out of range");
    if (static_cast<long>(cnf.clauses.size()) == declared_clauses)
      throw InputError("more clauses than the header declares");
    current.insert(lit);
  }
  if (!current.empty()) throw InputError("unterminated final clause");
  if (static_cast<long>(cnf.clauses.size()) != declared_clauses)
    throw InputError("fewer clauses than the header declares");
  validate(cnf);
  return cnf;
}

bool clause_satisfied(const Clause& clause, const Assignment& beta) {
  for (int v : clause.variables) {
    bool value = beta[v];
    if (clause.polarity == Polarity::positive ? value : !value) return true;
  }
  return false;
}

bool evaluate(const PureCnf& cnf, const Assignment& beta) {
  if (static_cast<int>(beta.size()) != cnf.variable_count)
    throw InputError("assignment length does not match the variable count");
  for (const Clause& c : cnf.clauses)
    if (!clause_satisfied(c, beta)) return false;
  return true;
}

std::optional<Assignment> brute_force_sat(const PureCnf& cnf) {
  validate(cnf);
  const int n = cnf.variable_count;
  if (n > kBruteForceVarLimit)
    throw CapacityError("brute-force satisfiability is limited to " +
                        std::to_string(kBruteForceVarLimit) + " variables");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Assignment beta(n);
    for (int j = 0; j < n; ++j) beta[j] = (bits >> (n - 1 - j)) & 1;
    if (evaluate(cnf, beta)) return beta;
  }
  return std::nullopt;
}

}  // namespace dfacons
