#include "dfacons/reduction.hpp"

#include <algorithm>
#include <string>

namespace dfacons {

namespace {

Word a_run(int count) { return Word(static_cast<std::size_t>(count), 'a'); }

bool clause_has_variable(const Clause& c, int variable) {
  return std::binary_search(c.variables.begin(), c.variables.end(), variable);
}

}  // namespace

ReductionInstance gold_reduce(const PureCnf& cnf) {
  validate(cnf);
  const int n = cnf.variable_count;
  const int m = static_cast<int>(cnf.clauses.size());
  const int k = n + m;

  std::set<Word> pos, neg;
  pos.insert(Word{});
  pos.insert(a_run(k));
  for (int i = 1; i < k; ++i) neg.insert(a_run(i));
  for (int i = 0; i < m; ++i) {
    const Clause& c = cnf.clauses[i];
    (c.polarity == Polarity::positive ? pos : neg).insert(a_run(i) + "bb");
    for (int r = 0; r < k; ++r) {
      if (r < m || !clause_has_variable(c, r - m))
        neg.insert(a_run(i) + "b" + a_run(k - r));
    }
  }

  ReductionInstance inst;
  inst.sample = Sample(Alphabet{2}, std::move(pos), std::move(neg));
  inst.k = k;
  inst.construction = Construction::gold;
  inst.cnf = cnf;
  return inst;
}

ReductionInstance dlh_reduce(const PureCnf& cnf) {
  validate(cnf);
  const int n = cnf.variable_count;
  const int m = static_cast<int>(cnf.clauses.size());

  std::set<Word> pos, neg;
  pos.insert(a_run(n));
  for (int t = 1; t < n; ++t) {
    neg.insert(a_run(t));
    neg.insert(a_run(n + t));
  }
  // clause and variable indices are 1-based in this construction
  for (int i = 1; i <= m; ++i) {
    const Clause& c = cnf.clauses[i - 1];
    (c.polarity == Polarity::positive ? pos : neg)
        .insert(a_run(i - 1) + "b" + a_run(n) + "b");
    for (int j = 1; j <= n; ++j) {
      if (!clause_has_variable(c, j - 1))
        neg.insert(a_run(i - 1) + "b" + a_run(n - j + 1));
    }
  }

  ReductionInstance inst;
  inst.sample = Sample(Alphabet{2}, std::move(pos), std::move(neg));
  inst.k = n;
  inst.k_alt = n + 1;
  inst.construction = Construction::dlh;
  inst.cnf = cnf;
  return inst;
}

Dfa witness_dfa(const PureCnf& cnf, const Assignment& beta) {
  validate(cnf);
  const int n = cnf.variable_count;
  const int m = static_cast<int>(cnf.clauses.size());
  const int k = n + m;
  if (static_cast<int>(beta.size()) != n)
    throw PreconditionError("assignment length does not match the variable count");

  // smallest-index variable whose value satisfies each clause
  std::vector<int> pick(m, -1);
  for (int i = 0; i < m; ++i) {
    const Clause& c = cnf.clauses[i];
    for (int v : c.variables) {
      if (c.polarity == Polarity::positive ? beta[v] : !beta[v]) {
        pick[i] = v;
        break;
      }
    }
    if (pick[i] < 0)
      throw PreconditionError("assignment falsifies clause " + std::to_string(i));
  }

  std::vector<std::vector<int>> trans(k, std::vector<int>(2));
  for (int i = 0; i < k; ++i) trans[i][0] = (i + 1) % k;
  for (int i = 0; i < m; ++i) trans[i][1] = m + pick[i];
  for (int j = 0; j < n; ++j) trans[m + j][1] = beta[j] ? 0 : m + j;
  return Dfa(k, Alphabet{2}, std::move(trans), 0, {0});
}

Assignment extract_assignment(const PureCnf& cnf, const Dfa& dfa) {
  validate(cnf);
  const int n = cnf.variable_count;
  const int m = static_cast<int>(cnf.clauses.size());
  const int k = n + m;
  if (dfa.state_count != k)
    throw PreconditionError("DFA has " + std::to_string(dfa.state_count) +
                            " states but the construction needs exactly " +
                            std::to_string(k));
  if (!is_consistent(dfa, gold_reduce(cnf).sample))
    throw PreconditionError("DFA is not consistent with the reduced sample");

  // canonical relabeling: s_i is the state reached by a^i
  std::vector<int> s(k);
  std::vector<bool> seen(k, false);
  int cur = dfa.initial;
  for (int i = 0; i < k; ++i) {
    if (seen[cur])
      throw InternalError("a-run revisits a state before closing the cycle");
    seen[cur] = true;
    s[i] = cur;
    cur = dfa.transitions[cur][0];
  }

  Assignment beta(n);
  for (int j = 0; j < n; ++j) beta[j] = dfa.transitions[s[m + j]][1] == s[0];
  if (!evaluate(cnf, beta))
    throw InternalError("extracted assignment does not satisfy the formula");
  return beta;
}

bool has_gold_structure(const PureCnf& cnf, const Dfa& dfa) {
  validate(cnf);
  const int m = static_cast<int>(cnf.clauses.size());
  const int k = cnf.variable_count + m;
  if (dfa.state_count != k) return false;

  std::vector<int> s(k);
  std::vector<int> position(k, -1);
  int cur = dfa.initial;
  for (int i = 0; i < k; ++i) {
    if (position[cur] >= 0) return false;  // a-run revisits a state early
    position[cur] = i;
    s[i] = cur;
    cur = dfa.transitions[cur][0];
  }
  if (cur != dfa.initial) return false;  // the a-cycle must close

  for (int i = 0; i < m; ++i) {
    int landing = position[dfa.transitions[s[i]][1]];
    if (landing < m || !clause_has_variable(cnf.clauses[i], landing - m))
      return false;
  }
  return true;
}

}  // namespace dfacons
