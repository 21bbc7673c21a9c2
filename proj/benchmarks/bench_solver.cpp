#include <benchmark/benchmark.h>

#include "dfacons/counterexamples.hpp"
#include "dfacons/reduction.hpp"
#include "dfacons/solver.hpp"

namespace {

using namespace dfacons;

PureCnf three_unit_clause_cnf() {
  PureCnf cnf;
  cnf.variable_count = 3;
  cnf.clauses = {
      {Polarity::negative, {0}},
      {Polarity::positive, {1}},
      {Polarity::positive, {2}},
  };
  return cnf;
}

void BM_GoldReduce(benchmark::State& state) {
  const PureCnf cnf = three_unit_clause_cnf();
  for (auto _ : state) benchmark::DoNotOptimize(gold_reduce(cnf));
}
BENCHMARK(BM_GoldReduce);

void BM_SolveGoldSatisfiable(benchmark::State& state) {
  const ReductionInstance inst = gold_reduce(three_unit_clause_cnf());
  for (auto _ : state)
    benchmark::DoNotOptimize(find_consistent_dfa(inst.sample, inst.k));
}
BENCHMARK(BM_SolveGoldSatisfiable);

void BM_SolveDlhThreeStateUnsat(benchmark::State& state) {
  const ReductionInstance inst = dlh_reduce(three_unit_clause_cnf());
  for (auto _ : state)
    benchmark::DoNotOptimize(find_consistent_dfa(inst.sample, 3));
}
BENCHMARK(BM_SolveDlhThreeStateUnsat);

void BM_SolveFernauSample(benchmark::State& state) {
  const FernauInstance inst = fernau_instance();
  for (auto _ : state)
    benchmark::DoNotOptimize(find_consistent_dfa(inst.sample, inst.k));
}
BENCHMARK(BM_SolveFernauSample);

void BM_ConsistencyCheckFernau(benchmark::State& state) {
  const FernauInstance inst = fernau_instance();
  for (auto _ : state)
    benchmark::DoNotOptimize(is_consistent(inst.dfa, inst.sample));
}
BENCHMARK(BM_ConsistencyCheckFernau);

void BM_OracleThreeStates(benchmark::State& state) {
  const ReductionInstance inst = dlh_reduce(three_unit_clause_cnf());
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_oracle(inst.sample, 3));
}
BENCHMARK(BM_OracleThreeStates);

}  // namespace

BENCHMARK_MAIN();
