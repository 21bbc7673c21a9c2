// Command-line front end: reduce formulas to samples, decide consistency,
// check automata against samples, build/extract witnesses, and run the
// counterexample reproductions.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "dfacons/cnf.hpp"
#include "dfacons/counterexamples.hpp"
#include "dfacons/formats.hpp"
#include "dfacons/reduction.hpp"
#include "dfacons/solver.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUnsat = 20;
constexpr int kExitUnknown = 30;
constexpr int kExitInternal = 70;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dfacons::InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dfacons::InputError("cannot write " + path);
  out << content;
}

void emit(const std::string& path, const std::string& content) {
  if (path == "-") std::cout << content;
  else write_file(path, content);
}

std::string printable(const dfacons::Word& w) { return w.empty() ? "eps" : w; }

int run_reduce(const std::string& cnf_path, const std::string& construction,
               const std::string& out_path) {
  const dfacons::PureCnf cnf = dfacons::parse_dimacs(read_file(cnf_path));
  const dfacons::ReductionInstance inst = construction == "dlh"
                                              ? dfacons::dlh_reduce(cnf)
                                              : dfacons::gold_reduce(cnf);
  emit(out_path, dfacons::write_sample(inst.sample));
  std::cout << "k=" << inst.k << " |P|=" << inst.sample.positives.size()
            << " |N|=" << inst.sample.negatives.size() << "\n";
  return 0;
}

int run_solve(const std::string& sample_path, int k, double budget, bool dot,
              bool parallel) {
  const dfacons::Sample sample = dfacons::parse_sample(read_file(sample_path));

  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable cv;
  bool done = false;
  std::thread watchdog;
  if (budget == 0.0) {
    stop.store(true);
  } else if (budget > 0.0) {
    watchdog = std::thread([&] {
      std::unique_lock<std::mutex> lock(mu);
      if (!cv.wait_for(lock, std::chrono::duration<double>(budget),
                       [&] { return done; }))
        stop.store(true);
    });
  }

  auto stop_watchdog = [&] {
    if (!watchdog.joinable()) return;
    {
      std::lock_guard<std::mutex> lock(mu);
      done = true;
    }
    cv.notify_all();
    watchdog.join();
  };

  dfacons::SolveOptions options;
  options.parallel = parallel;
  options.stop = &stop;
  dfacons::SolveResult result;
  try {
    result = dfacons::solve_consistent(sample, k, options);
  } catch (...) {
    stop_watchdog();
    throw;
  }
  stop_watchdog();

  switch (result.status) {
    case dfacons::SolveStatus::found:
      std::cout << "SAT\n";
      std::cout << (dot ? dfacons::to_dot(*result.dfa)
                        : dfacons::write_dfa(*result.dfa));
      return 0;
    case dfacons::SolveStatus::exhausted:
      std::cout << "UNSAT\n";
      return kExitUnsat;
    case dfacons::SolveStatus::stopped:
    default:
      std::cout << "UNKNOWN\n";
      return kExitUnknown;
  }
}

int run_check(const std::string& sample_path, const std::string& dfa_path) {
  const dfacons::Sample sample = dfacons::parse_sample(read_file(sample_path));
  const dfacons::Dfa dfa = dfacons::parse_dfa(read_file(dfa_path));
  if (const auto violation = dfacons::find_violation(dfa, sample)) {
    std::cout << "VIOLATION " << printable(violation->word) << ' '
              << (violation->positive ? "positive" : "negative") << "\n";
    return kExitViolation;
  }
  std::cout << "CONSISTENT\n";
  return 0;
}

int run_witness(const std::string& cnf_path, const std::string& bits,
                const std::string& out_path, const std::string& dot_path) {
  const dfacons::PureCnf cnf = dfacons::parse_dimacs(read_file(cnf_path));
  if (static_cast<int>(bits.size()) != cnf.variable_count)
    throw dfacons::InputError("assignment must have exactly " +
                              std::to_string(cnf.variable_count) + " bits");
  dfacons::Assignment beta;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw dfacons::InputError("assignment must consist of 0s and 1s");
    beta.push_back(c == '1');
  }
  const dfacons::Dfa dfa = dfacons::witness_dfa(cnf, beta);
  emit(out_path, dfacons::write_dfa(dfa));
  if (!dot_path.empty()) emit(dot_path, dfacons::to_dot(dfa));
  return 0;
}

int run_extract(const std::string& cnf_path, const std::string& dfa_path) {
  const dfacons::PureCnf cnf = dfacons::parse_dimacs(read_file(cnf_path));
  const dfacons::Dfa dfa = dfacons::parse_dfa(read_file(dfa_path));
  const dfacons::Assignment beta = dfacons::extract_assignment(cnf, dfa);
  std::string bits;
  for (bool b : beta) bits += b ? '1' : '0';
  std::cout << bits
            << (dfacons::evaluate(cnf, beta) ? " SATISFIES" : " DOES-NOT-SATISFY")
            << "\n";
  return 0;
}

int run_verify_paper(bool json_mode) {
  const std::vector<dfacons::CounterexampleReport> reports =
      dfacons::run_all_reports();
  bool all_passed = true;
  for (const auto& report : reports) {
    all_passed = all_passed && report.passed;
    if (json_mode) {
      nlohmann::json record;
      record["name"] = report.name;
      record["formula_satisfiable"] =
          report.formula_satisfiable
              ? nlohmann::json(*report.formula_satisfiable)
              : nlohmann::json(nullptr);
      record["claimed_bound"] = report.claimed_bound;
      record["exhibited_dfa_states"] =
          report.exhibited_dfa_states
              ? nlohmann::json(*report.exhibited_dfa_states)
              : nlohmann::json(nullptr);
      record["consistency_verified"] = report.consistency_verified;
      record["impossibility_verified"] =
          report.impossibility_verified
              ? nlohmann::json(*report.impossibility_verified)
              : nlohmann::json(nullptr);
      record["passed"] = report.passed;
      record["seconds"] = report.seconds;
      std::cout << record.dump() << "\n";
      continue;
    }
    std::ostringstream line;
    line << report.name;
    if (report.formula_satisfiable)
      line << (*report.formula_satisfiable ? " formula-SAT" : " formula-UNSAT");
    if (report.consistency_verified && report.exhibited_dfa_states)
      line << " consistent@k=" << *report.exhibited_dfa_states;
    if (report.impossibility_verified && *report.impossibility_verified)
      line << " UNSAT@k=" << report.claimed_bound;
    line << (report.passed ? " PASS" : " FAIL");
    line << " (" << std::fixed << std::setprecision(2) << report.seconds << "s)";
    std::cout << line.str() << "\n";
  }
  return all_passed ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for DFA consistency over the binary alphabet: "
               "pure-3SAT reductions, witness automata, an exact solver, and "
               "machine-checked counterexamples to published constructions"};
  app.require_subcommand(1);

  std::string cnf_path, sample_path, dfa_path, out_path = "-", dot_path;
  std::string construction = "gold", assignment_bits;
  int k = 0;
  double budget = 60.0;
  bool dot_flag = false, parallel = false, json_mode = false;

  auto* reduce = app.add_subcommand("reduce", "Reduce a pure CNF to a sample");
  reduce->add_option("cnf", cnf_path, "DIMACS CNF with pure clauses")->required();
  reduce->add_option("-o,--out", out_path, "sample file path, - for stdout")
      ->required();
  reduce->add_option("--construction", construction, "gold or dlh")
      ->check(CLI::IsMember({"gold", "dlh"}));

  auto* solve = app.add_subcommand("solve", "Decide k-state consistency");
  solve->add_option("sample", sample_path, "sample file")->required();
  solve->add_option("--k", k, "state bound")->required()
      ->check(CLI::PositiveNumber);
  solve->add_option("--budget", budget,
                    "wall-clock budget in seconds, 0 expires at once, "
                    "negative disables the budget");
  solve->add_flag("--dot", dot_flag, "print the witness as DOT instead of a table");
  solve->add_flag("--parallel", parallel,
                  "explore branches concurrently (witness may vary)");

  auto* check = app.add_subcommand("check", "Check a DFA against a sample");
  check->add_option("sample", sample_path, "sample file")->required();
  check->add_option("dfa", dfa_path, "DFA table file")->required();

  auto* witness = app.add_subcommand(
      "witness", "Build the cycle witness DFA from a satisfying assignment");
  witness->add_option("cnf", cnf_path, "DIMACS CNF with pure clauses")->required();
  witness->add_option("assignment", assignment_bits, "assignment as a 01 string")
      ->required();
  witness->add_option("-o,--out", out_path, "DFA file path, - for stdout");
  witness->add_option("--dot", dot_path, "also write a DOT rendering here");

  auto* extract = app.add_subcommand(
      "extract", "Extract the assignment from a consistent (n+m)-state DFA");
  extract->add_option("cnf", cnf_path, "DIMACS CNF with pure clauses")->required();
  extract->add_option("dfa", dfa_path, "DFA table file")->required();

  auto* verify = app.add_subcommand(
      "verify-paper", "Re-check the published-construction counterexamples");
  verify->add_flag("--json", json_mode, "one JSON record per report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (reduce->parsed()) return run_reduce(cnf_path, construction, out_path);
    if (solve->parsed())
      return run_solve(sample_path, k, budget, dot_flag, parallel);
    if (check->parsed()) return run_check(sample_path, dfa_path);
    if (witness->parsed())
      return run_witness(cnf_path, assignment_bits, out_path, dot_path);
    if (extract->parsed()) return run_extract(cnf_path, dfa_path);
    if (verify->parsed()) return run_verify_paper(json_mode);
  } catch (const dfacons::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const dfacons::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
