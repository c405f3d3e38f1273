#include "monty/cli.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "monty/io.hpp"

namespace monty {

namespace {

struct CommonFlags {
  std::string output;
  bool quiet = false;

  void write_report(const std::string& content) const {
    if (!output.empty()) write_text_file(output, content);
  }

  void summary(const std::string& line) const {
    if (!quiet) std::cout << line << '\n';
  }
};

int cmd_dominance(int doors, int cap, const CommonFlags& flags) {
  PayoffTable table = PayoffTable::build(GameSize(doors), cap);
  auto certificates = verify_dominance_theorem(table);
  auto strictness = strictness_report(certificates, table);
  flags.write_report(
      json_text(certificate_report(table, certificates, strictness)));
  flags.summary("n=" + std::to_string(doors) +
                " strategies=" + std::to_string(certificates.size()) +
                " certificates=OK");
  return 0;
}

int cmd_bayes(const std::string& spec_path, int cap,
              const CommonFlags& flags) {
  GameSpec spec = load_game_spec(spec_path);
  BayesOptimum optimum = bayes_optimal(spec.prior);
  bool within_cap = spec.n.doors() <= cap;
  if (within_cap && !verify_bayes_optimality(spec.prior, spec.kernel, cap))
    throw TheoremViolationError(
        "some strategy beats the computed optimum under " + spec_path);
  flags.write_report(
      json_text(bayes_report(spec, optimum, within_cap, within_cap)));
  flags.summary("n=" + std::to_string(spec.n.doors()) +
                " optimal=" + optimum.strategy.label() +
                " value=" + optimum.value.str() +
                (within_cap ? " verified=OK" : " verified=SKIPPED"));
  return 0;
}

int cmd_minimax(int doors, int cap, std::uint64_t fp_iters, double fp_tol,
                const CommonFlags& flags) {
  GameSize n(doors);
  PayoffTable table = PayoffTable::build(n, cap);
  SaddleCheck saddle = verify_saddle_point(
      uniform_switch_mix(n), uniform_theta_mix(n, RevealKernel::uniform(n)),
      table);
  FictitiousPlayResult fp = fictitious_play(table, fp_iters, fp_tol);
  flags.write_report(json_text(saddle_report(n, saddle, fp)));
  if (!saddle.is_saddle || saddle.value() != game_value(n))
    throw TheoremViolationError(
        "saddle check failed at n=" + std::to_string(doors) +
        ": row security " + saddle.row_security.str() + ", column security " +
        saddle.col_security.str() + ", pair value " +
        saddle.pair_value.str());
  flags.summary("n=" + std::to_string(doors) + " value=" +
                saddle.value().str() + " saddle=OK fp=[" +
                format_double(fp.lower.to_double()) + "," +
                format_double(fp.upper.to_double()) + "] iters=" +
                std::to_string(fp.iterations) +
                (fp.converged ? " converged=yes" : " converged=no"));
  return 0;
}

int cmd_simulate(const std::string& spec_path,
                 const std::string& strategy_flag, std::uint64_t trials,
                 std::uint64_t seed, int threads, const CommonFlags& flags) {
  GameSpec spec = load_game_spec(spec_path);
  auto [player, label] = [&]() -> std::pair<PlayerPolicy, std::string> {
    if (strategy_flag == "bayes") {
      Strategy s = bayes_optimal(spec.prior).strategy;
      return {s, s.label()};
    }
    if (strategy_flag == "uniform-switch")
      return {uniform_switch_mix(spec.n), "uniform-switch"};
    Strategy s = parse_strategy_label(spec.n, strategy_flag);
    return {s, s.label()};
  }();
  SimulationSpec sim{spec.n, spec.prior, spec.kernel, std::move(player),
                     trials, seed};
  SimulationResult result = simulate(sim, threads);
  SimulationRow row{spec.n, label, result};
  flags.write_report(simulation_csv({&row, 1}));
  double exact = result.exact_value.to_double();
  double z = result.standard_error > 0
                 ? (result.estimate - exact) / result.standard_error
                 : 0.0;
  flags.summary("n=" + std::to_string(spec.n.doors()) + " strategy=" + label +
                " trials=" + std::to_string(result.trials) +
                " seed=" + std::to_string(result.seed) +
                " wins=" + std::to_string(result.wins) +
                " estimate=" + format_double(result.estimate) +
                " exact=" + result.exact_value.str() +
                " z=" + format_double(z));
  return 0;
}

int cmd_enumerate(int doors, int cap, const CommonFlags& flags) {
  PayoffTable table = PayoffTable::build(GameSize(doors), cap);
  flags.write_report(payoff_table_csv(table));
  flags.summary("n=" + std::to_string(doors) +
                " strategies=" + std::to_string(table.row_count()) +
                " states=" + std::to_string(table.col_count()));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Exact analysis and seeded simulation of the n-door "
               "switch-or-stay game"};
  app.fallthrough();
  app.require_subcommand(1);

  CommonFlags flags;
  app.add_option("--output", flags.output,
                 "File receiving the machine-readable report");
  app.add_flag("--quiet", flags.quiet, "Suppress the summary line");

  int doors = 3;
  int cap = kDefaultEnumerationCap;
  std::string spec_path;
  std::uint64_t fp_iters = 1000000;
  double fp_tol = 1e-3;
  std::string strategy_flag = "bayes";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  int threads = 1;

  CLI::App* dominance = app.add_subcommand(
      "dominance",
      "Build a verified always-switching dominator for every strategy");
  dominance->add_option("n", doors, "Door count")->required();
  dominance->add_option("--cap", cap, "Largest door count to enumerate");

  CLI::App* bayes = app.add_subcommand(
      "bayes", "Best strategy and full value table for a given prior");
  bayes->add_option("spec", spec_path, "Game spec JSON file")->required();
  bayes->add_option("--cap", cap, "Largest door count to brute-force");

  CLI::App* minimax = app.add_subcommand(
      "minimax",
      "Verify the uniform saddle point and bracket the value iteratively");
  minimax->add_option("n", doors, "Door count")->required();
  minimax->add_option("--cap", cap, "Largest door count to enumerate");
  minimax->add_option("--fp-iters", fp_iters,
                      "Iteration budget for the bracketing solver");
  minimax->add_option("--fp-tol", fp_tol,
                      "Bracket width that counts as converged");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Seeded Monte Carlo run cross-checked against the exact "
                  "win probability");
  simulate->add_option("spec", spec_path, "Game spec JSON file")->required();
  simulate->add_option("--strategy", strategy_flag,
                       "\"bayes\", \"uniform-switch\", or a label like "
                       "\"x=0;map=11\"");
  simulate->add_option("--trials", trials, "Number of rounds to play");
  simulate->add_option("--seed", seed, "Generator seed");
  simulate->add_option("--threads", threads,
                       "Worker threads (the result does not depend on this)");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Dump the full strategy-by-state payoff table as CSV");
  enumerate->add_option("n", doors, "Door count")->required();
  enumerate->add_option("--cap", cap, "Largest door count to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(dominance))
      return cmd_dominance(doors, cap, flags);
    if (app.got_subcommand(bayes)) return cmd_bayes(spec_path, cap, flags);
    if (app.got_subcommand(minimax))
      return cmd_minimax(doors, cap, fp_iters, fp_tol, flags);
    if (app.got_subcommand(simulate))
      return cmd_simulate(spec_path, strategy_flag, trials, seed, threads,
                          flags);
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(doors, cap, flags);
  } catch (const TheoremViolationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace monty
