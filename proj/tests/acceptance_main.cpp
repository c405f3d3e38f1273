// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "monty/io.hpp"
#include "oracles.hpp"

using namespace monty;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!ok && !detail.empty()) std::cout << "  <- " << detail;
  std::cout << std::endl;
  failures += ok ? 0 : 1;
}

template <typename Body>
void criterion(const std::string& name, Body body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  report(name, ok, detail);
}

bool check_dominance(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  for (int doors = 3; doors <= 8; ++doors) {
    GameSize n(doors);
    PayoffTable table = PayoffTable::build(n);
    auto certificates = verify_dominance_theorem(table);
    if (certificates.size() != strategy_count(n)) {
      detail = "certificate count off at n=" + std::to_string(doors);
      return false;
    }
    for (const auto& cert : certificates)
      if (!cert.dominator.is_always_switching() ||
          !weakly_dominates(cert.dominator, cert.dominated, table)) {
        detail = "unverified certificate for " + cert.dominated.label();
        return false;
      }
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds >= 10.0) {
    detail = "took " + std::to_string(seconds) + "s";
    return false;
  }
  return true;
}

bool check_bayes_exactness(std::string& detail) {
  oracle::RationalSampler sampler(314159);
  for (int doors = 3; doors <= 6; ++doors) {
    GameSize n(doors);
    auto strategies = enumerate_strategies(n);
    for (int round = 0; round < 100; ++round) {
      Prior prior = sampler.prior(n);
      RevealKernel kernel = sampler.kernel(n);
      BayesOptimum optimum = bayes_optimal(prior);
      Rational best(0);
      for (const Strategy& s : strategies) {
        Rational v = win_probability(s, prior, kernel);
        if (v > best) best = v;
      }
      if (best != optimum.value) {
        detail = "optimum " + optimum.value.str() + " but best is " +
                 best.str() + " at n=" + std::to_string(doors);
        return false;
      }
      for (Door x = 0; x < doors; ++x) {
        Strategy s = Strategy::always_switching(n, x);
        if (win_probability(s, prior, kernel) !=
            Rational(1) - prior.at(x)) {
          detail = "switching value depends on the kernel at x=" +
                   std::to_string(x);
          return false;
        }
      }
    }
  }
  return true;
}

bool check_minimax(std::string& detail) {
  oracle::RationalSampler sampler(271828);
  for (int doors = 3; doors <= 10; ++doors) {
    GameSize n(doors);
    PayoffTable table = PayoffTable::build(n);
    MixedStrategy player = uniform_switch_mix(n);
    for (int round = 0; round < 5; ++round) {
      RevealKernel h_rule = sampler.kernel(n, 12, round % 2 == 1);
      SaddleCheck check =
          verify_saddle_point(player, uniform_theta_mix(n, h_rule), table);
      if (!check.is_saddle || check.value() != game_value(n)) {
        detail = "saddle failed at n=" + std::to_string(doors) +
                 ": row " + check.row_security.str() + ", col " +
                 check.col_security.str();
        return false;
      }
    }
  }
  for (int doors : {3, 4}) {
    GameSize n(doors);
    PayoffTable table = PayoffTable::build(n);
    FictitiousPlayResult fp = fictitious_play(table, 1000000, 1e-3);
    Rational value = game_value(n);
    if (!fp.converged || fp.iterations > 1000000 || fp.lower > value ||
        fp.upper < value || (fp.upper - fp.lower).to_double() > 1e-3) {
      detail = "fictitious play bracket [" + fp.lower.str() + ", " +
               fp.upper.str() + "] after " + std::to_string(fp.iterations) +
               " iterations at n=" + std::to_string(doors);
      return false;
    }
  }
  return true;
}

bool check_monte_carlo(std::string& detail) {
  GameSize n(3);
  SimulationSpec spec{n, Prior::uniform(n), RevealKernel::uniform(n),
                      bayes_optimal(Prior::uniform(n)).strategy, 100000, 42};
  SimulationResult sequential = simulate(spec, 1);
  double band = 0.0060;
  if (std::abs(sequential.estimate - 2.0 / 3.0) > band) {
    detail = "estimate " + format_double(sequential.estimate) +
             " outside the band";
    return false;
  }
  SimulationResult replay = simulate(spec, 1);
  if (replay.wins != sequential.wins) {
    detail = "replay drifted";
    return false;
  }
  SimulationResult chunked = simulate(spec, 8);
  if (chunked.wins != sequential.wins) {
    detail = "chunked execution drifted";
    return false;
  }
  return true;
}

bool check_structural_invariants(std::string& detail) {
  for (int doors = 3; doors <= 5; ++doors) {
    GameSize n(doors);
    for (const Strategy& s : enumerate_strategies(n)) {
      for (Door theta = 0; theta < doors; ++theta) {
        if (theta == s.chosen_door()) continue;
        int first = -1;
        for (Door h = 0; h < doors; ++h) {
          if (h == theta) continue;
          int result = play(s, AdversaryState(n, theta, h));
          if (first < 0) first = result;
          if (result != first) {
            detail = "h leaked into " + s.label();
            return false;
          }
        }
      }
    }
    for (Door x = 0; x < doors; ++x)
      for (Action a : {Action::kMatch, Action::kSwitch}) {
        Strategy s = Strategy::single_action(n, x, a);
        for (const AdversaryState& state : enumerate_adversary_states(n)) {
          int expect =
              (a == Action::kMatch) == (state.theta() == x) ? 1 : 0;
          if (play(s, state) != expect) {
            detail = "single-action strategy depended on the reveal";
            return false;
          }
        }
      }
  }
  for (int doors = 3; doors <= 10; ++doors) {
    GameSize n(doors);
    if (strategy_count(n) !=
            static_cast<std::uint64_t>(doors) << (doors - 1) ||
        adversary_state_count(n) !=
            static_cast<std::uint64_t>(doors) * (doors - 1)) {
      detail = "count formula failed at n=" + std::to_string(doors);
      return false;
    }
  }
  for (int doors = 3; doors <= 5; ++doors) {
    GameSize n(doors);
    PayoffTable table = PayoffTable::build(n);
    for (const Strategy& s : enumerate_strategies(n)) {
      MixedStrategy point({s}, {Rational(1)});
      if (security_level_row(point, table) != Rational(0)) {
        detail = s.label() + " has positive security";
        return false;
      }
    }
  }
  oracle::RationalSampler sampler(999331);
  for (int round = 0; round < 1000; ++round) {
    int doors = 3 + round % 6;
    GameSize n(doors);
    Prior prior = sampler.prior(n, 40);
    if (bayes_optimal(prior).value < Rational(doors - 1, doors)) {
      detail = "lower bound failed for a prior at n=" +
               std::to_string(doors);
      return false;
    }
  }
  return true;
}

int run_command(const std::string& args, const fs::path& stdout_path) {
  std::string command = std::string(MONTY_CLI_PATH) + " " + args + " > " +
                        stdout_path.string() + " 2>&1";
  int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool check_cli_contract(std::string& detail) {
  const fs::path golden = MONTY_GOLDEN_DIR;
  fs::path tmp = fs::temp_directory_path();
  fs::path out = tmp / "monty_acceptance.out";

  fs::path dom = tmp / "monty_acceptance_dom.json";
  if (run_command("dominance 3 --output " + dom.string(), out) != 0 ||
      read_text_file(dom) != read_text_file(golden / "dominance_n3.json")) {
    detail = "dominance report diverged from the golden file";
    return false;
  }

  fs::path bayes = tmp / "monty_acceptance_bayes.json";
  if (run_command("bayes " + (golden / "spec_skewed.json").string() +
                      " --output " + bayes.string(),
                  out) != 0 ||
      read_text_file(bayes) != read_text_file(golden / "bayes_skewed.json")) {
    detail = "bayes report diverged from the golden file";
    return false;
  }
  if (read_text_file(out).find("value=4/5") == std::string::npos) {
    detail = "bayes summary does not report 4/5";
    return false;
  }

  fs::path minimax = tmp / "monty_acceptance_minimax.json";
  if (run_command("minimax 3 --output " + minimax.string(), out) != 0 ||
      read_text_file(minimax) !=
          read_text_file(golden / "minimax_n3.json")) {
    detail = "minimax report diverged from the golden file";
    return false;
  }
  if (read_text_file(out).find("value=2/3") == std::string::npos) {
    detail = "minimax summary does not report 2/3";
    return false;
  }

  fs::path sim_a = tmp / "monty_acceptance_sim_a.csv";
  fs::path sim_b = tmp / "monty_acceptance_sim_b.csv";
  std::string sim_args = "simulate " +
                         (golden / "spec_uniform3.json").string() +
                         " --strategy bayes --trials 100000 --seed 42";
  if (run_command(sim_args + " --output " + sim_a.string(), out) != 0 ||
      run_command(sim_args + " --output " + sim_b.string(), out) != 0 ||
      read_text_file(sim_a) != read_text_file(sim_b)) {
    detail = "simulate reruns were not byte-identical";
    return false;
  }

  for (const fs::path& page : {dom, bayes, minimax, sim_a, sim_b, out})
    fs::remove(page);
  return true;
}

}  // namespace

int main() {
  criterion("dominance certificates verified exhaustively for n=3..8 "
            "in under 10s",
            check_dominance);
  criterion("bayes optimum exactly matches brute force on 100 random "
            "instances per n=3..6",
            check_bayes_exactness);
  criterion("uniform saddle point verified at (n-1)/n for n=3..10 and "
            "bracketed by fictitious play",
            check_minimax);
  criterion("monte carlo at seed 42 lands in band, replays bitwise, and "
            "is chunk-invariant",
            check_monte_carlo);
  criterion("structural invariants hold (reveal independence, counts, "
            "zero pure security, prior lower bound)",
            check_structural_invariants);
  criterion("command line reports match golden files and rerun "
            "byte-identically",
            check_cli_contract);
  return failures == 0 ? 0 : 1;
}
