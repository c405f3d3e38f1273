#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "monty/bayes.hpp"
#include "monty/minimax.hpp"
#include "monty/rng.hpp"

namespace monty {

using PlayerPolicy = std::variant<Strategy, MixedStrategy>;

struct SimulationSpec {
  GameSize n;
  Prior prior;
  RevealKernel kernel;
  PlayerPolicy player;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct SimulationResult {
  std::uint64_t wins = 0;
  std::uint64_t trials = 0;
  double estimate = 0;        // wins / trials
  double standard_error = 0;  // sqrt(estimate * (1 - estimate) / trials)
  Rational exact_value;       // the probability the estimate targets
  std::uint64_t seed = 0;
};

// Trials are always processed in fixed chunks of this size, each chunk on
// its own generator seeded from splitmix64 output #chunk of the run's
// seed stream. The decomposition never depends on the thread count, so
// any execution of the same spec counts the same wins.
inline constexpr std::uint64_t kTrialsPerChunk = 1 << 14;

// Runs the full protocol per trial: draw the winning door from the prior,
// draw the pick when the player is mixed, let the host leave the forced
// door (or draw from the kernel row on a hit), then score the planned
// action. Deterministic function of the spec.
SimulationResult simulate(const SimulationSpec& spec, int threads = 1);

struct SweepEntry {
  std::optional<SimulationResult> result;
  std::string error;  // empty on success

  bool ok() const { return result.has_value(); }
};

// simulate() over each spec in order; a spec that fails validation
// reports its error in place without aborting the rest.
std::vector<SweepEntry> sweep(std::span<const SimulationSpec> specs,
                              int threads = 1);

}  // namespace monty
