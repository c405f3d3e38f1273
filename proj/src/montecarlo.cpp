#include "monty/montecarlo.hpp"

#include <cmath>
#include <thread>

namespace monty {

namespace {

struct TrialSetup {
  const SimulationSpec& spec;
  CategoricalSampler theta_sampler;
  std::optional<CategoricalSampler> player_sampler;  // mixed players only
  std::vector<CategoricalSampler> reveal_samplers;   // one per own-pick door

  explicit TrialSetup(const SimulationSpec& spec)
      : spec(spec), theta_sampler(spec.prior.values()) {
    if (const auto* mix = std::get_if<MixedStrategy>(&spec.player))
      player_sampler.emplace(mix->weights());
    reveal_samplers.reserve(spec.n.doors());
    for (Door x = 0; x < spec.n.doors(); ++x)
      reveal_samplers.emplace_back(spec.kernel.row(x));
  }

  const Strategy& strategy_for(std::size_t mixed_index) const {
    if (const auto* pure = std::get_if<Strategy>(&spec.player)) return *pure;
    return std::get<MixedStrategy>(spec.player).support()[mixed_index];
  }
};

void validate(const SimulationSpec& spec) {
  if (spec.trials < 1) throw ValidationError("simulation needs >= 1 trial");
  if (spec.prior.size() != spec.n || spec.kernel.size() != spec.n)
    throw DimensionError("prior and kernel must match the game size");
  GameSize player_size = std::holds_alternative<Strategy>(spec.player)
                             ? std::get<Strategy>(spec.player).size()
                             : std::get<MixedStrategy>(spec.player).size();
  if (player_size != spec.n)
    throw DimensionError("player strategy must match the game size");
}

Rational exact_win_probability(const SimulationSpec& spec) {
  if (const auto* pure = std::get_if<Strategy>(&spec.player))
    return win_probability(*pure, spec.prior, spec.kernel);
  const auto& mix = std::get<MixedStrategy>(spec.player);
  Rational value;
  for (std::size_t k = 0; k < mix.support_size(); ++k)
    value += mix.weights()[k] *
             win_probability(mix.support()[k], spec.prior, spec.kernel);
  return value;
}

// Draw order per trial is fixed: winning door, then the pick when the
// player is mixed, then the host's choice when the pick won.
std::uint64_t run_chunk(const TrialSetup& setup, std::uint64_t chunk_index,
                        std::uint64_t chunk_trials) {
  Xoshiro256StarStar gen(splitmix64_at(setup.spec.seed, chunk_index));
  std::uint64_t wins = 0;
  for (std::uint64_t trial = 0; trial < chunk_trials; ++trial) {
    Door theta = static_cast<Door>(setup.theta_sampler.sample(gen));
    std::size_t mixed_index =
        setup.player_sampler ? setup.player_sampler->sample(gen) : 0;
    const Strategy& strategy = setup.strategy_for(mixed_index);
    Door x = strategy.chosen_door();
    Door target =
        theta != x
            ? theta
            : static_cast<Door>(setup.reveal_samplers[x].sample(gen));
    wins += payoff(setup.spec.n, theta, x, strategy.action_at(target));
  }
  return wins;
}

}  // namespace

SimulationResult simulate(const SimulationSpec& spec, int threads) {
  validate(spec);
  if (threads < 1) throw ValidationError("thread count must be >= 1");

  TrialSetup setup(spec);
  std::uint64_t chunks = (spec.trials + kTrialsPerChunk - 1) / kTrialsPerChunk;

  auto chunk_trials = [&](std::uint64_t c) {
    return c + 1 < chunks ? kTrialsPerChunk
                          : spec.trials - c * kTrialsPerChunk;
  };

  std::uint64_t wins = 0;
  if (threads == 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c)
      wins += run_chunk(setup, c, chunk_trials(c));
  } else {
    std::size_t workers =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), chunks);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        std::uint64_t local = 0;
        for (std::uint64_t c = w; c < chunks; c += workers)
          local += run_chunk(setup, c, chunk_trials(c));
        partial[w] = local;
      });
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t p : partial) wins += p;
  }

  SimulationResult result;
  result.wins = wins;
  result.trials = spec.trials;
  result.seed = spec.seed;
  result.estimate =
      static_cast<double>(wins) / static_cast<double>(spec.trials);
  result.standard_error =
      std::sqrt(result.estimate * (1.0 - result.estimate) /
                static_cast<double>(spec.trials));
  result.exact_value = exact_win_probability(spec);
  return result;
}

std::vector<SweepEntry> sweep(std::span<const SimulationSpec> specs,
                              int threads) {
  std::vector<SweepEntry> entries;
  entries.reserve(specs.size());
  for (const SimulationSpec& spec : specs) {
    SweepEntry entry;
    try {
      entry.result = simulate(spec, threads);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace monty
