#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "monty/bayes.hpp"
#include "monty/strategy_space.hpp"

namespace monty {

// A lottery over pure strategies: distinct support, exact nonnegative
// weights summing to one.
class MixedStrategy {
 public:
  MixedStrategy(std::vector<Strategy> support, std::vector<Rational> weights);

  GameSize size() const { return support_.front().size(); }
  std::size_t support_size() const { return support_.size(); }
  const std::vector<Strategy>& support() const { return support_; }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<Strategy> support_;
  std::vector<Rational> weights_;
};

// A joint lottery over adversary states; correlation between the winning
// door and the host's on-diagonal choice is allowed.
class AdversaryMix {
 public:
  AdversaryMix(std::vector<AdversaryState> support,
               std::vector<Rational> weights);

  GameSize size() const { return support_.front().size(); }
  std::size_t support_size() const { return support_.size(); }
  const std::vector<AdversaryState>& support() const { return support_; }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<AdversaryState> support_;
  std::vector<Rational> weights_;
};

// The guaranteed win probability of the n-door game, (n-1)/n. Tests and
// the saddle verifier certify this constructively; nothing else in the
// library takes it on faith.
Rational game_value(GameSize n);

// Weight 1/n on each of the n always-switching strategies.
MixedStrategy uniform_switch_mix(GameSize n);

// Uniform winning door, with the on-diagonal choice drawn from the given
// rule: state (theta, h) gets weight h_rule(theta, h) / n. Zero-weight
// states are dropped from the support.
AdversaryMix uniform_theta_mix(GameSize n, const RevealKernel& h_rule);

// Worst column for the mix: the win probability it guarantees against
// any adversary.
Rational security_level_row(const MixedStrategy& mix,
                            const PayoffTable& table);

// Best row against the mix: the most any pure strategy extracts from it.
Rational security_level_col(const AdversaryMix& mix, const PayoffTable& table);

struct SaddleCheck {
  bool is_saddle = false;
  Rational row_security;
  Rational col_security;
  Rational pair_value;  // bilinear payoff of the pair itself

  // The common value; meaningful when is_saddle.
  const Rational& value() const { return pair_value; }
};

// A pair is a saddle point exactly when neither side can move the value:
// row security, column security, and the pair's own payoff all coincide.
SaddleCheck verify_saddle_point(const MixedStrategy& row_mix,
                                const AdversaryMix& col_mix,
                                const PayoffTable& table);

struct FictitiousPlayResult {
  Rational lower;  // best row security certified along the run
  Rational upper;  // best response bound certified along the run
  std::uint64_t iterations = 0;
  bool converged = false;
  MixedStrategy row_mix;  // empirical frequencies at the final iteration
  AdversaryMix col_mix;

  double midpoint() const {
    return (lower.to_double() + upper.to_double()) / 2;
  }
};

// Called after every iteration with that iteration's instantaneous value
// bounds (not the running best).
using FictitiousPlayObserver = std::function<void(
    std::uint64_t iteration, const Rational& lower, const Rational& upper)>;

// Simultaneous fictitious play over the full table: each side best-responds
// to the other's empirical history, smallest canonical index on ties. Stops
// when the certified bracket is tighter than tolerance or after max_iters;
// the bracket straddles the exact game value either way.
FictitiousPlayResult fictitious_play(
    const PayoffTable& table, std::uint64_t max_iters, double tolerance,
    const FictitiousPlayObserver& observer = {});

}  // namespace monty
