#include "monty/bayes.hpp"

namespace monty {

namespace {

void require_distribution(const std::vector<Rational>& values,
                          const std::string& what) {
  Rational sum;
  for (const Rational& v : values) {
    if (v < Rational(0))
      throw ValidationError(what + " has a negative entry " + v.str());
    sum += v;
  }
  if (sum != Rational(1))
    throw ValidationError(what + " sums to " + sum.str() + ", expected 1");
}

}  // namespace

Prior::Prior(GameSize n, std::vector<Rational> p) : n_(n), p_(std::move(p)) {
  if (p_.size() != static_cast<std::size_t>(n_.doors()))
    throw DimensionError("prior needs " + std::to_string(n_.doors()) +
                         " entries, got " + std::to_string(p_.size()));
  require_distribution(p_, "prior");
}

Prior Prior::uniform(GameSize n) {
  return Prior(n, std::vector<Rational>(n.doors(),
                                        Rational(1, n.doors())));
}

const Rational& Prior::at(Door theta) const {
  n_.require_door(theta);
  return p_[theta];
}

RevealKernel::RevealKernel(GameSize n, std::vector<std::vector<Rational>> rows)
    : n_(n), q_(std::move(rows)) {
  if (q_.size() != static_cast<std::size_t>(n_.doors()))
    throw DimensionError("kernel needs " + std::to_string(n_.doors()) +
                         " rows, got " + std::to_string(q_.size()));
  for (Door theta = 0; theta < n_.doors(); ++theta) {
    const auto& row = q_[theta];
    if (row.size() != static_cast<std::size_t>(n_.doors()))
      throw DimensionError("kernel row " + std::to_string(theta) + " needs " +
                           std::to_string(n_.doors()) + " entries, got " +
                           std::to_string(row.size()));
    if (!row[theta].is_zero())
      throw ValidationError("kernel row " + std::to_string(theta) +
                            " puts mass " + row[theta].str() +
                            " on its own door");
    require_distribution(row, "kernel row " + std::to_string(theta));
  }
}

RevealKernel RevealKernel::uniform(GameSize n) {
  std::vector<std::vector<Rational>> rows(
      n.doors(), std::vector<Rational>(n.doors(), Rational(1, n.doors() - 1)));
  for (Door theta = 0; theta < n.doors(); ++theta)
    rows[theta][theta] = Rational(0);
  return RevealKernel(n, std::move(rows));
}

const Rational& RevealKernel::at(Door theta, Door y) const {
  n_.require_door(theta);
  n_.require_door(y);
  return q_[theta][y];
}

const std::vector<Rational>& RevealKernel::row(Door theta) const {
  n_.require_door(theta);
  return q_[theta];
}

Rational win_probability(const Strategy& strategy, const Prior& prior,
                         const RevealKernel& kernel) {
  GameSize n = strategy.size();
  if (prior.size() != n || kernel.size() != n)
    throw DimensionError("strategy, prior, and kernel must agree on the "
                         "door count");
  Door x = strategy.chosen_door();
  Rational total;
  for (Door door = 0; door < n.doors(); ++door) {
    if (door == x) continue;
    // As the winning door: a win iff the strategy switches back to it.
    if (strategy.action_at(door) == Action::kSwitch)
      total += prior.at(door);
    // As the door left closed while x itself wins: a win iff matched.
    if (strategy.action_at(door) == Action::kMatch)
      total += prior.at(x) * kernel.at(x, door);
  }
  return total;
}

BayesOptimum bayes_optimal(const Prior& prior) {
  GameSize n = prior.size();
  Door best = 0;
  for (Door d = 1; d < n.doors(); ++d)
    if (prior.at(d) < prior.at(best)) best = d;
  return {Strategy::always_switching(n, best),
          Rational(1) - prior.at(best)};
}

bool verify_bayes_optimality(const Prior& prior, const RevealKernel& kernel,
                             int cap) {
  GameSize n = prior.size();
  if (n.doors() > cap)
    throw CapacityError("brute-force verification capped at " +
                        std::to_string(cap) + " doors, got " +
                        std::to_string(n.doors()));
  Rational optimum = bayes_optimal(prior).value;
  for (const Strategy& s : enumerate_strategies(n))
    if (win_probability(s, prior, kernel) > optimum) return false;
  return true;
}

}  // namespace monty
