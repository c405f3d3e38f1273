#pragma once

#include <vector>

#include "monty/rational.hpp"
#include "monty/strategy_space.hpp"

namespace monty {

// Probability mass over the winning door. Entries are exact, nonnegative,
// and sum to exactly one.
class Prior {
 public:
  Prior(GameSize n, std::vector<Rational> p);
  static Prior uniform(GameSize n);

  GameSize size() const { return n_; }
  const Rational& at(Door theta) const;
  const std::vector<Rational>& values() const { return p_; }

  friend bool operator==(const Prior&, const Prior&) = default;

 private:
  GameSize n_;
  std::vector<Rational> p_;
};

// Conditional distribution of the door left closed when the player's pick
// is the winning door itself. Row theta is supported on the other doors:
// zero diagonal, exact rows summing to one.
class RevealKernel {
 public:
  RevealKernel(GameSize n, std::vector<std::vector<Rational>> rows);
  static RevealKernel uniform(GameSize n);

  GameSize size() const { return n_; }
  const Rational& at(Door theta, Door y) const;
  const std::vector<Rational>& row(Door theta) const;

  friend bool operator==(const RevealKernel&, const RevealKernel&) = default;

 private:
  GameSize n_;
  std::vector<std::vector<Rational>> q_;
};

// Exact chance that the strategy wins: mass of the other doors it would
// switch back to, plus its own door's mass weighted by the kernel rows it
// would match on. Only the kernel row for the strategy's own pick can
// matter; everywhere else the reveal is forced.
Rational win_probability(const Strategy& strategy, const Prior& prior,
                         const RevealKernel& kernel);

struct BayesOptimum {
  Strategy strategy;  // always-switching at a least-likely door
  Rational value;     // 1 - min prior mass
};

// Always-switching at the smallest door of minimal prior mass. Beats every
// strategy under every kernel; verify_bayes_optimality re-checks that by
// brute force rather than trusting it.
BayesOptimum bayes_optimal(const Prior& prior);

bool verify_bayes_optimality(const Prior& prior, const RevealKernel& kernel,
                             int cap = kDefaultEnumerationCap);

}  // namespace monty
