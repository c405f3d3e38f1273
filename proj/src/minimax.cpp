#include "monty/minimax.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace monty {

namespace {

void require_mix(std::size_t support, std::size_t weight_count,
                 const std::vector<Rational>& weights) {
  if (support == 0) throw ValidationError("mix has empty support");
  if (support != weight_count)
    throw DimensionError("mix has " + std::to_string(support) +
                         " support entries but " +
                         std::to_string(weight_count) + " weights");
  Rational sum;
  for (const Rational& w : weights) {
    if (w < Rational(0))
      throw ValidationError("mix has a negative weight " + w.str());
    sum += w;
  }
  if (sum != Rational(1))
    throw ValidationError("mix weights sum to " + sum.str() + ", expected 1");
}

}  // namespace

MixedStrategy::MixedStrategy(std::vector<Strategy> support,
                             std::vector<Rational> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  require_mix(support_.size(), weights_.size(), weights_);
  std::set<std::size_t> seen;
  for (const Strategy& s : support_) {
    if (s.size() != support_.front().size())
      throw DimensionError("mix mixes door counts");
    if (!seen.insert(strategy_index(s)).second)
      throw ValidationError("mix repeats strategy " + s.label());
  }
}

AdversaryMix::AdversaryMix(std::vector<AdversaryState> support,
                           std::vector<Rational> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  require_mix(support_.size(), weights_.size(), weights_);
  std::set<std::size_t> seen;
  for (const AdversaryState& s : support_) {
    if (s.size() != support_.front().size())
      throw DimensionError("mix mixes door counts");
    if (!seen.insert(adversary_state_index(s)).second)
      throw ValidationError("mix repeats state " + s.label());
  }
}

Rational game_value(GameSize n) {
  return Rational(n.doors() - 1, n.doors());
}

MixedStrategy uniform_switch_mix(GameSize n) {
  std::vector<Strategy> support;
  support.reserve(n.doors());
  for (Door x = 0; x < n.doors(); ++x)
    support.push_back(Strategy::always_switching(n, x));
  return MixedStrategy(std::move(support),
                       std::vector<Rational>(n.doors(),
                                             Rational(1, n.doors())));
}

AdversaryMix uniform_theta_mix(GameSize n, const RevealKernel& h_rule) {
  if (h_rule.size() != n)
    throw DimensionError("h rule is for " +
                         std::to_string(h_rule.size().doors()) +
                         " doors, expected " + std::to_string(n.doors()));
  std::vector<AdversaryState> support;
  std::vector<Rational> weights;
  Rational per_theta(1, n.doors());
  for (Door theta = 0; theta < n.doors(); ++theta) {
    for (Door h = 0; h < n.doors(); ++h) {
      if (h == theta) continue;
      Rational w = per_theta * h_rule.at(theta, h);
      if (w.is_zero()) continue;
      support.emplace_back(n, theta, h);
      weights.push_back(w);
    }
  }
  return AdversaryMix(std::move(support), std::move(weights));
}

Rational security_level_row(const MixedStrategy& mix,
                            const PayoffTable& table) {
  std::vector<std::size_t> rows;
  rows.reserve(mix.support_size());
  for (const Strategy& s : mix.support()) rows.push_back(table.row_of(s));
  Rational worst;
  for (std::size_t j = 0; j < table.col_count(); ++j) {
    Rational column;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (table.entry(rows[k], j)) column += mix.weights()[k];
    if (j == 0 || column < worst) worst = column;
  }
  return worst;
}

Rational security_level_col(const AdversaryMix& mix,
                            const PayoffTable& table) {
  std::vector<std::size_t> cols;
  cols.reserve(mix.support_size());
  for (const AdversaryState& s : mix.support())
    cols.push_back(table.col_of(s));
  Rational best;
  for (std::size_t i = 0; i < table.row_count(); ++i) {
    Rational row;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (table.entry(i, cols[k])) row += mix.weights()[k];
    if (i == 0 || row > best) best = row;
  }
  return best;
}

SaddleCheck verify_saddle_point(const MixedStrategy& row_mix,
                                const AdversaryMix& col_mix,
                                const PayoffTable& table) {
  SaddleCheck check;
  check.row_security = security_level_row(row_mix, table);
  check.col_security = security_level_col(col_mix, table);
  for (std::size_t i = 0; i < row_mix.support_size(); ++i) {
    std::size_t row = table.row_of(row_mix.support()[i]);
    for (std::size_t j = 0; j < col_mix.support_size(); ++j)
      if (table.entry(row, table.col_of(col_mix.support()[j])))
        check.pair_value += row_mix.weights()[i] * col_mix.weights()[j];
  }
  check.is_saddle = check.row_security == check.col_security &&
                    check.col_security == check.pair_value;
  return check;
}

namespace {

// Smallest index attaining the extreme of a score vector.
std::size_t arg_best(const std::vector<std::int64_t>& scores, bool maximize) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (maximize ? scores[i] > scores[best] : scores[i] < scores[best])
      best = i;
  }
  return best;
}

}  // namespace

FictitiousPlayResult fictitious_play(const PayoffTable& table,
                                     std::uint64_t max_iters,
                                     double tolerance,
                                     const FictitiousPlayObserver& observer) {
  if (max_iters < 1) throw ValidationError("fictitious play needs >= 1 iteration");
  if (!(tolerance > 0)) throw ValidationError("tolerance must be positive");

  const std::size_t rows = table.row_count();
  const std::size_t cols = table.col_count();

  std::vector<std::int64_t> row_plays(rows, 0), col_plays(cols, 0);
  // row_scores[i]: payoff of pure row i summed over the columns played so
  // far; col_scores[j]: payoff suffered at column j over rows played.
  std::vector<std::int64_t> row_scores(rows, 0), col_scores(cols, 0);

  Rational best_lower(0), best_upper(1);
  bool converged = false;
  std::uint64_t t = 0;

  while (t < max_iters) {
    // Best responses to the opponent's history (all ties at t == 0 pick
    // index 0). The adversary minimizes the player's win probability.
    std::size_t r = arg_best(row_scores, /*maximize=*/true);
    std::size_t c = arg_best(col_scores, /*maximize=*/false);
    ++t;
    ++row_plays[r];
    ++col_plays[c];
    for (std::size_t i = 0; i < rows; ++i) row_scores[i] += table.entry(i, c);
    for (std::size_t j = 0; j < cols; ++j) col_scores[j] += table.entry(r, j);

    // Instantaneous weak-duality bounds from the empirical mixes.
    std::int64_t signed_t = static_cast<std::int64_t>(t);
    Rational lower(*std::min_element(col_scores.begin(), col_scores.end()),
                   signed_t);
    Rational upper(*std::max_element(row_scores.begin(), row_scores.end()),
                   signed_t);
    if (lower > best_lower) best_lower = lower;
    if (upper < best_upper) best_upper = upper;
    if (observer) observer(t, lower, upper);
    if ((best_upper - best_lower).to_double() <= tolerance) {
      converged = true;
      break;
    }
  }

  std::vector<Strategy> row_support;
  std::vector<Rational> row_weights;
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_plays[i] == 0) continue;
    row_support.push_back(table.rows()[i]);
    row_weights.emplace_back(row_plays[i], static_cast<std::int64_t>(t));
  }
  std::vector<AdversaryState> col_support;
  std::vector<Rational> col_weights;
  for (std::size_t j = 0; j < cols; ++j) {
    if (col_plays[j] == 0) continue;
    col_support.push_back(table.cols()[j]);
    col_weights.emplace_back(col_plays[j], static_cast<std::int64_t>(t));
  }

  return FictitiousPlayResult{
      best_lower,
      best_upper,
      t,
      converged,
      MixedStrategy(std::move(row_support), std::move(row_weights)),
      AdversaryMix(std::move(col_support), std::move(col_weights))};
}

}  // namespace monty
