#include "monty/game.hpp"

#include <algorithm>

namespace monty {

GameSize::GameSize(int doors) : n_(doors) {
  if (doors < 3)
    throw InvalidSizeError("game size must be at least 3 doors, got " +
                           std::to_string(doors));
}

void GameSize::require_door(Door d) const {
  if (d < 0 || d >= n_)
    throw InvalidDoorError("door " + std::to_string(d) +
                           " out of range for " + std::to_string(n_) +
                           " doors");
}

Strategy::Strategy(GameSize n, Door x, std::vector<Action> actions)
    : n_(n), x_(x), actions_(std::move(actions)) {
  n_.require_door(x_);
  if (actions_.size() != static_cast<std::size_t>(n_.doors() - 1))
    throw DimensionError("strategy needs one action per other door (" +
                         std::to_string(n_.doors() - 1) + "), got " +
                         std::to_string(actions_.size()));
}

Strategy Strategy::from_word(GameSize n, Door x, std::uint64_t word) {
  int bits = n.doors() - 1;
  if (bits < 64 && (word >> bits) != 0)
    throw ValidationError("action word " + std::to_string(word) +
                          " does not fit in " + std::to_string(bits) +
                          " bits");
  std::vector<Action> actions(bits);
  for (int i = 0; i < bits; ++i)
    actions[i] = (word >> (bits - 1 - i)) & 1 ? Action::kSwitch
                                              : Action::kMatch;
  return Strategy(n, x, std::move(actions));
}

Strategy Strategy::always_switching(GameSize n, Door x) {
  return single_action(n, x, Action::kSwitch);
}

Strategy Strategy::single_action(GameSize n, Door x, Action a) {
  return Strategy(n, x, std::vector<Action>(n.doors() - 1, a));
}

Action Strategy::action_at(Door y) const {
  n_.require_door(y);
  if (y == x_)
    throw InvalidDoorError("strategy has no action for its own pick, door " +
                           std::to_string(y));
  return actions_[y < x_ ? y : y - 1];
}

bool Strategy::is_always_switching() const {
  return std::ranges::all_of(actions_,
                             [](Action a) { return a == Action::kSwitch; });
}

bool Strategy::is_single_action() const {
  return std::ranges::all_of(actions_,
                             [&](Action a) { return a == actions_.front(); });
}

std::uint64_t Strategy::word() const {
  std::uint64_t w = 0;
  for (Action a : actions_) w = (w << 1) | (a == Action::kSwitch ? 1 : 0);
  return w;
}

std::string Strategy::map_string() const {
  std::string s;
  s.reserve(actions_.size());
  for (Action a : actions_) s += a == Action::kSwitch ? '1' : '0';
  return s;
}

std::string Strategy::label() const {
  return "x=" + std::to_string(x_) + ";map=" + map_string();
}

AdversaryState::AdversaryState(GameSize n, Door theta, Door h)
    : n_(n), theta_(theta), h_(h) {
  n_.require_door(theta_);
  n_.require_door(h_);
  if (h_ == theta_)
    throw ValidationError(
        "inadmissible adversary state: host cannot leave the winning door " +
        std::to_string(theta_) + " closed against itself");
}

std::string AdversaryState::label() const {
  return "theta=" + std::to_string(theta_) + ",h=" + std::to_string(h_);
}

int payoff(GameSize n, Door theta, Door x, Action action) {
  n.require_door(theta);
  n.require_door(x);
  bool hit = x == theta;
  return (action == Action::kMatch) == hit ? 1 : 0;
}

Door host_reveal_target(const AdversaryState& state, Door x) {
  state.size().require_door(x);
  return x == state.theta() ? state.h() : state.theta();
}

int play(const Strategy& strategy, const AdversaryState& state) {
  if (strategy.size() != state.size())
    throw DimensionError("strategy is for " +
                         std::to_string(strategy.size().doors()) +
                         " doors, state for " +
                         std::to_string(state.size().doors()));
  Door target = host_reveal_target(state, strategy.chosen_door());
  return payoff(strategy.size(), state.theta(), strategy.chosen_door(),
                strategy.action_at(target));
}

}  // namespace monty
