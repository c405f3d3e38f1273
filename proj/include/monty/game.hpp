#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monty/errors.hpp"

namespace monty {

// Door labels are 0..n-1.
using Door = int;

// Number of doors in play. At least three, or the "reveal everything but
// one alternative" step would leave the player without a real choice.
class GameSize {
 public:
  explicit GameSize(int doors);

  int doors() const { return n_; }

  // InvalidDoorError unless 0 <= d < doors().
  void require_door(Door d) const;

  friend bool operator==(const GameSize&, const GameSize&) = default;

 private:
  int n_;
};

// The player's second-stage move once a single alternative door is left:
// keep the original pick, or take the alternative. kMatch orders before
// kSwitch; the binary encoding of action maps relies on that.
enum class Action : std::uint8_t { kMatch = 0, kSwitch = 1 };

// A first pick x plus one planned action per door the host could leave
// closed. The plan has exactly n-1 entries, one for every door other
// than x.
class Strategy {
 public:
  Strategy(GameSize n, Door x, std::vector<Action> actions);

  // Decodes an (n-1)-bit word, Match=0 / Switch=1, the action for the
  // smallest other door in the most significant bit.
  static Strategy from_word(GameSize n, Door x, std::uint64_t word);
  static Strategy always_switching(GameSize n, Door x);
  static Strategy single_action(GameSize n, Door x, Action a);

  GameSize size() const { return n_; }
  Door chosen_door() const { return x_; }

  // The planned action when the host leaves door y closed. y must differ
  // from the chosen door.
  Action action_at(Door y) const;

  bool is_always_switching() const;
  bool is_single_action() const;

  std::uint64_t word() const;
  std::string map_string() const;  // the word as an (n-1)-char binary string
  std::string label() const;       // "x=<door>;map=<binary word>"

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  GameSize n_;
  Door x_;
  std::vector<Action> actions_;  // indexed by other doors in ascending order
};

// Everything about the environment that can affect a payoff: the winning
// door theta, and the door h the host leaves closed when the player's
// pick is theta itself. At any other pick the host's move is forced, so
// these two labels are a complete description. h == theta is
// unconstructible.
class AdversaryState {
 public:
  AdversaryState(GameSize n, Door theta, Door h);

  GameSize size() const { return n_; }
  Door theta() const { return theta_; }
  Door h() const { return h_; }

  std::string label() const;  // "theta=<t>,h=<h>"

  friend bool operator==(const AdversaryState&, const AdversaryState&) =
      default;

 private:
  GameSize n_;
  Door theta_;
  Door h_;
};

// Win-or-nothing score of the final guess: matching wins exactly when the
// pick is the winning door, switching wins exactly when it is not.
int payoff(GameSize n, Door theta, Door x, Action action);

// The door the host leaves closed: theta whenever the player's pick
// missed, the state's h when the pick is theta itself.
Door host_reveal_target(const AdversaryState& state, Door x);

// Full round: reveal, look up the planned action, score it.
int play(const Strategy& strategy, const AdversaryState& state);

}  // namespace monty
