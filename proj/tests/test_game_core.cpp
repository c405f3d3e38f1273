#include <vector>

#include "doctest.h"
#include "monty/game.hpp"

using namespace monty;

TEST_CASE("game size enforces the three-door minimum") {
  CHECK(GameSize(3).doors() == 3);
  CHECK(GameSize(100).doors() == 100);
  CHECK_THROWS_AS(GameSize(2), InvalidSizeError);
  CHECK_THROWS_AS(GameSize(0), InvalidSizeError);
  CHECK_THROWS_AS(GameSize(-5), InvalidSizeError);
  GameSize n(4);
  CHECK_NOTHROW(n.require_door(0));
  CHECK_NOTHROW(n.require_door(3));
  CHECK_THROWS_AS(n.require_door(4), InvalidDoorError);
  CHECK_THROWS_AS(n.require_door(-1), InvalidDoorError);
}

TEST_CASE("payoff is the match/switch truth table") {
  GameSize n(3);
  CHECK(payoff(n, 0, 0, Action::kMatch) == 1);
  CHECK(payoff(n, 0, 0, Action::kSwitch) == 0);
  CHECK(payoff(n, 1, 0, Action::kMatch) == 0);
  CHECK(payoff(n, 1, 0, Action::kSwitch) == 1);
  CHECK_THROWS_AS(payoff(n, 3, 0, Action::kMatch), InvalidDoorError);
  CHECK_THROWS_AS(payoff(n, 0, 3, Action::kMatch), InvalidDoorError);
}

TEST_CASE("the action word reads most significant bit first") {
  GameSize n(3);
  // Word 10 for x=0: door 1 (the smallest other door) holds the high bit.
  Strategy s = Strategy::from_word(n, 0, 0b10);
  CHECK(s.action_at(1) == Action::kSwitch);
  CHECK(s.action_at(2) == Action::kMatch);
  CHECK(s.word() == 0b10);
  CHECK(s.map_string() == "10");
  CHECK(s.label() == "x=0;map=10");

  Strategy t = Strategy::from_word(GameSize(4), 2, 0b011);
  CHECK(t.action_at(0) == Action::kMatch);
  CHECK(t.action_at(1) == Action::kSwitch);
  CHECK(t.action_at(3) == Action::kSwitch);
  CHECK(t.label() == "x=2;map=011");
}

TEST_CASE("strategy construction validates its pieces") {
  GameSize n(3);
  CHECK_THROWS_AS(Strategy(n, 3, {Action::kMatch, Action::kMatch}),
                  InvalidDoorError);
  CHECK_THROWS_AS(Strategy(n, 0, {Action::kMatch}), DimensionError);
  CHECK_THROWS_AS(Strategy::from_word(n, 0, 0b100), ValidationError);
  Strategy s(n, 0, {Action::kMatch, Action::kSwitch});
  CHECK_THROWS_AS(s.action_at(0), InvalidDoorError);
  CHECK_THROWS_AS(s.action_at(3), InvalidDoorError);
}

TEST_CASE("strategy classification helpers") {
  GameSize n(4);
  CHECK(Strategy::always_switching(n, 1).is_always_switching());
  CHECK(Strategy::always_switching(n, 1).is_single_action());
  CHECK(Strategy::single_action(n, 0, Action::kMatch).is_single_action());
  CHECK_FALSE(
      Strategy::single_action(n, 0, Action::kMatch).is_always_switching());
  CHECK_FALSE(Strategy::from_word(n, 0, 0b010).is_single_action());
  CHECK(Strategy::always_switching(n, 2).word() == 0b111);
}

TEST_CASE("adversary states exclude the diagonal") {
  GameSize n(3);
  AdversaryState s(n, 0, 2);
  CHECK(s.theta() == 0);
  CHECK(s.h() == 2);
  CHECK(s.label() == "theta=0,h=2");
  CHECK_THROWS_AS(AdversaryState(n, 1, 1), ValidationError);
  CHECK_THROWS_AS(AdversaryState(n, 3, 0), InvalidDoorError);
  CHECK_THROWS_AS(AdversaryState(n, 0, -1), InvalidDoorError);
}

TEST_CASE("the reveal target is forced off the diagonal") {
  GameSize n(4);
  AdversaryState state(n, 2, 3);
  CHECK(host_reveal_target(state, 0) == 2);
  CHECK(host_reveal_target(state, 1) == 2);
  CHECK(host_reveal_target(state, 2) == 3);
  CHECK_THROWS_AS(host_reveal_target(state, 4), InvalidDoorError);
}

TEST_CASE("play composes reveal, plan, and payoff") {
  GameSize n(3);
  Strategy stay = Strategy::single_action(n, 0, Action::kMatch);
  Strategy go = Strategy::always_switching(n, 0);
  AdversaryState win_here(n, 0, 1);
  AdversaryState win_there(n, 2, 0);
  CHECK(play(stay, win_here) == 1);
  CHECK(play(go, win_here) == 0);
  CHECK(play(stay, win_there) == 0);
  CHECK(play(go, win_there) == 1);
  CHECK_THROWS_AS(play(Strategy::always_switching(GameSize(4), 0), win_here),
                  DimensionError);
}

TEST_CASE("play ignores h whenever the pick missed") {
  for (int doors = 3; doors <= 5; ++doors) {
    GameSize n(doors);
    for (Door x = 0; x < doors; ++x)
      for (std::uint64_t word = 0; word < (1u << (doors - 1)); ++word) {
        Strategy s = Strategy::from_word(n, x, word);
        for (Door theta = 0; theta < doors; ++theta) {
          if (theta == x) continue;
          int first = -1;
          for (Door h = 0; h < doors; ++h) {
            if (h == theta) continue;
            int result = play(s, AdversaryState(n, theta, h));
            if (first < 0) first = result;
            CHECK(result == first);
          }
        }
      }
  }
}

TEST_CASE("single-action strategies never depend on the revealed door") {
  for (int doors = 3; doors <= 5; ++doors) {
    GameSize n(doors);
    for (Door x = 0; x < doors; ++x)
      for (Action a : {Action::kMatch, Action::kSwitch}) {
        Strategy s = Strategy::single_action(n, x, a);
        for (Door theta = 0; theta < doors; ++theta)
          for (Door h = 0; h < doors; ++h) {
            if (h == theta) continue;
            // Stay wins exactly on a hit; switch exactly on a miss.
            int expect = (a == Action::kMatch) == (theta == x) ? 1 : 0;
            CHECK(play(s, AdversaryState(n, theta, h)) == expect);
          }
      }
  }
}
