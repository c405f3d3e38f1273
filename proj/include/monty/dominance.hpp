#pragma once

#include <optional>
#include <vector>

#include "monty/strategy_space.hpp"

namespace monty {

// Pairs a strategy with an always-switching strategy that scores at least
// as well in every adversary state. A strategy that is itself
// always-switching certifies itself and carries no witness door.
struct DominanceCertificate {
  Strategy dominated;
  Strategy dominator;                // always-switching by construction
  std::optional<Door> witness_door;  // the Match door the dominator picks

  bool is_self() const { return !witness_door.has_value(); }
};

// Builds the dominating strategy for one given strategy: the smallest
// door the strategy would Match on becomes the dominator's pick.
DominanceCertificate construct_dominator(const Strategy& strategy);

// True when s1's payoff row is >= s2's in every column of the table.
bool weakly_dominates(const Strategy& s1, const Strategy& s2,
                      const PayoffTable& table);

// One verified certificate per enumerated strategy. A certificate that
// fails its own check is a TheoremViolationError carrying the
// counterexample state; it can only mean a bug in this program.
std::vector<DominanceCertificate> verify_dominance_theorem(
    const PayoffTable& table);
std::vector<DominanceCertificate> verify_dominance_theorem(
    GameSize n, int cap = kDefaultEnumerationCap);

enum class Strictness {
  kNotApplicable,   // self-certificate, nothing to compare
  kStrictSomewhere, // dominator wins a state the dominated loses
  kEqualEverywhere, // rows identical
};

// Per-certificate strictness, in certificate order.
std::vector<Strictness> strictness_report(
    const std::vector<DominanceCertificate>& certificates,
    const PayoffTable& table);

}  // namespace monty
