#include "monty/strategy_space.hpp"

#include <bit>

namespace monty {

namespace {

// Beyond this, counts no longer fit the arithmetic below; nobody
// enumerates half a quintillion strategies anyway.
constexpr int kHardLimit = 48;

void require_enumerable(GameSize n) {
  if (n.doors() > kHardLimit)
    throw CapacityError("enumeration impossible beyond " +
                        std::to_string(kHardLimit) + " doors, got " +
                        std::to_string(n.doors()));
}

}  // namespace

std::uint64_t strategy_count(GameSize n) {
  require_enumerable(n);
  return std::uint64_t(n.doors()) << (n.doors() - 1);
}

std::uint64_t adversary_state_count(GameSize n) {
  return std::uint64_t(n.doors()) * (n.doors() - 1);
}

std::vector<Strategy> enumerate_strategies(GameSize n) {
  require_enumerable(n);
  std::vector<Strategy> out;
  out.reserve(strategy_count(n));
  std::uint64_t words = std::uint64_t(1) << (n.doors() - 1);
  for (Door x = 0; x < n.doors(); ++x)
    for (std::uint64_t w = 0; w < words; ++w)
      out.push_back(Strategy::from_word(n, x, w));
  return out;
}

std::vector<AdversaryState> enumerate_adversary_states(GameSize n) {
  std::vector<AdversaryState> out;
  out.reserve(adversary_state_count(n));
  for (Door theta = 0; theta < n.doors(); ++theta)
    for (Door h = 0; h < n.doors(); ++h)
      if (h != theta) out.emplace_back(n, theta, h);
  return out;
}

std::size_t strategy_index(const Strategy& s) {
  int bits = s.size().doors() - 1;
  return (std::size_t(s.chosen_door()) << bits) + s.word();
}

std::size_t adversary_state_index(const AdversaryState& s) {
  int n = s.size().doors();
  Door h = s.h();
  return std::size_t(s.theta()) * (n - 1) + (h < s.theta() ? h : h - 1);
}

PayoffTable::PayoffTable(GameSize n) : n_(n) {}

PayoffTable PayoffTable::build(GameSize n, int cap) {
  if (n.doors() > cap)
    throw CapacityError("payoff table capped at " + std::to_string(cap) +
                        " doors, got " + std::to_string(n.doors()));
  PayoffTable table(n);
  table.rows_ = enumerate_strategies(n);
  table.cols_ = enumerate_adversary_states(n);
  table.stride_ = (table.cols_.size() + 63) / 64;
  table.bits_.assign(table.rows_.size() * table.stride_, 0);
  for (std::size_t i = 0; i < table.rows_.size(); ++i) {
    std::uint64_t* row = table.bits_.data() + i * table.stride_;
    for (std::size_t j = 0; j < table.cols_.size(); ++j)
      if (play(table.rows_[i], table.cols_[j]))
        row[j / 64] |= std::uint64_t(1) << (j % 64);
  }
  return table;
}

int PayoffTable::entry(std::size_t row, std::size_t col) const {
  return (bits_[row * stride_ + col / 64] >> (col % 64)) & 1;
}

std::uint64_t PayoffTable::row_sum(std::size_t row) const {
  std::uint64_t sum = 0;
  for (std::size_t w = 0; w < stride_; ++w)
    sum += std::popcount(bits_[row * stride_ + w]);
  return sum;
}

bool PayoffTable::row_covers(std::size_t r1, std::size_t r2) const {
  const std::uint64_t* a = bits_.data() + r1 * stride_;
  const std::uint64_t* b = bits_.data() + r2 * stride_;
  for (std::size_t w = 0; w < stride_; ++w)
    if (b[w] & ~a[w]) return false;
  return true;
}

std::size_t PayoffTable::row_of(const Strategy& s) const {
  if (s.size() != n_)
    throw LookupError("strategy " + s.label() + " is not in a table for " +
                      std::to_string(n_.doors()) + " doors");
  return strategy_index(s);
}

std::size_t PayoffTable::col_of(const AdversaryState& s) const {
  if (s.size() != n_)
    throw LookupError("state " + s.label() + " is not in a table for " +
                      std::to_string(n_.doors()) + " doors");
  return adversary_state_index(s);
}

}  // namespace monty
