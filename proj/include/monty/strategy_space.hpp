#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monty/game.hpp"

namespace monty {

// Largest door count the exhaustive machinery will enumerate by default:
// 16 doors is 524,288 strategies, comfortably within desk-scale runs.
inline constexpr int kDefaultEnumerationCap = 16;

std::uint64_t strategy_count(GameSize n);        // n * 2^(n-1)
std::uint64_t adversary_state_count(GameSize n); // n * (n-1)

// All pure strategies, ordered by chosen door, then by action word read as
// an integer. The all-switching word is the last one for each door.
std::vector<Strategy> enumerate_strategies(GameSize n);

// All admissible (theta, h) pairs, ordered by theta, then h.
std::vector<AdversaryState> enumerate_adversary_states(GameSize n);

// Positions in the canonical enumerations, computable without a scan.
std::size_t strategy_index(const Strategy& s);
std::size_t adversary_state_index(const AdversaryState& s);

// Dense 0/1 matrix of play() over every (strategy, state) pair, rows and
// columns in canonical order. Entries are packed 64 per word; at the
// default cap the table is 16 MiB where bytes would be eight times that.
class PayoffTable {
 public:
  static PayoffTable build(GameSize n, int cap = kDefaultEnumerationCap);

  GameSize size() const { return n_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  const std::vector<Strategy>& rows() const { return rows_; }
  const std::vector<AdversaryState>& cols() const { return cols_; }

  int entry(std::size_t row, std::size_t col) const;
  std::uint64_t row_sum(std::size_t row) const;

  // True when row r1 is >= row r2 in every column.
  bool row_covers(std::size_t r1, std::size_t r2) const;

  // Canonical positions, with a LookupError when the argument was built
  // for a different door count.
  std::size_t row_of(const Strategy& s) const;
  std::size_t col_of(const AdversaryState& s) const;

 private:
  explicit PayoffTable(GameSize n);

  GameSize n_;
  std::vector<Strategy> rows_;
  std::vector<AdversaryState> cols_;
  std::size_t stride_ = 0;  // words per row
  std::vector<std::uint64_t> bits_;
};

}  // namespace monty
