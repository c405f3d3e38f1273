#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monty/rational.hpp"

namespace monty {

// splitmix64: Steele, Lea, and Flood's 64-bit mixer. One output per step;
// the k-th output of a stream is computable directly, which is what lets
// simulation chunks seed themselves independently.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// Output number `index` (0-based) of the splitmix64 stream started at
// `seed`, in constant time.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

// xoshiro256**: Blackman and Vigna's general-purpose 64-bit generator.
// State is expanded from a 64-bit seed with splitmix64, the seeding the
// authors recommend.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed);
  std::uint64_t next();

 private:
  std::uint64_t s_[4];
};

// Draws indices from a finite distribution given in exact form. The
// weights are brought to a common denominator D, a uniform integer in
// [0, D) is produced by rejecting 64-bit draws past the last multiple of
// D, and the index is read off the cumulative numerators. Every category
// is hit with exactly its stated probability; no floating point anywhere.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(std::span<const Rational> weights);

  std::size_t sample(Xoshiro256StarStar& gen) const;

  std::uint64_t common_denominator() const { return den_; }

 private:
  std::uint64_t den_ = 1;
  std::uint64_t reject_from_ = 0;  // zero means every draw is accepted
  std::vector<std::uint64_t> cumulative_;
};

}  // namespace monty
