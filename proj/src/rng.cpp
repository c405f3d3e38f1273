#include "monty/rng.hpp"

#include <numeric>
#include <stdexcept>

#include "monty/errors.hpp"

namespace monty {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix(state_);
}

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  return mix(seed + (index + 1) * kGamma);
}

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& word : s_) word = sm.next();
  // The all-zero state is the one fixed point; unreachable in practice
  // but cheap to rule out.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGamma;
}

std::uint64_t Xoshiro256StarStar::next() {
  std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

CategoricalSampler::CategoricalSampler(std::span<const Rational> weights) {
  if (weights.empty())
    throw ValidationError("cannot sample from an empty distribution");
  std::uint64_t den = 1;
  for (const Rational& w : weights) {
    if (w < Rational(0))
      throw ValidationError("negative sampling weight " + w.str());
    std::uint64_t wd = static_cast<std::uint64_t>(w.den());
    std::uint64_t g = std::gcd(den, wd);
    unsigned __int128 lcm = (unsigned __int128)(den / g) * wd;
    if (lcm > (unsigned __int128)INT64_MAX)
      throw std::overflow_error(
          "sampling weights have no common denominator below 2^63");
    den = static_cast<std::uint64_t>(lcm);
  }
  cumulative_.reserve(weights.size());
  std::uint64_t running = 0;
  for (const Rational& w : weights) {
    running += static_cast<std::uint64_t>(w.num()) *
               (den / static_cast<std::uint64_t>(w.den()));
    cumulative_.push_back(running);
  }
  if (running != den)
    throw ValidationError("sampling weights sum to " +
                          Rational(static_cast<std::int64_t>(running),
                                   static_cast<std::int64_t>(den))
                              .str() +
                          ", expected 1");
  den_ = den;
  // First value past the largest multiple of den_ that fits in 64 bits.
  // (0 - den_) % den_ is 2^64 mod den_; when that is zero every draw is
  // accepted and reject_from_ stays zero.
  reject_from_ = 0 - (0 - den_) % den_;
}

std::size_t CategoricalSampler::sample(Xoshiro256StarStar& gen) const {
  std::uint64_t draw;
  do {
    draw = gen.next();
  } while (reject_from_ != 0 && draw >= reject_from_);
  std::uint64_t r = draw % den_;
  std::size_t index = 0;
  while (r >= cumulative_[index]) ++index;
  return index;
}

}  // namespace monty
