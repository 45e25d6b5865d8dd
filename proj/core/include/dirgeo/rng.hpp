#pragma once

#include <cstdint>
#include <random>

#include "dirgeo/rational.hpp"

namespace dirgeo {

/// SplitMix64 step; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// Deterministic source for all randomized constructions. std::mt19937_64 has
// a standardized output sequence, and the reductions below avoid the
// implementation-defined std::*_distribution classes, so identical seeds give
// identical values on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform-ish integer in [lo, hi] by modulo reduction.
  long uniform(long lo, long hi);

  /// Rational with numerator in [-max_num, max_num], denominator in [1, max_den].
  Rat rational(long max_num, long max_den);
  Rat nonzero_rational(long max_num, long max_den);
  Rat positive_rational(long max_num, long max_den);

  Vec vector(int dim, long max_num, long max_den);
  Vec nonzero_vector(int dim, long max_num, long max_den);

 private:
  std::mt19937_64 gen_;
};

}  // namespace dirgeo
