#include "dirgeo/rng.hpp"

#include "dirgeo/errors.hpp"

namespace dirgeo {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long SeededRng::uniform(long lo, long hi) {
  if (lo > hi) throw InvalidInput("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rat SeededRng::rational(long max_num, long max_den) {
  const long n = uniform(-max_num, max_num);
  const long d = uniform(1, max_den);
  return make_rat(Int(n), Int(d));
}

Rat SeededRng::nonzero_rational(long max_num, long max_den) {
  for (;;) {
    Rat r = rational(max_num, max_den);
    if (sign(r) != 0) return r;
  }
}

Rat SeededRng::positive_rational(long max_num, long max_den) {
  const long n = uniform(1, max_num);
  const long d = uniform(1, max_den);
  return make_rat(Int(n), Int(d));
}

Vec SeededRng::vector(int dim, long max_num, long max_den) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rational(max_num, max_den);
  return v;
}

Vec SeededRng::nonzero_vector(int dim, long max_num, long max_den) {
  for (;;) {
    Vec v = vector(dim, max_num, max_den);
    if (!is_zero(v)) return v;
  }
}

}  // namespace dirgeo
