#include "dirgeo/census.hpp"

#include <algorithm>

#include "dirgeo/errors.hpp"
#include "dirgeo/rng.hpp"

namespace dirgeo {

PolytopalNorm::PolytopalNorm(int dim, std::vector<Vec> functionals)
    : dim_(dim), functionals_(std::move(functionals)) {
  if (dim_ < 1) throw InvalidInput("PolytopalNorm: dimension must be >= 1");
  if (functionals_.empty()) throw InvalidInput("PolytopalNorm: no functionals");
  for (const Vec& f : functionals_) {
    if (static_cast<int>(f.size()) != dim_) {
      throw InvalidInput("PolytopalNorm: functional length mismatch");
    }
    if (is_zero(f)) throw InvalidInput("PolytopalNorm: zero functional");
  }
  // Central symmetry: the list is closed under negation as a multiset.
  std::map<Vec, int> balance;
  for (const Vec& f : functionals_) {
    ++balance[f];
    --balance[scale(Rat(-1), f)];
  }
  for (const auto& [f, count] : balance) {
    if (count != 0) throw InvalidInput("PolytopalNorm: functionals not centrally symmetric");
  }
  // For a negation-closed family, the ball is bounded iff the functionals
  // span R^d.
  if (matrix_rank(functionals_) != dim_) {
    throw InvalidInput("PolytopalNorm: unit ball is unbounded (functionals do not span)");
  }
  homog_.reserve(functionals_.size());
  for (const Vec& f : functionals_) {
    HomogFunctional h;
    h.den = 1;
    for (const Rat& c : f) {
      Int l;
      mpz_lcm(l.get_mpz_t(), h.den.get_mpz_t(), c.get_den().get_mpz_t());
      h.den = l;
    }
    h.num.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      h.num[i] = f[i].get_num() * (h.den / f[i].get_den());
    }
    homog_.push_back(std::move(h));
  }
}

Rat norm_eval(const PolytopalNorm& norm, const Vec& v) {
  if (static_cast<int>(v.size()) != norm.dim()) throw InvalidInput("norm_eval: dimension mismatch");
  // Integer homogenization: compare dot products p_i/q_i via cross
  // multiplication (all q_i > 0), building one canonical Rat at the end.
  Int vden(1);
  for (const Rat& c : v) {
    Int l;
    mpz_lcm(l.get_mpz_t(), vden.get_mpz_t(), c.get_den().get_mpz_t());
    vden = l;
  }
  std::vector<Int> vnum(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) vnum[i] = v[i].get_num() * (vden / v[i].get_den());

  // Symmetric functionals make the maximum nonnegative, so 0/1 is a valid
  // starting value and also the answer for v == 0.
  Int best_num(0), best_den(1);
  for (const auto& f : norm.homog_functionals()) {
    Int acc(0);
    for (std::size_t i = 0; i < f.num.size(); ++i) acc += f.num[i] * vnum[i];
    // acc / (f.den * vden) > best_num / best_den ?
    if (acc * best_den > best_num * f.den * vden) {
      best_num = acc;
      best_den = f.den * vden;
    }
  }
  return make_rat(best_num, best_den);
}

DirectionCensus direction_census(const PointSet& P) {
  if (P.size() < 2) throw InvalidInput("direction_census: need at least 2 points");
  std::vector<HomogPoint> homog;
  homog.reserve(static_cast<std::size_t>(P.size()));
  for (int i = 0; i < P.size(); ++i) homog.push_back(homogenize(P[i]));
  DirectionCensus out;
  for (int i = 0; i < P.size(); ++i) {
    for (int j = i + 1; j < P.size(); ++j) {
      ++out.pair_counts[direction_between(homog[static_cast<std::size_t>(i)],
                                          homog[static_cast<std::size_t>(j)])];
      ++out.total_pairs;
    }
  }
  out.distinct_count = static_cast<long long>(out.pair_counts.size());
  return out;
}

DistanceCensus distance_census(const PointSet& P, const PolytopalNorm& norm) {
  if (P.size() < 2) throw InvalidInput("distance_census: need at least 2 points");
  if (norm.dim() != P.ambient_dim()) throw InvalidInput("distance_census: dimension mismatch");
  DistanceCensus out;
  for (int i = 0; i < P.size(); ++i) {
    for (int j = i + 1; j < P.size(); ++j) {
      ++out.pair_counts[norm_eval(norm, sub(P[j].coords, P[i].coords))];
      ++out.total_pairs;
    }
  }
  out.distinct_count = static_cast<long long>(out.pair_counts.size());
  return out;
}

DirectionBoundCheck check_direction_bound(const PointSet& P) {
  if (P.affine_dim() < 2) throw InvalidInput("check_direction_bound: affine dimension < 2");
  const DirectionCensus census = direction_census(P);
  DirectionBoundCheck out;
  out.distinct_count = census.distinct_count;
  out.required = rat_ceil(make_rat(Int(P.affine_dim()) * P.size(), Int(48)));
  out.holds = Int(out.distinct_count) >= out.required;
  return out;
}

DistanceBoundCheck check_distance_bound(const PointSet& P, const PolytopalNorm& norm,
                                        const Rat& mu) {
  if (P.affine_dim() < 2) throw InvalidInput("check_distance_bound: affine dimension < 2");
  if (sign(mu) <= 0) throw InvalidInput("check_distance_bound: mu must be positive");
  const DistanceCensus census = distance_census(P, norm);
  DistanceBoundCheck out;
  out.distinct_count = census.distinct_count;
  out.threshold = (Rat(P.affine_dim()) / 48 - mu) * Rat(P.size());
  out.holds = Rat(static_cast<long>(out.distinct_count)) >= out.threshold;
  return out;
}

PolytopalNorm random_polytopal_norm(int d, int k, std::uint64_t seed) {
  if (d < 1 || k < 0) throw InvalidInput("random_polytopal_norm: bad parameters");
  SeededRng rng(mix_seed(seed, 0x6E6F726DULL));
  std::vector<Vec> functionals;
  functionals.reserve(2 * static_cast<std::size_t>(k + d));
  for (int i = 0; i < k; ++i) {
    Vec f = rng.nonzero_vector(d, 8, 6);
    functionals.push_back(scale(Rat(-1), f));
    functionals.push_back(std::move(f));
  }
  const Rat rho = rng.positive_rational(6, 4);
  for (int i = 0; i < d; ++i) {
    Vec axis(d, Rat(0));
    axis[static_cast<std::size_t>(i)] = Rat(1) / rho;
    functionals.push_back(scale(Rat(-1), axis));
    functionals.push_back(std::move(axis));
  }
  return PolytopalNorm(d, std::move(functionals));
}

namespace {

std::vector<Vec> axis_functionals(int d, const Rat& value) {
  std::vector<Vec> out;
  for (int i = 0; i < d; ++i) {
    Vec axis(d, Rat(0));
    axis[static_cast<std::size_t>(i)] = value;
    out.push_back(scale(Rat(-1), axis));
    out.push_back(std::move(axis));
  }
  return out;
}

}  // namespace

PolytopalNorm linf_norm(int d) { return PolytopalNorm(d, axis_functionals(d, Rat(1))); }

PolytopalNorm l1_norm(int d) {
  // All sign patterns of (+-1, ..., +-1).
  std::vector<Vec> functionals;
  const long patterns = 1L << d;
  for (long mask = 0; mask < patterns; ++mask) {
    Vec f(d);
    for (int i = 0; i < d; ++i) {
      f[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? Rat(-1) : Rat(1);
    }
    functionals.push_back(std::move(f));
  }
  return PolytopalNorm(d, std::move(functionals));
}

}  // namespace dirgeo
