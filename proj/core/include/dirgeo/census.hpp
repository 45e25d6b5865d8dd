#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dirgeo/geometry.hpp"

namespace dirgeo {

// A norm given by the facet functionals of its unit ball {x : a_i.x <= 1}.
// The functional list must be closed under negation (central symmetry) and
// must span R^d (bounded ball). Every norm value is an exact rational:
// ||v|| = max_i a_i.v.
class PolytopalNorm {
 public:
  PolytopalNorm(int dim, std::vector<Vec> functionals);

  int dim() const { return dim_; }
  const std::vector<Vec>& functionals() const { return functionals_; }

  struct HomogFunctional {
    std::vector<Int> num;
    Int den;  // > 0
  };
  const std::vector<HomogFunctional>& homog_functionals() const { return homog_; }

 private:
  int dim_;
  std::vector<Vec> functionals_;
  std::vector<HomogFunctional> homog_;
};

/// Exact Minkowski functional value. Zero iff v == 0.
Rat norm_eval(const PolytopalNorm& norm, const Vec& v);

struct DirectionCensus {
  std::map<Direction, long long> pair_counts;
  long long distinct_count = 0;
  long long total_pairs = 0;
};

/// Pre: n >= 2. Counts the distinct canonical directions over all pairs.
DirectionCensus direction_census(const PointSet& P);

struct DistanceCensus {
  std::map<Rat, long long> pair_counts;
  long long distinct_count = 0;
  long long total_pairs = 0;
};

/// Pre: n >= 2, dimensions match. Counts distinct norm values over all pairs.
DistanceCensus distance_census(const PointSet& P, const PolytopalNorm& norm);

struct DirectionBoundCheck {
  long long distinct_count = 0;
  Int required;        // ceil(affine_dim * n / 48)
  bool holds = false;  // a theorem: must hold on every valid input
};

/// Pre: affine_dim >= 2.
DirectionBoundCheck check_direction_bound(const PointSet& P);

struct DistanceBoundCheck {
  long long distinct_count = 0;
  Rat threshold;       // (affine_dim / 48 - mu) * n
  bool holds = false;  // exploratory: a failure is a finding, not a bug
};

/// Pre: affine_dim >= 2, mu > 0, dimensions match.
DistanceBoundCheck check_distance_bound(const PointSet& P, const PolytopalNorm& norm,
                                        const Rat& mu);

/// k seeded +-functional pairs plus scaled axis pairs +-e_i/rho, which keep
/// the unit ball bounded. Deterministic for a given (d, k, seed).
PolytopalNorm random_polytopal_norm(int d, int k, std::uint64_t seed);

PolytopalNorm linf_norm(int d);
PolytopalNorm l1_norm(int d);

}  // namespace dirgeo
