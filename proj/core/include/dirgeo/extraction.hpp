#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dirgeo/segments.hpp"

namespace dirgeo {

/// Normal of the attempt-th seeded hyperplane candidate (bounded-height
/// rationals). Exposed so the retry behaviour is testable.
Vec hyperplane_candidate_normal(int dim, std::uint64_t seed, int attempt);

/// Exact genericity: the projection center is off H and no point of
/// P minus {x} has its ray through x parallel to H.
bool hyperplane_is_generic(const PointSet& P, int x_index, const Hyperplane& H);

/// First generic candidate from the seeded sequence, anchored at x + e1.
/// Throws GenericityExhausted after 64 attempts.
Hyperplane choose_generic_hyperplane(const PointSet& P, int x_index, std::uint64_t seed,
                                     int* attempts_used = nullptr);

/// Planar family: the star of the Dirac point (one longest segment per line
/// through it) extended greedily over the remaining lines' longest segments,
/// in descending incident-point count (ties by canonical line order). The
/// result carries a freshly verified certificate and has at least star-size
/// many segments. Pre: affine_dim == 2. The seed is accepted for interface
/// uniformity; the construction is fully deterministic.
SegmentFamily planar_base(std::shared_ptr<const PointSet> P2, std::uint64_t seed);

struct ExtractionLevel {
  int effective_dim = 0;        // affine dimension at this level
  int point_count = 0;
  int chosen_point = 0;         // Dirac point index
  int star_size = 0;
  int hyperplane_attempts = 0;
  int s1_size = 0;              // one longest segment per line through the chosen point
  int s2_size = 0;              // recursive family after longest-replacement
  int lifted_size = 0;

  // Verification detail, not part of the serialized trace.
  std::optional<Hyperplane> plane;
  std::shared_ptr<const PointSet> level_points;
  std::shared_ptr<const PointSet> image_points;
  std::vector<std::vector<int>> fibers;    // image index -> level point indices
  std::vector<Segment> s1_segments;        // on level_points
  std::vector<Segment> s2_segments;        // on image_points
  std::vector<Segment> lifted_segments;    // on level_points
};

struct ExtractionTrace {
  std::vector<ExtractionLevel> levels;  // outermost first; empty for planar input
  int base_family_size = 0;
  int final_size = 0;
  Int required_bound;  // ceil(affine_dim * n / 48)
};

struct ExtractionResult {
  SegmentFamily family;
  ExtractionTrace trace;
};

/// The recursive construction: star at the Dirac point, central projection
/// through it onto a generic hyperplane, recursion on the distinct images in
/// the plane's coordinates, longest-replacement of the recursive segments,
/// and a lift picking the smallest preimage index per endpoint. The returned
/// family carries a full pairwise certificate. Pre: affine_dim >= 2.
ExtractionResult extract_family(std::shared_ptr<const PointSet> P, std::uint64_t seed);

}  // namespace dirgeo
