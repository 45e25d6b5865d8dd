#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dirgeo/geometry.hpp"

namespace dirgeo {

struct Segment {
  int a = 0;
  int b = 0;

  Segment() = default;
  /// Normalizes to a < b. Throws InvalidInput when the endpoints coincide.
  Segment(int first, int second);

  friend bool operator==(const Segment& s, const Segment& t) { return s.a == t.a && s.b == t.b; }
  friend bool operator!=(const Segment& s, const Segment& t) { return !(s == t); }
  friend bool operator<(const Segment& s, const Segment& t) {
    return s.a != t.a ? s.a < t.a : s.b < t.b;
  }
};

enum class ViolationReason { Convergent, Collinear };

struct Violation {
  int first_segment = 0;
  int second_segment = 0;
  ViolationReason reason = ViolationReason::Convergent;
};

struct CertificateReport {
  bool valid = false;
  std::vector<Violation> violations;  // sorted by (first, second)
  int family_size = 0;
  Int lower_bound_required;  // ceil(affine_dim * n / 48)
  bool meets_bound = false;
};

struct SegmentFamily {
  std::shared_ptr<const PointSet> base;
  std::vector<Segment> segments;
  std::optional<CertificateReport> verified;
};

/// True iff all four endpoints lie on one common line.
bool segments_collinear(const PointSet& P, const Segment& s, const Segment& t);

// True iff the four endpoints are distinct coplanar points forming a strictly
// convex quadrilateral with s and t as opposite edges. Equivalent test used
// here: the endpoints of each segment lie strictly on one side of the other
// segment's supporting line. Parallel non-collinear segments are always
// convergent; any degenerate input (shared endpoints, collinear triples,
// non-coplanar points) is not.
bool segments_convergent(const PointSet& P, const Segment& s, const Segment& t);

/// Segment between the two extreme points of P on the line. Throws
/// InvalidInput when fewer than 2 points of P are incident.
Segment longest_segment_on_line(const PointSet& P, const Line& line);

/// Exhaustive pairwise certificate: every convergent or collinear pair is
/// listed. The bound compares the family size against
/// ceil(affine_dim(P) * n / 48).
CertificateReport verify_family(const SegmentFamily& family);

}  // namespace dirgeo
