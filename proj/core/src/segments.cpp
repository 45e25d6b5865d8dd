#include "dirgeo/segments.hpp"

#include <array>

#include "dirgeo/errors.hpp"

namespace dirgeo {

Segment::Segment(int first, int second) : a(first), b(second) {
  if (a == b) throw InvalidInput("Segment: identical endpoints");
  if (a > b) std::swap(a, b);
}

bool segments_collinear(const PointSet& P, const Segment& s, const Segment& t) {
  return line_through(P[s.a], P[s.b]) == line_through(P[t.a], P[t.b]);
}

namespace {

// Strict same-side test in the plane: c and d on one side of line ab.
bool strictly_same_side(const HomogPoint& a, const HomogPoint& b, const HomogPoint& c,
                        const HomogPoint& d) {
  const int oc = orientation(a, b, c);
  const int od = orientation(a, b, d);
  return oc != 0 && oc == od;
}

bool convergent_in_plane(const HomogPoint& a, const HomogPoint& b, const HomogPoint& c,
                         const HomogPoint& d) {
  return strictly_same_side(a, b, c, d) && strictly_same_side(c, d, a, b);
}

HomogPoint homog2(const Rat& x, const Rat& y) {
  Int den;
  mpz_lcm(den.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
  HomogPoint h;
  h.num = {x.get_num() * (den / x.get_den()), y.get_num() * (den / y.get_den())};
  h.den = den;
  return h;
}

}  // namespace

bool segments_convergent(const PointSet& P, const Segment& s, const Segment& t) {
  const Point& a = P[s.a];
  const Point& b = P[s.b];
  const Point& c = P[t.a];
  const Point& d = P[t.b];
  if (a == c || a == d || b == c || b == d) return false;

  const Direction ds = direction_between(a, b);
  const Direction dt = direction_between(c, d);
  if (ds == dt) {
    // Parallel: convergent exactly when the supporting lines differ.
    return line_through(a, b) != line_through(c, d);
  }

  if (P.ambient_dim() == 2) {
    return convergent_in_plane(homogenize(a), homogenize(b), homogenize(c), homogenize(d));
  }

  // General ambient dimension: exact coplanarity, then orientation tests in
  // an exact basis of the spanned plane.
  const Vec u = sub(b.coords, a.coords);
  const Vec v = sub(c.coords, a.coords);
  const Vec w = sub(d.coords, a.coords);
  if (matrix_rank({u, v, w}) != 2) return false;
  const Vec& second = matrix_rank({u, v}) == 2 ? v : w;
  const std::vector<Vec> basis = {u, second};

  std::array<HomogPoint, 4> plane_pts;
  const std::array<const Point*, 4> pts = {&a, &b, &c, &d};
  for (std::size_t i = 0; i < 4; ++i) {
    auto coords = coordinates_in_basis(basis, sub(pts[i]->coords, a.coords));
    if (!coords) return false;  // unreachable given the rank check
    plane_pts[i] = homog2((*coords)[0], (*coords)[1]);
  }
  return convergent_in_plane(plane_pts[0], plane_pts[1], plane_pts[2], plane_pts[3]);
}

Segment longest_segment_on_line(const PointSet& P, const Line& line) {
  int lo = -1;
  int hi = -1;
  Rat lo_t, hi_t;
  for (int i = 0; i < P.size(); ++i) {
    if (!point_on_line(line, P[i])) continue;
    const Rat t = line_parameter(line, P[i]);
    if (lo < 0 || t < lo_t) {
      lo = i;
      lo_t = t;
    }
    if (hi < 0 || t > hi_t) {
      hi = i;
      hi_t = t;
    }
  }
  if (lo < 0 || lo == hi) throw InvalidInput("longest_segment_on_line: fewer than 2 incident points");
  return Segment(lo, hi);
}

CertificateReport verify_family(const SegmentFamily& family) {
  if (!family.base) throw InvalidInput("verify_family: missing base point set");
  const PointSet& P = *family.base;
  for (const Segment& s : family.segments) {
    if (s.a < 0 || s.b >= P.size()) throw InvalidInput("verify_family: dangling endpoint index");
  }

  CertificateReport report;
  report.family_size = static_cast<int>(family.segments.size());
  const int k = report.family_size;

  std::vector<Line> lines;
  lines.reserve(static_cast<std::size_t>(k));
  for (const Segment& s : family.segments) lines.push_back(line_through(P[s.a], P[s.b]));

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (lines[static_cast<std::size_t>(i)] == lines[static_cast<std::size_t>(j)]) {
        report.violations.push_back({i, j, ViolationReason::Collinear});
      } else if (segments_convergent(P, family.segments[static_cast<std::size_t>(i)],
                                     family.segments[static_cast<std::size_t>(j)])) {
        report.violations.push_back({i, j, ViolationReason::Convergent});
      }
    }
  }
  report.valid = report.violations.empty();
  report.lower_bound_required = rat_ceil(make_rat(Int(P.affine_dim()) * P.size(), Int(48)));
  report.meets_bound = Int(report.family_size) >= report.lower_bound_required;
  return report;
}

}  // namespace dirgeo
