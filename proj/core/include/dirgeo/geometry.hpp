#pragma once

#include <compare>
#include <vector>

#include "dirgeo/linalg.hpp"
#include "dirgeo/rational.hpp"

namespace dirgeo {

struct Point {
  Vec coords;

  Point() = default;
  explicit Point(Vec c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  const Rat& operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};

// Canonical representative of an unoriented parallel class: primitive integer
// vector (gcd 1) whose first nonzero entry is positive. Two rational vectors
// are parallel iff their canonical directions compare equal.
struct Direction {
  std::vector<Int> coords;

  friend bool operator==(const Direction& a, const Direction& b) { return a.coords == b.coords; }
  friend bool operator!=(const Direction& a, const Direction& b) { return !(a == b); }
  friend bool operator<(const Direction& a, const Direction& b);
};

// Canonical anchored line: the anchor is the unique point of the line whose
// coordinate at the direction's pivot index (first nonzero entry) is zero.
struct Line {
  Direction direction;
  Point anchor;

  friend bool operator==(const Line& a, const Line& b) {
    return a.direction == b.direction && a.anchor == b.anchor;
  }
  friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }
  friend bool operator<(const Line& a, const Line& b) {
    if (a.direction != b.direction) return a.direction < b.direction;
    return a.anchor < b.anchor;
  }
};

/// Integer homogenization (num / den with den > 0) of a rational point.
/// Useful for sign-only computations that want to avoid mpq canonicalization.
struct HomogPoint {
  std::vector<Int> num;
  Int den;
};

HomogPoint homogenize(const Point& p);

class PointSet {
 public:
  /// Validates: ambient_dim >= 1, at least one point, coordinate lengths,
  /// pairwise distinctness. Computes and caches the affine dimension.
  PointSet(int ambient_dim, std::vector<Point> points);

  int ambient_dim() const { return ambient_dim_; }
  int affine_dim() const { return affine_dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }

 private:
  int ambient_dim_;
  std::vector<Point> points_;
  int affine_dim_;
};

struct Hyperplane {
  Vec normal;                    // a
  Rat offset;                    // beta, plane = {y : a.y == beta}
  std::vector<Vec> affine_basis; // dim-1 independent vectors with a.b == 0
  Point origin_point;            // fixed rational point on the plane

  /// Validates all invariants (basis orthogonal to normal, rank dim-1,
  /// origin on the plane).
  Hyperplane(Vec normal, Rat offset, std::vector<Vec> affine_basis, Point origin_point);

  /// Builds the canonical pivot basis for the plane through `origin` with
  /// the given normal.
  static Hyperplane through_point(Vec normal, const Point& origin);

  int dim() const { return static_cast<int>(normal.size()); }
};

/// Canonical direction of a nonzero rational vector. Throws InvalidInput on
/// the zero vector.
Direction canonical_direction(const Vec& v);
Direction canonical_direction(std::vector<Int> v);

Direction direction_between(const Point& p, const Point& q);
Direction direction_between(const HomogPoint& p, const HomogPoint& q);

/// Canonical line through two distinct points.
Line line_through(const Point& p, const Point& q);

bool point_on_line(const Line& line, const Point& p);

/// Parameter t with p == anchor + t * direction. Pre: p lies on the line.
Rat line_parameter(const Line& line, const Point& p);

/// Rank over Q of the difference vectors from the first point.
int affine_dimension(const std::vector<Point>& points);

/// Orientation sign of three homogenized points in the plane (2 coordinates).
int orientation(const HomogPoint& a, const HomogPoint& b, const HomogPoint& c);

struct CentralProjection {
  std::vector<Point> images;             // distinct, in the plane's basis coordinates
  std::vector<std::vector<int>> fibers;  // fibers[k] = indices of P mapping to images[k]
};

/// Projects P minus its x-th point through that point onto H, reporting each
/// distinct image with its fiber of preimage indices (ascending; images in
/// first-occurrence order). Throws NonGenericHyperplane when some point sits
/// on a fiber parallel to H or when x itself lies on H.
CentralProjection central_projection(const PointSet& P, int x_index, const Hyperplane& H);

}  // namespace dirgeo
