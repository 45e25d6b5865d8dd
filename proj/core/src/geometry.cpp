#include "dirgeo/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dirgeo/errors.hpp"

namespace dirgeo {

bool operator<(const Direction& a, const Direction& b) {
  const std::size_t n = std::min(a.coords.size(), b.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.coords[i], b.coords[i]);
    if (c != 0) return c < 0;
  }
  return a.coords.size() < b.coords.size();
}

HomogPoint homogenize(const Point& p) {
  Int den(1);
  for (const Rat& c : p.coords) {
    Int l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    den = l;
  }
  HomogPoint h;
  h.den = den;
  h.num.resize(p.coords.size());
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    h.num[i] = p.coords[i].get_num() * (den / p.coords[i].get_den());
  }
  return h;
}

Direction canonical_direction(std::vector<Int> v) {
  Int g(0);
  for (const Int& x : v) {
    Int t;
    mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    g = t;
  }
  if (g == 0) throw InvalidInput("canonical_direction: zero vector");
  for (Int& x : v) x /= g;
  for (const Int& x : v) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (s < 0) {
      for (Int& y : v) y = -y;
    }
    break;
  }
  return Direction{std::move(v)};
}

Direction canonical_direction(const Vec& v) {
  Int den(1);
  for (const Rat& c : v) {
    Int l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    den = l;
  }
  std::vector<Int> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = v[i].get_num() * (den / v[i].get_den());
  }
  return canonical_direction(std::move(scaled));
}

Direction direction_between(const Point& p, const Point& q) {
  if (p.size() != q.size()) throw InvalidInput("direction_between: size mismatch");
  return canonical_direction(sub(q.coords, p.coords));
}

Direction direction_between(const HomogPoint& p, const HomogPoint& q) {
  // q/qw - p/pw is parallel to q*pw - p*qw.
  std::vector<Int> diff(p.num.size());
  for (std::size_t i = 0; i < p.num.size(); ++i) {
    diff[i] = q.num[i] * p.den - p.num[i] * q.den;
  }
  return canonical_direction(std::move(diff));
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw InvalidInput("line_through: identical points");
  Direction dir = direction_between(p, q);
  std::size_t pivot = 0;
  while (sgn(dir.coords[pivot]) == 0) ++pivot;
  const Rat t = p.coords[pivot] / Rat(dir.coords[pivot]);
  Vec anchor(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    anchor[i] = p.coords[i] - t * Rat(dir.coords[i]);
  }
  return Line{std::move(dir), Point(std::move(anchor))};
}

bool point_on_line(const Line& line, const Point& p) {
  if (p.size() != line.anchor.size()) throw InvalidInput("point_on_line: size mismatch");
  std::size_t pivot = 0;
  while (sgn(line.direction.coords[pivot]) == 0) ++pivot;
  const Rat t = (p.coords[pivot] - line.anchor.coords[pivot]) / Rat(line.direction.coords[pivot]);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.coords[i] != line.anchor.coords[i] + t * Rat(line.direction.coords[i])) return false;
  }
  return true;
}

Rat line_parameter(const Line& line, const Point& p) {
  std::size_t pivot = 0;
  while (sgn(line.direction.coords[pivot]) == 0) ++pivot;
  return (p.coords[pivot] - line.anchor.coords[pivot]) / Rat(line.direction.coords[pivot]);
}

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) throw InvalidInput("affine_dimension: empty point list");
  std::vector<Vec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != points[0].size()) {
      throw InvalidInput("affine_dimension: mixed dimensions");
    }
    diffs.push_back(sub(points[i].coords, points[0].coords));
  }
  return matrix_rank(std::move(diffs));
}

PointSet::PointSet(int ambient_dim, std::vector<Point> points)
    : ambient_dim_(ambient_dim), points_(std::move(points)) {
  if (ambient_dim_ < 1) throw InvalidInput("PointSet: ambient dimension must be >= 1");
  if (points_.empty()) throw InvalidInput("PointSet: no points");
  for (const Point& p : points_) {
    if (static_cast<int>(p.size()) != ambient_dim_) {
      throw InvalidInput("PointSet: coordinate length != ambient dimension");
    }
  }
  std::vector<Point> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("PointSet: duplicate points");
  }
  affine_dim_ = affine_dimension(points_);
}

Hyperplane::Hyperplane(Vec normal_in, Rat offset_in, std::vector<Vec> basis_in, Point origin_in)
    : normal(std::move(normal_in)),
      offset(std::move(offset_in)),
      affine_basis(std::move(basis_in)),
      origin_point(std::move(origin_in)) {
  const std::size_t d = normal.size();
  if (d < 1 || is_zero(normal)) throw InvalidInput("Hyperplane: zero normal");
  if (origin_point.size() != d) throw InvalidInput("Hyperplane: origin size mismatch");
  if (dot(normal, origin_point.coords) != offset) {
    throw InvalidInput("Hyperplane: origin not on the plane");
  }
  if (affine_basis.size() != d - 1) throw InvalidInput("Hyperplane: basis must have dim-1 vectors");
  for (const Vec& b : affine_basis) {
    if (b.size() != d) throw InvalidInput("Hyperplane: basis vector size mismatch");
    if (sign(dot(normal, b)) != 0) throw InvalidInput("Hyperplane: basis not orthogonal to normal");
  }
  if (matrix_rank(affine_basis) != static_cast<int>(d) - 1) {
    throw InvalidInput("Hyperplane: basis not independent");
  }
}

Hyperplane Hyperplane::through_point(Vec normal, const Point& origin) {
  const std::size_t d = normal.size();
  if (d < 1 || is_zero(normal)) throw InvalidInput("Hyperplane: zero normal");
  std::size_t pivot = 0;
  while (sign(normal[pivot]) == 0) ++pivot;
  std::vector<Vec> basis;
  basis.reserve(d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (i == pivot) continue;
    Vec b(d, Rat(0));
    b[i] = 1;
    b[pivot] = -normal[i] / normal[pivot];
    basis.push_back(std::move(b));
  }
  Rat offset = dot(normal, origin.coords);
  return Hyperplane(std::move(normal), std::move(offset), std::move(basis), origin);
}

int orientation(const HomogPoint& a, const HomogPoint& b, const HomogPoint& c) {
  // Sign of det [[ax ay aw], [bx by bw], [cx cy cw]]; positive row scalings
  // keep it equal to the affine orientation sign.
  const Int det = a.num[0] * (b.num[1] * c.den - b.den * c.num[1]) -
                  a.num[1] * (b.num[0] * c.den - b.den * c.num[0]) +
                  a.den * (b.num[0] * c.num[1] - b.num[1] * c.num[0]);
  return sgn(det);
}

CentralProjection central_projection(const PointSet& P, int x_index, const Hyperplane& H) {
  if (x_index < 0 || x_index >= P.size()) throw InvalidInput("central_projection: bad index");
  if (H.dim() != P.ambient_dim()) throw InvalidInput("central_projection: dimension mismatch");
  const Point& x = P[x_index];
  const Rat level = H.offset - dot(H.normal, x.coords);
  if (sign(level) == 0) {
    throw NonGenericHyperplane("projection center lies on the hyperplane");
  }
  CentralProjection out;
  std::map<Vec, int> seen;
  for (int i = 0; i < P.size(); ++i) {
    if (i == x_index) continue;
    const Vec ray = sub(P[i].coords, x.coords);
    const Rat denom = dot(H.normal, ray);
    if (sign(denom) == 0) {
      throw NonGenericHyperplane("point fiber parallel to the hyperplane");
    }
    const Rat t = level / denom;
    Vec on_plane(x.coords.size());
    for (std::size_t c = 0; c < on_plane.size(); ++c) {
      on_plane[c] = x.coords[c] + t * ray[c] - H.origin_point.coords[c];
    }
    auto coords = coordinates_in_basis(H.affine_basis, on_plane);
    if (!coords) throw std::logic_error("central_projection: image not in plane basis");
    auto [it, inserted] = seen.emplace(*coords, static_cast<int>(out.images.size()));
    if (inserted) {
      out.images.emplace_back(std::move(*coords));
      out.fibers.emplace_back();
    }
    out.fibers[static_cast<std::size_t>(it->second)].push_back(i);
  }
  return out;
}

}  // namespace dirgeo
