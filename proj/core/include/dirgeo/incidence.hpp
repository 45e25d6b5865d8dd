#pragma once

#include <vector>

#include "dirgeo/geometry.hpp"

namespace dirgeo {

struct IncidentLine {
  Line line;
  std::vector<int> point_indices;  // ascending, all points of P on the line
};

struct IncidenceStructure {
  int point_count = 0;
  std::vector<IncidentLine> lines;  // sorted by canonical line order

  /// Lines with at least 3 incident points.
  int special_line_count() const;
};

/// Exhaustive grouping of all point pairs by canonical line. Pre: n >= 2.
IncidenceStructure build_incidence(const PointSet& P);

struct StarReport {
  int point_index = 0;
  int line_count = 0;        // distinct lines joining the point to the rest
  Rat special_fraction;      // fraction of the other points on special lines through it
};

StarReport star_report(const PointSet& P, int x_index);
int star_count(const PointSet& P, int x_index);
std::vector<StarReport> all_star_reports(const PointSet& P);

struct DiracPoint {
  int point_index = 0;
  int line_count = 0;
};

/// Point maximizing the star size; ties broken by smallest index.
DiracPoint dirac_point(const PointSet& P);

struct DswCheck {
  Rat delta_min;       // minimum special fraction over all points
  int affine_dim = 0;
  bool holds = false;  // delta_min == 0 or affine_dim <= c / delta_min
};

/// Pre: n >= 3. With c = 12 the inequality is a theorem and must hold.
DswCheck dsw_check(const PointSet& P, const Rat& c);

struct CorollaryCheck {
  int max_star = 0;
  Rat bound;           // (1 - c/affine_dim) * n
  bool holds = false;
};

/// Pre: n >= 2. With c = 12 the inequality is a theorem and must hold.
CorollaryCheck corollary_check(const PointSet& P, const Rat& c);

}  // namespace dirgeo
