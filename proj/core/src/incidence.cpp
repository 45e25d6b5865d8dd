#include "dirgeo/incidence.hpp"

#include <map>
#include <set>

#include "dirgeo/errors.hpp"

namespace dirgeo {

int IncidenceStructure::special_line_count() const {
  int count = 0;
  for (const IncidentLine& l : lines) {
    if (l.point_indices.size() >= 3) ++count;
  }
  return count;
}

IncidenceStructure build_incidence(const PointSet& P) {
  const int n = P.size();
  if (n < 2) throw InvalidInput("build_incidence: need at least 2 points");
  std::map<Line, std::set<int>> grouped;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto& members = grouped[line_through(P[i], P[j])];
      members.insert(i);
      members.insert(j);
    }
  }
  IncidenceStructure out;
  out.point_count = n;
  out.lines.reserve(grouped.size());
  for (auto& [line, members] : grouped) {
    out.lines.push_back(IncidentLine{line, {members.begin(), members.end()}});
  }
  return out;
}

namespace {

// Sizes of the direction classes of P \ {x} as seen from x. Each class is
// the set of other points on one line through x.
std::map<Direction, int> star_classes(const PointSet& P, int x_index,
                                      const std::vector<HomogPoint>& homog) {
  std::map<Direction, int> classes;
  for (int i = 0; i < P.size(); ++i) {
    if (i == x_index) continue;
    ++classes[direction_between(homog[static_cast<std::size_t>(x_index)],
                                homog[static_cast<std::size_t>(i)])];
  }
  return classes;
}

std::vector<HomogPoint> homogenize_all(const PointSet& P) {
  std::vector<HomogPoint> h;
  h.reserve(static_cast<std::size_t>(P.size()));
  for (int i = 0; i < P.size(); ++i) h.push_back(homogenize(P[i]));
  return h;
}

StarReport report_from_classes(int x_index, int n, const std::map<Direction, int>& classes) {
  long on_special = 0;
  for (const auto& [dir, count] : classes) {
    if (count >= 2) on_special += count;
  }
  StarReport r;
  r.point_index = x_index;
  r.line_count = static_cast<int>(classes.size());
  r.special_fraction = make_rat(Int(on_special), Int(n - 1));
  return r;
}

}  // namespace

StarReport star_report(const PointSet& P, int x_index) {
  if (P.size() < 2) throw InvalidInput("star_report: need at least 2 points");
  if (x_index < 0 || x_index >= P.size()) throw InvalidInput("star_report: bad index");
  const auto homog = homogenize_all(P);
  return report_from_classes(x_index, P.size(), star_classes(P, x_index, homog));
}

int star_count(const PointSet& P, int x_index) { return star_report(P, x_index).line_count; }

std::vector<StarReport> all_star_reports(const PointSet& P) {
  if (P.size() < 2) throw InvalidInput("all_star_reports: need at least 2 points");
  const auto homog = homogenize_all(P);
  std::vector<StarReport> out;
  out.reserve(static_cast<std::size_t>(P.size()));
  for (int i = 0; i < P.size(); ++i) {
    out.push_back(report_from_classes(i, P.size(), star_classes(P, i, homog)));
  }
  return out;
}

DiracPoint dirac_point(const PointSet& P) {
  if (P.size() < 2) throw InvalidInput("dirac_point: need at least 2 points");
  const auto reports = all_star_reports(P);
  DiracPoint best{0, reports[0].line_count};
  for (int i = 1; i < P.size(); ++i) {
    if (reports[static_cast<std::size_t>(i)].line_count > best.line_count) {
      best = {i, reports[static_cast<std::size_t>(i)].line_count};
    }
  }
  return best;
}

DswCheck dsw_check(const PointSet& P, const Rat& c) {
  if (P.size() < 3) throw InvalidInput("dsw_check: need at least 3 points");
  const auto reports = all_star_reports(P);
  Rat delta_min = reports[0].special_fraction;
  for (const StarReport& r : reports) {
    if (r.special_fraction < delta_min) delta_min = r.special_fraction;
  }
  DswCheck out;
  out.delta_min = delta_min;
  out.affine_dim = P.affine_dim();
  out.holds = sign(delta_min) == 0 || Rat(out.affine_dim) * delta_min <= c;
  return out;
}

CorollaryCheck corollary_check(const PointSet& P, const Rat& c) {
  if (P.size() < 2) throw InvalidInput("corollary_check: need at least 2 points");
  const auto reports = all_star_reports(P);
  int max_star = 0;
  for (const StarReport& r : reports) max_star = std::max(max_star, r.line_count);
  CorollaryCheck out;
  out.max_star = max_star;
  out.bound = (Rat(1) - c / Rat(P.affine_dim())) * Rat(P.size());
  out.holds = Rat(max_star) >= out.bound;
  return out;
}

}  // namespace dirgeo
