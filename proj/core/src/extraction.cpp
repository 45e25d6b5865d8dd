#include "dirgeo/extraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dirgeo/errors.hpp"
#include "dirgeo/incidence.hpp"
#include "dirgeo/rng.hpp"

namespace dirgeo {

namespace {

constexpr int kHyperplaneAttempts = 64;
constexpr std::uint64_t kPlaneSalt = 0x706C616EULL;
constexpr std::uint64_t kChildSalt = 0x63686C64ULL;

}  // namespace

Vec hyperplane_candidate_normal(int dim, std::uint64_t seed, int attempt) {
  if (dim < 1 || attempt < 0) throw InvalidInput("hyperplane_candidate_normal: bad parameters");
  SeededRng rng(mix_seed(seed, kPlaneSalt + static_cast<std::uint64_t>(attempt)));
  return rng.nonzero_vector(dim, 60, 8);
}

bool hyperplane_is_generic(const PointSet& P, int x_index, const Hyperplane& H) {
  if (x_index < 0 || x_index >= P.size()) throw InvalidInput("hyperplane_is_generic: bad index");
  if (H.dim() != P.ambient_dim()) throw InvalidInput("hyperplane_is_generic: dimension mismatch");
  const Point& x = P[x_index];
  if (dot(H.normal, x.coords) == H.offset) return false;
  for (int i = 0; i < P.size(); ++i) {
    if (i == x_index) continue;
    if (sign(dot(H.normal, sub(P[i].coords, x.coords))) == 0) return false;
  }
  return true;
}

Hyperplane choose_generic_hyperplane(const PointSet& P, int x_index, std::uint64_t seed,
                                     int* attempts_used) {
  if (x_index < 0 || x_index >= P.size()) throw InvalidInput("choose_generic_hyperplane: bad index");
  Vec origin = P[x_index].coords;
  origin[0] += 1;  // fixed offset from x keeps x off every candidate that survives the checks
  const Point origin_point{std::move(origin)};
  for (int attempt = 0; attempt < kHyperplaneAttempts; ++attempt) {
    const Vec normal = hyperplane_candidate_normal(P.ambient_dim(), seed, attempt);
    Hyperplane H = Hyperplane::through_point(normal, origin_point);
    if (hyperplane_is_generic(P, x_index, H)) {
      if (attempts_used) *attempts_used = attempt + 1;
      return H;
    }
  }
  throw GenericityExhausted("choose_generic_hyperplane: retry budget exhausted");
}

namespace {

// One longest segment of P per line through x, grouped by direction class.
std::vector<Segment> star_segments(const PointSet& P, int x_index) {
  std::map<Direction, std::vector<int>> classes;
  for (int i = 0; i < P.size(); ++i) {
    if (i == x_index) continue;
    classes[direction_between(P[x_index], P[i])].push_back(i);
  }
  std::vector<Segment> out;
  out.reserve(classes.size());
  for (const auto& [dir, members] : classes) {
    const Line line = line_through(P[x_index], P[members[0]]);
    int lo = x_index;
    int hi = x_index;
    Rat lo_t = line_parameter(line, P[x_index]);
    Rat hi_t = lo_t;
    for (int i : members) {
      const Rat t = line_parameter(line, P[i]);
      if (t < lo_t) {
        lo = i;
        lo_t = t;
      }
      if (t > hi_t) {
        hi = i;
        hi_t = t;
      }
    }
    out.emplace_back(lo, hi);
  }
  return out;
}

ExtractionResult extract_impl(std::shared_ptr<const PointSet> P, std::uint64_t seed);

// Extremes by line parameter over the incident points.
Segment longest_of_incident(const PointSet& P, const IncidentLine& line) {
  int lo = line.point_indices[0];
  int hi = lo;
  Rat lo_t = line_parameter(line.line, P[lo]);
  Rat hi_t = lo_t;
  for (int i : line.point_indices) {
    const Rat t = line_parameter(line.line, P[i]);
    if (t < lo_t) {
      lo = i;
      lo_t = t;
    }
    if (t > hi_t) {
      hi = i;
      hi_t = t;
    }
  }
  return Segment(lo, hi);
}

SegmentFamily planar_base_impl(std::shared_ptr<const PointSet> P2) {
  const PointSet& P = *P2;
  const DiracPoint dirac = dirac_point(P);

  SegmentFamily family;
  family.base = P2;
  family.segments = star_segments(P, dirac.point_index);

  struct Accepted {
    Segment segment;
    Line line;
  };
  std::vector<Accepted> accepted;
  accepted.reserve(family.segments.size());
  for (const Segment& s : family.segments) {
    accepted.push_back({s, line_through(P[s.a], P[s.b])});
  }

  const IncidenceStructure incidence = build_incidence(P);
  std::vector<const IncidentLine*> others;
  for (const IncidentLine& l : incidence.lines) {
    const auto& pts = l.point_indices;
    if (!std::binary_search(pts.begin(), pts.end(), dirac.point_index)) others.push_back(&l);
  }
  std::stable_sort(others.begin(), others.end(),
                   [](const IncidentLine* a, const IncidentLine* b) {
                     if (a->point_indices.size() != b->point_indices.size()) {
                       return a->point_indices.size() > b->point_indices.size();
                     }
                     return a->line < b->line;
                   });

  for (const IncidentLine* line : others) {
    const Segment candidate = longest_of_incident(P, *line);
    bool ok = true;
    for (const Accepted& acc : accepted) {
      if (acc.line == line->line || segments_convergent(P, acc.segment, candidate)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      family.segments.push_back(candidate);
      accepted.push_back({candidate, line->line});
    }
  }
  return family;
}

ExtractionResult extract_impl(std::shared_ptr<const PointSet> P, std::uint64_t seed) {
  const int dim = P->affine_dim();
  if (dim == 2) {
    ExtractionResult result;
    result.family = planar_base_impl(P);
    result.trace.base_family_size = static_cast<int>(result.family.segments.size());
    return result;
  }

  const DiracPoint dirac = dirac_point(*P);
  std::vector<Segment> s1 = star_segments(*P, dirac.point_index);

  int attempts = 0;
  Hyperplane H = choose_generic_hyperplane(*P, dirac.point_index, mix_seed(seed, kPlaneSalt), &attempts);
  CentralProjection projection = central_projection(*P, dirac.point_index, H);

  auto images = std::make_shared<const PointSet>(P->ambient_dim() - 1, std::move(projection.images));
  if (images->affine_dim() != dim - 1) {
    throw std::logic_error("extract_family: projected set has unexpected affine dimension");
  }

  ExtractionResult sub = extract_impl(images, mix_seed(seed, kChildSalt));

  std::vector<Segment> s2;
  s2.reserve(sub.family.segments.size());
  for (const Segment& s : sub.family.segments) {
    s2.push_back(longest_segment_on_line(*images, line_through((*images)[s.a], (*images)[s.b])));
  }
  std::vector<Segment> lifted;
  lifted.reserve(s2.size());
  for (const Segment& s : s2) {
    lifted.emplace_back(projection.fibers[static_cast<std::size_t>(s.a)].front(),
                        projection.fibers[static_cast<std::size_t>(s.b)].front());
  }

  ExtractionResult result;
  result.family.base = P;
  result.family.segments = s1;
  result.family.segments.insert(result.family.segments.end(), lifted.begin(), lifted.end());

  ExtractionLevel level;
  level.effective_dim = dim;
  level.point_count = P->size();
  level.chosen_point = dirac.point_index;
  level.star_size = dirac.line_count;
  level.hyperplane_attempts = attempts;
  level.s1_size = static_cast<int>(s1.size());
  level.s2_size = static_cast<int>(s2.size());
  level.lifted_size = static_cast<int>(lifted.size());
  level.plane = std::move(H);
  level.level_points = P;
  level.image_points = images;
  level.fibers = std::move(projection.fibers);
  level.s1_segments = std::move(s1);
  level.s2_segments = std::move(s2);
  level.lifted_segments = std::move(lifted);

  result.trace.levels.push_back(std::move(level));
  result.trace.levels.insert(result.trace.levels.end(),
                             std::make_move_iterator(sub.trace.levels.begin()),
                             std::make_move_iterator(sub.trace.levels.end()));
  result.trace.base_family_size = sub.trace.base_family_size;
  return result;
}

}  // namespace

SegmentFamily planar_base(std::shared_ptr<const PointSet> P2, std::uint64_t /*seed*/) {
  if (!P2) throw InvalidInput("planar_base: null point set");
  if (P2->affine_dim() != 2) throw InvalidInput("planar_base: affine dimension must be 2");
  SegmentFamily family = planar_base_impl(P2);
  family.verified = verify_family(family);
  return family;
}

ExtractionResult extract_family(std::shared_ptr<const PointSet> P, std::uint64_t seed) {
  if (!P) throw InvalidInput("extract_family: null point set");
  if (P->affine_dim() < 2) throw InvalidInput("extract_family: affine dimension must be >= 2");
  ExtractionResult result = extract_impl(P, seed);
  result.family.verified = verify_family(result.family);
  result.trace.final_size = static_cast<int>(result.family.segments.size());
  result.trace.required_bound = result.family.verified->lower_bound_required;
  return result;
}

}  // namespace dirgeo
