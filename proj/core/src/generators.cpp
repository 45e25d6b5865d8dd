#include "dirgeo/generators.hpp"

#include <map>
#include <set>

#include "dirgeo/errors.hpp"
#include "dirgeo/incidence.hpp"
#include "dirgeo/rng.hpp"

namespace dirgeo {

namespace {

constexpr int kRegenerationAttempts = 16;
constexpr long kGridPointCap = 100000;

// Stream salts, one per generator family.
constexpr std::uint64_t kPencilSalt = 0x70656E63ULL;
constexpr std::uint64_t kSkewSalt = 0x736B6577ULL;
constexpr std::uint64_t kApSalt = 0x61702B67ULL;
constexpr std::uint64_t kRandomSalt = 0x726E6470ULL;

std::vector<Rat> distinct_rationals(SeededRng& rng, int count, long max_num, long max_den) {
  std::set<Rat> seen;
  int guard = 0;
  while (static_cast<int>(seen.size()) < count) {
    if (++guard > 64 * count) throw NonGenericHyperplane("parameter draw stalled");
    seen.insert(rng.rational(max_num, max_den));
  }
  return {seen.begin(), seen.end()};
}

Point line_point(const Vec& anchor, const Rat& t, const Vec& dir) {
  Vec c(anchor.size());
  for (std::size_t i = 0; i < anchor.size(); ++i) c[i] = anchor[i] + t * dir[i];
  return Point(std::move(c));
}

PointSet pencil_like(int n, int d, std::uint64_t seed, std::uint64_t salt, bool arithmetic) {
  if (d < 2 || n < d + 1) throw InvalidInput("near_pencil: need n >= d+1 and d >= 2");
  const int collinear = n - d + 1;
  for (int attempt = 0; attempt < kRegenerationAttempts; ++attempt) {
    SeededRng rng(mix_seed(seed, salt + static_cast<std::uint64_t>(attempt)));
    const Vec anchor = rng.vector(d, 30, 8);
    const Vec dir = rng.nonzero_vector(d, 30, 8);
    std::vector<Rat> params;
    if (arithmetic) {
      const Rat start = rng.rational(50, 10);
      const Rat step = rng.positive_rational(20, 10);
      for (int i = 0; i < collinear; ++i) params.push_back(start + Rat(i) * step);
    } else {
      try {
        params = distinct_rationals(rng, collinear, 200, 20);
      } catch (const NonGenericHyperplane&) {
        continue;
      }
    }
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (const Rat& t : params) pts.push_back(line_point(anchor, t, dir));
    for (int i = 0; i < d - 1; ++i) pts.push_back(Point(rng.vector(d, 200, 20)));
    try {
      PointSet P(d, std::move(pts));
      if (P.affine_dim() == d && near_pencil_structure_ok(P, collinear)) return P;
    } catch (const InvalidInput&) {
      // duplicate draw; retry with the next sub-seed
    }
  }
  throw GenericityExhausted("near_pencil: no generic instance within the retry budget");
}

}  // namespace

PointSet near_pencil(int n, int d, std::uint64_t seed) {
  return pencil_like(n, d, seed, kPencilSalt, false);
}

PointSet ap_plus_generic(int n, int d, std::uint64_t seed) {
  return pencil_like(n, d, seed, kApSalt, true);
}

PointSet skew_lines(int d, int n, std::uint64_t seed) {
  if (d < 1 || d % 2 == 0) throw InvalidInput("skew_lines: d must be odd");
  if ((2L * n) % (d + 1) != 0) throw InvalidInput("skew_lines: (d+1) must divide 2n");
  const int per_line = static_cast<int>(2L * n / (d + 1));
  if (per_line < 2) throw InvalidInput("skew_lines: need at least 2 points per line");
  const int line_count = (d + 1) / 2;
  for (int attempt = 0; attempt < kRegenerationAttempts; ++attempt) {
    SeededRng rng(mix_seed(seed, kSkewSalt + static_cast<std::uint64_t>(attempt)));
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    try {
      for (int l = 0; l < line_count; ++l) {
        const Vec anchor = rng.vector(d, 60, 8);
        const Vec dir = rng.nonzero_vector(d, 30, 8);
        for (const Rat& t : distinct_rationals(rng, per_line, 60, 10)) {
          pts.push_back(line_point(anchor, t, dir));
        }
      }
      PointSet P(d, std::move(pts));
      if (skew_lines_structure_ok(P, line_count, per_line)) return P;
    } catch (const InvalidInput&) {
    } catch (const NonGenericHyperplane&) {
    }
  }
  throw GenericityExhausted("skew_lines: no generic instance within the retry budget");
}

PointSet integer_grid(int side, int d) {
  if (side < 2 || d < 1) throw InvalidInput("integer_grid: need side >= 2 and d >= 1");
  long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= side;
    if (total > kGridPointCap) throw InvalidInput("integer_grid: size above the configured cap");
  }
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(total));
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  for (;;) {
    Vec c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = Rat(idx[static_cast<std::size_t>(i)]);
    pts.push_back(Point(std::move(c)));
    int pos = 0;
    while (pos < d && ++idx[static_cast<std::size_t>(pos)] == side) {
      idx[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == d) break;
  }
  PointSet P(d, std::move(pts));
  if (P.affine_dim() != d) throw std::logic_error("integer_grid: degenerate grid");
  return P;
}

PointSet random_points(int n, int d, std::uint64_t seed, int height) {
  if (d < 1 || n < d + 1 || height < 1) {
    throw InvalidInput("random_points: need n >= d+1 and height >= 1");
  }
  for (int attempt = 0; attempt < kRegenerationAttempts; ++attempt) {
    SeededRng rng(mix_seed(seed, kRandomSalt + static_cast<std::uint64_t>(attempt)));
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(Point(rng.vector(d, height, height)));
    try {
      PointSet P(d, std::move(pts));
      if (P.affine_dim() == d) return P;
    } catch (const InvalidInput&) {
    }
  }
  throw GenericityExhausted("random_points: no full-dimensional instance within the retry budget");
}

bool near_pencil_structure_ok(const PointSet& P, int collinear_count, std::string* why) {
  const auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  const int n = P.size();
  if (collinear_count < 2 || collinear_count > n) return fail("bad collinear block size");
  const int d = n - collinear_count + 1;
  if (P.affine_dim() != d) return fail("affine dimension != d");
  const Line carrier = line_through(P[0], P[1]);
  for (int i = 2; i < collinear_count; ++i) {
    if (!point_on_line(carrier, P[i])) return fail("collinear block is not collinear");
  }
  const Direction line_dir = carrier.direction;
  std::map<Direction, long long> census;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++census[direction_between(P[i], P[j])];
    }
  }
  const long long block_pairs =
      static_cast<long long>(collinear_count) * (collinear_count - 1) / 2;
  for (const auto& [dir, count] : census) {
    if (dir == line_dir) {
      // The block contributes all of these; any surplus is an outside pair
      // parallel to the carrier line.
      if (count != block_pairs) return fail("line direction shared by an outside pair");
    } else if (count != 1) {
      return fail("parallel coincidence outside the collinear block");
    }
  }
  return true;
}

bool skew_lines_structure_ok(const PointSet& P, int line_count, int per_line, std::string* why) {
  const auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  const int n = P.size();
  if (line_count < 1 || per_line < 2 || n != line_count * per_line) {
    return fail("bad block layout");
  }
  const int d = 2 * line_count - 1;
  if (P.ambient_dim() != d) return fail("ambient dimension != d");
  if (P.affine_dim() != d) return fail("set does not span R^d");

  std::vector<Line> carriers;
  for (int l = 0; l < line_count; ++l) {
    const int base = l * per_line;
    const Line line = line_through(P[base], P[base + 1]);
    for (int i = 0; i < per_line; ++i) {
      if (!point_on_line(line, P[base + i])) return fail("block not collinear");
    }
    carriers.push_back(line);
  }
  for (std::size_t a = 0; a < carriers.size(); ++a) {
    for (std::size_t b = a + 1; b < carriers.size(); ++b) {
      Vec da(carriers[a].direction.coords.size());
      Vec db(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) {
        da[i] = Rat(carriers[a].direction.coords[i]);
        db[i] = Rat(carriers[b].direction.coords[i]);
      }
      const Vec between = sub(carriers[b].anchor.coords, carriers[a].anchor.coords);
      if (matrix_rank({da, db, between}) != 3) return fail("carrier lines not pairwise skew");
    }
  }
  const int expected_star = n - per_line + 1;
  for (int x = 0; x < n; ++x) {
    if (star_count(P, x) != expected_star) return fail("star count off the formula");
  }
  return true;
}

std::optional<GeneratorKind> parse_generator_kind(const std::string& name) {
  if (name == "near_pencil") return GeneratorKind::NearPencil;
  if (name == "skew_lines") return GeneratorKind::SkewLines;
  if (name == "ap_plus_generic") return GeneratorKind::ApPlusGeneric;
  if (name == "integer_grid") return GeneratorKind::IntegerGrid;
  if (name == "random") return GeneratorKind::Random;
  return std::nullopt;
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::NearPencil: return "near_pencil";
    case GeneratorKind::SkewLines: return "skew_lines";
    case GeneratorKind::ApPlusGeneric: return "ap_plus_generic";
    case GeneratorKind::IntegerGrid: return "integer_grid";
    case GeneratorKind::Random: return "random";
  }
  return "unknown";
}

PointSet generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::NearPencil: return near_pencil(spec.n, spec.d, spec.seed);
    case GeneratorKind::SkewLines: return skew_lines(spec.d, spec.n, spec.seed);
    case GeneratorKind::ApPlusGeneric: return ap_plus_generic(spec.n, spec.d, spec.seed);
    case GeneratorKind::IntegerGrid: return integer_grid(spec.side, spec.d);
    case GeneratorKind::Random: return random_points(spec.n, spec.d, spec.seed, spec.height);
  }
  throw InvalidInput("generate: unknown kind");
}

}  // namespace dirgeo
