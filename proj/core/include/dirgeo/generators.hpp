#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dirgeo/geometry.hpp"

namespace dirgeo {

enum class GeneratorKind { NearPencil, SkewLines, ApPlusGeneric, IntegerGrid, Random };

std::optional<GeneratorKind> parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Random;
  int n = 0;
  int d = 0;
  int side = 0;     // integer_grid only
  int height = 100; // random only
  std::uint64_t seed = 0;
};

PointSet generate(const GeneratorSpec& spec);

// Each construction draws from a seeded stream and then checks the exact
// non-degeneracies its downstream formulas rely on; on failure it retries
// with the next sub-seed (16 attempts, then GenericityExhausted). The
// validators are exported so tests can re-run them independently.

/// n-d+1 points at distinct rational parameters on one line plus d-1 generic
/// points off it. The first n-d+1 points are the collinear block.
/// Pre: n >= d+1, d >= 2.
PointSet near_pencil(int n, int d, std::uint64_t seed);

/// (d+1)/2 pairwise skew lines spanning R^d, each carrying 2n/(d+1) points
/// (consecutive index blocks). Pre: d odd, (d+1) | 2n, 2n/(d+1) >= 2.
PointSet skew_lines(int d, int n, std::uint64_t seed);

/// Like near_pencil but the collinear block is an exact arithmetic
/// progression. Pre: n >= d+1, d >= 2.
PointSet ap_plus_generic(int n, int d, std::uint64_t seed);

/// All side^d lattice points of {0..side-1}^d. Pre: side >= 2, d >= 1,
/// side^d within the configured cap.
PointSet integer_grid(int side, int d);

/// n distinct seeded rational points of affine dimension d with coordinate
/// numerators/denominators bounded by height. Pre: n >= d+1, height >= 1.
PointSet random_points(int n, int d, std::uint64_t seed, int height);

/// The first `collinear_count` points are collinear, every direction class
/// other than that line's is realized by exactly one pair, and the affine
/// dimension is full. This is exactly the genericity the census formula
/// (d-1)(n-d+1) + C(d-1,2) + 1 needs.
bool near_pencil_structure_ok(const PointSet& P, int collinear_count,
                              std::string* why = nullptr);

/// Consecutive blocks of per_line points are collinear, the carrier lines are
/// pairwise skew, the set spans R^d, and every star equals n - per_line + 1.
bool skew_lines_structure_ok(const PointSet& P, int line_count, int per_line,
                             std::string* why = nullptr);

}  // namespace dirgeo
