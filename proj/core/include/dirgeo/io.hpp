#pragma once

#include <string>

#include "dirgeo/census.hpp"
#include "dirgeo/segments.hpp"

namespace dirgeo {

// Canonical JSON interchange. Serialization is deterministic (fixed field
// order, lowest-terms rational strings, 2-space indent), so
// serialize(parse(serialize(x))) is byte-identical to serialize(x).

/// {"dimension": d, "points": [["p/q", ...], ...]}
std::string serialize_pointset(const PointSet& P);
PointSet parse_pointset(const std::string& text);

/// {"dimension": d, "functionals": [["p/q", ...], ...]}
std::string serialize_norm(const PolytopalNorm& norm);
PolytopalNorm parse_norm(const std::string& text);

/// {"pointset": {...}, "segments": [[a, b], ...]}
std::string serialize_family(const SegmentFamily& family);

/// Accepts a family document, or a CLI extract report carrying one under
/// results.family.
SegmentFamily parse_family(const std::string& text);

}  // namespace dirgeo
