#include "dirgeo/io.hpp"

#include <json.hpp>

#include "dirgeo/errors.hpp"

namespace dirgeo {

namespace {

using json = nlohmann::ordered_json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (const Rat& c : v) arr.push_back(rat_to_string(c));
  return arr;
}

Vec vec_from_json(const json& arr, int expected_dim, const char* what) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != expected_dim) {
    throw InvalidInput(std::string(what) + ": wrong coordinate count");
  }
  Vec v;
  v.reserve(arr.size());
  for (const auto& c : arr) {
    if (!c.is_string()) throw InvalidInput(std::string(what) + ": coordinates must be strings");
    v.push_back(parse_rat(c.get<std::string>()));
  }
  return v;
}

int read_dimension(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("dimension") || !j["dimension"].is_number_integer()) {
    throw InvalidInput(std::string(what) + ": missing integer 'dimension'");
  }
  return j["dimension"].get<int>();
}

json pointset_to_json(const PointSet& P) {
  json j;
  j["dimension"] = P.ambient_dim();
  json pts = json::array();
  for (const Point& p : P.points()) pts.push_back(vec_to_json(p.coords));
  j["points"] = std::move(pts);
  return j;
}

PointSet pointset_from_json(const json& j) {
  const int dim = read_dimension(j, "point set");
  if (!j.contains("points") || !j["points"].is_array()) {
    throw InvalidInput("point set: missing 'points' array");
  }
  std::vector<Point> pts;
  pts.reserve(j["points"].size());
  for (const auto& p : j["points"]) pts.emplace_back(vec_from_json(p, dim, "point set"));
  return PointSet(dim, std::move(pts));
}

}  // namespace

std::string serialize_pointset(const PointSet& P) { return dump(pointset_to_json(P)); }

PointSet parse_pointset(const std::string& text) { return pointset_from_json(parse_text(text)); }

std::string serialize_norm(const PolytopalNorm& norm) {
  json j;
  j["dimension"] = norm.dim();
  json fns = json::array();
  for (const Vec& f : norm.functionals()) fns.push_back(vec_to_json(f));
  j["functionals"] = std::move(fns);
  return dump(j);
}

PolytopalNorm parse_norm(const std::string& text) {
  const json j = parse_text(text);
  const int dim = read_dimension(j, "norm");
  if (!j.contains("functionals") || !j["functionals"].is_array()) {
    throw InvalidInput("norm: missing 'functionals' array");
  }
  std::vector<Vec> functionals;
  functionals.reserve(j["functionals"].size());
  for (const auto& f : j["functionals"]) functionals.push_back(vec_from_json(f, dim, "norm"));
  return PolytopalNorm(dim, std::move(functionals));
}

std::string serialize_family(const SegmentFamily& family) {
  if (!family.base) throw InvalidInput("serialize_family: missing base point set");
  json j;
  j["pointset"] = pointset_to_json(*family.base);
  json segs = json::array();
  for (const Segment& s : family.segments) segs.push_back(json::array({s.a, s.b}));
  j["segments"] = std::move(segs);
  return dump(j);
}

SegmentFamily parse_family(const std::string& text) {
  json j = parse_text(text);
  if (j.is_object() && j.contains("results") && j["results"].is_object() &&
      j["results"].contains("family")) {
    j = j["results"]["family"];
  }
  if (!j.is_object() || !j.contains("pointset") || !j.contains("segments") ||
      !j["segments"].is_array()) {
    throw InvalidInput("family: expected 'pointset' and 'segments'");
  }
  SegmentFamily family;
  family.base = std::make_shared<const PointSet>(pointset_from_json(j["pointset"]));
  const int n = family.base->size();
  for (const auto& s : j["segments"]) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer()) {
      throw InvalidInput("family: segments must be index pairs");
    }
    const int a = s[0].get<int>();
    const int b = s[1].get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidInput("family: segment index out of range");
    family.segments.emplace_back(a, b);
  }
  return family;
}

}  // namespace dirgeo
