#include "dirgeo/rational.hpp"

#include <cctype>

#include "dirgeo/errors.hpp"

namespace dirgeo {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    throw InvalidInput("malformed rational '" + text + "'");
  }
  return make_rat(Int(num), Int(den));
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

Int rat_ceil(const Rat& value) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

int sign(const Rat& value) { return mpq_sgn(value.get_mpq_t()); }

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("dot: size mismatch");
  Rat acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("sub: size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("add: size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec scale(const Rat& factor, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = factor * v[i];
  return out;
}

bool is_zero(const Vec& v) {
  for (const Rat& x : v) {
    if (sign(x) != 0) return false;
  }
  return true;
}

}  // namespace dirgeo
