#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dirgeo {

// All arithmetic in this library is exact. Rat is kept canonical (lowest
// terms, positive denominator) by construction: gmp operators preserve
// canonical form, and every entry point that builds a Rat from raw parts
// goes through make_rat / parse_rat.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;

/// num/den in canonical form. Throws InvalidInput when den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p" or "p/q" (optional leading '-'). Canonicalizes.
Rat parse_rat(const std::string& text);

/// Canonical text form, "p" or "p/q".
std::string rat_to_string(const Rat& value);

/// Smallest integer >= value.
Int rat_ceil(const Rat& value);

int sign(const Rat& value);

Rat dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Rat& factor, const Vec& v);
bool is_zero(const Vec& v);

}  // namespace dirgeo
