#pragma once

#include <optional>
#include <vector>

#include "dirgeo/rational.hpp"

namespace dirgeo {

/// Rank over Q of the given row vectors (Gaussian elimination, exact).
int matrix_rank(std::vector<Vec> rows);

/// Coefficients c with sum_k c[k] * basis[k] == target, or nullopt when
/// target is outside the span. Requires the basis vectors to be linearly
/// independent (unique solution).
std::optional<Vec> coordinates_in_basis(const std::vector<Vec>& basis, const Vec& target);

}  // namespace dirgeo
