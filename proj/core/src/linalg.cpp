#include "dirgeo/linalg.hpp"

#include "dirgeo/errors.hpp"

namespace dirgeo {

int matrix_rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (const Vec& r : rows) {
    if (r.size() != cols) throw InvalidInput("matrix_rank: ragged rows");
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sign(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sign(rows[r][col]) == 0) continue;
      const Rat factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] -= factor * rows[rank][c];
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::optional<Vec> coordinates_in_basis(const std::vector<Vec>& basis, const Vec& target) {
  const std::size_t m = basis.size();
  const std::size_t dim = target.size();
  for (const Vec& b : basis) {
    if (b.size() != dim) throw InvalidInput("coordinates_in_basis: size mismatch");
  }
  // Augmented system [B | target] with the basis vectors as columns.
  std::vector<Vec> a(dim, Vec(m + 1));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = basis[c][r];
    a[r][m] = target[r];
  }
  std::vector<std::size_t> pivot_row(m);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < dim; ++col) {
    std::size_t pivot = rank;
    while (pivot < dim && sign(a[pivot][col]) == 0) ++pivot;
    if (pivot == dim) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == rank || sign(a[r][col]) == 0) continue;
      const Rat factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= factor * a[rank][c];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  if (rank < m) throw InvalidInput("coordinates_in_basis: dependent basis");
  for (std::size_t r = rank; r < dim; ++r) {
    if (sign(a[r][m]) != 0) return std::nullopt;  // inconsistent
  }
  Vec coeff(m);
  for (std::size_t col = 0; col < m; ++col) {
    const std::size_t r = pivot_row[col];
    coeff[col] = a[r][m] / a[r][col];
  }
  return coeff;
}

}  // namespace dirgeo
