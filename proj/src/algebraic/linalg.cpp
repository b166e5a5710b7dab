#include "linalg.hpp"

namespace rotary::linalg {

std::optional<std::vector<Vec>> solve_columns(const std::vector<Vec>& columns, const std::vector<Vec>& rhs) {
  const size_t n = columns.size();
  const size_t m = rhs.size();
  // Row-major augmented matrix [A | B].
  std::vector<Vec> a(n, Vec(n + m));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) a[i][j] = columns[j][i];
  }
  for (size_t j = 0; j < m; ++j) {
    for (size_t i = 0; i < n; ++i) a[i][n + j] = rhs[j][i];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    const Rational inv = 1 / a[col][col];
    for (size_t k = col; k < n + m; ++k) a[col][k] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (size_t k = col; k < n + m; ++k) {
        if (a[col][k] != 0) a[r][k] -= f * a[col][k];
      }
    }
  }
  std::vector<Vec> x(m, Vec(n));
  for (size_t j = 0; j < m; ++j) {
    for (size_t i = 0; i < n; ++i) x[j][i] = a[i][n + j];
  }
  return x;
}

std::optional<Vec> DependencyTracker::insert(const Vec& v) {
  Vec cur = v;
  Vec combo(inserted_ + 1, Rational(0));
  combo[inserted_] = 1;
  for (const auto& row : rows_) {
    if (cur[row.pivot] == 0) continue;
    const Rational f = cur[row.pivot] / row.vec[row.pivot];
    for (size_t i = 0; i < dim_; ++i) {
      if (row.vec[i] != 0) cur[i] -= f * row.vec[i];
    }
    for (size_t i = 0; i < row.combo.size(); ++i) {
      if (row.combo[i] != 0) combo[i] -= f * row.combo[i];
    }
  }
  size_t pivot = 0;
  while (pivot < dim_ && cur[pivot] == 0) ++pivot;
  if (pivot == dim_) {
    // 0 = combo . inserted  =>  v = -(combo_without_last) . inserted.
    Vec coeffs(inserted_);
    for (size_t i = 0; i < inserted_; ++i) coeffs[i] = -combo[i];
    return coeffs;
  }
  rows_.push_back({std::move(cur), std::move(combo), pivot});
  ++inserted_;
  return std::nullopt;
}

}  // namespace rotary::linalg
