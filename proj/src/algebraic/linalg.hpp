#pragma once

// Dense exact linear algebra over Q. Internal helper.

#include <optional>
#include <vector>

#include "rotary/algebraic/poly.hpp"

namespace rotary::linalg {

using Vec = std::vector<Rational>;

/// Solves A X = B for square A given by columns. Returns nullopt when A
/// is singular. Each right-hand side is one vector.
std::optional<std::vector<Vec>> solve_columns(const std::vector<Vec>& columns, const std::vector<Vec>& rhs);

/// Incremental echelon basis that records how each stored vector is
/// expressed in terms of the vectors inserted so far.
class DependencyTracker {
 public:
  explicit DependencyTracker(size_t dim) : dim_(dim) {}

  /// Inserts v (the k-th inserted vector). If v is a combination of the
  /// earlier vectors, returns coefficients c with v = sum c_i v_i and does
  /// not store it.
  std::optional<Vec> insert(const Vec& v);

 private:
  struct Row {
    Vec vec;
    Vec combo;  // vec = sum combo_i * inserted_i
    size_t pivot;
  };
  size_t dim_;
  size_t inserted_ = 0;
  std::vector<Row> rows_;
};

}  // namespace rotary::linalg
