#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "rotary/geometry/point.hpp"

namespace rotary {

/// Invertible 3x3 matrix acting on the projective plane.
class LinearMap {
 public:
  using Rows = std::array<Vec3, 3>;

  /// Throws kSingularMatrix when the determinant is zero.
  explicit LinearMap(Rows rows);
  static LinearMap identity();
  static LinearMap diagonal(const AlgReal& a, const AlgReal& b, const AlgReal& c);

  const AlgReal& operator()(int i, int j) const { return rows_[i][j]; }
  const Rows& rows() const { return rows_; }

  AlgReal determinant() const;
  LinearMap transpose() const;
  bool is_rational() const;

  friend Vec3 operator*(const LinearMap& m, const Vec3& v);
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.rows_ == b.rows_; }

 private:
  struct Unchecked {};
  LinearMap(Rows rows, Unchecked) : rows_(std::move(rows)) {}
  Rows rows_;
};

AlgReal determinant(const LinearMap::Rows& rows);

ProjPoint apply(const LinearMap& m, const ProjPoint& p);

/// m^T m == I, exactly.
bool is_orthogonal(const LinearMap& m);

/// A point with apply(m, p) == p, from the eigenvector of the smallest real
/// eigenvalue (eigenvalue 1 first for rotations).
ProjPoint fixed_point(const LinearMap& m);

/// Coefficients (c0, c1, c2) of det(xI - m) = x^3 + c2 x^2 + c1 x + c0.
std::array<AlgReal, 3> characteristic_coefficients(const LinearMap& m);

/// Lowest-index kernel vector of a singular matrix, by full pivoting.
Vec3 kernel_vector(const LinearMap::Rows& a);

using PointPair = std::pair<ProjPoint, ProjPoint>;

/// Whether d(p, q) = l <=> d(mp, mq) = l on every sampled pair.
bool preserves_edges_on_sample(const LinearMap& m, const AlgReal& cos_l, const std::vector<PointPair>& sample);

/// Rational rotation built from three coordinate-axis rotations with
/// Pythagorean-triple angles.
LinearMap random_rational_orthogonal(uint64_t seed);

/// Rotation (product of two reflections) sending p to q.
LinearMap rotation_sending(const ProjPoint& p, const ProjPoint& q);

}  // namespace rotary
