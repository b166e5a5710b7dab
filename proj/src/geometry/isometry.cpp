#include "rotary/geometry/isometry.hpp"

#include <random>

#include "../algebraic/linalg.hpp"
#include "rotary/error.hpp"

namespace rotary {

AlgReal determinant(const LinearMap::Rows& r) {
  return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
         r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

LinearMap::LinearMap(Rows rows) : rows_(std::move(rows)) {
  if (rotary::determinant(rows_).is_zero()) throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
}

LinearMap LinearMap::identity() { return diagonal(AlgReal(1), AlgReal(1), AlgReal(1)); }

LinearMap LinearMap::diagonal(const AlgReal& a, const AlgReal& b, const AlgReal& c) {
  const AlgReal z(0);
  return LinearMap(Rows{Vec3{a, z, z}, Vec3{z, b, z}, Vec3{z, z, c}});
}

AlgReal LinearMap::determinant() const { return rotary::determinant(rows_); }

LinearMap LinearMap::transpose() const {
  Rows t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t[i][j] = rows_[j][i];
  }
  return LinearMap(std::move(t), Unchecked{});
}

bool LinearMap::is_rational() const {
  for (const auto& row : rows_) {
    for (const auto& v : row) {
      if (!v.is_rational()) return false;
    }
  }
  return true;
}

Vec3 operator*(const LinearMap& m, const Vec3& v) {
  return {dot(m.rows_[0], v), dot(m.rows_[1], v), dot(m.rows_[2], v)};
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  LinearMap::Rows r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r[i][j] = a.rows_[i][0] * b.rows_[0][j] + a.rows_[i][1] * b.rows_[1][j] + a.rows_[i][2] * b.rows_[2][j];
    }
  }
  return LinearMap(std::move(r), LinearMap::Unchecked{});
}

ProjPoint apply(const LinearMap& m, const ProjPoint& p) { return ProjPoint::from_vector(m * p.lift()); }

bool is_orthogonal(const LinearMap& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      AlgReal s = m(0, i) * m(0, j) + m(1, i) * m(1, j) + m(2, i) * m(2, j);
      if (s != AlgReal(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

std::array<AlgReal, 3> characteristic_coefficients(const LinearMap& m) {
  const AlgReal trace = m(0, 0) + m(1, 1) + m(2, 2);
  const AlgReal minors = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
                         (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  return {-m.determinant(), minors, -trace};
}

Vec3 kernel_vector(const LinearMap::Rows& input) {
  LinearMap::Rows a = input;
  std::array<int, 3> pivot_col{-1, -1, -1};
  std::array<bool, 3> used{false, false, false};
  int rank = 0;
  for (; rank < 3; ++rank) {
    int pi = -1, pj = -1;
    for (int i = rank; i < 3 && pi < 0; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (!used[j] && !a[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    std::swap(a[pi], a[rank]);
    used[pj] = true;
    pivot_col[rank] = pj;
    const AlgReal inv = AlgReal(1) / a[rank][pj];
    for (int j = 0; j < 3; ++j) a[rank][j] = a[rank][j] * inv;
    for (int i = 0; i < 3; ++i) {
      if (i == rank || a[i][pj].is_zero()) continue;
      const AlgReal f = a[i][pj];
      for (int j = 0; j < 3; ++j) a[i][j] = a[i][j] - f * a[rank][j];
    }
  }
  int free_col = -1;
  for (int j = 0; j < 3; ++j) {
    if (!used[j]) {
      free_col = j;
      break;
    }
  }
  if (free_col < 0) throw Error(ErrorCode::kInternal, "matrix has a trivial kernel");
  Vec3 v{AlgReal(0), AlgReal(0), AlgReal(0)};
  v[free_col] = AlgReal(1);
  for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][free_col];
  return v;
}

namespace {

LinearMap::Rows shifted(const LinearMap& m, const AlgReal& lambda) {
  LinearMap::Rows a = m.rows();
  for (int i = 0; i < 3; ++i) a[i][i] = a[i][i] - lambda;
  return a;
}

// Brings all entries into one number field; returns the field and coordinates.
NumberField::Ptr common_field(std::vector<AlgReal>& values) {
  NumberField::Ptr f = NumberField::rationals();
  for (const AlgReal& v : values) {
    if (v.field()->id() == f->id() || v.is_rational()) continue;
    f = unify(f, RatPoly(), v.field(), v.coords()).field;
  }
  for (AlgReal& v : values) {
    if (v.field()->id() == f->id() || v.is_rational()) continue;
    auto img = f->embedding_of(*v.field());
    if (!img) throw Error(ErrorCode::kInternal, "entry field does not embed in the common field");
    v = AlgReal(f, f->compose(v.coords(), *img));
  }
  return f;
}

// det(xI - A) for a rational matrix (Faddeev-LeVerrier).
IntPoly rational_charpoly(const std::vector<linalg::Vec>& a) {
  const size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<linalg::Vec> mk(n, linalg::Vec(n));
  for (size_t k = 1; k <= n; ++k) {
    std::vector<linalg::Vec> next(n, linalg::Vec(n));
    for (size_t i = 0; i < n; ++i) {
      for (size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
          if (mk[l][j] != 0) next[i][j] += a[i][l] * mk[l][j];
        }
      }
      next[i][i] += c[n - k + 1];
    }
    mk = std::move(next);
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    }
    c[n - k] = -tr / static_cast<long>(k);
  }
  return primitive_part(RatPoly(std::move(c)));
}

// Real eigenvalue candidates in ascending order (a superset for algebraic entries).
std::vector<AlgReal> eigenvalue_candidates(const LinearMap& m) {
  if (m.is_rational()) {
    auto c = characteristic_coefficients(m);
    std::vector<Rational> coeffs{c[0].rational_value(), c[1].rational_value(), c[2].rational_value(), Rational(1)};
    return real_roots(primitive_part(RatPoly(std::move(coeffs))));
  }
  // The Q-linear map on F^3 has characteristic polynomial the norm of det(xI - m).
  std::vector<AlgReal> entries;
  for (const auto& row : m.rows()) entries.insert(entries.end(), row.begin(), row.end());
  NumberField::Ptr f = common_field(entries);
  const int d = f->degree();
  const size_t n = static_cast<size_t>(3 * d);
  std::vector<linalg::Vec> big(n, linalg::Vec(n));
  for (int col = 0; col < 3; ++col) {
    for (int k = 0; k < d; ++k) {
      const RatPoly basis = RatPoly::monomial(Rational(1), k);
      for (int row = 0; row < 3; ++row) {
        const AlgReal& e = entries[static_cast<size_t>(row * 3 + col)];
        RatPoly image = e.is_rational() ? e.rational_value() * basis : f->mul(e.coords(), basis);
        for (int i = 0; i < d; ++i) big[static_cast<size_t>(row * d + i)][static_cast<size_t>(col * d + k)] = image[i];
      }
    }
  }
  return real_roots(rational_charpoly(big));
}

}  // namespace

ProjPoint fixed_point(const LinearMap& m) {
  if (is_orthogonal(m) && m.determinant() == AlgReal(1)) {
    return ProjPoint::from_vector(kernel_vector(shifted(m, AlgReal(1))));
  }
  for (const AlgReal& lambda : eigenvalue_candidates(m)) {
    LinearMap::Rows a = shifted(m, lambda);
    if (!determinant(a).is_zero()) continue;
    return ProjPoint::from_vector(kernel_vector(a));
  }
  throw Error(ErrorCode::kInternal, "no real eigenvalue found");
}

bool preserves_edges_on_sample(const LinearMap& m, const AlgReal& cos_l, const std::vector<PointPair>& sample) {
  for (const auto& [p, q] : sample) {
    const bool before = dist_cos(p, q) == cos_l;
    const bool after = dist_cos(apply(m, p), apply(m, q)) == cos_l;
    if (before != after) return false;
  }
  return true;
}

namespace {

LinearMap::Rows axis_rotation(int axis, const Rational& c, const Rational& s) {
  const AlgReal one(1), zero(0), ac(c), as(s), ms(-s);
  switch (axis) {
    case 0:
      return {Vec3{one, zero, zero}, Vec3{zero, ac, ms}, Vec3{zero, as, ac}};
    case 1:
      return {Vec3{ac, zero, as}, Vec3{zero, one, zero}, Vec3{ms, zero, ac}};
    default:
      return {Vec3{ac, ms, zero}, Vec3{as, ac, zero}, Vec3{zero, zero, one}};
  }
}

LinearMap::Rows outer_reflection(const Vec3& u) {
  // I - 2 u u^T / <u, u>
  const AlgReal k = AlgReal(2) / dot(u, u);
  LinearMap::Rows r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = AlgReal(i == j ? 1 : 0) - k * u[i] * u[j];
  }
  return r;
}

}  // namespace

LinearMap random_rational_orthogonal(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> param(1, 9);
  LinearMap m = LinearMap::identity();
  for (int axis = 0; axis < 3; ++axis) {
    const long a = param(rng), b = param(rng);
    Rational h(a * a + b * b);
    Rational c = Rational(a * a - b * b) / h, s = Rational(2 * a * b) / h;
    if (rng() & 1) std::swap(c, s);
    if (rng() & 1) s = -s;
    if (rng() & 1) c = -c;
    m = m * LinearMap(axis_rotation(axis, c, s));
  }
  return m;
}

LinearMap rotation_sending(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) return LinearMap::identity();
  const Vec3& x = p.lift();
  const Vec3 y = aligned_lift(p, q);
  const LinearMap first(outer_reflection(x - y));
  const LinearMap second(outer_reflection(cross(x, y)));
  return second * first;
}

}  // namespace rotary
