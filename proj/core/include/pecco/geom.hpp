// Copyright 2026 The pecco Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PECCO_GEOM_HPP
#define PECCO_GEOM_HPP

#include <cmath>
#include <stdexcept>

/**
 * \file
 * \brief Exact 2-D numeric kernel: vectors, 2x2 matrices, planar rotations,
 *  symmetric eigendecomposition, matrix exponential and the 2-dof chi-square
 *  quantile.
 *
 * Types are templated on the scalar so the same expressions run on plain
 * doubles and on reverse-mode autodiff duals.
 */

namespace pecco {

template <class T>
struct Vec2T {
  T x{};
  T y{};
};

/// Row-major 2x2 matrix [[a, b], [c, d]].
template <class T>
struct Mat2T {
  T a{};
  T b{};
  T c{};
  T d{};
};

using Vec2 = Vec2T<double>;
using Mat2 = Mat2T<double>;

template <class T>
Vec2T<T> operator+(const Vec2T<T>& u, const Vec2T<T>& v) {
  return {u.x + v.x, u.y + v.y};
}
template <class T>
Vec2T<T> operator-(const Vec2T<T>& u, const Vec2T<T>& v) {
  return {u.x - v.x, u.y - v.y};
}
template <class T, class S>
Vec2T<T> operator*(const S& s, const Vec2T<T>& v) {
  return {s * v.x, s * v.y};
}
template <class T>
T dot(const Vec2T<T>& u, const Vec2T<T>& v) {
  return u.x * v.x + u.y * v.y;
}
template <class T>
T squared_norm(const Vec2T<T>& v) {
  return v.x * v.x + v.y * v.y;
}
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

template <class T>
Mat2T<T> operator+(const Mat2T<T>& m, const Mat2T<T>& n) {
  return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
}
template <class T>
Mat2T<T> operator-(const Mat2T<T>& m, const Mat2T<T>& n) {
  return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
}
template <class T, class S>
Mat2T<T> operator*(const S& s, const Mat2T<T>& m) {
  return {s * m.a, s * m.b, s * m.c, s * m.d};
}
template <class T>
Mat2T<T> operator*(const Mat2T<T>& m, const Mat2T<T>& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
template <class T>
Vec2T<T> operator*(const Mat2T<T>& m, const Vec2T<T>& v) {
  return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}
template <class T>
Mat2T<T> transpose(const Mat2T<T>& m) {
  return {m.a, m.c, m.b, m.d};
}
template <class T>
T det(const Mat2T<T>& m) {
  return m.a * m.d - m.b * m.c;
}
template <class T>
T trace(const Mat2T<T>& m) {
  return m.a + m.d;
}
template <class T>
Mat2T<T> identity2() {
  return {T(1.0), T(0.0), T(0.0), T(1.0)};
}

/// M * M^T for any scalar type.
template <class T>
Mat2T<T> mmt(const Mat2T<T>& m) {
  return m * transpose(m);
}

inline double max_abs(const Mat2& m) {
  return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                  std::max(std::abs(m.c), std::abs(m.d)));
}

/// Planar rotation by an angle, applied through its 2x2 matrix
/// [[cos, -sin], [sin, cos]].
class Rotation {
 public:
  explicit Rotation(double angle)
      : angle_(normalize(angle)), cos_(std::cos(angle_)), sin_(std::sin(angle_)) {}

  double angle() const { return angle_; }
  double cos() const { return cos_; }
  double sin() const { return sin_; }

  Mat2 matrix() const { return {cos_, -sin_, sin_, cos_}; }
  Rotation inverse() const { return Rotation(-angle_); }
  Rotation compose(const Rotation& other) const { return Rotation(angle_ + other.angle_); }

 private:
  static double normalize(double a) {
    double two_pi = 2.0 * M_PI;
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
  }
  double angle_;
  double cos_;
  double sin_;
};

inline Vec2 rotate(const Rotation& g, const Vec2& v) {
  return {g.cos() * v.x - g.sin() * v.y, g.sin() * v.x + g.cos() * v.y};
}

/// g M g^T conjugation of a 2x2 matrix by a rotation.
inline Mat2 conjugate(const Rotation& g, const Mat2& m) {
  return g.matrix() * m * transpose(g.matrix());
}

/// Result of the symmetric 2x2 eigendecomposition S = Q diag(l1, l2) Q^T.
///
/// Q is a rotation (det +1); eigenvalues ordered l1 >= l2. The eigenvector
/// sign convention (first nonzero component nonnegative, then Q flipped to
/// det +1) makes the decomposition a deterministic function of S.
struct SymEigen {
  Mat2 q;
  double l1;
  double l2;
};

/// Eigendecomposition of a symmetric 2x2 matrix.
/// Throws std::invalid_argument when the input is not symmetric (1e-10).
SymEigen sym_eigen(const Mat2& s);

/// Matrix exponential by scaling-and-squaring with a 12-term Taylor core.
Mat2 expm(const Mat2& m);

/// Quantile of the chi-square distribution with 2 degrees of freedom:
/// the closed form -2 ln(1 - p). Requires 0 <= p < 1.
double chi2_quantile2(double p);

}  // namespace pecco

#endif  // PECCO_GEOM_HPP
