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

#include "pecco/geom.hpp"

#include <algorithm>
#include <cmath>

namespace pecco {

namespace {

// Sign convention: first nonzero component nonnegative.
Vec2 canonical_sign(const Vec2& v) {
  if (v.x != 0.0) return v.x > 0.0 ? v : Vec2{-v.x, -v.y};
  return v.y >= 0.0 ? v : Vec2{-v.x, -v.y};
}

}  // namespace

SymEigen sym_eigen(const Mat2& s) {
  double scale = std::max(1.0, max_abs(s));
  if (std::abs(s.b - s.c) > 1e-10 * scale) {
    throw std::invalid_argument("sym_eigen: matrix is not symmetric");
  }
  double off = 0.5 * (s.b + s.c);
  double mean = 0.5 * (s.a + s.d);
  double diff = 0.5 * (s.a - s.d);
  double radius = std::hypot(diff, off);

  double l1 = mean + radius;
  double l2 = mean - radius;

  if (radius <= 0.0) {
    // Degenerate spectrum: any orthogonal Q works, identity is canonical.
    return {identity2<double>(), l1, l2};
  }

  // Eigenvector for l1 from the better-conditioned row of (S - l1 I).
  Vec2 v1;
  if (std::abs(diff + radius) >= std::abs(diff - radius)) {
    v1 = {diff + radius, off};
  } else {
    v1 = {off, radius - diff};
  }
  double n1 = norm(v1);
  v1 = {v1.x / n1, v1.y / n1};
  v1 = canonical_sign(v1);

  Vec2 v2 = canonical_sign(Vec2{-v1.y, v1.x});
  Mat2 q{v1.x, v2.x, v1.y, v2.y};
  if (det(q) < 0.0) {
    q.b = -q.b;
    q.d = -q.d;
  }
  return {q, l1, l2};
}

Mat2 expm(const Mat2& m) {
  // Scale so the Taylor core converges fast, then square back.
  double nrm = std::max(std::abs(m.a) + std::abs(m.b), std::abs(m.c) + std::abs(m.d));
  int squarings = 0;
  while (nrm > 0.5 && squarings < 60) {
    nrm *= 0.5;
    ++squarings;
  }
  double scale = std::ldexp(1.0, -squarings);
  Mat2 t = scale * m;

  Mat2 sum = identity2<double>();
  Mat2 term = identity2<double>();
  for (int k = 1; k <= 12; ++k) {
    term = (1.0 / k) * (term * t);
    sum = sum + term;
  }
  for (int k = 0; k < squarings; ++k) {
    sum = sum * sum;
  }
  return sum;
}

double chi2_quantile2(double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("chi2_quantile2: p must lie in [0, 1)");
  }
  return -2.0 * std::log1p(-p);
}

}  // namespace pecco
