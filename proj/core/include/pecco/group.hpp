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

#ifndef PECCO_GROUP_HPP
#define PECCO_GROUP_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pecco/geom.hpp"

/**
 * \file
 * \brief Discretized SO(2): the regular representation on n_theta angular
 *  bins, and the intertwiners between plane vectors and angular fields.
 *
 * The group acts on a field by cyclic shift of its bins; a rotation by
 * 2*pi*s/n_theta is realized exactly on the grid. Vectors enter and leave
 * the field world through lift (inner products against bin directions) and
 * project (the first-harmonic readout), which are exact inverses of each
 * other for n_theta >= 3.
 */

namespace pecco {

/// Uniform angular grid with bin angles theta_i = 2*pi*i/n_theta.
class AngularGrid {
 public:
  explicit AngularGrid(int n_theta) : n_(n_theta) {
    if (n_theta < 4) throw std::invalid_argument("AngularGrid: n_theta must be >= 4");
    cos_.resize(n_);
    sin_.resize(n_);
    cos2_.resize(n_);
    sin2_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      double th = 2.0 * M_PI * i / n_;
      cos_[i] = std::cos(th);
      sin_[i] = std::sin(th);
      cos2_[i] = std::cos(2.0 * th);
      sin2_[i] = std::sin(2.0 * th);
    }
  }

  int size() const { return n_; }
  double angle(int i) const { return 2.0 * M_PI * i / n_; }
  double cos(int i) const { return cos_[i]; }
  double sin(int i) const { return sin_[i]; }
  double cos2(int i) const { return cos2_[i]; }
  double sin2(int i) const { return sin2_[i]; }

  /// Bin closest to the given angle (radians, any range).
  int nearest_bin(double angle) const {
    double t = angle * n_ / (2.0 * M_PI);
    long long b = static_cast<long long>(std::llround(t)) % n_;
    if (b < 0) b += n_;
    return static_cast<int>(b);
  }

 private:
  int n_;
  std::vector<double> cos_, sin_, cos2_, sin2_;
};

/// Multi-channel field on an angular grid; channel-major storage
/// (values[c * n_theta + bin]).
template <class T>
struct FieldT {
  int n_theta = 0;
  int channels = 0;
  std::vector<T> values;

  FieldT() = default;
  FieldT(int n, int c) : n_theta(n), channels(c), values(static_cast<std::size_t>(n) * c) {}

  T& at(int channel, int bin) { return values[static_cast<std::size_t>(channel) * n_theta + bin]; }
  const T& at(int channel, int bin) const {
    return values[static_cast<std::size_t>(channel) * n_theta + bin];
  }
};

using Field = FieldT<double>;

/// Regular-representation action: output bin i holds input bin (i - s) mod n.
template <class T>
FieldT<T> cyclic_shift(const FieldT<T>& f, int s) {
  if (f.values.size() % static_cast<std::size_t>(std::max(f.n_theta, 1)) != 0) {
    throw std::invalid_argument("cyclic_shift: field length not divisible by n_theta");
  }
  int n = f.n_theta;
  int shift = ((s % n) + n) % n;
  FieldT<T> out(n, f.channels);
  for (int c = 0; c < f.channels; ++c) {
    for (int i = 0; i < n; ++i) {
      out.at(c, i) = f.at(c, (i - shift + n) % n);
    }
  }
  return out;
}

/// Lift of a plane vector into a single-channel field: bin i holds
/// <v, (cos theta_i, sin theta_i)>. Rotating v by a grid angle shifts the
/// lifted field by the corresponding number of bins, exactly.
template <class T>
FieldT<T> lift(const Vec2T<T>& v, const AngularGrid& grid) {
  FieldT<T> out(grid.size(), 1);
  for (int i = 0; i < grid.size(); ++i) {
    out.at(0, i) = grid.cos(i) * v.x + grid.sin(i) * v.y;
  }
  return out;
}

/// First-harmonic readout: (2/n) * sum_i f_i (cos theta_i, sin theta_i).
/// Inverse of lift for n_theta >= 3.
template <class T>
Vec2T<T> project(const FieldT<T>& f, const AngularGrid& grid) {
  if (grid.size() < 3) throw std::invalid_argument("project: n_theta must be >= 3");
  T x = f.at(0, 0) * grid.cos(0);
  T y = f.at(0, 0) * grid.sin(0);
  for (int i = 1; i < grid.size(); ++i) {
    x = x + f.at(0, i) * grid.cos(i);
    y = y + f.at(0, i) * grid.sin(i);
  }
  double w = 2.0 / grid.size();
  return {w * x, w * y};
}

}  // namespace pecco

#endif  // PECCO_GROUP_HPP
