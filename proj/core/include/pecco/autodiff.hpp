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

#ifndef PECCO_AUTODIFF_HPP
#define PECCO_AUTODIFF_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace pecco {

/// Reverse-mode tape for one forward evaluation.
///
/// Every node stores at most two parents together with the local partial
/// derivatives computed on the forward pass; backward() replays them in
/// reverse to accumulate adjoints for every recorded scalar.
class Tape {
 public:
  struct Node {
    int a;
    int b;
    double pa;
    double pb;
  };

  int leaf(double value) {
    nodes_.push_back({-1, -1, 0.0, 0.0});
    values_.push_back(value);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int unary(int a, double pa, double value) {
    nodes_.push_back({a, -1, pa, 0.0});
    values_.push_back(value);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int binary(int a, int b, double pa, double pb, double value) {
    nodes_.push_back({a, b, pa, pb});
    values_.push_back(value);
    return static_cast<int>(nodes_.size()) - 1;
  }

  double value(int i) const { return values_[i]; }
  std::size_t size() const { return nodes_.size(); }

  void clear() {
    nodes_.clear();
    values_.clear();
  }
  void reserve(std::size_t n) {
    nodes_.reserve(n);
    values_.reserve(n);
  }

  /// Adjoints of every node with respect to the node `output`.
  std::vector<double> backward(int output) const {
    std::vector<double> adj(nodes_.size(), 0.0);
    adj[output] = 1.0;
    for (int i = static_cast<int>(nodes_.size()) - 1; i >= 0; --i) {
      double a = adj[i];
      if (a == 0.0) continue;
      const Node& n = nodes_[i];
      if (n.a >= 0) adj[n.a] += n.pa * a;
      if (n.b >= 0) adj[n.b] += n.pb * a;
    }
    return adj;
  }

 private:
  std::vector<Node> nodes_;
  std::vector<double> values_;
};

/// Scalar handle on a Tape. Carries its value so arithmetic does not have to
/// chase the tape for operands.
struct Dual {
  Tape* tape;
  int id;
  double v;
};

inline Dual make_dual(Tape& t, double value) { return {&t, t.leaf(value), value}; }

inline Dual operator+(const Dual& x, const Dual& y) {
  return {x.tape, x.tape->binary(x.id, y.id, 1.0, 1.0, x.v + y.v), x.v + y.v};
}
inline Dual operator-(const Dual& x, const Dual& y) {
  return {x.tape, x.tape->binary(x.id, y.id, 1.0, -1.0, x.v - y.v), x.v - y.v};
}
inline Dual operator*(const Dual& x, const Dual& y) {
  return {x.tape, x.tape->binary(x.id, y.id, y.v, x.v, x.v * y.v), x.v * y.v};
}
inline Dual operator/(const Dual& x, const Dual& y) {
  double v = x.v / y.v;
  return {x.tape, x.tape->binary(x.id, y.id, 1.0 / y.v, -v / y.v, v), v};
}
inline Dual operator-(const Dual& x) {
  return {x.tape, x.tape->unary(x.id, -1.0, -x.v), -x.v};
}

inline Dual operator+(const Dual& x, double c) {
  return {x.tape, x.tape->unary(x.id, 1.0, x.v + c), x.v + c};
}
inline Dual operator+(double c, const Dual& x) { return x + c; }
inline Dual operator-(const Dual& x, double c) { return x + (-c); }
inline Dual operator-(double c, const Dual& x) {
  return {x.tape, x.tape->unary(x.id, -1.0, c - x.v), c - x.v};
}
inline Dual operator*(const Dual& x, double c) {
  return {x.tape, x.tape->unary(x.id, c, x.v * c), x.v * c};
}
inline Dual operator*(double c, const Dual& x) { return x * c; }
inline Dual operator/(const Dual& x, double c) { return x * (1.0 / c); }
inline Dual operator/(double c, const Dual& x) {
  double v = c / x.v;
  return {x.tape, x.tape->unary(x.id, -v / x.v, v), v};
}

inline Dual tanh(const Dual& x) {
  double y = std::tanh(x.v);
  return {x.tape, x.tape->unary(x.id, 1.0 - y * y, y), y};
}
inline Dual exp(const Dual& x) {
  double y = std::exp(x.v);
  return {x.tape, x.tape->unary(x.id, y, y), y};
}
inline Dual log(const Dual& x) {
  return {x.tape, x.tape->unary(x.id, 1.0 / x.v, std::log(x.v)), std::log(x.v)};
}
inline Dual sqrt(const Dual& x) {
  double y = std::sqrt(x.v);
  return {x.tape, x.tape->unary(x.id, 0.5 / y, y), y};
}
/// max(0, x) with subgradient 0 at the kink.
inline Dual relu(const Dual& x) {
  double y = x.v > 0.0 ? x.v : 0.0;
  return {x.tape, x.tape->unary(x.id, x.v > 0.0 ? 1.0 : 0.0, y), y};
}

// Plain-double counterparts so templated numeric code accepts both scalars.
inline double relu(double x) { return x > 0.0 ? x : 0.0; }
inline double scalar_value(double x) { return x; }
inline double scalar_value(const Dual& x) { return x.v; }

}  // namespace pecco

#endif  // PECCO_AUTODIFF_HPP
