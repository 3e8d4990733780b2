// Copyright 2026 The k3lat Authors
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

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

struct ShortVector {
  IntVector x;
  Integer norm;  // with the sign of the lattice

  friend bool operator==(const ShortVector&, const ShortVector&) = default;
};

namespace detail {

/// Q(x) = sum_i d_i (x_i + sum_{j>i} m_ij x_j)^2 for a positive-definite Gram.
struct QuadraticCompletion {
  std::vector<Rational> d;
  RatMatrix m;
};

inline QuadraticCompletion complete_squares(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  RatMatrix a = to_rational(gram);
  QuadraticCompletion out{std::vector<Rational>(n), RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.d[i] = a(i, i);
    for (std::size_t j = i + 1; j < n; ++j) out.m(i, j) = a(i, j) / a(i, i);
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = i + 1; l < n; ++l) a(k, l) -= a(i, k) * a(i, l) / a(i, i);
  }
  return out;
}

inline bool canonical_sign(const IntVector& x) {
  for (const auto& c : x)
    if (c != 0) return c > 0;
  return false;
}

}  // namespace detail

/// All nonzero x with |x^2| <= bound on a definite lattice, one of each pair
/// +-x (first nonzero coordinate positive), by Fincke-Pohst enumeration with
/// exact rational square completion. Sorted by |norm|, then lexicographically.
inline std::vector<ShortVector> short_vectors(const Lattice& l, const Integer& bound) {
  const Inertia s = l.signature();
  const std::size_t n = l.rank();
  if (n == 0) return {};
  if (s.plus != 0 && s.minus != 0) fail(ErrorCode::NotDefinite, "short vectors need a definite lattice");
  const int sign = s.plus > 0 ? 1 : -1;
  const IntMatrix g = sign > 0 ? l.gram() : -l.gram();
  const auto qc = detail::complete_squares(g);

  std::vector<ShortVector> out;
  IntVector x(n);
  std::vector<Rational> budget(n + 1);
  budget[n] = Rational(bound);
  // Recursive descent from the last coordinate.
  auto recurse = [&](auto&& self, std::size_t level) -> void {
    const std::size_t i = level - 1;
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += qc.m(i, j) * Rational(x[j]);
    const Rational& t = budget[level];
    auto fits = [&](const Integer& xi) {
      Rational y = Rational(xi) + c;
      return qc.d[i] * y * y <= t;
    };
    // Scan outward from the nearest integer to -c.
    Rational center = -c;
    Integer start = floor_div(center.get_num() * 2 + center.get_den(), center.get_den() * 2);
    auto visit = [&](const Integer& xi) {
      x[i] = xi;
      Rational y = Rational(xi) + c;
      budget[i] = t - qc.d[i] * y * y;
      if (i == 0) {
        if (detail::canonical_sign(x)) out.push_back({x, Integer(0)});
      } else {
        self(self, i);
      }
    };
    for (Integer xi = start; fits(xi); ++xi) visit(xi);
    for (Integer xi = start - 1; fits(xi); --xi) visit(xi);
    x[i] = 0;
  };
  recurse(recurse, n);
  for (auto& v : out) v.norm = l.norm(v.x);
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
    const Integer na = abs(a.norm), nb = abs(b.norm);
    if (na != nb) return na < nb;
    return a.x < b.x;
  });
  return out;
}

/// First x != 0 with x^2 == target, coordinates in [-box, box] and accept(x),
/// scanning in odometer order; nullopt means none in the box, not nonexistence.
template <class Accept>
std::optional<IntVector> witness_vector(const Lattice& l, const Integer& target, int box, Accept accept) {
  if (box < 1) fail(ErrorCode::InvalidArgument, "box must be at least 1");
  const std::size_t n = l.rank();
  if (n == 0) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!l.gram()(i, j).fits_slong_p() || abs(l.gram()(i, j)) > 1000000) fail(ErrorCode::InvalidArgument, "Gram entries too large for box scan");
  std::vector<long> g(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i * n + j] = l.gram()(i, j).get_si();
  if (!target.fits_slong_p()) return std::nullopt;
  const long want = target.get_si();
  std::vector<long> x(n, -box);
  while (true) {
    long s = 0;
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      zero = false;
      long t = 0;
      for (std::size_t j = 0; j < n; ++j) t += g[i * n + j] * x[j];
      s += x[i] * t;
    }
    if (!zero && s == want) {
      IntVector out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = x[i];
      if (accept(out)) return out;
    }
    std::size_t k = n;
    while (k > 0 && x[k - 1] == box) x[--k] = -box;
    if (k == 0) return std::nullopt;
    ++x[k - 1];
  }
}

inline std::optional<IntVector> witness_vector(const Lattice& l, const Integer& target, int box) {
  return witness_vector(l, target, box, [](const IntVector&) { return true; });
}

/// For lambda in L: whether lambda/2 lies in L^dual, and if so its class.
struct HalfClass {
  bool half_in_dual = false;
  std::optional<Element> element;
};

inline HalfClass disc_class_of_vector(const Lattice& l, const IntVector& lambda) {
  HalfClass out;
  RatVector half(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) half[i] = make_rational(lambda[i], 2);
  out.half_in_dual = l.in_dual(half);
  if (out.half_in_dual) {
    const auto d = discriminant_group(l);
    if (d.two_elementary()) out.element = d.element(half);
  }
  return out;
}

}  // namespace k3lat
