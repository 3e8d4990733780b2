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

#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

struct Inertia {
  int plus = 0;
  int minus = 0;
  int zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric rational matrix by exact congruence
/// diagonalization. A zero diagonal with a nonzero off-diagonal entry is
/// handled as a hyperbolic 2x2 block, which contributes (1, 1).
inline Inertia rational_inertia(const RatMatrix& m) {
  if (!m.symmetric()) fail(ErrorCode::InvalidArgument, "inertia requires a symmetric matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  std::vector<bool> live(n, true);
  std::size_t remaining = n;
  Inertia out;

  auto eliminate_one = [&](std::size_t i) {
    const Rational piv = a(i, i);
    (piv > 0 ? out.plus : out.minus) += 1;
    live[i] = false;
    --remaining;
    for (std::size_t p = 0; p < n; ++p) {
      if (!live[p] || a(p, i) == 0) continue;
      const Rational f = a(p, i) / piv;
      for (std::size_t r = 0; r < n; ++r)
        if (live[r]) a(p, r) -= f * a(i, r);
    }
  };

  auto eliminate_block = [&](std::size_t i, std::size_t j) {
    const Rational b = a(i, j);
    out.plus += 1;
    out.minus += 1;
    live[i] = live[j] = false;
    remaining -= 2;
    for (std::size_t p = 0; p < n; ++p) {
      if (!live[p]) continue;
      const Rational pi = a(p, i);
      const Rational pj = a(p, j);
      if (pi == 0 && pj == 0) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (live[r]) a(p, r) -= (pi * a(j, r) + pj * a(i, r)) / b;
    }
  };

  while (remaining > 0) {
    bool progressed = false;
    for (std::size_t i = 0; i < n && !progressed; ++i)
      if (live[i] && a(i, i) != 0) {
        eliminate_one(i);
        progressed = true;
      }
    if (progressed) continue;
    for (std::size_t i = 0; i < n && !progressed; ++i) {
      if (!live[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (live[j] && a(i, j) != 0) {
          eliminate_block(i, j);
          progressed = true;
          break;
        }
    }
    if (!progressed) {
      out.zero += static_cast<int>(remaining);
      break;
    }
  }
  return out;
}

inline Inertia rational_inertia(const IntMatrix& m) { return rational_inertia(to_rational(m)); }

}  // namespace k3lat
