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
#include <cstdlib>
#include <optional>

#include "k3lat/matrix.hpp"

namespace k3lat {

/// Result of a Smith normal form computation: u * m * v == d.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

inline std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace detail

/// Smith normal form by elementary operations, pivoting on the entry of least
/// absolute value. Diagonal entries are nonnegative and each divides the next.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      auto piv = detail::min_abs_entry(a, t);
      if (!piv) break;
      auto [pi, pj] = *piv;
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);  // truncating
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Enforce divisibility of the remaining block by the pivot.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      a.add_row(t, *bad_row, Integer(1));
      u.add_row(t, *bad_row, Integer(1));
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(a), std::move(u), std::move(v)};
}

/// Row-style Hermite normal form of the row span of `m`: upper triangular,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result has rank(m) rows.
inline IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid down the column until only row r is nonzero.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (!best || abs(a(i, c)) < abs(a(*best, c)))) best = i;
      if (!best) break;
      a.swap_rows(r, *best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Integer q = floor_div(a(i, c), a(r, c));
        a.add_row(i, r, -q);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(a(i, c), a(r, c));
      if (q != 0) a.add_row(i, r, -q);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

}  // namespace k3lat
