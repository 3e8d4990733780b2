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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "k3lat/cyclotomic.hpp"
#include "k3lat/inertia.hpp"
#include "k3lat/matrix.hpp"
#include "k3lat/parallel.hpp"
#include "k3lat/smith.hpp"

namespace k3lat {
namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_symmetric(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

// Leibniz expansion: sum over permutations.
Integer leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Integer gcd_of_minors(const IntMatrix& m, std::size_t k) {
  // all k x k minors by row and column subsets
  const std::size_t r = m.rows(), c = m.cols();
  Integer g = 0;
  std::vector<bool> rs(r), cs(c);
  std::fill(rs.begin(), rs.begin() + k, true);
  do {
    std::fill(cs.begin(), cs.end(), false);
    std::fill(cs.begin(), cs.begin() + k, true);
    do {
      IntMatrix sub(k, k);
      std::size_t a = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (!rs[i]) continue;
        std::size_t b = 0;
        for (std::size_t j = 0; j < c; ++j)
          if (cs[j]) sub(a, b++) = m(i, j);
        ++a;
      }
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(leibniz_det(sub)).get_mpz_t());
    } while (std::prev_permutation(cs.begin(), cs.end()));
  } while (std::prev_permutation(rs.begin(), rs.end()));
  return g;
}

// Jacobi eigenvalue iteration on a symmetric double matrix.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  return ev;
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = random_matrix(rng, n, n, -6, 6);
    EXPECT_EQ(determinant(m), leibniz_det(m));
  }
}

TEST(Matrix, InverseTimesMatrixIsIdentity) {
  std::mt19937 rng(12);
  int checked = 0;
  while (checked < 20) {
    const IntMatrix m = random_matrix(rng, 4, 4, -5, 5);
    if (determinant(m) == 0) {
      EXPECT_THROW(inverse(m), Error);
      continue;
    }
    EXPECT_EQ(inverse(m) * to_rational(m), RatMatrix::identity(4));
    ++checked;
  }
}

TEST(Matrix, FloorDivAndMod) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(mod_floor(-7, 2), 1);
  EXPECT_EQ(make_rational(6, -4), Rational(-3, 2));
}

TEST(Smith, FactorizationAndDivisibility) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 2 + trial % 3, c = 2 + (trial / 3) % 3;
    const IntMatrix m = random_matrix(rng, r, c, -9, 9);
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.u * m * s.v, s.d);
    EXPECT_EQ(abs(determinant(s.u)), 1);
    EXPECT_EQ(abs(determinant(s.v)), 1);
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j) EXPECT_EQ(s.d(i, j), 0);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      EXPECT_GE(diag[i], 0);
      if (diag[i] != 0) EXPECT_EQ(diag[i + 1] % diag[i], 0);
      if (diag[i] == 0) EXPECT_EQ(diag[i + 1], 0);
    }
    // d1 d2 ... dk = gcd of k x k minors
    Integer prod = 1;
    for (std::size_t k = 1; k <= diag.size(); ++k) {
      prod *= diag[k - 1];
      EXPECT_EQ(prod, gcd_of_minors(m, k)) << "k = " << k;
    }
  }
}

TEST(Smith, HermiteSpansSameRowLattice) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix m = random_matrix(rng, 5, 3, -7, 7);
    const IntMatrix h = hermite_normal_form(m);
    // Same row lattice: equal gcd of maximal minors after stacking.
    ASSERT_LE(h.rows(), 3u);
    for (std::size_t i = 0; i < h.rows(); ++i) {
      // each HNF row is an integer combination of m's rows: check via rank of [m; row]
      IntMatrix stacked(m.rows() + 1, m.cols());
      for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) stacked(a, b) = m(a, b);
      for (std::size_t b = 0; b < m.cols(); ++b) stacked(m.rows(), b) = h(i, b);
      EXPECT_EQ(gcd_of_minors(stacked, h.rows()), gcd_of_minors(m, h.rows()));
    }
    EXPECT_EQ(gcd_of_minors(h, h.rows()), gcd_of_minors(m, h.rows()));
  }
}

TEST(Inertia, MatchesNumericEigenvalues) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    IntMatrix m = random_symmetric(rng, n, -4, 4);
    if (trial % 7 == 0)
      for (std::size_t i = 0; i < n; ++i) m(i, i) = 0;  // force hyperbolic pivots
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_d();
    Inertia want;
    for (double e : jacobi_eigenvalues(a)) {
      if (e > 1e-9)
        ++want.plus;
      else if (e < -1e-9)
        ++want.minus;
      else
        ++want.zero;
    }
    EXPECT_EQ(rational_inertia(m), want) << "trial " << trial;
  }
}

TEST(Inertia, HyperbolicPlane) {
  EXPECT_EQ(rational_inertia(IntMatrix{{0, 1}, {1, 0}}), (Inertia{1, 1, 0}));
  EXPECT_EQ(rational_inertia(IntMatrix{{0, 0}, {0, 0}}), (Inertia{0, 0, 2}));
  EXPECT_THROW(rational_inertia(IntMatrix{{0, 1}, {2, 0}}), Error);
}

TEST(CycEight, RingIdentities) {
  const CycEight z = CycEight::zeta();
  CycEight p = 1;
  for (int k = 0; k < 8; ++k) p *= z;
  EXPECT_EQ(p, CycEight(1));
  EXPECT_EQ(CycEight::sqrt2() * CycEight::sqrt2(), CycEight(2));
  EXPECT_EQ(CycEight::inv_sqrt2_pow(2) * CycEight(2), CycEight(1));
  EXPECT_EQ(CycEight::inv_sqrt2_pow(3) * CycEight::sqrt2() * CycEight::sqrt2() * CycEight::sqrt2(), CycEight(1));
  EXPECT_EQ(z * z.conj(), CycEight(1));
  EXPECT_EQ(CycEight::i() * CycEight::i(), CycEight(-1));
}

TEST(CycEight, AgreesWithComplexArithmetic) {
  std::mt19937 rng(16);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const CycEight a({d(rng), d(rng), d(rng), d(rng)}, trial % 3);
    const CycEight b({d(rng), d(rng), d(rng), d(rng)}, trial % 2);
    const std::complex<double> ca = a.to_complex(), cb = b.to_complex();
    EXPECT_LT(std::abs((a * b).to_complex() - ca * cb), 1e-9);
    EXPECT_LT(std::abs((a + b).to_complex() - (ca + cb)), 1e-9);
    EXPECT_LT(std::abs(a.conj().to_complex() - std::conj(ca)), 1e-9);
  }
}

TEST(CycEight, ToStringIsReadable) {
  EXPECT_EQ(CycEight(0).to_string(), "0");
  EXPECT_EQ(CycEight::zeta_pow(-1).to_string(), "-z^3");
  EXPECT_EQ((CycEight(1) + CycEight::i()).halve().to_string(), "(1 + z^2)/2");
}

TEST(Parallel, OrderIsDeterministic) {
  const auto v = parallel_map(1000, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], i * i);
  EXPECT_THROW(parallel_map(10, [](std::size_t i) -> int {
                 if (i == 7) fail(ErrorCode::NotFound, "seven");
                 return 0;
               }),
               Error);
}

}  // namespace
}  // namespace k3lat
