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

#include <cmath>
#include <complex>
#include <numbers>

#include "k3lat/qseries.hpp"

namespace k3lat {
namespace {

using Poly = std::vector<Integer>;  // coefficients of q^0 .. q^(N-1)
constexpr int kN = 12;

Poly mul(const Poly& a, const Poly& b) {
  Poly c(kN, 0);
  for (int i = 0; i < kN; ++i)
    for (int j = 0; i + j < kN; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// prod_n (1 - q^(s n))^e by repeated multiplication or division by a monic factor.
Poly product_factor(int s, int e) {
  Poly p(kN, 0);
  p[0] = 1;
  for (int n = 1; s * n < kN; ++n)
    for (int t = 0; t < std::abs(e); ++t) {
      if (e > 0) {
        for (int i = kN - 1; i >= s * n; --i) p[i] -= p[i - s * n];
      } else {
        for (int i = s * n; i < kN; ++i) p[i] += p[i - s * n];  // times 1/(1 - x) = 1 + x + x^2 + ...
      }
    }
  return p;
}

Poly naive_theta() {
  Poly p(kN, 0);
  for (int n = -4; n <= 4; ++n)
    if (n * n < kN) p[n * n] += 1;
  return p;
}

Poly power(const Poly& a, int k) {
  Poly p(kN, 0);
  p[0] = 1;
  for (int i = 0; i < k; ++i) p = mul(p, a);
  return p;
}

// psi_m as a polynomial in q shifted by q^2: entry i is the coefficient of q^(i-2).
Poly naive_psi(int m) {
  // E = q^-1 * P with P = prod (1-q^n)^-8 (1-q^2n)^8 (1-q^4n)^-8
  const Poly p = mul(mul(product_factor(1, -8), product_factor(2, 8)), product_factor(4, -8));
  const Poly th = naive_theta();
  const Poly a = mul(mul(p, p), power(th, 8 + m));  // E^2 theta^(8+m) times q^2
  const Poly b = mul(p, power(th, m));              // E theta^m times q
  Poly out(kN, 0);
  for (int i = 0; i < kN; ++i) out[i] = a[i] - (i >= 1 ? Integer(2 * (m + 16)) * b[i - 1] : Integer(0));
  return out;
}

TEST(Series, EtaQuotientGolden) {
  const FracSeries e = eta_1m8_2p8_4m8(2);
  EXPECT_EQ(e.coeff(-1), 1);
  EXPECT_EQ(e.coeff(0), 8);
  EXPECT_EQ(e.coeff(1), 36);
  EXPECT_EQ(*e.valuation(), FracSeries::units(-1));
  const FracSeries f = eta_quotient({{2, -16}, {4, 8}}, 1);
  EXPECT_EQ(f.coeff(0), 1);
  EXPECT_EQ(f.terms().size(), 1u);
}

TEST(Series, EtaQuotientMatchesNaiveProduct) {
  const Poly p = mul(mul(product_factor(1, -8), product_factor(2, 8)), product_factor(4, -8));
  const FracSeries e = eta_1m8_2p8_4m8(kN - 1);
  for (int i = 0; i < kN; ++i) EXPECT_EQ(e.coeff(i - 1), Rational(p[i])) << i;
}

TEST(Series, EtaPentagonal) {
  const FracSeries e = eta(1, 10);
  const Poly p = product_factor(1, 1);
  for (int n = 0; n < 10; ++n) EXPECT_EQ(e.coeff(n + make_rational(1, 24)), Rational(p[n])) << n;
  EXPECT_EQ(*e.valuation(), 1);
}

TEST(Series, Theta) {
  const FracSeries t = theta_series(ThetaKind::Integral, 10);
  EXPECT_EQ(t.coeff(0), 1);
  EXPECT_EQ(t.coeff(1), 2);
  EXPECT_EQ(t.coeff(2), 0);
  EXPECT_EQ(t.coeff(9), 2);
  const FracSeries s = theta_series(ThetaKind::Shifted, 5);
  EXPECT_EQ(s.coeff(make_rational(1, 4)), 2);
  EXPECT_EQ(s.coeff(make_rational(9, 4)), 2);
  EXPECT_EQ(s.coeff(make_rational(5, 4)), 0);
}

TEST(Series, PsiMatchesNaiveArithmetic) {
  for (int m = 1; m <= 7; ++m) {
    const FracSeries f = psi_m(m, kN - 2);
    const Poly want = naive_psi(m);
    for (int i = 0; i < kN; ++i) EXPECT_EQ(f.coeff(i - 2), Rational(want[i])) << "m = " << m << ", q^" << i - 2;
    EXPECT_EQ(f.coeff(-2), 1);
    EXPECT_EQ(f.coeff(-1), 0);
    EXPECT_EQ(f.coeff(0), 2 * (-m * m - 9 * m + 124));
  }
}

TEST(Series, ProductPrecision) {
  const FracSeries a = FracSeries::monomial(1, -FracSeries::kDen, 2 * FracSeries::kDen);  // q^-1 + O(q^2)
  const FracSeries b = theta_series(ThetaKind::Integral, 5);                             // O(q^5)
  EXPECT_EQ((a * b).precision(), 2);  // min(2 + 0, 5 - 1)
  EXPECT_THROW((a * b).coeff(2), Error);
}

TEST(Series, InverseAndPowers) {
  const FracSeries e = eta(1, 12);
  const FracSeries one = e * e.inverse();
  EXPECT_EQ(one.terms().size(), 1u);
  EXPECT_EQ(one.coeff(0), 1);
  const FracSeries t = theta_series(ThetaKind::Integral, 12);
  EXPECT_EQ(t.pow(3), t * t * t);
  EXPECT_EQ(t.pow(-2) * t.pow(2), FracSeries::constant(1, t.prec_units()));
}

TEST(Series, SplitCongruence) {
  const FracSeries psi = psi_m(7, 24);
  FracSeries sum = FracSeries::constant(0, FracSeries::units(6));
  for (int i = 0; i < 4; ++i) sum += split_congruence(psi, i);
  EXPECT_EQ(sum, psi.substitute(make_rational(1, 4)));
  const FracSeries h2 = split_congruence(psi, 2);
  EXPECT_EQ(h2.coeff(make_rational(-1, 2)), 1);
  EXPECT_EQ(split_congruence(psi, 0).coeff(0), 24);
  EXPECT_EQ(h_component(7, 2, 3), split_congruence(psi_m(7, 12), 2));
  EXPECT_THROW(split_congruence(theta_series(ThetaKind::Shifted, 4), 0), Error);
}

TEST(Series, PsiAtV) {
  for (int m = 1; m <= 7; ++m) {
    const FracSeries v = psi_m_at_v(m, 4);
    ASSERT_TRUE(v.valuation());
    EXPECT_GE(FracSeries::exponent(*v.valuation()), make_rational(m, 4)) << m;
  }
}

TEST(Series, TranslationInvariance) {
  const FracSeries psi = psi_m(3, 6);
  const std::complex<double> tau(0.2, 0.9);
  EXPECT_LT(std::abs(psi.eval(tau + 1.0) - psi.eval(tau)), 1e-9 * std::abs(psi.eval(tau)));
}

TEST(Numeric, EtaAtI) {
  const FracSeries e = eta(1, 60);
  const std::complex<double> got = e.eval({0, 1});
  // direct product oracle
  const double q = std::exp(-2 * std::numbers::pi);
  double prod = std::exp(-2 * std::numbers::pi / 24);
  for (int n = 1; n < 200; ++n) prod *= 1 - std::pow(q, n);
  EXPECT_NEAR(got.real(), prod, 1e-8);
  EXPECT_NEAR(got.imag(), 0, 1e-12);
  EXPECT_NEAR(prod, std::tgamma(0.25) / (2 * std::pow(std::numbers::pi, 0.75)), 1e-12);
}

TEST(Numeric, ThetaAtI) {
  const FracSeries t = theta_series(ThetaKind::Integral, 60);
  double sum = 0;
  for (int n = -20; n <= 20; ++n) sum += std::exp(-2 * std::numbers::pi * n * n);
  EXPECT_NEAR(t.eval({0, 1}).real(), sum, 1e-12);
  // sum exp(-pi n^2) = pi^(1/4) / Gamma(3/4)
  EXPECT_NEAR(t.eval({0, 0.5}).real(), std::pow(std::numbers::pi, 0.25) / std::tgamma(0.75), 1e-12);
}

TEST(Numeric, ThetaInversion) {
  const FracSeries t = theta_series(ThetaKind::Integral, 60);
  for (const std::complex<double> tau : {std::complex<double>(0.1, 0.8), {-0.3, 0.6}, {0.45, 1.2}}) {
    const auto lhs = t.eval(-1.0 / (4.0 * tau));
    const auto rhs = std::sqrt(std::complex<double>(0, -2) * tau) * t.eval(tau);
    EXPECT_LT(std::abs(lhs - rhs), 1e-6);
  }
}

TEST(Numeric, SplitSumsToRescaledPsi) {
  const FracSeries psi = psi_m(5, 80);
  const std::complex<double> tau(0.1, 0.8);
  std::complex<double> sum = 0;
  for (int i = 0; i < 4; ++i) sum += split_congruence(psi, i).eval(tau);
  EXPECT_LT(std::abs(sum - psi.eval(tau / 4.0)), 1e-6 * std::abs(sum));
}

TEST(Numeric, TailBound) {
  EXPECT_THROW(theta_series(ThetaKind::Integral, 4).eval({0, 0.2}), Error);
  EXPECT_THROW(theta_series(ThetaKind::Integral, 4).eval({0, -1}), Error);
  EXPECT_NEAR(FracSeries::constant(1, 40 * FracSeries::kDen).eval({0.3, 0.4}).real(), 1, 1e-15);
}

TEST(Series, TextFormat) {
  const FracSeries t = theta_series(ThetaKind::Shifted, 3);
  EXPECT_EQ(t.to_string(), "q^1/4: 2\nq^9/4: 2\nO(q^3)\n");
}

}  // namespace
}  // namespace k3lat
