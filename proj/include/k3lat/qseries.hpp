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

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

/// Truncated series sum c_e q^e with e in (1/24)Z, known for e < prec.
/// Exponents and the precision are stored as integers in units of 1/24.
class FracSeries {
 public:
  static constexpr std::int64_t kDen = 24;
  using Exponent = std::int64_t;

  FracSeries() = default;
  /// The zero series known below prec (units of 1/24).
  explicit FracSeries(Exponent prec_units) : prec_(prec_units) {}

  static FracSeries monomial(const Rational& c, Exponent e_units, Exponent prec_units) {
    FracSeries f(prec_units);
    f.set(e_units, c);
    return f;
  }
  static FracSeries constant(const Rational& c, Exponent prec_units) { return monomial(c, 0, prec_units); }

  /// q-exponent -> units; throws unless the exponent lies in (1/24)Z.
  static Exponent units(const Rational& e) {
    Rational u = e * kDen;
    if (u.get_den() != 1) fail(ErrorCode::InvalidArgument, "exponent " + e.get_str() + " is not in (1/24)Z");
    if (!u.get_num().fits_slong_p()) fail(ErrorCode::InvalidArgument, "exponent out of range");
    return u.get_num().get_si();
  }
  static Rational exponent(Exponent units) { return make_rational(units, kDen); }

  Exponent prec_units() const noexcept { return prec_; }
  Rational precision() const { return exponent(prec_); }
  const std::map<Exponent, Rational>& terms() const noexcept { return c_; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient at q^e; throws PrecisionTooLow if e is not below the precision.
  Rational coeff(const Rational& e) const { return coeff_units(units(e)); }
  Rational coeff_units(Exponent e) const {
    if (e >= prec_) fail(ErrorCode::PrecisionTooLow, "coefficient at q^" + exponent(e).get_str() + " is beyond the precision");
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
  }

  /// Lowest exponent with a nonzero coefficient.
  std::optional<Exponent> valuation() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first;
  }

  void set(Exponent e, const Rational& c) {
    if (e >= prec_) return;
    if (c == 0)
      c_.erase(e);
    else
      c_[e] = c;
  }
  void add_to(Exponent e, const Rational& c) {
    if (e >= prec_ || c == 0) return;
    Rational& slot = c_[e];
    slot += c;
    if (slot == 0) c_.erase(e);
  }

  FracSeries truncated(Exponent prec_units) const {
    FracSeries out(std::min(prec_, prec_units));
    for (const auto& [e, c] : c_)
      if (e < out.prec_) out.c_.emplace(e, c);
    return out;
  }

  /// q^shift * f.
  FracSeries shifted(Exponent shift) const {
    FracSeries out(prec_ + shift);
    for (const auto& [e, c] : c_) out.c_.emplace(e + shift, c);
    return out;
  }

  /// f(k tau) for a rational k > 0: q^e -> q^(k e).
  FracSeries substitute(const Rational& k) const {
    if (k <= 0) fail(ErrorCode::InvalidArgument, "substitution factor must be positive");
    auto scale = [&](Exponent e) -> Exponent {
      Rational u = k * Rational(e);
      if (u.get_den() != 1) fail(ErrorCode::NonIntegerExponents, "rescaled exponent leaves (1/24)Z");
      return u.get_num().get_si();
    };
    // Coefficients are known for k e < k prec.
    Rational p = k * Rational(prec_);
    mpz_class ceil_p;
    mpz_cdiv_q(ceil_p.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
    FracSeries out(ceil_p.get_si());
    for (const auto& [e, c] : c_) out.c_.emplace(scale(e), c);
    return out;
  }

  FracSeries& operator+=(const FracSeries& o) {
    prec_ = std::min(prec_, o.prec_);
    for (auto it = c_.begin(); it != c_.end();)
      it = it->first >= prec_ ? c_.erase(it) : std::next(it);
    for (const auto& [e, c] : o.c_) add_to(e, c);
    return *this;
  }
  FracSeries& operator-=(const FracSeries& o) { return *this += -o; }
  FracSeries& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& [e, c] : c_) c *= s;
    return *this;
  }

  friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
  friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
  friend FracSeries operator-(FracSeries a) {
    for (auto& [e, c] : a.c_) c = -c;
    return a;
  }
  friend FracSeries operator*(FracSeries a, const Rational& s) { return a *= s; }
  friend FracSeries operator*(const Rational& s, FracSeries a) { return a *= s; }

  /// Product; known below min(prec_f + v_g, prec_g + v_f).
  friend FracSeries operator*(const FracSeries& f, const FracSeries& g) {
    if (f.c_.empty() || g.c_.empty()) {
      const Exponent vf = f.valuation().value_or(f.prec_);
      const Exponent vg = g.valuation().value_or(g.prec_);
      return FracSeries(std::min(f.prec_ + vg, g.prec_ + vf));
    }
    const Exponent vf = *f.valuation();
    const Exponent vg = *g.valuation();
    FracSeries out(std::min(f.prec_ + vg, g.prec_ + vf));
    for (const auto& [ef, cf] : f.c_) {
      if (ef + vg >= out.prec_) break;
      for (const auto& [eg, cg] : g.c_) {
        const Exponent e = ef + eg;
        if (e >= out.prec_) break;
        out.c_[e] += cf * cg;
      }
    }
    for (auto it = out.c_.begin(); it != out.c_.end();)
      it = it->second == 0 ? out.c_.erase(it) : std::next(it);
    return out;
  }

  /// f^alpha for any integer alpha (negative powers need a nonzero leading
  /// coefficient, which every nonzero series has). J. C. P. Miller's recurrence
  /// on the unit part, stepping by the gcd of the exponent gaps.
  FracSeries pow(long alpha) const {
    if (c_.empty()) {
      if (alpha <= 0) fail(ErrorCode::InvalidArgument, "nonpositive power of a zero series");
      return FracSeries(prec_ * alpha);
    }
    const Exponent v = *valuation();
    const Exponent rel = prec_ - v;  // relative precision
    Exponent step = 0;
    for (const auto& [e, c] : c_) step = std::gcd(step, e - v);
    if (step == 0) step = rel > 0 ? rel : 1;
    const Exponent len = (rel + step - 1) / step;  // dense slots 0..len-1
    std::vector<Rational> a(len), h(len);
    for (const auto& [e, c] : c_) {
      const Exponent k = (e - v) / step;
      if (k < len) a[k] = c;
    }
    mpq_class a0_pow = 1;
    const Rational& a0 = a[0];
    for (long i = 0; i < std::labs(alpha); ++i) a0_pow *= a0;
    if (alpha < 0) a0_pow = 1 / a0_pow;
    h[0] = a0_pow;
    const Rational alpha1 = Rational(alpha + 1);
    for (Exponent k = 1; k < len; ++k) {
      Rational s = 0;
      for (Exponent j = 1; j <= k; ++j) {
        if (a[j] == 0) continue;
        s += (alpha1 * Rational(j) - Rational(k)) * a[j] * h[k - j];
      }
      h[k] = s / (Rational(k) * a0);
    }
    FracSeries out(alpha * v + rel);
    for (Exponent k = 0; k < len; ++k)
      if (h[k] != 0) out.set(alpha * v + k * step, h[k]);
    return out;
  }

  FracSeries inverse() const { return pow(-1); }

  /// Partial sum at tau with principal-branch q^e = exp(2 pi i tau e); throws
  /// InsufficientPrecision unless |q|^prec / (1 - |q|) < 1e-12.
  std::complex<double> eval(std::complex<double> tau) const {
    if (tau.imag() <= 0) fail(ErrorCode::InvalidArgument, "evaluation needs Im(tau) > 0");
    const double aq = std::exp(-2 * std::numbers::pi * tau.imag());
    const double tail = std::pow(aq, static_cast<double>(prec_) / kDen) / (1 - aq);
    if (!(tail < 1e-12)) fail(ErrorCode::InsufficientPrecision, "tail bound " + std::to_string(tail) + " exceeds 1e-12");
    const std::complex<double> two_pi_i_tau = std::complex<double>(0, 2 * std::numbers::pi) * tau;
    std::complex<double> s = 0;
    for (const auto& [e, c] : c_) s += c.get_d() * std::exp(two_pi_i_tau * (static_cast<double>(e) / kDen));
    return s;
  }

  /// "q^e: c" lines in increasing exponent order, then the O-term.
  std::string to_string() const {
    std::string s;
    for (const auto& [e, c] : c_) s += "q^" + exponent(e).get_str() + ": " + c.get_str() + "\n";
    return s + "O(q^" + precision().get_str() + ")\n";
  }

  friend bool operator==(const FracSeries& a, const FracSeries& b) { return a.prec_ == b.prec_ && a.c_ == b.c_; }

 private:
  std::map<Exponent, Rational> c_;
  Exponent prec_ = 0;
};

/// Keeps the integer exponents l = i mod 4 and maps q^l to q^(l/4).
inline FracSeries split_congruence(const FracSeries& f, int i) {
  if (i < 0 || i > 3) fail(ErrorCode::InvalidArgument, "congruence class must be 0..3");
  for (const auto& [e, c] : f.terms())
    if (e % FracSeries::kDen) fail(ErrorCode::NonIntegerExponents, "series has non-integral exponents");
  FracSeries out = f.substitute(make_rational(1, 4));
  FracSeries kept(out.prec_units());
  for (const auto& [e, c] : out.terms()) {
    const std::int64_t l = e / 6;  // e = 6 l in units
    if (((l % 4) + 4) % 4 == i) kept.set(e, c);
  }
  return kept;
}

/// Euler product prod_{n >= 1} (1 - q^(s n)) by the pentagonal number theorem.
inline FracSeries euler_product(long s, FracSeries::Exponent prec_units) {
  FracSeries f(prec_units);
  const long step = s * FracSeries::kDen;
  for (long k = 0;; ++k) {
    bool any = false;
    for (long kk : {k, -k}) {
      if (k == 0 && kk != 0) continue;
      const long e = step * (kk * (3 * kk - 1) / 2);
      if (e < prec_units) {
        f.set(e, (k % 2) ? -1 : 1);
        any = true;
      }
    }
    if (!any) break;
  }
  return f;
}

/// prod eta(s tau)^m over the (s, m) pairs, known below prec (q-units).
inline FracSeries eta_quotient(const std::vector<std::pair<long, long>>& spec, const Rational& prec) {
  if (spec.empty()) fail(ErrorCode::InvalidArgument, "eta quotient needs at least one factor");
  const auto p = FracSeries::units(prec);
  long total_v = 0;
  for (auto [s, m] : spec) {
    if (s <= 0) fail(ErrorCode::InvalidArgument, "eta scale must be positive");
    total_v += s * m;  // units of 1/24
  }
  FracSeries out = FracSeries::constant(1, p - total_v);
  for (auto [s, m] : spec) {
    // unit part prod (1 - q^(s n))^m; the q-power is applied once at the end
    FracSeries factor = euler_product(s, p - total_v).pow(m);
    out = out * factor;
  }
  return out.shifted(total_v);
}

inline FracSeries eta(long s, const Rational& prec) { return eta_quotient({{s, 1}}, prec); }

enum class ThetaKind { Integral, Shifted };

/// sum_n q^(n^2) or sum_n q^((n + 1/2)^2).
inline FracSeries theta_series(ThetaKind kind, const Rational& prec) {
  const auto p = FracSeries::units(prec);
  FracSeries f(p);
  for (long n = 0;; ++n) {
    const long e = kind == ThetaKind::Integral ? n * n * FracSeries::kDen : (2 * n + 1) * (2 * n + 1) * 6;
    if (e >= p) break;
    f.add_to(e, (kind == ThetaKind::Integral && n == 0) ? 1 : 2);
  }
  return f;
}

namespace detail {

// A sum of two products is trusted below the smaller of their precisions; the
// inputs are computed with a margin and the result is cut back to prec.
inline FracSeries require_precision(FracSeries f, FracSeries::Exponent p) {
  if (f.prec_units() < p) fail(ErrorCode::PrecisionTooLow, "internal precision margin too small");
  return f.truncated(p);
}

inline FracSeries psi_from(const FracSeries& e, const FracSeries& th, long m) {
  const FracSeries t_m = th.pow(m);
  const FracSeries t_8m = t_m * th.pow(8);
  return e * e * t_8m - Rational(2 * (m + 16)) * (e * t_m);
}

}  // namespace detail

/// E = eta(tau)^-8 eta(2 tau)^8 eta(4 tau)^-8 = q^-1 + 8 + 36 q + ...
inline FracSeries eta_1m8_2p8_4m8(const Rational& prec) { return eta_quotient({{1, -8}, {2, 8}, {4, -8}}, prec); }

/// psi_m = E^2 theta^(8+m) - 2(m+16) E theta^m.
inline FracSeries psi_m(long m, const Rational& prec) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "psi_m needs m >= 0");
  const auto p = FracSeries::units(prec);
  const FracSeries e = eta_1m8_2p8_4m8(prec + 2);
  const FracSeries th = theta_series(ThetaKind::Integral, prec + 3);
  return detail::require_precision(detail::psi_from(e, th, m), p);
}

/// psi_m|V from E|V = -16 eta(2 tau)^-16 eta(4 tau)^8 and theta|V = shifted theta.
inline FracSeries psi_m_at_v(long m, const Rational& prec) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "psi_m needs m >= 0");
  const auto p = FracSeries::units(prec);
  const FracSeries ev = Rational(-16) * eta_quotient({{2, -16}, {4, 8}}, prec + 2);
  const FracSeries th = theta_series(ThetaKind::Shifted, prec + 3);
  return detail::require_precision(detail::psi_from(ev, th, m), p);
}

/// h_m^(i) = sum_{l = i mod 4} d_m(l) q^(l/4) for psi_m = sum d_m(l) q^l.
inline FracSeries h_component(long m, int i, const Rational& prec) {
  return split_congruence(psi_m(m, 4 * prec), i);
}

}  // namespace k3lat
