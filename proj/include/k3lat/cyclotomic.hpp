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

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "k3lat/matrix.hpp"

namespace k3lat {

/// Exact element of Z[zeta, 1/2] for zeta = exp(i*pi/4):
///   (c0 + c1 zeta + c2 zeta^2 + c3 zeta^3) / 2^e,
/// reduced so that e is minimal. Uses zeta^4 = -1.
class CycEight {
 public:
  CycEight() = default;
  CycEight(long n) { c_[0] = n; }  // NOLINT(google-explicit-constructor)
  CycEight(const Integer& n) { c_[0] = n; }  // NOLINT(google-explicit-constructor)
  CycEight(std::array<Integer, 4> coeffs, unsigned denom_exp) : c_(std::move(coeffs)), e_(denom_exp) {
    normalize();
  }

  /// zeta^k for any integer k.
  static CycEight zeta_pow(long k) {
    long r = ((k % 8) + 8) % 8;
    CycEight z;
    z.c_[0] = 0;
    z.c_[r % 4] = r < 4 ? 1 : -1;
    return z;
  }
  static CycEight zeta() { return zeta_pow(1); }
  static CycEight i() { return zeta_pow(2); }
  /// sqrt(2) = zeta + zeta^-1 = zeta - zeta^3.
  static CycEight sqrt2() { return CycEight({0, 1, 0, -1}, 0); }
  /// 2^(-k/2) for k >= 0.
  static CycEight inv_sqrt2_pow(unsigned k) {
    CycEight out = k % 2 ? sqrt2() : CycEight(1);
    out.e_ += k / 2 + k % 2;
    out.normalize();
    return out;
  }

  const Integer& coeff(int k) const { return c_[k]; }
  unsigned denom_exp() const noexcept { return e_; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  /// Complex conjugation: zeta -> zeta^-1 = -zeta^3.
  CycEight conj() const { return CycEight({c_[0], -c_[3], -c_[2], -c_[1]}, e_); }

  CycEight& operator+=(const CycEight& o) {
    align_add(o, 1);
    return *this;
  }
  CycEight& operator-=(const CycEight& o) {
    align_add(o, -1);
    return *this;
  }
  CycEight& operator*=(const CycEight& o) {
    std::array<Integer, 4> r;
    for (int a = 0; a < 4; ++a) {
      if (c_[a] == 0) continue;
      for (int b = 0; b < 4; ++b) {
        if (o.c_[b] == 0) continue;
        int k = a + b;
        if (k < 4)
          r[k] += c_[a] * o.c_[b];
        else
          r[k - 4] -= c_[a] * o.c_[b];
      }
    }
    c_ = std::move(r);
    e_ += o.e_;
    normalize();
    return *this;
  }
  /// Multiply by 2^-k.
  CycEight& halve(unsigned k = 1) {
    e_ += k;
    normalize();
    return *this;
  }

  friend CycEight operator+(CycEight a, const CycEight& b) { return a += b; }
  friend CycEight operator-(CycEight a, const CycEight& b) { return a -= b; }
  friend CycEight operator*(CycEight a, const CycEight& b) { return a *= b; }
  friend CycEight operator-(CycEight a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend bool operator==(const CycEight& a, const CycEight& b) { return a.e_ == b.e_ && a.c_ == b.c_; }

  std::complex<double> to_complex() const {
    const double s = std::numbers::sqrt2 / 2;
    const std::complex<double> z[4] = {{1, 0}, {s, s}, {0, 1}, {-s, s}};
    std::complex<double> acc = 0;
    for (int k = 0; k < 4; ++k) acc += c_[k].get_d() * z[k];
    return std::ldexp(1.0, -static_cast<int>(e_)) * acc;
  }

  /// Human-readable zeta-polynomial, e.g. "(1 + z^2)/2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k < 4; ++k) {
      if (c_[k] == 0) continue;
      Integer mag = abs(c_[k]);
      bool neg = c_[k] < 0;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (k == 0)
        s += mag.get_str();
      else {
        if (mag != 1) s += mag.get_str() + "*";
        s += k == 1 ? "z" : "z^" + std::to_string(k);
      }
    }
    if (e_ == 0) return s;
    return "(" + s + ")/" + Integer(Integer(1) << e_).get_str();
  }

 private:
  void align_add(const CycEight& o, int sign) {
    unsigned e = std::max(e_, o.e_);
    for (int k = 0; k < 4; ++k) {
      Integer lhs = c_[k] << (e - e_);
      Integer rhs = o.c_[k] << (e - o.e_);
      if (sign > 0)
        c_[k] = lhs + rhs;
      else
        c_[k] = lhs - rhs;
    }
    e_ = e;
    normalize();
  }

  void normalize() {
    if (is_zero()) {
      e_ = 0;
      return;
    }
    while (e_ > 0 && mpz_even_p(c_[0].get_mpz_t()) && mpz_even_p(c_[1].get_mpz_t()) &&
           mpz_even_p(c_[2].get_mpz_t()) && mpz_even_p(c_[3].get_mpz_t())) {
      for (auto& x : c_) x >>= 1;
      --e_;
    }
  }

  std::array<Integer, 4> c_{};
  unsigned e_ = 0;
};

}  // namespace k3lat
