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
#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/cyclotomic.hpp"
#include "k3lat/finite_form.hpp"
#include "k3lat/matrix.hpp"
#include "k3lat/qseries.hpp"

namespace k3lat {

using CycVector = std::vector<CycEight>;
using CycMatrix = Matrix<CycEight>;

/// A generator letter with exponent +1 or -1. V = S^-1 T^2 S and Z = S^2 are
/// expanded when a word is parsed.
struct WeilLetter {
  char gen = 'S';  // 'S' or 'T'
  int power = 1;

  friend bool operator==(const WeilLetter&, const WeilLetter&) = default;
};
using WeilWord = std::vector<WeilLetter>;

inline WeilWord inverse_word(const WeilWord& w) {
  WeilWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.power = -l.power;
  return out;
}

namespace detail {

// word  := item*
// item  := ('S' | 'T' | 'V' | 'Z' | '(' word ')') ['^' ['-'] digits]
class WordParser {
 public:
  explicit WordParser(std::string s) : s_(std::move(s)) {}

  WeilWord parse() {
    WeilWord w = word();
    if (pos_ != s_.size()) throw ParseError(pos_, "unexpected character in word");
    if (w.empty()) throw ParseError(0, "empty word");
    return w;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  WeilWord word() {
    WeilWord out;
    for (skip(); pos_ < s_.size() && s_[pos_] != ')'; skip()) {
      WeilWord item = atom();
      int e = exponent();
      WeilWord base = e < 0 ? inverse_word(item) : item;
      for (int k = 0; k < std::abs(e); ++k) out.insert(out.end(), base.begin(), base.end());
    }
    return out;
  }

  WeilWord atom() {
    const char c = s_[pos_];
    const std::size_t at = pos_++;
    switch (c) {
      case 'S':
        return {{'S', 1}};
      case 'T':
        return {{'T', 1}};
      case 'V':
        return {{'S', -1}, {'T', 1}, {'T', 1}, {'S', 1}};
      case 'Z':
        return {{'S', 1}, {'S', 1}};
      case '(': {
        WeilWord inner = word();
        if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError(pos_, "missing ')'");
        ++pos_;
        return inner;
      }
      default:
        throw ParseError(at, std::string("unknown generator '") + c + "'");
    }
  }

  int exponent() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected exponent digits");
    const int e = std::stoi(s_.substr(start, pos_ - start));
    if (e > 64) throw ParseError(start, "exponent too large");
    return neg ? -e : e;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline WeilWord parse_word(const std::string& s) { return detail::WordParser(s).parse(); }

/// rho_L on C[D_L] for a nondegenerate 2-elementary form with signature sigma.
/// S acts through a Walsh-Hadamard transform; no dense matrix is formed.
class WeilRepresentation {
 public:
  WeilRepresentation(FiniteQuadraticForm q, int sigma) : q_(std::move(q)) {
    if (!q_.nondegenerate()) fail(ErrorCode::DegenerateForm, "Weil representation needs a nondegenerate form");
    if (q_.length() > 16) fail(ErrorCode::BoundExceeded, "form too long for the Weil representation");
    sigma_ = ((sigma % 8) + 8) % 8;
    const int ms = milgram_signature(q_);
    if (ms != sigma_)
      fail(ErrorCode::SignatureMismatch,
           "sigma " + std::to_string(sigma_) + " differs from the Milgram signature " + std::to_string(ms));
    // rho(S) = zeta^-sigma 2^(-a/2) H;  rho(S)^-1 is its conjugate transpose.
    scale_ = CycEight::zeta_pow(-sigma_) * CycEight::inv_sqrt2_pow(q_.length());
    scale_inv_ = scale_.conj();
  }

  const FiniteQuadraticForm& form() const noexcept { return q_; }
  int sigma() const noexcept { return sigma_; }
  std::size_t dimension() const noexcept { return q_.order(); }

  CycVector basis(Element g) const {
    CycVector e(dimension());
    e.at(g) = 1;
    return e;
  }

  /// rho(T)^k: e_g -> exp(pi i k q(g)) e_g.
  CycVector apply_T(CycVector x, int k = 1) const {
    for (std::size_t g = 0; g < x.size(); ++g) {
      const int h = q_.q_half(static_cast<Element>(g));
      if (h && !x[g].is_zero()) x[g] *= CycEight::zeta_pow(2L * h * k);
    }
    return x;
  }

  /// rho(S)^(+-1).
  CycVector apply_S(const CycVector& x, int sign = 1) const {
    CycVector y = x;
    const std::size_t n = y.size();
    for (std::size_t len = 1; len < n; len <<= 1)
      for (std::size_t i = 0; i < n; i += len << 1)
        for (std::size_t j = i; j < i + len; ++j) {
          CycEight u = y[j];
          y[j] += y[j + len];
          u -= y[j + len];
          y[j + len] = std::move(u);
        }
    // (Hx)[c] = sum_g (-1)^(g.c) x_g, so the value at delta sits at c = B delta.
    CycVector out(n);
    const CycEight& c = sign > 0 ? scale_ : scale_inv_;
    for (std::size_t d = 0; d < n; ++d) out[d] = c * y[q_.b_row(static_cast<Element>(d))];
    return out;
  }

  /// w x for w = g1 g2 ... gk, so gk acts first.
  CycVector apply(const WeilWord& w, CycVector x) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = it->gen == 'T' ? apply_T(std::move(x), it->power) : apply_S(x, it->power);
    return x;
  }

  CycMatrix matrix(const WeilWord& w) const {
    const std::size_t n = dimension();
    CycMatrix m(n, n);
    for (std::size_t g = 0; g < n; ++g) {
      const CycVector col = apply(w, basis(static_cast<Element>(g)));
      for (std::size_t i = 0; i < n; ++i) m(i, g) = col[i];
    }
    return m;
  }

  /// Column-by-column comparison of two words.
  bool words_equal(const WeilWord& a, const WeilWord& b) const {
    for (std::size_t g = 0; g < dimension(); ++g)
      if (apply(a, basis(static_cast<Element>(g))) != apply(b, basis(static_cast<Element>(g)))) return false;
    return true;
  }

  /// Numeric rho(S) x.
  std::vector<std::complex<double>> apply_S_numeric(const std::vector<std::complex<double>>& x) const {
    const std::complex<double> c = scale_.to_complex();
    std::vector<std::complex<double>> out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
      const Element row = q_.b_row(static_cast<Element>(d));
      std::complex<double> s = 0;
      for (std::size_t g = 0; g < x.size(); ++g) s += parity(row & g) ? -x[g] : x[g];
      out[d] = c * s;
    }
    return out;
  }

 private:
  FiniteQuadraticForm q_;
  int sigma_ = 0;
  CycEight scale_, scale_inv_;
};

inline CycMatrix weil_T(const FiniteQuadraticForm& q) {
  return WeilRepresentation(q, milgram_signature(q)).matrix({{'T', 1}});
}
inline CycMatrix weil_S(const FiniteQuadraticForm& q, int sigma) {
  return WeilRepresentation(q, sigma).matrix({{'S', 1}});
}
inline CycMatrix weil_word(const FiniteQuadraticForm& q, int sigma, const std::string& word) {
  return WeilRepresentation(q, sigma).matrix(parse_word(word));
}

/// v_k = sum of e_g over g with q(g) = k/2 mod 2, as 0/1 indicators.
inline std::array<std::vector<int>, 4> vk_vectors(const FiniteQuadraticForm& q) {
  std::array<std::vector<int>, 4> v;
  for (auto& x : v) x.assign(q.order(), 0);
  for (std::uint64_t g = 0; g < q.order(); ++g) v[q.q_half(static_cast<Element>(g))][g] = 1;
  return v;
}

/// The characteristic element 1_L: b(1_L, g) = q(g) mod 1 for all g.
inline Element one_element(const FiniteQuadraticForm& q) {
  std::vector<int> rhs;
  for (int k : q.q_generators()) rhs.push_back(k & 1);
  const auto sol = f2::solve(q.b_rows(), rhs, q.length());
  if (!sol) fail(ErrorCode::NotFound, "no characteristic element");
  if (!sol->directions.empty()) fail(ErrorCode::NotUnique, "characteristic element is not unique");
  return sol->particular;
}

struct CosetCheck {
  bool ok = false;
  std::string detail;
};

/// rho((S T^l)^-1) e_0 == zeta^sigma 2^(-a/2) sum_k i^(-l k) v_k.
inline CosetCheck coset_formula_check(const FiniteQuadraticForm& q, int sigma, int l) {
  const WeilRepresentation rho(q, sigma);
  const CycVector lhs = rho.apply({{'T', -l}, {'S', -1}}, rho.basis(0));
  const auto v = vk_vectors(q);
  const CycEight c = CycEight::zeta_pow(rho.sigma()) * CycEight::inv_sqrt2_pow(q.length());
  for (std::size_t g = 0; g < rho.dimension(); ++g) {
    CycEight rhs;
    for (int k = 0; k < 4; ++k)
      if (v[k][g]) rhs += c * CycEight::zeta_pow(-2L * l * k);
    if (rhs != lhs[g])
      return {false, "component " + std::to_string(g) + ": " + lhs[g].to_string() + " vs " + rhs.to_string()};
  }
  return {true, ""};
}

/// Vector-valued form: one series per element of D_L, with the three
/// summands kept apart for inspection.
struct VectorValuedForm {
  FiniteQuadraticForm form;
  std::map<Element, FracSeries> components;
  Rational weight;
  // F = psi e_0 + scale * sum_k h[k] v_k + psi_v e_{1_L}
  FracSeries psi;
  std::array<FracSeries, 4> h;
  FracSeries psi_v;
  Integer scale;
  Element one = 0;

  std::vector<std::complex<double>> eval(std::complex<double> tau) const {
    std::vector<std::complex<double>> out(form.order());
    for (const auto& [g, f] : components) out[g] = f.eval(tau);
    return out;
  }
};

/// B_L[psi_m] for L_- with invariants (r_minus, a_minus) and discriminant form
/// q; requires r_minus < 12 and m = 8 + sigma, sigma = 4 - r_minus.
inline VectorValuedForm lift_B(const FiniteQuadraticForm& q, int r_minus, int a_minus, const Rational& prec) {
  if (r_minus >= 12) fail(ErrorCode::UnsupportedInvariant, "the lift needs r_- < 12");
  if (r_minus < a_minus || (r_minus - a_minus) % 2) fail(ErrorCode::InvalidArgument, "r_- - a_- must be even and nonnegative");
  if (q.length() != a_minus) fail(ErrorCode::InvalidArgument, "form length differs from a_-");
  const int sigma = 4 - r_minus;
  const long m = 8 + sigma;
  if (prec <= 0) fail(ErrorCode::PrecisionTooLow, "precision must be positive");
  const WeilRepresentation rho(q, sigma);  // checks the signature

  VectorValuedForm f;
  f.form = q;
  f.weight = make_rational(sigma, 2);
  f.scale = Integer(1) << ((r_minus - a_minus) / 2);
  f.one = one_element(q);
  const FracSeries full = psi_m(m, 4 * prec);
  f.psi = full.truncated(FracSeries::units(prec));
  for (int k = 0; k < 4; ++k) f.h[k] = split_congruence(full, k);
  f.psi_v = psi_m_at_v(m, prec);
  for (std::uint64_t g = 0; g < q.order(); ++g) {
    FracSeries c = Rational(f.scale) * f.h[q.q_half(static_cast<Element>(g))];
    if (g == 0) c += f.psi;
    if (g == f.one) c += f.psi_v;
    f.components.emplace(static_cast<Element>(g), std::move(c));
  }
  return f;
}

struct PrincipalTerm {
  Element component;
  Rational exponent;
  Rational coefficient;

  friend bool operator==(const PrincipalTerm&, const PrincipalTerm&) = default;
};

/// All coefficients at nonpositive exponents, ordered by component then exponent.
inline std::vector<PrincipalTerm> principal_part(const std::map<Element, FracSeries>& components) {
  std::vector<PrincipalTerm> out;
  for (const auto& [g, f] : components)
    for (const auto& [e, c] : f.terms()) {
      if (e > 0) break;
      out.push_back({g, FracSeries::exponent(e), c});
    }
  return out;
}
inline std::vector<PrincipalTerm> principal_part(const VectorValuedForm& f) { return principal_part(f.components); }

/// max |F(-1/tau) - tau^(sigma/2) rho(S) F(tau)|, principal branch.
inline double modularity_residual(const VectorValuedForm& f, int sigma, std::complex<double> tau) {
  const WeilRepresentation rho(f.form, sigma);
  const auto lhs = f.eval(-1.0 / tau);
  const auto rhs = rho.apply_S_numeric(f.eval(tau));
  const std::complex<double> factor = std::pow(std::sqrt(tau), sigma);
  double err = 0;
  for (std::size_t g = 0; g < lhs.size(); ++g) err = std::max(err, std::abs(lhs[g] - factor * rhs[g]));
  return err;
}

}  // namespace k3lat
