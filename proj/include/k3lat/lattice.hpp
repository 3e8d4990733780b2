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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/finite_form.hpp"
#include "k3lat/inertia.hpp"
#include "k3lat/matrix.hpp"
#include "k3lat/smith.hpp"

namespace k3lat {

/// A nondegenerate integral lattice given by its Gram matrix on a labeled basis.
/// Vectors are coordinate columns in that basis.
class Lattice {
 public:
  Lattice() = default;

  explicit Lattice(IntMatrix gram, std::vector<std::string> labels = {})
      : gram_(std::move(gram)), labels_(std::move(labels)) {
    if (!gram_.symmetric()) fail(ErrorCode::InvalidArgument, "Gram matrix must be square and symmetric");
    if (labels_.empty())
      for (std::size_t i = 0; i < gram_.rows(); ++i) labels_.push_back("b" + std::to_string(i + 1));
    if (labels_.size() != gram_.rows()) fail(ErrorCode::InvalidArgument, "label count differs from rank");
    if (determinant(gram_) == 0) fail(ErrorCode::Singular, "Gram matrix is degenerate");
  }

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  Integer det() const { return determinant(gram_); }
  Integer disc_order() const { return abs(det()); }

  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (mpz_odd_p(gram_(i, i).get_mpz_t())) return false;
    return true;
  }

  Inertia signature() const { return rational_inertia(gram_); }

  bool is_definite() const {
    const Inertia s = signature();
    return s.plus == 0 || s.minus == 0;
  }

  Rational inner(const RatVector& x, const RatVector& y) const { return pairing(to_rational(gram_), x, y); }
  Integer norm(const IntVector& x) const {
    Integer s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_(i, j) * x[j];
    }
    return s;
  }

  /// x in L (x) Q lies in the dual iff G x is integral.
  bool in_dual(const RatVector& x) const { return is_integral(mat_vec(to_rational(gram_), x)); }

  /// gamma^T G gamma == G.
  bool preserves(const IntMatrix& gamma) const {
    if (gamma.rows() != rank() || gamma.cols() != rank()) return false;
    return gamma.transpose() * gram_ * gamma == gram_;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_ && a.labels_ == b.labels_; }

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

inline Lattice rescale(const Lattice& l, const Integer& n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "rescaling factor must be nonzero");
  return Lattice(n * l.gram(), l.labels());
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return Lattice(block_diagonal(a.gram(), b.gram()), std::move(labels));
}

inline Lattice power(const Lattice& a, int m) {
  Lattice out;
  for (int i = 0; i < m; ++i) out = direct_sum(out, a);
  return out;
}

// Standard lattices. Root lattices follow the negative-definite convention.

inline Lattice lattice_U() { return Lattice(IntMatrix{{0, 1}, {1, 0}}, {"u", "v"}); }

inline Lattice lattice_diag(const Integer& k, std::string label = "") {
  if (label.empty()) label = k > 0 ? "h" : "e";
  return Lattice(IntMatrix{{k}}, {std::move(label)});
}

inline Lattice lattice_A1() { return lattice_diag(-2, "a"); }

inline Lattice lattice_from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges, const std::string& prefix) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [i, j] : edges) g(i - 1, j - 1) = g(j - 1, i - 1) = 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return Lattice(std::move(g), std::move(labels));
}

inline Lattice lattice_E8() {
  return lattice_from_edges(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}, "r");
}

inline Lattice lattice_D4() { return lattice_from_edges(4, {{1, 2}, {2, 3}, {2, 4}}, "d"); }

inline Lattice lattice_D6() { return lattice_from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}, "d"); }

inline Lattice lattice_E7() { return lattice_from_edges(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}}, "s"); }

/// M_n = <2> + <-2>^(n-1) on the basis h, e1, ..., e(n-1).
inline Lattice lattice_M(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "M_n needs n >= 1");
  IntMatrix g(n, n);
  std::vector<std::string> labels{"h"};
  g(0, 0) = 2;
  for (int i = 1; i < n; ++i) {
    g(i, i) = -2;
    labels.push_back("e" + std::to_string(i));
  }
  return Lattice(std::move(g), std::move(labels));
}

/// U^3 + E8^2, signature (3, 19).
inline Lattice lattice_K3() { return direct_sum(power(lattice_U(), 3), power(lattice_E8(), 2)); }

/// D_L = L^dual / L with explicit generators.
struct DiscriminantGroup {
  std::vector<Integer> orders;    // elementary divisors > 1
  std::vector<RatVector> lifts;   // generator lifts in L^dual
  IntMatrix reducer;              // rows of U*G for the nontrivial divisors

  std::size_t length() const noexcept { return orders.size(); }
  bool two_elementary() const {
    for (const auto& d : orders)
      if (d != 2) return false;
    return true;
  }
  Integer order() const {
    Integer n = 1;
    for (const auto& d : orders) n *= d;
    return n;
  }

  /// Coordinates of the class of x in L^dual, each reduced mod its order.
  std::vector<Integer> coordinates(const RatVector& x) const {
    std::vector<Integer> out(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += Rational(reducer(i, j)) * x[j];
      if (s.get_den() != 1) fail(ErrorCode::NotInDual, "vector is not in the dual lattice");
      out[i] = mod_floor(s.get_num(), orders[i]);
    }
    return out;
  }

  /// The class of x as a bitmask; requires a 2-elementary group.
  Element element(const RatVector& x) const {
    if (!two_elementary()) fail(ErrorCode::NotTwoElementary, "discriminant group is not 2-elementary");
    Element e = 0;
    auto c = coordinates(x);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) e |= Element(1) << i;
    return e;
  }

  RatVector lift(Element x) const {
    RatVector v(lifts.empty() ? 0 : lifts[0].size());
    for (std::size_t i = 0; i < lifts.size(); ++i)
      if ((x >> i) & 1)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += lifts[i][j];
    return v;
  }
};

inline DiscriminantGroup discriminant_group(const Lattice& l) {
  const std::size_t n = l.rank();
  DiscriminantGroup out;
  if (n == 0) return out;
  const SmithForm snf = smith_normal_form(l.gram());
  const IntMatrix ug = snf.u * l.gram();
  const RatMatrix ginv = inverse(l.gram());
  const RatMatrix uinv = inverse(snf.u);
  const RatMatrix lift_all = ginv * uinv;  // column i maps to e_i under U G
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (snf.d(i, i) != 1) keep.push_back(i);
  out.reducer = IntMatrix(keep.size(), n);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const std::size_t i = keep[k];
    out.orders.push_back(snf.d(i, i));
    out.lifts.push_back(lift_all.col(i));
    for (std::size_t j = 0; j < n; ++j) out.reducer(k, j) = ug(i, j);
  }
  return out;
}

namespace detail {

inline void require_two_elementary(const DiscriminantGroup& d) {
  if (!d.two_elementary()) fail(ErrorCode::NotTwoElementary, "some elementary divisor exceeds 2");
  if (d.length() > static_cast<std::size_t>(FiniteQuadraticForm::kMaxLength))
    fail(ErrorCode::InvalidArgument, "discriminant length exceeds the supported bound");
}

}  // namespace detail

/// b_L on the generators as bit rows (bit set means 1/2 mod 1). Works for odd L.
inline std::vector<Element> discriminant_bilinear(const Lattice& l, const DiscriminantGroup& d) {
  detail::require_two_elementary(d);
  const std::size_t a = d.length();
  std::vector<Element> rows(a, 0);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      const Rational v = l.inner(d.lifts[i], d.lifts[j]);
      if (v.get_den() != 1) rows[i] |= Element(1) << j;
    }
  return rows;
}

inline FiniteQuadraticForm discriminant_form(const Lattice& l, const DiscriminantGroup& d) {
  detail::require_two_elementary(d);
  if (!l.is_even()) fail(ErrorCode::OddLattice, "q_L needs an even lattice; only b_L is defined");
  std::vector<int> q;
  for (const auto& x : d.lifts) {
    const Rational v = 2 * l.inner(x, x);  // half-units
    q.push_back(static_cast<int>(mod_floor(v.get_num(), 4).get_si()));
  }
  return FiniteQuadraticForm(std::move(q), discriminant_bilinear(l, d));
}

inline FiniteQuadraticForm discriminant_form(const Lattice& l) { return discriminant_form(l, discriminant_group(l)); }

/// (r+, r-, a, delta) of an even 2-elementary lattice.
struct MainInvariant {
  int r_plus = 0;
  int r_minus = 0;
  int a = 0;
  int delta = 0;

  int rank() const noexcept { return r_plus + r_minus; }
  /// The hyperbolic triplet (r, a, delta) with r the rank.
  std::array<int, 3> triplet() const noexcept { return {rank(), a, delta}; }
  friend bool operator==(const MainInvariant&, const MainInvariant&) = default;
};

inline MainInvariant main_invariant(const Lattice& l) {
  const auto q = discriminant_form(l);
  const Inertia s = l.signature();
  return {s.plus, s.minus, q.length(), parity_delta(q)};
}

/// Coarse invariants used to compare lattices that may be odd.
struct LatticeSummary {
  std::size_t rank = 0;
  int r_plus = 0;
  int r_minus = 0;
  Integer disc_order;
  bool even = true;

  friend bool operator==(const LatticeSummary&, const LatticeSummary&) = default;
};

inline LatticeSummary summarize(const Lattice& l) {
  const Inertia s = l.signature();
  return {l.rank(), s.plus, s.minus, l.disc_order(), l.is_even()};
}

/// An overlattice together with its basis expressed in the parent lattice.
struct Overlattice {
  Lattice lattice;
  RatMatrix basis;  // column j is the j-th new basis vector in parent coordinates
  Integer index;

  /// Parent coordinates of a vector given in overlattice coordinates.
  RatVector to_parent(const RatVector& y) const { return mat_vec(basis, y); }
  RatVector from_parent(const RatVector& x) const { return mat_vec(inverse(basis), x); }

  /// An isometry of the parent written on the new basis; throws if gamma does
  /// not preserve the overlattice.
  IntMatrix transport(const IntMatrix& gamma) const {
    const RatMatrix g = inverse(basis) * to_rational(gamma) * basis;
    if (!is_integral(g.data())) fail(ErrorCode::NotIsometry, "isometry does not preserve the overlattice");
    return to_integer(g);
  }
};

/// M = L + <glue>, on a Hermite-normal-form basis.
inline Overlattice overlattice(const Lattice& l, const std::vector<RatVector>& glue) {
  const std::size_t n = l.rank();
  const RatMatrix g = to_rational(l.gram());
  for (std::size_t k = 0; k < glue.size(); ++k) {
    if (glue[k].size() != n) fail(ErrorCode::InvalidArgument, "glue vector has the wrong length");
    if (!l.in_dual(glue[k])) fail(ErrorCode::NotInDual, "glue vector " + std::to_string(k + 1) + " is not in the dual lattice");
  }
  for (std::size_t i = 0; i < glue.size(); ++i)
    for (std::size_t j = i; j < glue.size(); ++j)
      if (pairing(g, glue[i], glue[j]).get_den() != 1)
        fail(ErrorCode::NotIntegral, "glue vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                         " pair non-integrally");
  Integer d = 1;
  for (const auto& v : glue) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), common_denominator(v).get_mpz_t());
  IntMatrix gens(n + glue.size(), n);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = d;
  for (std::size_t k = 0; k < glue.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) gens(n + k, j) = Rational(glue[k][j] * d).get_num();
  const IntMatrix h = hermite_normal_form(gens);
  RatMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(j, i) = make_rational(h(i, j), d);
  Integer dn = 1;
  for (std::size_t i = 0; i < n; ++i) dn *= d;
  const Integer index = dn / abs(determinant(h));
  IntMatrix gram = to_integer(basis.transpose() * g * basis);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("m" + std::to_string(i + 1));
  return {Lattice(std::move(gram), std::move(labels)), std::move(basis), index};
}

/// L^dual(2) on the dual basis: Gram 2 G^-1.
inline Lattice dual_rescaled(const Lattice& l) {
  const RatMatrix m = Rational(2) * inverse(l.gram());
  if (!is_integral(m.data())) fail(ErrorCode::NotTwoElementary, "L^dual(2) is not integral; L is not 2-elementary");
  std::vector<std::string> labels;
  for (const auto& s : l.labels()) labels.push_back(s + "*");
  return Lattice(to_integer(m), std::move(labels));
}

}  // namespace k3lat
