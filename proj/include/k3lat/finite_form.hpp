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
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "k3lat/cyclotomic.hpp"
#include "k3lat/matrix.hpp"
#include "k3lat/parallel.hpp"

namespace k3lat {

/// An element of (Z/2)^a, bit i standing for the i-th generator.
using Element = std::uint32_t;

inline int parity(std::uint64_t x) { return std::popcount(x) & 1; }
inline Element high_bit(Element x) { return x ? Element(1) << (31 - std::countl_zero(x)) : 0; }

/// Linear algebra over F2 on bitmask vectors.
namespace f2 {

/// Reduced row echelon basis of span(v), pivots at highest bits, sorted descending.
inline std::vector<Element> rref(const std::vector<Element>& v) {
  std::vector<Element> basis;
  for (Element x : v) {
    for (Element b : basis)
      if (x & high_bit(b)) x ^= b;
    if (!x) continue;
    const Element hb = high_bit(x);
    for (Element& b : basis)
      if (b & hb) b ^= x;
    basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

inline bool in_span(const std::vector<Element>& rref_basis, Element x) {
  for (Element b : rref_basis)
    if (x & high_bit(b)) x ^= b;
  return x == 0;
}

/// Every element of the span, in increasing numeric order.
inline std::vector<Element> span(const std::vector<Element>& basis) {
  std::vector<Element> out{0};
  for (Element b : basis) {
    const std::size_t n = out.size();
    bool fresh = true;
    for (std::size_t i = 0; i < n && fresh; ++i)
      if (out[i] == b) fresh = false;
    if (!fresh) continue;
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Affine solution set {x in F2^a : parity(rows[i] & x) == rhs[i]}.
struct AffineSpace {
  Element particular = 0;
  std::vector<Element> directions;
};

inline std::optional<AffineSpace> solve(const std::vector<Element>& rows, const std::vector<int>& rhs, int a) {
  const std::uint64_t rhs_bit = std::uint64_t(1) << a;
  const std::uint64_t mask = rhs_bit - 1;
  std::vector<std::uint64_t> basis;  // reduced on pivots within mask
  std::vector<std::uint64_t> pivots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t x = rows[i] | (rhs[i] ? rhs_bit : 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (x & pivots[k]) x ^= basis[k];
    if ((x & mask) == 0) {
      if (x & rhs_bit) return std::nullopt;
      continue;
    }
    const std::uint64_t p = std::uint64_t(1) << (63 - std::countl_zero(x & mask));
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k] & p) basis[k] ^= x;
    basis.push_back(x);
    pivots.push_back(p);
  }
  AffineSpace out;
  Element pivot_mask = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    pivot_mask |= static_cast<Element>(pivots[k]);
    if (basis[k] & rhs_bit) out.particular |= static_cast<Element>(pivots[k]);
  }
  for (int f = 0; f < a; ++f) {
    const Element fb = Element(1) << f;
    if (pivot_mask & fb) continue;
    Element dir = fb;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k] & fb) dir |= static_cast<Element>(pivots[k]);
    out.directions.push_back(dir);
  }
  return out;
}

/// Calls f on every point of the affine space (Gray-code order).
template <class F>
void for_each_point(const AffineSpace& s, F&& f) {
  Element x = s.particular;
  const std::uint64_t n = std::uint64_t(1) << s.directions.size();
  f(x);
  for (std::uint64_t i = 1; i < n; ++i) {
    x ^= s.directions[std::countr_zero(i)];
    f(x);
  }
}

}  // namespace f2

/// A nondegenerate-or-not quadratic form on (Z/2)^a with q valued in (1/2)Z/2Z
/// and b valued in (1/2)Z/Z. Stored by generator data: q on generators in
/// half-units mod 4 (q = k/2), and b as bit rows (bit set means b = 1/2).
class FiniteQuadraticForm {
 public:
  static constexpr int kMaxLength = 30;
  static constexpr int kCacheLength = 12;

  FiniteQuadraticForm() = default;

  FiniteQuadraticForm(std::vector<int> q_half, std::vector<Element> b_rows)
      : q_(std::move(q_half)), b_(std::move(b_rows)) {
    const int a = length();
    if (a > kMaxLength) fail(ErrorCode::InvalidArgument, "finite form length exceeds " + std::to_string(kMaxLength));
    if (static_cast<int>(b_.size()) != a) fail(ErrorCode::InvalidArgument, "b must have one row per generator");
    const Element full = a == 32 ? ~Element(0) : (Element(1) << a) - 1;
    for (int i = 0; i < a; ++i) {
      q_[i] = ((q_[i] % 4) + 4) % 4;
      if (b_[i] & ~full) fail(ErrorCode::InvalidArgument, "b row has bits beyond the form length");
      for (int j = 0; j < a; ++j)
        if (bit(b_[i], j) != bit(b_[j], i)) fail(ErrorCode::InvalidArgument, "b is not symmetric");
      if ((q_[i] & 1) != bit(b_[i], i))
        fail(ErrorCode::InvalidArgument, "q(g) mod 1 must equal b(g, g) for generator " + std::to_string(i));
    }
    if (a <= kCacheLength) {
      cache_.resize(std::size_t(1) << a);
      cache_[0] = 0;
      for (Element x = 1; x < cache_.size(); ++x) {
        const int low = std::countr_zero(x);
        const Element rest = x & (x - 1);
        cache_[x] = static_cast<std::uint8_t>((cache_[rest] + q_[low] + 2 * parity(b_[low] & rest)) & 3);
      }
    }
  }

  int length() const noexcept { return static_cast<int>(q_.size()); }
  std::uint64_t order() const noexcept { return std::uint64_t(1) << length(); }
  Element all_elements_mask() const noexcept { return static_cast<Element>(order() - 1); }

  /// q(x) in half-units mod 4.
  int q_half(Element x) const {
    if (!cache_.empty()) return cache_[x];
    int acc = 0;
    Element prefix = 0;
    for (Element y = x; y; y &= y - 1) {
      const int i = std::countr_zero(y);
      acc += q_[i] + 2 * parity(b_[i] & prefix);
      prefix |= Element(1) << i;
    }
    return acc & 3;
  }
  Rational q(Element x) const { return make_rational(q_half(x), 2); }

  /// Bit j of the result is 2*b(x, g_j).
  Element b_row(Element x) const {
    Element r = 0;
    for (Element y = x; y; y &= y - 1) r ^= b_[std::countr_zero(y)];
    return r;
  }
  /// 2*b(x, y) in {0, 1}.
  int b_half(Element x, Element y) const { return parity(b_row(x) & y); }

  const std::vector<int>& q_generators() const noexcept { return q_; }
  const std::vector<Element>& b_rows() const noexcept { return b_; }

  bool nondegenerate() const { return static_cast<int>(f2::rref(b_).size()) == length(); }

  FiniteQuadraticForm negated() const {
    std::vector<int> q = q_;
    for (auto& k : q) k = (4 - k) % 4;
    return {std::move(q), b_};
  }

  friend FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& x, const FiniteQuadraticForm& y) {
    std::vector<int> q = x.q_;
    q.insert(q.end(), y.q_.begin(), y.q_.end());
    std::vector<Element> b = x.b_;
    for (Element row : y.b_) b.push_back(row << x.length());
    return {std::move(q), std::move(b)};
  }

  friend bool operator==(const FiniteQuadraticForm& x, const FiniteQuadraticForm& y) {
    return x.q_ == y.q_ && x.b_ == y.b_;
  }

  std::string to_string() const {
    static const char* names[] = {"0", "1/2", "1", "3/2"};
    std::string s = "a=" + std::to_string(length()) + " q=[";
    for (int i = 0; i < length(); ++i) s += (i ? "," : "") + std::string(names[q_[i]]);
    s += "] b=[";
    for (int i = 0; i < length(); ++i) {
      s += i ? ";" : "";
      for (int j = 0; j < length(); ++j) s += bit(b_[i], j) ? "h" : "0";
    }
    return s + "]";
  }

 private:
  static int bit(Element x, int j) { return (x >> j) & 1; }

  std::vector<int> q_;
  std::vector<Element> b_;
  std::vector<std::uint8_t> cache_;
};

// Standard generator blocks.
inline FiniteQuadraticForm form_u() { return {{0, 0}, {0b10, 0b01}}; }       // U(2)
inline FiniteQuadraticForm form_v() { return {{2, 2}, {0b10, 0b01}}; }       // D4
inline FiniteQuadraticForm form_half(int sign) { return {{sign > 0 ? 1 : 3}, {0b1}}; }  // <+-2>

inline FiniteQuadraticForm repeat(const FiniteQuadraticForm& block, int times) {
  FiniteQuadraticForm out;
  for (int i = 0; i < times; ++i) out = direct_sum(out, block);
  return out;
}

/// Gauss sum  sum_x exp(pi i q(x))  as an exact element of Z[zeta_8].
inline CycEight gauss_sum(const FiniteQuadraticForm& q) {
  std::array<long, 4> counts{};
  for (std::uint64_t x = 0; x < q.order(); ++x) ++counts[q.q_half(static_cast<Element>(x))];
  // i^k = zeta^(2k)
  return CycEight({Integer(counts[0] - counts[2]), 0, Integer(counts[1] - counts[3]), 0}, 0);
}

/// Signature mod 8 from the Milgram formula: gauss_sum = sqrt|D| * zeta^sigma.
inline int milgram_signature(const FiniteQuadraticForm& q) {
  const CycEight g = gauss_sum(q);
  if (g.is_zero()) fail(ErrorCode::DegenerateForm, "Gauss sum vanishes");
  const int a = q.length();
  CycEight root = a % 2 ? CycEight::sqrt2() : CycEight(1);
  root *= CycEight(Integer(1) << (a / 2));
  for (int s = 0; s < 8; ++s)
    if (root * CycEight::zeta_pow(s) == g) return s;
  fail(ErrorCode::DegenerateForm, "Gauss sum has the wrong absolute value; b is degenerate");
}

/// 0 if q takes only integral values, 1 otherwise.
inline int parity_delta(const FiniteQuadraticForm& q) {
  if (q.length() <= FiniteQuadraticForm::kCacheLength) {
    for (std::uint64_t x = 0; x < q.order(); ++x)
      if (q.q_half(static_cast<Element>(x)) & 1) return 1;
    return 0;
  }
  // q(x) mod 1 is additive, so the generators decide it.
  for (int k : q.q_generators())
    if (k & 1) return 1;
  return 0;
}

struct FormInvariants {
  int a = 0;
  int delta = 0;
  int sigma = 0;  // mod 8

  friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
};

inline FormInvariants form_invariants(const FiniteQuadraticForm& q) {
  if (!q.nondegenerate()) fail(ErrorCode::DegenerateForm, "bilinear form is degenerate");
  return {q.length(), parity_delta(q), milgram_signature(q)};
}

/// Isometry of nondegenerate 2-elementary forms is decided by (a, delta, sigma mod 8).
inline bool forms_isometric(const FiniteQuadraticForm& x, const FiniteQuadraticForm& y) {
  return form_invariants(x) == form_invariants(y);
}

/// A subgroup of (Z/2)^a, stored by its reduced echelon basis.
class SubgroupSpec {
 public:
  SubgroupSpec() = default;
  explicit SubgroupSpec(const std::vector<Element>& generators) : basis_(f2::rref(generators)) {}

  const std::vector<Element>& basis() const noexcept { return basis_; }
  int rank() const noexcept { return static_cast<int>(basis_.size()); }
  std::uint64_t order() const noexcept { return std::uint64_t(1) << rank(); }
  bool contains(Element x) const { return f2::in_span(basis_, x); }
  std::vector<Element> elements() const { return f2::span(basis_); }

  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
  friend auto operator<=>(const SubgroupSpec& x, const SubgroupSpec& y) {
    if (auto c = x.rank() <=> y.rank(); c != 0) return c;
    return x.basis_ <=> y.basis_;
  }

 private:
  std::vector<Element> basis_;
};

inline bool is_isotropic(const FiniteQuadraticForm& q, const SubgroupSpec& g) {
  for (Element x : g.elements())
    if (q.q_half(x) != 0) return false;
  return true;
}

/// G-perp = {x : b(x, G) = 0}.
inline SubgroupSpec orthogonal_complement(const FiniteQuadraticForm& q, const SubgroupSpec& g) {
  std::vector<Element> rows;
  for (Element x : g.basis()) rows.push_back(q.b_row(x));
  auto sol = f2::solve(rows, std::vector<int>(rows.size(), 0), q.length());
  return SubgroupSpec(sol->directions);
}

/// Nonzero isotropic vectors (q = 0 mod 2), increasing.
inline std::vector<Element> isotropic_vectors(const FiniteQuadraticForm& q) {
  std::vector<Element> out;
  for (std::uint64_t x = 1; x < q.order(); ++x)
    if (q.q_half(static_cast<Element>(x)) == 0) out.push_back(static_cast<Element>(x));
  return out;
}

/// All isotropic subgroups of order <= max_order (trivial group included), ordered
/// by rank and then by echelon basis.
inline std::vector<SubgroupSpec> isotropic_subgroups(const FiniteQuadraticForm& q, std::uint64_t max_order = 8) {
  std::vector<SubgroupSpec> out{SubgroupSpec{}};
  const auto iso = isotropic_vectors(q);
  std::vector<SubgroupSpec> layer{SubgroupSpec{}};
  for (std::uint64_t order = 2; order <= max_order && !layer.empty(); order *= 2) {
    std::set<SubgroupSpec> next;
    for (const auto& g : layer) {
      std::vector<Element> rows;
      for (Element x : g.basis()) rows.push_back(q.b_row(x));
      for (Element x : iso) {
        if (g.contains(x)) continue;
        bool perp = true;
        for (Element r : rows)
          if (parity(r & x)) {
            perp = false;
            break;
          }
        if (!perp) continue;
        auto gens = g.basis();
        gens.push_back(x);
        next.emplace(gens);
      }
    }
    layer.assign(next.begin(), next.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Depth-first search for an isotropic subgroup of the given rank accepted by
/// `pred`. Returns the first hit in the search order.
inline std::optional<SubgroupSpec> find_isotropic_subgroup(const FiniteQuadraticForm& q, int rank,
                                                           const std::function<bool(const SubgroupSpec&)>& pred) {
  const auto iso = isotropic_vectors(q);
  std::vector<Element> chosen;
  std::set<std::vector<Element>> seen;
  std::function<std::optional<SubgroupSpec>(std::size_t)> dfs = [&](std::size_t start) -> std::optional<SubgroupSpec> {
    SubgroupSpec g(chosen);
    if (g.rank() == rank) {
      if (!seen.insert(g.basis()).second) return std::nullopt;
      if (pred(g)) return g;
      return std::nullopt;
    }
    for (std::size_t i = start; i < iso.size(); ++i) {
      const Element x = iso[i];
      if (g.contains(x)) continue;
      bool ok = true;
      for (Element y : chosen)
        if (q.b_half(x, y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(x);
      auto hit = dfs(i + 1);
      chosen.pop_back();
      if (hit) return hit;
    }
    return std::nullopt;
  };
  return dfs(0);
}

/// The form induced on G-perp / G, with lifts of the new generators.
struct Quotient {
  FiniteQuadraticForm form;
  std::vector<Element> lifts;
};

inline Quotient quotient(const FiniteQuadraticForm& q, const SubgroupSpec& g) {
  if (!is_isotropic(q, g)) fail(ErrorCode::NotIsotropic, "subgroup is not isotropic");
  const SubgroupSpec perp = orthogonal_complement(q, g);
  std::vector<Element> span_basis = g.basis();
  std::vector<Element> lifts;
  for (Element x : perp.basis()) {
    const auto r = f2::rref(span_basis);
    if (f2::in_span(r, x)) continue;
    span_basis.push_back(x);
    lifts.push_back(x);
  }
  const int n = static_cast<int>(lifts.size());
  std::vector<int> qg(n);
  std::vector<Element> b(n, 0);
  for (int i = 0; i < n; ++i) {
    qg[i] = q.q_half(lifts[i]);
    for (Element h : g.basis())
      if (q.q_half(lifts[i] ^ h) != qg[i]) fail(ErrorCode::NotIsotropic, "q does not descend to the quotient");
    for (int j = 0; j < n; ++j)
      if (q.b_half(lifts[i], lifts[j])) b[i] |= Element(1) << j;
  }
  return {FiniteQuadraticForm(std::move(qg), std::move(b)), std::move(lifts)};
}

inline FiniteQuadraticForm quotient_form(const FiniteQuadraticForm& q, const SubgroupSpec& g) {
  return quotient(q, g).form;
}

/// A homomorphism of (Z/2)^a given by the images of the generators.
using DiscAction = std::vector<Element>;

inline Element apply_action(const DiscAction& f, Element x) {
  Element r = 0;
  for (Element y = x; y; y &= y - 1) r ^= f[std::countr_zero(y)];
  return r;
}

/// (f o g)
inline DiscAction compose(const DiscAction& f, const DiscAction& g) {
  DiscAction out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = apply_action(f, g[i]);
  return out;
}

inline DiscAction identity_action(int a) {
  DiscAction out(a);
  for (int i = 0; i < a; ++i) out[i] = Element(1) << i;
  return out;
}

/// True if f maps (source, q1) isometrically into (target, q2) on generators.
inline bool preserves_form(const DiscAction& f, const FiniteQuadraticForm& q1, const FiniteQuadraticForm& q2) {
  const int a = q1.length();
  if (static_cast<int>(f.size()) != a) return false;
  for (int i = 0; i < a; ++i) {
    if (q2.q_half(f[i]) != q1.q_half(Element(1) << i)) return false;
    for (int j = i + 1; j < a; ++j)
      if (q2.b_half(f[i], f[j]) != q1.b_half(Element(1) << i, Element(1) << j)) return false;
  }
  return true;
}

/// Order of the group generated by the given automorphisms (closure by BFS).
inline std::uint64_t generated_group_order(const std::vector<DiscAction>& gens, int a) {
  std::set<DiscAction> seen{identity_action(a)};
  std::vector<DiscAction> frontier{identity_action(a)};
  while (!frontier.empty()) {
    std::vector<DiscAction> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

namespace detail {

// Backtracking over generator images: image i must carry the q value of g_i and
// the b values against images 0..i-1, which cuts the candidates to an affine
// subspace of dimension a - i. Preserving b on a basis of a nondegenerate form
// already forces injectivity.
template <class Visit>
bool extend_isometry(const FiniteQuadraticForm& src, const FiniteQuadraticForm& dst, DiscAction& images,
                     Visit&& visit) {
  const int a = src.length();
  const int i = static_cast<int>(images.size());
  if (i == a) return visit(images);
  std::vector<Element> rows;
  std::vector<int> rhs;
  for (int j = 0; j < i; ++j) {
    rows.push_back(dst.b_row(images[j]));
    rhs.push_back(src.b_half(Element(1) << i, Element(1) << j));
  }
  auto space = f2::solve(rows, rhs, dst.length());
  if (!space) return false;
  const int want = src.q_half(Element(1) << i);
  bool stop = false;
  f2::for_each_point(*space, [&](Element y) {
    if (stop || dst.q_half(y) != want) return;
    images.push_back(y);
    if (extend_isometry(src, dst, images, visit)) stop = true;
    images.pop_back();
  });
  return stop;
}

inline std::array<std::uint64_t, 4> q_histogram(const FiniteQuadraticForm& q) {
  std::array<std::uint64_t, 4> h{};
  for (std::uint64_t x = 0; x < q.order(); ++x) ++h[q.q_half(static_cast<Element>(x))];
  return h;
}

}  // namespace detail

/// Exhaustive witness search for an isometry src -> dst.
inline std::optional<DiscAction> find_isometry(const FiniteQuadraticForm& src, const FiniteQuadraticForm& dst) {
  if (src.length() != dst.length()) return std::nullopt;
  if (!src.nondegenerate() || !dst.nondegenerate()) fail(ErrorCode::DegenerateForm, "isometry search needs nondegenerate forms");
  if (detail::q_histogram(src) != detail::q_histogram(dst)) return std::nullopt;
  DiscAction images;
  std::optional<DiscAction> found;
  detail::extend_isometry(src, dst, images, [&](const DiscAction& f) {
    found = f;
    return true;
  });
  return found;
}

/// |O(D, q)| as a product of orbit lengths along the stabilizer chain of the
/// generators: level k counts the images of g_k reachable by an automorphism
/// fixing g_0..g_(k-1), each certified by a completed witness.
inline Integer orthogonal_group_order(const FiniteQuadraticForm& q, int bound = 8) {
  const int a = q.length();
  if (a > bound) fail(ErrorCode::BoundExceeded, "form length " + std::to_string(a) + " exceeds bound " + std::to_string(bound));
  if (!q.nondegenerate()) fail(ErrorCode::DegenerateForm, "orthogonal group of a degenerate form");
  Integer total = 1;
  for (int k = 0; k < a; ++k) {
    std::vector<Element> rows;
    std::vector<int> rhs;
    for (int j = 0; j < k; ++j) {
      rows.push_back(q.b_row(Element(1) << j));
      rhs.push_back(q.b_half(Element(1) << k, Element(1) << j));
    }
    const auto space = f2::solve(rows, rhs, a);
    std::vector<Element> candidates;
    f2::for_each_point(*space, [&](Element y) {
      if (q.q_half(y) == q.q_half(Element(1) << k)) candidates.push_back(y);
    });
    const auto ok = parallel_map(candidates.size(), [&](std::size_t c) {
      DiscAction images;
      for (int j = 0; j < k; ++j) images.push_back(Element(1) << j);
      images.push_back(candidates[c]);
      return detail::extend_isometry(q, q, images, [](const DiscAction&) { return true; }) ? 1 : 0;
    });
    long orbit = 0;
    for (int x : ok) orbit += x;
    total *= orbit;
  }
  return total;
}

/// A normal-form representative with the given invariants, built from the
/// blocks u (U(2)), v (D4) and <+-1/2>, or nullopt if no such form exists.
inline std::optional<FiniteQuadraticForm> form_from_invariants(int a, int delta, int sigma) {
  sigma = ((sigma % 8) + 8) % 8;
  if (a < 0) return std::nullopt;
  for (int odd = 0; odd <= std::min(a, 3); ++odd) {
    if ((delta == 0) != (odd == 0)) continue;
    if ((a - odd) % 2) continue;
    for (int plus = odd; plus >= 0; --plus) {
      const int minus = odd - plus;
      for (int vs = 0; vs <= 1; ++vs) {
        const int pairs = (a - odd) / 2;
        if (vs > pairs) continue;
        if (((4 * vs + plus - minus) % 8 + 8) % 8 != sigma) continue;
        FiniteQuadraticForm f = direct_sum(repeat(form_u(), pairs - vs), repeat(form_v(), vs));
        f = direct_sum(f, direct_sum(repeat(form_half(1), plus), repeat(form_half(-1), minus)));
        if (form_invariants(f) == FormInvariants{a, delta, sigma}) return f;
      }
    }
  }
  return std::nullopt;
}

}  // namespace k3lat
