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

#include <complex>

#include "k3lat/geography.hpp"
#include "k3lat/weil.hpp"

namespace k3lat {
namespace {

struct Case {
  std::string name;
  FiniteQuadraticForm q;
  int sigma;
};

std::vector<Case> catalog_forms(int max_a) {
  std::vector<Case> out{{"trivial", FiniteQuadraticForm({}, {}), 0}};
  for (const auto& f : fixture_catalog()) {
    const auto q = discriminant_form(parse_lattice(f.expr));
    if (q.length() <= max_a) out.push_back({f.name, q, milgram_signature(q)});
  }
  return out;
}

CycMatrix conj_transpose(const CycMatrix& m) {
  CycMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
  return t;
}

TEST(Weil, GeneratorExamples) {
  EXPECT_EQ(weil_T(FiniteQuadraticForm({}, {})), CycMatrix::identity(1));
  const CycMatrix t = weil_T(form_u());
  EXPECT_EQ(t(0, 0), CycEight(1));
  EXPECT_EQ(t(1, 1), CycEight(1));
  EXPECT_EQ(t(2, 2), CycEight(1));
  EXPECT_EQ(t(3, 3), CycEight(-1));
  const CycMatrix th = weil_T(form_half(1));
  EXPECT_EQ(th(1, 1), CycEight::i());

  const CycMatrix s = weil_S(form_half(1), 1);
  const CycEight c = CycEight::zeta_pow(-1) * CycEight::inv_sqrt2_pow(1);
  EXPECT_EQ(s(0, 0), c);
  EXPECT_EQ(s(0, 1), c);
  EXPECT_EQ(s(1, 0), c);
  EXPECT_EQ(s(1, 1), CycEight(-1) * c);

  const CycMatrix su = weil_S(form_u(), 0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const int sign = form_u().b_half(static_cast<Element>(i), static_cast<Element>(j)) ? -1 : 1;
      EXPECT_EQ(su(i, j), CycEight(sign).halve());
    }
  EXPECT_THROW(weil_S(form_u(), 1), Error);
}

TEST(Weil, WordParsing) {
  EXPECT_EQ(parse_word("(ST)^3"), parse_word("STSTST"));
  EXPECT_EQ(parse_word("V"), parse_word("S^-1 T^2 S"));
  EXPECT_EQ(parse_word("Z"), parse_word("SS"));
  EXPECT_EQ(inverse_word(parse_word("ST")), parse_word("T^-1 S^-1"));
  EXPECT_THROW(parse_word("S x"), ParseError);
  EXPECT_THROW(parse_word("(ST"), ParseError);
  EXPECT_THROW(parse_word("S^"), ParseError);
}

TEST(Weil, RelationsOnCatalogForms) {
  const auto cases = catalog_forms(8);
  ASSERT_GE(cases.size(), 10u);
  for (const auto& c : cases) {
    const WeilRepresentation rho(c.q, c.sigma);
    EXPECT_TRUE(rho.words_equal(parse_word("(ST)^3"), parse_word("S^2"))) << c.name;
    EXPECT_TRUE(rho.words_equal(parse_word("S^8"), {})) << c.name;
    EXPECT_TRUE(rho.words_equal(parse_word("S S^-1"), {})) << c.name;
    // rho(S)^2 is the scalar i^-sigma on a 2-elementary form
    const CycMatrix z = rho.matrix(parse_word("Z"));
    EXPECT_EQ(z, CycEight::zeta_pow(-2 * c.sigma) * CycMatrix::identity(rho.dimension())) << c.name;
    EXPECT_TRUE(rho.words_equal(parse_word("ZT"), parse_word("TZ"))) << c.name;
    const Element one = one_element(c.q);
    EXPECT_EQ(rho.apply(parse_word("V^-1"), rho.basis(0)), rho.basis(one)) << c.name;
    for (int l = 0; l < 4; ++l) EXPECT_TRUE(coset_formula_check(c.q, c.sigma, l).ok) << c.name << " l = " << l;
  }
}

TEST(Weil, SIsSymmetricAndUnitary) {
  for (const auto& c : catalog_forms(6)) {
    const CycMatrix s = weil_S(c.q, c.sigma);
    EXPECT_EQ(s, s.transpose()) << c.name;
    EXPECT_EQ(s * conj_transpose(s), CycMatrix::identity(s.rows())) << c.name;
    const CycMatrix t = weil_T(c.q);
    EXPECT_EQ(t * conj_transpose(t), CycMatrix::identity(t.rows())) << c.name;
  }
}

TEST(Weil, EquivariantUnderFormAutomorphisms) {
  const FiniteQuadraticForm q = direct_sum(form_v(), form_half(1));
  const int sigma = milgram_signature(q);
  const WeilRepresentation rho(q, sigma);
  const CycMatrix s = rho.matrix(parse_word("S")), t = rho.matrix(parse_word("T"));
  const Element n = static_cast<Element>(q.order());
  int automorphisms = 0;
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b)
      for (Element c = 1; c < n; ++c) {
        const DiscAction f{a, b, c};
        if (f2::rref(f).size() != 3 || !preserves_form(f, q, q)) continue;
        ++automorphisms;
        CycMatrix p(n, n);
        for (Element g = 0; g < n; ++g) p(apply_action(f, g), g) = 1;
        EXPECT_EQ(p * s, s * p);
        EXPECT_EQ(p * t, t * p);
      }
  EXPECT_EQ(Integer(automorphisms), orthogonal_group_order(q));
}

TEST(Weil, SpecialVectors) {
  const auto v = vk_vectors(form_u());
  EXPECT_EQ(v[0], (std::vector<int>{1, 1, 1, 0}));
  EXPECT_EQ(v[2], (std::vector<int>{0, 0, 0, 1}));
  // q is integral on U(2), so b(1_L, .) = 0 and 1_L = 0
  EXPECT_EQ(one_element(form_u()), 0u);
  EXPECT_EQ(one_element(form_v()), 0u);
  EXPECT_EQ(one_element(form_half(1)), 1u);
  EXPECT_EQ(one_element(FiniteQuadraticForm({}, {})), 0u);
  // characteristic property by exhaustive scan
  for (const auto& c : catalog_forms(10)) {
    const Element one = one_element(c.q);
    for (Element g = 0; g < c.q.order(); ++g) EXPECT_EQ(c.q.b_half(one, g), c.q.q_half(g) & 1) << c.name;
  }
}

TEST(Weil, CosetFormulaSpecExamples) {
  EXPECT_TRUE(coset_formula_check(form_u(), 0, 0).ok);
  const auto q = discriminant_form(parse_lattice("<2>^2 + <-2>^3"));
  EXPECT_EQ(milgram_signature(q), 7);
  EXPECT_TRUE(coset_formula_check(q, -1, 2).ok);
  for (int l = 0; l < 4; ++l) EXPECT_TRUE(coset_formula_check(FiniteQuadraticForm({}, {}), 0, l).ok);
}

TEST(Lift, RMinusFive) {
  const auto q = discriminant_form(parse_lattice("<2>^2 + <-2>^3"));
  const VectorValuedForm f = lift_B(q, 5, 5, 4);
  EXPECT_EQ(f.weight, make_rational(-1, 2));
  EXPECT_EQ(f.psi.coeff(-2), 1);
  EXPECT_EQ(f.psi.coeff(0), 24);
  EXPECT_EQ(f.scale, 1);
  ASSERT_TRUE(f.psi_v.valuation());
  EXPECT_GE(FracSeries::exponent(*f.psi_v.valuation()), make_rational(7, 4));
  const auto v = vk_vectors(q);
  for (Element g = 0; g < q.order(); ++g) {
    const FracSeries& c = f.components.at(g);
    if (g == 0 || g == f.one) continue;
    if (v[2][g]) EXPECT_EQ(c.coeff(make_rational(-1, 2)), 1);
    if (v[1][g]) EXPECT_GE(FracSeries::exponent(*c.valuation()), make_rational(1, 4));
    if (v[3][g]) EXPECT_GE(FracSeries::exponent(*c.valuation()), make_rational(3, 4));
  }
}

TEST(Lift, PrincipalPart) {
  const auto q = discriminant_form(parse_lattice("<2>^2 + <-2>^3"));
  const auto p = principal_part(lift_B(q, 5, 5, 3));
  const auto v = vk_vectors(q);
  for (const auto& t : p) {
    if (t.component == 0) {
      EXPECT_TRUE(t.exponent == -2 || t.exponent == 0);
    } else {
      EXPECT_TRUE(v[2][t.component] || v[0][t.component]) << t.component;
      EXPECT_TRUE(t.exponent == make_rational(-1, 2) || t.exponent == 0);
    }
  }
  EXPECT_EQ(p.front(), (PrincipalTerm{0, -2, 1}));
  EXPECT_TRUE(principal_part(std::map<Element, FracSeries>{}).empty());
  const std::map<Element, FracSeries> c{{0, FracSeries::constant(5, 24)}};
  EXPECT_EQ(principal_part(c), (std::vector<PrincipalTerm>{{0, 0, 5}}));
}

TEST(Lift, ModularityResidual) {
  const auto q = discriminant_form(parse_lattice("<2>^2 + <-2>^3"));
  const VectorValuedForm f = lift_B(q, 5, 5, 20);
  EXPECT_LT(modularity_residual(f, -1, {0.1, 0.8}), 1e-6);
}

TEST(Lift, Preconditions) {
  const auto q = discriminant_form(parse_lattice("<2>^2 + <-2>^3"));
  EXPECT_THROW(lift_B(q, 12, 5, 4), Error);
  EXPECT_THROW(lift_B(q, 5, 5, 0), Error);
  EXPECT_THROW(lift_B(q, 5, 3, 4), Error);
}

}  // namespace
}  // namespace k3lat
