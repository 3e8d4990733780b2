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
#include <vector>

#include "k3lat/expr.hpp"
#include "k3lat/geography.hpp"
#include "k3lat/parallel.hpp"
#include "k3lat/vectors.hpp"
#include "k3lat/weil.hpp"

namespace k3lat {

enum class Verdict { MinusInfinity, Inconclusive, HypothesisViolated, NotCovered };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::MinusInfinity: return "-infinity";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::HypothesisViolated: return "hypothesis-violated";
    case Verdict::NotCovered: return "not-covered";
  }
  return "?";
}

/// Modular form criterion: weight k >= nu n on a domain of type (2, n), n >= 3,
/// with div(F) <= nu R, and either k > nu n or nu R - div(F) != 0.
/// `dominated` is the divisor containment, taken as an input, not derived.
inline Verdict gritsenko_verdict(long k, long nu, long n, bool dominated, bool nonzero_slack) {
  if (n < 3) return Verdict::HypothesisViolated;
  if (!dominated || k < nu * n) return Verdict::Inconclusive;
  return (k > nu * n || nonzero_slack) ? Verdict::MinusInfinity : Verdict::Inconclusive;
}

enum class DivisorClass { Dprime, Ddoubleprime, NormMinus4, DualNormMinus1 };

inline std::string to_string(DivisorClass c) {
  switch (c) {
    case DivisorClass::Dprime: return "Dprime";
    case DivisorClass::Ddoubleprime: return "Ddoubleprime";
    case DivisorClass::NormMinus4: return "norm_minus4";
    case DivisorClass::DualNormMinus1: return "dual_norm_minus1";
  }
  return "?";
}

struct DivisorLedger {
  std::vector<std::pair<DivisorClass, Integer>> entries;
  long nu = 0;
  long k = 0;
  long n = 0;
};

/// First family: 13 <= r <= 17, the form with divisor D' + (2^g + 1) D''.
struct Case1Report {
  Triplet triplet{};
  bool covered = false;
  long g = 0, nu = 0, k = 0, n = 0, slack = 0;  // slack = k - nu n
  Verdict verdict = Verdict::NotCovered;
  std::string lminus;                // block-sum model of L-
  bool dprime_nonzero = false;       // a (-2)-vector l with l/2 not in the dual
  std::optional<IntVector> dprime_witness;
  bool special = false;              // r = 13 with D' = 0
  std::string special_lattice;
  std::optional<IntVector> special_witness;  // norm -4 vector
  DivisorLedger ledger;
  std::string note;
};

inline Case1Report case1_report(int r, int a, int delta) {
  if (!k3_triplet_realizable(r, a, delta))
    fail(ErrorCode::NotRealizable, "triplet " + to_string(Triplet{r, a, delta}) + " is not realizable");
  Case1Report out;
  out.triplet = {r, a, delta};
  if (r < 13 || r > 17) {
    out.note = "outside 13 <= r <= 17";
    return out;
  }
  out.covered = true;
  out.g = 11 - (r + a) / 2;
  out.nu = (1L << out.g) + 1;
  out.k = (r - 6) * out.nu;
  out.n = 20 - r;
  out.slack = out.k - out.nu * out.n;
  out.ledger = {{{DivisorClass::Dprime, 1}, {DivisorClass::Ddoubleprime, out.nu}}, out.nu, out.k, out.n};

  const auto expr = block_sum_expr(2, 20 - r, a, delta);
  if (!expr) fail(ErrorCode::NotFound, "no block-sum model for L- of " + to_string(out.triplet));
  out.lminus = *expr;
  const Lattice lm = parse_lattice(*expr);
  // D' != 0 iff some (-2)-vector l has l/2 outside the dual; when rank = a
  // every l/2 is in the dual.
  if (static_cast<int>(lm.rank()) > a) {
    out.dprime_witness = witness_vector(lm, -2, 1, [&](const IntVector& x) { return !disc_class_of_vector(lm, x).half_in_dual; });
    out.dprime_nonzero = out.dprime_witness.has_value();
  }
  bool slack = out.slack > 0 || out.dprime_nonzero;
  if (r == 13 && !out.dprime_nonzero) {
    // L- = U(2) + M7; a norm -4 reflective vector gives a wall of R outside D.
    out.special = true;
    out.special_lattice = "U(2) + M7";
    const Lattice model = parse_lattice(out.special_lattice);
    if (!(main_invariant(model) == main_invariant(lm)))
      fail(ErrorCode::NotIsometry, "U(2) + M7 does not model L- of " + to_string(out.triplet));
    out.special_witness = witness_vector(model, -4, 2, [&](const IntVector& x) { return disc_class_of_vector(model, x).half_in_dual; });
    slack = slack || out.special_witness.has_value();
    out.note = out.special_witness ? "R > D via the reflection in a norm -4 vector" : "no norm -4 witness in the box";
  } else if (out.slack == 0) {
    out.note = "R > D via D' != 0";
  } else {
    out.note = "k > nu n";
  }
  out.verdict = gritsenko_verdict(out.k, out.nu, out.n, true, slack);
  return out;
}

/// Second family: r + a = 22, r <= 17, via the Borcherds lift of psi_m.
struct Case2Report {
  Triplet triplet{};
  long r_minus = 0, a_minus = 0, sigma_minus = 0, m = 0, k = 0, n = 0, slack = 0;  // slack = k - n
  Integer xi_weight;
  Verdict verdict = Verdict::NotCovered;
  DivisorLedger ledger;
};

inline Case2Report case2_report(int r, int a, int delta) {
  if (r + a != 22 || r < 11 || r > 17)
    fail(ErrorCode::OutOfFamily, "triplet " + to_string(Triplet{r, a, delta}) + " needs r + a = 22 and 11 <= r <= 17");
  if (!k3_triplet_realizable(r, a, delta))
    fail(ErrorCode::NotRealizable, "triplet " + to_string(Triplet{r, a, delta}) + " is not realizable");
  Case2Report out;
  out.triplet = {r, a, delta};
  out.r_minus = 22 - r;
  out.a_minus = a;
  out.sigma_minus = r - 18;
  out.m = 8 + out.sigma_minus;
  out.k = -out.m * out.m - 9 * out.m + 124;
  out.n = out.r_minus - 2;
  out.slack = out.k - out.n;
  const Integer scale = Integer(1) << ((out.r_minus - out.a_minus) / 2);
  out.xi_weight = (scale + 1) * out.k;
  out.ledger = {{{DivisorClass::NormMinus4, 1}, {DivisorClass::DualNormMinus1, scale}}, 1, out.k, out.n};
  // nu = 1 with F = Xi^(1/2); div(Xi) = 2H and R >= H.
  out.verdict = gritsenko_verdict(out.k, 1, out.n, true, true);
  return out;
}

struct CoverageRow {
  Triplet triplet{};
  std::optional<Case1Report> case1;
  std::optional<Case2Report> case2;
  Verdict verdict = Verdict::NotCovered;
};

/// Every realizable triplet with the verdicts of both families.
inline std::vector<CoverageRow> kodaira_coverage() {
  const auto table = geography_table();
  return parallel_map(table.size(), [&](std::size_t i) {
    const Triplet t = table[i].triplet;
    CoverageRow row{t, std::nullopt, std::nullopt, Verdict::NotCovered};
    const int r = t[0], a = t[1];
    if (r >= 13 && r <= 17) row.case1 = case1_report(r, a, t[2]);
    if (r + a == 22 && r >= 11 && r <= 17) row.case2 = case2_report(r, a, t[2]);
    const bool c1 = row.case1 && row.case1->verdict == Verdict::MinusInfinity;
    const bool c2 = row.case2 && row.case2->verdict == Verdict::MinusInfinity;
    if (c1 || c2)
      row.verdict = Verdict::MinusInfinity;
    else if (row.case1 || row.case2)
      row.verdict = Verdict::Inconclusive;
    return row;
  });
}

struct LiftConsistency {
  bool ok = false;
  long r_minus = 0;
  long k = 0;
  Integer xi_weight;
  Rational psi_constant;    // constant of the e_0 line psi_m
  Rational e0_constant;     // constant of the full e_0 component
  std::vector<PrincipalTerm> principal;
  std::string detail;
};

/// Builds the lift for L- = <2>^2 + <-2>^(r_- - 2) and checks the shape of
/// its principal part against the divisor ledger and weight of the second family.
inline LiftConsistency lift_consistency(int r_minus, const Rational& prec = 4) {
  if (r_minus >= 12) fail(ErrorCode::UnsupportedInvariant, "the lift needs r_- < 12");
  if (r_minus < 5) fail(ErrorCode::OutOfFamily, "r_- must be at least 5");
  const Lattice l = direct_sum(power(lattice_diag(2), 2), power(lattice_diag(-2), r_minus - 2));
  const auto q = discriminant_form(l);
  const VectorValuedForm f = lift_B(q, r_minus, r_minus, prec);
  const Case2Report c2 = case2_report(22 - r_minus, r_minus, 1);

  LiftConsistency out;
  out.r_minus = r_minus;
  out.k = c2.k;
  out.xi_weight = c2.xi_weight;
  out.psi_constant = f.psi.coeff(0);
  out.e0_constant = f.components.at(0).coeff(0);
  out.principal = principal_part(f);
  auto bad = [&](const std::string& why) {
    out.detail = why;
    return out;
  };
  if (f.psi.coeff(-2) != 1 || f.psi.coeff(-1) != 0) return bad("psi line does not start q^-2 + 0 q^-1");
  if (out.psi_constant != 2 * c2.k) return bad("psi constant differs from 2k");
  if (out.e0_constant != 2 * Rational(c2.xi_weight)) return bad("e_0 constant differs from twice the lift weight");
  // Poles: q^-2 on e_0 only (norm -4 walls), q^-1/2 with coefficient scale on the
  // classes with q = 1 (norm -1 dual walls), nothing else below zero.
  for (const auto& t : out.principal) {
    if (t.exponent == 0) continue;
    const int qh = q.q_half(t.component);
    if (t.exponent == -2 && t.component == 0 && t.coefficient == 1) continue;
    if (t.exponent == make_rational(-1, 2) && qh == 2 && t.coefficient == Rational(f.scale)) continue;
    return bad("unexpected pole at q^" + t.exponent.get_str() + " on component " + std::to_string(t.component));
  }
  for (std::uint64_t g = 0; g < q.order(); ++g)
    if (q.q_half(static_cast<Element>(g)) == 2 && f.components.at(static_cast<Element>(g)).coeff(make_rational(-1, 2)) != Rational(f.scale))
      return bad("missing q^-1/2 pole on component " + std::to_string(g));
  out.ok = true;
  return out;
}

}  // namespace k3lat
