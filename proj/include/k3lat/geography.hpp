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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "k3lat/expr.hpp"
#include "k3lat/finite_form.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

using Triplet = std::array<int, 3>;  // (r, a, delta)

inline std::string to_string(const Triplet& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

inline int mod8(int x) { return ((x % 8) + 8) % 8; }

/// Existence of a 2-elementary form with invariants (a, delta, sigma mod 8).
inline bool form_exists(int a, int delta, int sigma) {
  sigma = mod8(sigma);
  if (a < 0 || delta < 0 || delta > 1) return false;
  if (delta == 0) {
    if (a % 2) return false;
    if (a == 0) return sigma == 0;
    return sigma == 0 || sigma == 4;
  }
  if (a == 0) return false;
  if (a == 1) return sigma == 1 || sigma == 7;
  if (a == 2) return sigma == 0 || sigma == 2 || sigma == 6;
  return sigma % 2 == a % 2;
}

/// Existence of an even 2-elementary lattice of signature (t+, t-) with
/// discriminant invariants (a, delta); the form signature is t+ - t-. Beyond
/// the rank and form conditions, rank == a with delta == 0 forces t+ - t- = 0 mod 8.
inline bool lattice_exists(int t_plus, int t_minus, int a, int delta) {
  if (t_plus < 0 || t_minus < 0) return false;
  const int n = t_plus + t_minus;
  const int sigma = t_plus - t_minus;
  if (n < a) return false;
  if (!form_exists(a, delta, sigma)) return false;
  if (n == a && delta == 0 && mod8(sigma) != 0) return false;
  return true;
}

inline bool lattice_exists(int t_plus, int t_minus, const FiniteQuadraticForm& q) {
  const auto inv = form_invariants(q);
  if (mod8(t_plus - t_minus) != inv.sigma) return false;
  return lattice_exists(t_plus, t_minus, inv.a, inv.delta);
}

/// L+ of signature (1, r-1) and L- of signature (2, 20-r), both with (a, delta).
inline bool k3_triplet_realizable(int r, int a, int delta) {
  if (r < 1 || r > 20 || a < 0 || delta < 0 || delta > 1) return false;
  return lattice_exists(1, r - 1, a, delta) && lattice_exists(2, 20 - r, a, delta);
}

inline bool k3_triplet_realizable(const Triplet& t) { return k3_triplet_realizable(t[0], t[1], t[2]); }

enum class FixedLocus { Curves, Empty, TwoElliptic };

inline std::string to_string(FixedLocus f) {
  switch (f) {
    case FixedLocus::Curves: return "curves";
    case FixedLocus::Empty: return "empty";
    case FixedLocus::TwoElliptic: return "two-elliptic";
  }
  return "?";
}

struct GeometricInvariants {
  int g = 0;
  int k = 0;
  FixedLocus locus = FixedLocus::Curves;
};

/// g = 11 - (r+a)/2 and k = (r-a)/2, with the two exceptional fixed loci.
inline GeometricInvariants geometric_invariants(int r, int a, int delta) {
  if (!k3_triplet_realizable(r, a, delta))
    fail(ErrorCode::NotRealizable, "triplet " + to_string(Triplet{r, a, delta}) + " is not realizable");
  GeometricInvariants out{11 - (r + a) / 2, (r - a) / 2, FixedLocus::Curves};
  if (r == 10 && a == 10 && delta == 0) out.locus = FixedLocus::Empty;
  if (r == 10 && a == 8 && delta == 0) out.locus = FixedLocus::TwoElliptic;
  return out;
}

/// A named lattice construction with the main invariant it must have.
struct Fixture {
  std::string name;
  std::string expr;
  MainInvariant expected;
  std::optional<Triplet> triplet;  // the K3 triplet it realizes as L+ or L-
  std::optional<long> index;       // expected overlattice index
};

inline std::vector<Fixture> fixture_catalog() {
  std::vector<Fixture> out{
      {"u2", "U(2)", {1, 1, 2, 0}, Triplet{2, 2, 0}, std::nullopt},
      {"m10-v", "M10 glue { (3h - sum(e1..e9))/2 }", {1, 9, 8, 0}, Triplet{10, 8, 0}, 2},
      {"u2-e8-f1f2", "U(2) + <-2>^8 glue { (3u + 2v - sum(e1..e8))/2 ; (u + 2v - sum(e1..e8))/2 }", {1, 9, 8, 1},
       Triplet{10, 8, 1}, 2},
      {"m12-f1f2", "M12 glue { (3h - 2e1 - sum(e3..e11))/2 ; (3h - 2e2 - sum(e3..e11))/2 }", {1, 11, 10, 1},
       Triplet{12, 10, 1}, 2},
      {"m13-f1f2f3",
       "M13 glue { (3h - 2e1 - sum(e3..e11))/2 ; (3h - 2e2 - 2e12 - sum(e3..e11))/2 ; (2h - e2 - e12 - sum(e5..e10))/2 }",
       {1, 12, 9, 1}, Triplet{13, 9, 1}, 4},
      {"l1", "U + <2> + <-2> + E8(2)", {2, 10, 10, 1}, Triplet{10, 10, 1}, std::nullopt},
      {"l3", "U(2)^2 + E8", {2, 10, 4, 0}, Triplet{10, 4, 0}, std::nullopt},
      {"lminus-12-10-1", "<2>^2 + <-2>^8", {2, 8, 10, 1}, Triplet{12, 10, 1}, std::nullopt},
      {"lminus-13-9-1", "<2>^2 + <-2>^7", {2, 7, 9, 1}, Triplet{13, 9, 1}, std::nullopt},
      {"lminus-13-u2m7", "U(2) + M7", {2, 7, 9, 1}, Triplet{13, 9, 1}, std::nullopt},
      {"k3", "LambdaK3", {3, 19, 0, 0}, std::nullopt, std::nullopt},
      {"e8-2", "E8(2)", {0, 8, 8, 0}, std::nullopt, std::nullopt},
  };
  for (int r = 1; r <= 11; ++r)
    out.push_back({"m" + std::to_string(r), "M" + std::to_string(r), {1, r - 1, r, 1}, Triplet{r, r, 1}, std::nullopt});
  for (int n = 3; n <= 9; ++n) {
    const int rm = n + 2;  // L- = <2>^2 + <-2>^n of rank r-
    out.push_back({"lminus-" + std::to_string(22 - rm) + "-" + std::to_string(rm) + "-1",
                   "<2>^2 + <-2>^" + std::to_string(n), {2, n, rm, 1}, Triplet{22 - rm, rm, 1}, std::nullopt});
  }
  // drop the duplicate of the explicit (12,10,1) and (13,9,1) entries
  std::vector<Fixture> unique;
  std::set<std::string> seen;
  for (auto& f : out)
    if (seen.insert(f.expr).second) unique.push_back(std::move(f));
  return unique;
}

/// Triplets that the source names explicitly; anything else in the table is
/// reported as derived from the existence rule alone.
inline std::set<Triplet> named_triplets() {
  std::set<Triplet> s{{1, 1, 1},   {2, 2, 0},   {5, 5, 1},   {10, 2, 0},  {10, 8, 0},  {10, 8, 1},  {10, 10, 0},
                      {10, 10, 1}, {11, 9, 1},  {11, 11, 1}, {12, 8, 1},  {12, 10, 1}, {13, 7, 1},  {13, 9, 1},
                      {14, 8, 1},  {15, 7, 1},  {16, 6, 1},  {17, 5, 1},  {18, 4, 0},  {18, 4, 1},  {19, 3, 1},
                      {10, 4, 0},  {11, 7, 1}};
  for (int r = 1; r <= 11; ++r) s.insert({r, r, 1});
  for (int a = 0; a <= 10; a += 2) s.insert({10, a, 0});
  // (28 - 2d, 2d - 6, delta) for each realizable delta, and (29 - 2d, 2d - 7, 1)
  for (int d = 5; d <= 7; ++d) {
    for (int delta = 0; delta <= 1; ++delta)
      if (k3_triplet_realizable(28 - 2 * d, 2 * d - 6, delta)) s.insert({28 - 2 * d, 2 * d - 6, delta});
    s.insert({29 - 2 * d, 2 * d - 7, 1});
  }
  return s;
}

struct GeographyEntry {
  Triplet triplet;
  int g = 0;
  int k = 0;
  bool exists_lplus = false;
  bool exists_lminus = false;
  std::optional<std::string> fixture;
  bool named = false;
};

/// Every realizable triplet, ordered by (r, a, delta).
inline std::vector<GeographyEntry> geography_table() {
  const auto named = named_triplets();
  const auto fixtures = fixture_catalog();
  std::vector<GeographyEntry> out;
  for (int r = 1; r <= 20; ++r)
    for (int a = 0; a <= 22; ++a)
      for (int delta = 0; delta <= 1; ++delta) {
        if (!k3_triplet_realizable(r, a, delta)) continue;
        GeographyEntry e{{r, a, delta}, 11 - (r + a) / 2, (r - a) / 2, true, true, std::nullopt, false};
        e.named = named.count(e.triplet) > 0;
        for (const auto& f : fixtures)
          if (f.triplet == e.triplet) {
            e.fixture = f.name;
            break;
          }
        out.push_back(std::move(e));
      }
  return out;
}

/// Text grid: r runs horizontally, a vertically (largest a on top).
/// 'o' marks delta = 0 only, 'x' delta = 1 only, '*' both, '.' neither.
inline std::string geography_grid() {
  std::string s;
  for (int a = 11; a >= 0; --a) {
    std::string row = (a < 10 ? " " : "") + std::to_string(a) + " |";
    for (int r = 1; r <= 20; ++r) {
      const bool d0 = k3_triplet_realizable(r, a, 0);
      const bool d1 = k3_triplet_realizable(r, a, 1);
      row += "  ";
      row += d0 && d1 ? '*' : d0 ? 'o' : d1 ? 'x' : '.';
    }
    s += row + "\n";
  }
  s += "   +";
  for (int r = 1; r <= 20; ++r) s += "---";
  s += "\n    ";
  for (int r = 1; r <= 20; ++r) s += (r < 10 ? "  " : " ") + std::to_string(r);
  return s + "\n";
}

/// A direct sum of standard 2-elementary blocks (U, U(2), <2>, <-2>, E8, E8(2),
/// D4, E7, D6) with the given invariants, validated by recomputing its main
/// invariant. Blocks are tried in a fixed order, so the result is deterministic.
/// Returns the expression; see block_sum_witness for the lattice.
inline std::optional<std::string> block_sum_expr(int t_plus, int t_minus, int a, int delta) {
  if (!lattice_exists(t_plus, t_minus, a, delta)) return std::nullopt;
  struct Block {
    const char* expr;
    int plus, minus, a, odd, max;
  };
  static const Block blocks[] = {
      {"E8(2)", 0, 8, 8, 0, 1}, {"E8", 0, 8, 0, 0, 2}, {"E7", 0, 7, 1, 1, 2}, {"D6", 0, 6, 2, 1, 2},
      {"D4", 0, 4, 2, 0, 3},    {"<2>", 1, 0, 1, 1, 2}, {"<-2>", 0, 1, 1, 1, 20}, {"U(2)", 1, 1, 2, 0, 11},
  };
  constexpr int kBlocks = sizeof(blocks) / sizeof(blocks[0]);
  std::vector<int> count(kBlocks, 0);
  std::optional<std::string> found;
  auto dfs = [&](auto&& self, int i, int p, int m, int aa, int odd) -> void {
    if (found || p > t_plus || m > t_minus || aa > a) return;
    if (i == kBlocks) {
      // Fill with U.
      const int up = t_plus - p;
      if (up != t_minus - m || aa != a || (odd > 0) != (delta == 1)) return;
      std::string expr;
      auto add = [&](const std::string& atom, int c) {
        if (c <= 0) return;
        if (!expr.empty()) expr += " + ";
        expr += c == 1 ? atom : atom + "^" + std::to_string(c);
      };
      add("U", up);
      for (int k = kBlocks - 1; k >= 0; --k) add(blocks[k].expr, count[k]);
      if (expr.empty()) return;
      Lattice l = parse_lattice(expr);
      if (main_invariant(l) == MainInvariant{t_plus, t_minus, a, delta}) found = expr;
      return;
    }
    const Block& b = blocks[i];
    for (int c = 0; c <= b.max; ++c) {
      count[i] = c;
      self(self, i + 1, p + c * b.plus, m + c * b.minus, aa + c * b.a, odd + c * b.odd);
      if (found) return;
    }
    count[i] = 0;
  };
  dfs(dfs, 0, 0, 0, 0, 0);
  return found;
}

inline std::optional<Lattice> block_sum_witness(int t_plus, int t_minus, int a, int delta) {
  const auto e = block_sum_expr(t_plus, t_minus, a, delta);
  if (!e) return std::nullopt;
  return parse_lattice(*e);
}

/// Isotropic G with (G-perp/G) of invariants (a', delta'), and the overlattice it defines.
struct IsogenyGlue {
  SubgroupSpec subgroup;
  Overlattice over;
};

inline std::optional<IsogenyGlue> find_isogeny_glue(const Lattice& l, int a_target, int delta_target) {
  const auto d = discriminant_group(l);
  const auto q = discriminant_form(l, d);
  const int a = q.length();
  if (a_target > a || (a - a_target) % 2) return std::nullopt;
  const int rank = (a - a_target) / 2;
  auto g = find_isotropic_subgroup(q, rank, [&](const SubgroupSpec& s) {
    const auto f = quotient_form(q, s);
    return f.length() == a_target && parity_delta(f) == delta_target;
  });
  if (!g) return std::nullopt;
  std::vector<RatVector> glue;
  for (Element x : g->basis()) glue.push_back(d.lift(x));
  return IsogenyGlue{*g, overlattice(l, glue)};
}

}  // namespace k3lat
