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

#include "k3lat/geography.hpp"

namespace k3lat {
namespace {

TEST(Geography, SeventyFiveTriplets) {
  const auto t = geography_table();
  EXPECT_EQ(t.size(), 75u);
  for (const auto& e : t) {
    const auto [r, a, d] = e.triplet;
    EXPECT_TRUE(k3_triplet_realizable(r, a, d));
    EXPECT_LE(a, r);
    EXPECT_LE(r + a, 22);
    EXPECT_EQ((r - a) % 2, 0);
    EXPECT_EQ(e.g, 11 - (r + a) / 2);
    EXPECT_EQ(e.k, (r - a) / 2);
  }
  EXPECT_TRUE(std::is_sorted(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.triplet < y.triplet; }));
}

TEST(Geography, NamedTripletsAreRealizable) {
  for (const Triplet& t : std::vector<Triplet>{{1, 1, 1},   {2, 2, 0},   {5, 5, 1},   {10, 2, 0},  {10, 8, 0},  {10, 8, 1},
                                              {10, 10, 0}, {10, 10, 1}, {11, 9, 1},  {11, 11, 1}, {12, 8, 1},  {12, 10, 1},
                                              {13, 7, 1},  {13, 9, 1},  {14, 8, 1},  {15, 7, 1},  {16, 6, 1},  {17, 5, 1},
                                              {18, 4, 0},  {18, 4, 1},  {19, 3, 1}})
    EXPECT_TRUE(k3_triplet_realizable(t)) << to_string(t);
  for (const auto& t : named_triplets()) EXPECT_TRUE(k3_triplet_realizable(t)) << to_string(t);
}

TEST(Geography, KnownNonRealizable) {
  EXPECT_FALSE(k3_triplet_realizable(1, 1, 0));   // delta = 0 forces r = 2 mod 4
  EXPECT_FALSE(k3_triplet_realizable(12, 12, 1)); // r + a > 22
  EXPECT_FALSE(k3_triplet_realizable(11, 10, 1)); // parity
  EXPECT_FALSE(k3_triplet_realizable(20, 2, 0));
  EXPECT_TRUE(k3_triplet_realizable(20, 2, 1));
  EXPECT_TRUE(k3_triplet_realizable(10, 0, 0));
}

TEST(Geography, BothHalvesHaveBlockSumWitnesses) {
  int witnesses = 0;
  for (const auto& e : geography_table()) {
    const auto [r, a, d] = e.triplet;
    const auto plus = block_sum_witness(1, r - 1, a, d);
    const auto minus = block_sum_witness(2, 20 - r, a, d);
    ASSERT_TRUE(plus) << to_string(e.triplet);
    ASSERT_TRUE(minus) << to_string(e.triplet);
    EXPECT_EQ(main_invariant(*plus), (MainInvariant{1, r - 1, a, d}));
    EXPECT_EQ(main_invariant(*minus), (MainInvariant{2, 20 - r, a, d}));
    witnesses += 2;
  }
  EXPECT_EQ(witnesses, 150);
}

TEST(Geography, GeometricInvariants) {
  EXPECT_EQ(geometric_invariants(10, 10, 0).locus, FixedLocus::Empty);
  EXPECT_EQ(geometric_invariants(10, 8, 0).locus, FixedLocus::TwoElliptic);
  const auto g = geometric_invariants(14, 8, 1);
  EXPECT_EQ(g.g, 0);
  EXPECT_EQ(g.k, 3);
  EXPECT_THROW(geometric_invariants(1, 1, 0), Error);
}

TEST(Geography, GridShape) {
  const std::string s = geography_grid();
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 14);
  EXPECT_NE(s.find("20"), std::string::npos);
}

TEST(Isogeny, OverlatticeHitsTarget) {
  struct Case {
    const char* expr;
    int a, delta;
  };
  for (const Case& c : {Case{"E8(2)", 0, 0}, Case{"U(2)^2 + E8", 2, 0}, Case{"U(2)^2 + E8", 0, 0},
                        Case{"<2>^2 + <-2>^8", 8, 1}, Case{"<2>^2 + <-2>^8", 6, 1}, Case{"U + <2> + <-2> + E8(2)", 8, 1}}) {
    const Lattice l = parse_lattice(c.expr);
    const auto g = find_isogeny_glue(l, c.a, c.delta);
    ASSERT_TRUE(g) << c.expr << " -> " << c.a;
    const MainInvariant want{l.signature().plus, l.signature().minus, c.a, c.delta};
    EXPECT_EQ(main_invariant(g->over.lattice), want) << c.expr;
    EXPECT_EQ(g->over.index, Integer(1) << g->subgroup.rank());
  }
  EXPECT_FALSE(find_isogeny_glue(parse_lattice("U(2)"), 1, 1));
}

TEST(Isogeny, EveryHypothesisPairRoundTrips) {
  // (r, a, delta) -> (r, a', delta') with a > a' and delta = 1 or delta = delta'
  const auto table = geography_table();
  int pairs = 0;
  for (const auto& x : table)
    for (const auto& y : table) {
      const auto [r, a, d] = x.triplet;
      const auto [r2, a2, d2] = y.triplet;
      if (r2 != r || a2 >= a || (d == 0 && d2 != 0)) continue;
      const auto l = block_sum_witness(2, 20 - r, a, d);
      ASSERT_TRUE(l);
      const auto g = find_isogeny_glue(*l, a2, d2);
      ASSERT_TRUE(g) << to_string(x.triplet) << " -> " << to_string(y.triplet);
      EXPECT_EQ(main_invariant(g->over.lattice), (MainInvariant{2, 20 - r, a2, d2}));
      ++pairs;
    }
  EXPECT_EQ(pairs, 129);
}

}  // namespace
}  // namespace k3lat
