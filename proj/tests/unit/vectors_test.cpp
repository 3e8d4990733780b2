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
#include <random>
#include <set>

#include "k3lat/vectors.hpp"

namespace k3lat {
namespace {

// Random positive-definite Gram A^T A (optionally doubled to make it even).
Lattice random_definite(std::mt19937& rng, std::size_t n, bool negate) {
  std::uniform_int_distribution<int> d(-2, 2);
  while (true) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    if (determinant(a) == 0) continue;
    IntMatrix g = a.transpose() * a;
    if (negate) g = -g;
    return Lattice(g);
  }
}

// Every x in the box |x_i| <= sqrt(bound * (G^-1)_ii), which contains all of
// norm at most bound; canonical representatives only.
std::set<IntVector> brute_force(const Lattice& l, long bound) {
  const std::size_t n = l.rank();
  const int sign = l.signature().plus > 0 ? 1 : -1;
  const RatMatrix inv = inverse(l.gram());
  std::vector<long> box(n);
  for (std::size_t i = 0; i < n; ++i) box[i] = static_cast<long>(std::floor(std::sqrt(bound * std::abs(inv(i, i).get_d())) + 1e-9));
  std::set<IntVector> out;
  IntVector x(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      const Integer nm = sign * l.norm(x);
      if (nm > 0 && nm <= bound && detail::canonical_sign(x)) out.insert(x);
      return;
    }
    for (long c = -box[i]; c <= box[i]; ++c) {
      x[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

TEST(ShortVectors, MatchesBruteForceBox) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Lattice l = random_definite(rng, n, trial % 2 == 1);
    const long bound = 1 + trial % 8;
    std::set<IntVector> got;
    for (const auto& v : short_vectors(l, bound)) {
      EXPECT_EQ(v.norm, l.norm(v.x));
      got.insert(v.x);
    }
    EXPECT_EQ(got, brute_force(l, bound)) << "trial " << trial;
  }
}

TEST(ShortVectors, E8RootsAndNextShell) {
  const auto roots = short_vectors(lattice_E8(), 2);
  EXPECT_EQ(2 * roots.size(), 240u);
  for (const auto& r : roots) EXPECT_EQ(r.norm, -2);
  EXPECT_EQ(2 * short_vectors(lattice_E8(), 4).size(), 240u + 2160u);
}

TEST(ShortVectors, RootSystemsOfSmallLattices) {
  EXPECT_EQ(2 * short_vectors(lattice_D4(), 2).size(), 24u);
  EXPECT_EQ(2 * short_vectors(lattice_D6(), 2).size(), 60u);
  EXPECT_EQ(2 * short_vectors(lattice_E7(), 2).size(), 126u);
}

TEST(ShortVectors, SortedByNorm) {
  const auto v = short_vectors(lattice_D4(), 6);
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LE(abs(v[i - 1].norm), abs(v[i].norm));
}

TEST(ShortVectors, IndefiniteIsRejected) {
  EXPECT_THROW(short_vectors(lattice_U(), 2), Error);
  try {
    short_vectors(lattice_U(), 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDefinite);
  }
}

TEST(Witness, FindsVectorsOfGivenNorm) {
  const Lattice l = direct_sum(lattice_U(), lattice_E8());
  for (long t : {0L, -2L, 2L, -4L}) {
    const auto w = witness_vector(l, t, 1);
    ASSERT_TRUE(w) << t;
    EXPECT_EQ(l.norm(*w), t);
  }
  EXPECT_FALSE(witness_vector(lattice_E8(), -3, 2));  // even lattice
  EXPECT_THROW(witness_vector(lattice_E8(), -2, 0), Error);
}

TEST(Witness, HalfClass) {
  const Lattice l = lattice_M(3);
  const auto h = disc_class_of_vector(l, {0, 1, 0});
  EXPECT_TRUE(h.half_in_dual);
  ASSERT_TRUE(h.element);
  const Lattice u = lattice_U();
  EXPECT_FALSE(disc_class_of_vector(u, {1, 1}).half_in_dual);
}

}  // namespace
}  // namespace k3lat
