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

#include <map>
#include <string>
#include <vector>

#include "k3lat/finite_form.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/// The action r_L(gamma) on the generators of D_L.
inline DiscAction induced_disc_action(const Lattice& l, const DiscriminantGroup& d, const IntMatrix& gamma) {
  if (!l.preserves(gamma)) fail(ErrorCode::NotIsometry, "matrix does not preserve the Gram matrix");
  const RatMatrix g = to_rational(gamma);
  DiscAction out;
  for (const auto& x : d.lifts) out.push_back(d.element(mat_vec(g, x)));
  if (l.is_even()) {
    const auto q = discriminant_form(l, d);
    if (!preserves_form(out, q, q)) fail(ErrorCode::NotIsometry, "induced map does not preserve q_L");
  }
  return out;
}

inline DiscAction induced_disc_action(const Lattice& l, const IntMatrix& gamma) {
  return induced_disc_action(l, discriminant_group(l), gamma);
}

/// The anti-isometry lambda: D_L -> D_M read off from a unimodular gluing.
struct GlueMap {
  DiscAction lambda;  // images of the D_L generators in D_M
  FiniteQuadraticForm q_l;
  FiniteQuadraticForm q_m;
  Lattice glued;
};

/// Glue vectors are given in coordinates of L + M (L first).
inline GlueMap glue_map_from_embedding(const Lattice& l, const Lattice& m, const std::vector<RatVector>& glue) {
  const Lattice sum = direct_sum(l, m);
  const Overlattice over = overlattice(sum, glue);
  if (over.lattice.disc_order() != 1) fail(ErrorCode::NotUnimodular, "glued lattice has |det| = " + over.lattice.disc_order().get_str());
  if (!over.lattice.is_even()) fail(ErrorCode::NotUnimodular, "glued lattice is unimodular but not even");
  const auto dl = discriminant_group(l);
  const auto dm = discriminant_group(m);
  GlueMap out{{}, discriminant_form(l, dl), discriminant_form(m, dm), over.lattice};
  const int al = out.q_l.length();
  const int am = out.q_m.length();
  if (al != am) fail(ErrorCode::NotGraph, "discriminant groups have different lengths");
  const std::size_t nl = l.rank();
  std::vector<Element> pairs;
  for (const auto& v : glue) {
    RatVector x(v.begin(), v.begin() + nl);
    RatVector y(v.begin() + nl, v.end());
    pairs.push_back((dl.element(x) << am) | dm.element(y));
  }
  const auto basis = f2::rref(pairs);
  if (static_cast<int>(basis.size()) != al) fail(ErrorCode::NotGraph, "glue group has the wrong order");
  const Element low = am == 0 ? 0 : (Element(1) << am) - 1;
  out.lambda.assign(al, 0);
  std::vector<Element> images_m;
  for (Element b : basis) {
    const Element xl = b >> am;
    if (std::popcount(xl) != 1) fail(ErrorCode::NotGraph, "glue classes do not project injectively to D_L");
    out.lambda[std::countr_zero(xl)] = b & low;
    images_m.push_back(b & low);
  }
  if (static_cast<int>(f2::rref(images_m).size()) != am) fail(ErrorCode::NotGraph, "glue classes do not project injectively to D_M");
  if (!preserves_form(out.lambda, out.q_l, out.q_m.negated()))
    fail(ErrorCode::NotIsometry, "glue map is not an anti-isometry");
  return out;
}

/// The isometry permuting basis vectors by label (unlisted labels are fixed);
/// throws NotIsometry if the permutation does not preserve the Gram matrix.
inline IntMatrix label_permutation(const Lattice& l, const std::map<std::string, std::string>& images) {
  const std::size_t n = l.rank();
  IntMatrix p(n, n);
  std::vector<bool> hit(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const auto it = images.find(l.labels()[j]);
    const std::string& target = it == images.end() ? l.labels()[j] : it->second;
    const auto i = l.index_of(target);
    if (!i) fail(ErrorCode::InvalidArgument, "unknown label " + target);
    if (hit[*i]) fail(ErrorCode::InvalidArgument, "labels do not form a permutation");
    hit[*i] = true;
    p(*i, j) = 1;
  }
  if (!l.preserves(p)) fail(ErrorCode::NotIsometry, "label permutation does not preserve the Gram matrix");
  return p;
}

/// True iff r_L(gamma_l) = lambda^-1 r_M(gamma_m) lambda.
inline bool glues_to_isometry(const Lattice& l, const Lattice& m, const DiscAction& lambda, const IntMatrix& gamma_l,
                              const IntMatrix& gamma_m) {
  const DiscAction rl = induced_disc_action(l, gamma_l);
  const DiscAction rm = induced_disc_action(m, gamma_m);
  return compose(lambda, rl) == compose(rm, lambda);
}

}  // namespace k3lat
