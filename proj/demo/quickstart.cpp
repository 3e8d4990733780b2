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

// Builds a glued lattice, reads off its discriminant form, and runs the
// Kodaira audit for the triplet it realizes.

#include <iostream>

#include "k3lat/k3lat.hpp"

int main() {
  using namespace k3lat;

  const auto p = parse_lattice_full("M12 glue { (3h - 2e1 - sum(e3..e11))/2 ; (3h - 2e2 - sum(e3..e11))/2 }");
  const Lattice& l = p.lattice();
  const MainInvariant mi = main_invariant(l);
  std::cout << "index " << p.over->index.get_str() << ", main invariant (" << mi.r_plus << "," << mi.r_minus << ","
            << mi.a << "," << mi.delta << ")\n";

  const auto q = discriminant_form(l);
  std::cout << "discriminant form " << q.to_string() << ", signature " << milgram_signature(q) << " mod 8\n";

  // The complement L- has signature (2, 20 - r) and the same (a, delta).
  const auto lminus = block_sum_expr(2, 20 - mi.rank(), mi.a, mi.delta);
  std::cout << "model for L-: " << lminus.value_or("none") << "\n";

  const Case2Report c2 = case2_report(mi.rank(), mi.a, mi.delta);
  std::cout << "lift weight " << c2.xi_weight.get_str() << ", k - n = " << c2.slack << ", verdict " << to_string(c2.verdict)
            << "\n";
}
