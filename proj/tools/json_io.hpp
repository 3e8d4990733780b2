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

// JSON views of library objects for the command-line tool. Integers that may
// exceed 64 bits and all rationals are written as decimal strings.

#pragma once

#include <json.hpp>

#include "k3lat/k3lat.hpp"

namespace k3lat::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json big(const Integer& x) { return x.get_str(); }
inline Json big(const Rational& x) { return x.get_str(); }

inline Json vec(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

inline Json triplet(const Triplet& t) { return Json::array({t[0], t[1], t[2]}); }

inline Json form(const FiniteQuadraticForm& q) {
  Json gens = Json::array();
  for (int k : q.q_generators()) gens.push_back(make_rational(k, 2).get_str());
  Json rows = Json::array();
  for (int i = 0; i < q.length(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < q.length(); ++j) row.push_back(q.b_half(Element(1) << i, Element(1) << j) ? "1/2" : "0");
    rows.push_back(row);
  }
  return Json{{"length", q.length()}, {"q", gens}, {"b", rows}};
}

inline Json series(const FracSeries& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({FracSeries::exponent(e).get_str(), c.get_str()}));
  return Json{{"terms", terms}, {"prec", f.precision().get_str()}};
}

inline Json ledger(const DivisorLedger& l) {
  Json entries = Json::array();
  for (const auto& [c, m] : l.entries) entries.push_back(Json{{"class", to_string(c)}, {"multiplicity", big(m)}});
  return Json{{"entries", entries}, {"nu", l.nu}, {"k", l.k}, {"n", l.n}};
}

inline Json report(const Case1Report& r) {
  Json j{{"family", "case1"},      {"triplet", triplet(r.triplet)}, {"covered", r.covered}, {"g", r.g},
         {"nu", r.nu},             {"k", r.k},                      {"n", r.n},             {"k_minus_nu_n", r.slack},
         {"verdict", to_string(r.verdict)}, {"lminus", r.lminus},   {"dprime_nonzero", r.dprime_nonzero}};
  j["dprime_witness"] = r.dprime_witness ? vec(*r.dprime_witness) : Json();
  j["special"] = r.special;
  if (r.special) {
    j["special_lattice"] = r.special_lattice;
    j["special_witness"] = r.special_witness ? vec(*r.special_witness) : Json();
  }
  j["ledger"] = ledger(r.ledger);
  j["note"] = r.note;
  j["axiom"] = "R >= D";
  return j;
}

inline Json report(const Case2Report& r) {
  return Json{{"family", "case2"},
              {"triplet", triplet(r.triplet)},
              {"r_minus", r.r_minus},
              {"a_minus", r.a_minus},
              {"sigma_minus", r.sigma_minus},
              {"m", r.m},
              {"k", r.k},
              {"n", r.n},
              {"k_minus_n", r.slack},
              {"xi_weight", big(r.xi_weight)},
              {"verdict", to_string(r.verdict)},
              {"ledger", ledger(r.ledger)},
              {"axiom", "R >= H"}};
}

}  // namespace k3lat::io
