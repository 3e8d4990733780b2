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

// k3lat command-line front end.
//
// Exit codes: 0 success, 1 usage error (bad flags, unparsable input),
// 2 domain error (the input is well formed but the request has no answer).

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "k3lat/k3lat.hpp"

namespace {

using k3lat::io::Json;
using namespace k3lat;

struct Options {
  bool json = false;
  std::string expr;
  std::string text;
  std::vector<int> triplet;
  long bound = 2;
  long norm = -2;
  int box = 2;
  long prec = 32;
  int index = 0;
  int a = 0;
  int delta = 0;
  int r_minus = 5;
  bool count = false;
  bool all = false;
  bool orthogonal = false;
};

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string sig_string(int p, int m) { return "(" + std::to_string(p) + "," + std::to_string(m) + ")"; }

// ---- lat ----

void lat_info(const Options& o) {
  const Lattice l = parse_lattice(o.expr);
  const Inertia s = l.signature();
  Json j{{"rank", l.rank()}, {"signature", Json::array({s.plus, s.minus})}, {"even", l.is_even()}};
  std::ostringstream t;
  t << "rank       " << l.rank() << "\n"
    << "signature  " << sig_string(s.plus, s.minus) << "\n"
    << "even       " << (l.is_even() ? "yes" : "no") << "\n";
  const auto d = discriminant_group(l);
  if (l.is_even() && d.two_elementary()) {
    const MainInvariant mi = main_invariant(l);
    j["main_invariant"] = Json::array({mi.r_plus, mi.r_minus, mi.a, mi.delta});
    t << "main       (" << mi.r_plus << "," << mi.r_minus << "," << mi.a << "," << mi.delta << ")\n";
  } else {
    j["main_invariant"] = nullptr;
    t << "main       -\n";
  }
  emit(o, j, t.str());
}

void lat_disc(const Options& o) {
  const Lattice l = parse_lattice(o.expr);
  const auto d = discriminant_group(l);
  Json orders = Json::array();
  for (const auto& x : d.orders) orders.push_back(io::big(x));
  Json j{{"det", io::big(l.det())}, {"order", io::big(d.order())}, {"invariants", orders}};
  std::ostringstream t;
  t << "det        " << l.det().get_str() << "\n"
    << "|D|        " << d.order().get_str() << "\n"
    << "invariants";
  for (const auto& x : d.orders) t << " " << x.get_str();
  t << "\n";
  if (l.is_even() && d.two_elementary()) {
    const auto q = discriminant_form(l, d);
    const auto inv = form_invariants(q);
    j["form"] = io::form(q);
    j["a"] = inv.a;
    j["delta"] = inv.delta;
    j["sigma"] = inv.sigma;
    t << "form       " << q.to_string() << "\n"
      << "(a,d,s)    (" << inv.a << "," << inv.delta << "," << inv.sigma << ")\n";
    if (o.orthogonal) {
      const Integer n = orthogonal_group_order(q);
      j["orthogonal_group_order"] = io::big(n);
      t << "|O(q)|     " << n.get_str() << "\n";
    }
  }
  emit(o, j, t.str());
}

void lat_dual(const Options& o) {
  const Lattice l = parse_lattice(o.expr);
  const Lattice dl = dual_rescaled(l);
  const auto s = summarize(dl);
  Json j{{"rank", s.rank},
         {"signature", Json::array({s.r_plus, s.r_minus})},
         {"disc_order", io::big(s.disc_order)},
         {"even", s.even}};
  std::ostringstream t;
  t << "rank       " << s.rank << "\n"
    << "signature  " << sig_string(s.r_plus, s.r_minus) << "\n"
    << "|D|        " << s.disc_order.get_str() << "\n"
    << "even       " << (s.even ? "yes" : "no") << "\n";
  emit(o, j, t.str());
}

void lat_isogeny(const Options& o) {
  const Lattice l = parse_lattice(o.expr);
  const auto g = find_isogeny_glue(l, o.a, o.delta);
  if (!g) fail(ErrorCode::NotFound, "no isotropic subgroup gives (a, delta) = (" + std::to_string(o.a) + ", " + std::to_string(o.delta) + ")");
  const MainInvariant mi = main_invariant(g->over.lattice);
  Json basis = Json::array();
  for (Element x : g->subgroup.basis()) basis.push_back(x);
  Json j{{"subgroup_order", g->subgroup.order()},
         {"subgroup_basis", basis},
         {"index", io::big(g->over.index)},
         {"main_invariant", Json::array({mi.r_plus, mi.r_minus, mi.a, mi.delta})}};
  std::ostringstream t;
  t << "|G|        " << g->subgroup.order() << "\n"
    << "index      " << g->over.index.get_str() << "\n"
    << "main       (" << mi.r_plus << "," << mi.r_minus << "," << mi.a << "," << mi.delta << ")\n";
  emit(o, j, t.str());
}

// ---- geo ----

void geo_list(const Options& o) {
  const auto table = geography_table();
  if (o.count) {
    emit(o, Json{{"count", table.size()}}, std::to_string(table.size()) + "\n");
    return;
  }
  Json rows = Json::array();
  std::ostringstream t;
  t << "r   a   d   g   k   fixture          status\n";
  for (const auto& e : table) {
    const std::string status = e.named ? "named" : "derived, unverified against figure";
    rows.push_back(Json{{"triplet", io::triplet(e.triplet)},
                        {"g", e.g},
                        {"k", e.k},
                        {"fixture", e.fixture ? Json(*e.fixture) : Json()},
                        {"named", e.named}});
    t << pad(std::to_string(e.triplet[0]), 4) << pad(std::to_string(e.triplet[1]), 4) << pad(std::to_string(e.triplet[2]), 4)
      << pad(std::to_string(e.g), 4) << pad(std::to_string(e.k), 4) << pad(e.fixture.value_or("-"), 17) << status << "\n";
  }
  emit(o, Json{{"schema", io::kSchemaVersion}, {"count", table.size()}, {"triplets", rows}}, t.str());
}

void geo_grid(const Options& o) { emit(o, Json{{"grid", geography_grid()}}, geography_grid()); }

void geo_triplet(const Options& o) {
  const int r = o.triplet[0], a = o.triplet[1], d = o.triplet[2];
  const GeometricInvariants gi = geometric_invariants(r, a, d);
  const auto plus = block_sum_expr(1, r - 1, a, d);
  const auto minus = block_sum_expr(2, 20 - r, a, d);
  Json j{{"triplet", Json::array({r, a, d})},
         {"g", gi.g},
         {"k", gi.k},
         {"fixed_locus", to_string(gi.locus)},
         {"lplus", plus ? Json(*plus) : Json()},
         {"lminus", minus ? Json(*minus) : Json()},
         {"named", named_triplets().count({r, a, d}) > 0}};
  std::ostringstream t;
  t << "triplet    " << to_string(Triplet{r, a, d}) << "\n"
    << "g, k       " << gi.g << ", " << gi.k << "\n"
    << "locus      " << to_string(gi.locus) << "\n"
    << "L+         " << plus.value_or("-") << "\n"
    << "L-         " << minus.value_or("-") << "\n";
  emit(o, j, t.str());
}

void geo_fixtures(const Options& o) {
  Json rows = Json::array();
  std::ostringstream t;
  for (const auto& f : fixture_catalog()) {
    const auto p = parse_lattice_full(f.expr);
    const MainInvariant mi = main_invariant(p.lattice());
    const bool ok = mi == f.expected && (!f.index || (p.over && p.over->index == *f.index));
    rows.push_back(Json{{"name", f.name},
                        {"expr", f.expr},
                        {"main_invariant", Json::array({mi.r_plus, mi.r_minus, mi.a, mi.delta})},
                        {"index", p.over ? io::big(p.over->index) : Json()},
                        {"ok", ok}});
    t << pad(f.name, 16) << "(" << mi.r_plus << "," << mi.r_minus << "," << mi.a << "," << mi.delta << ")  "
      << (ok ? "ok" : "MISMATCH") << "\n";
  }
  emit(o, Json{{"fixtures", rows}}, t.str());
}

// ---- vec ----

void vec_short(const Options& o) {
  const Lattice l = parse_lattice(o.expr);
  const auto v = short_vectors(l, o.bound);
  Json rows = Json::array();
  std::ostringstream t;
  t << v.size() << " pairs +-x with |x^2| <= " << o.bound << "\n";
  for (const auto& s : v) {
    rows.push_back(Json{{"x", io::vec(s.x)}, {"norm", io::big(s.norm)}});
    t << pad(s.norm.get_str(), 6);
    for (const auto& c : s.x) t << " " << c.get_str();
    t << "\n";
  }
  emit(o, Json{{"count", v.size()}, {"vectors", rows}}, t.str());
}

void vec_witness(const Options& o) {
  const Lattice l = parse_lattice(o.expr);
  const auto w = witness_vector(l, o.norm, o.box);
  if (!w) fail(ErrorCode::NotFound, "no vector of norm " + std::to_string(o.norm) + " in the box");
  const HalfClass h = disc_class_of_vector(l, *w);
  std::ostringstream t;
  for (const auto& c : *w) t << c.get_str() << " ";
  t << "\nhalf in dual: " << (h.half_in_dual ? "yes" : "no") << "\n";
  emit(o, Json{{"x", io::vec(*w)}, {"norm", o.norm}, {"half_in_dual", h.half_in_dual}}, t.str());
}

// ---- qexp ----

std::vector<std::pair<long, long>> parse_eta_spec(const std::string& s) {
  // s^m terms separated by commas or spaces; a bare s means m = 1
  static const std::regex term(R"(\s*([1-9][0-9]*)(?:\^(-?[0-9]+))?\s*(?:,|\s|$))");
  std::vector<std::pair<long, long>> out;
  auto it = s.cbegin();
  std::smatch m;
  while (it != s.cend()) {
    if (!std::regex_search(it, s.cend(), m, term, std::regex_constants::match_continuous) || m.length(0) == 0)
      throw ParseError(static_cast<std::size_t>(it - s.cbegin()), "eta spec must look like 1^-8,2^8,4^-8");
    out.push_back({std::stol(m[1].str()), m[2].matched ? std::stol(m[2].str()) : 1});
    it = m[0].second;
  }
  if (out.empty()) throw ParseError(0, "empty eta spec");
  return out;
}

void qexp(const Options& o, const std::string& what) {
  FracSeries f;
  const Rational prec = o.prec;
  if (what == "eta")
    f = eta_quotient(parse_eta_spec(o.text), prec);
  else if (what == "theta")
    f = theta_series(o.text == "shifted" ? ThetaKind::Shifted : ThetaKind::Integral, prec);
  else if (what == "psi")
    f = psi_m(std::stol(o.text), prec);
  else if (what == "psiv")
    f = psi_m_at_v(std::stol(o.text), prec);
  else if (what == "h")
    f = h_component(std::stol(o.text), o.index, prec);
  emit(o, io::series(f), f.to_string());
}

// ---- weil ----

FiniteQuadraticForm form_of(const std::string& expr) { return discriminant_form(parse_lattice(expr)); }

std::string matrix_text(const CycMatrix& m) {
  std::ostringstream t;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t << (j ? "  " : "") << m(i, j).to_string();
    t << "\n";
  }
  return t.str();
}

Json matrix_json(const CycMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return Json{{"dimension", m.rows()}, {"entries", rows}};
}

void weil_matrix(const Options& o, const std::string& word) {
  const auto q = form_of(o.expr);
  if (q.length() > 6) fail(ErrorCode::BoundExceeded, "matrix dumps are limited to |D| <= 64");
  const CycMatrix m = weil_word(q, milgram_signature(q), word);
  emit(o, matrix_json(m), matrix_text(m));
}

void weil_check(const Options& o) {
  const auto q = form_of(o.expr);
  const int sigma = milgram_signature(q);
  const WeilRepresentation rho(q, sigma);
  const bool braid = rho.words_equal(parse_word("(ST)^3"), parse_word("S^2"));
  bool s8 = true;
  for (std::size_t g = 0; g < rho.dimension() && s8; ++g)
    s8 = rho.apply(parse_word("S^8"), rho.basis(static_cast<Element>(g))) == rho.basis(static_cast<Element>(g));
  const Element one = one_element(q);
  const bool v = rho.apply(parse_word("V^-1"), rho.basis(0)) == rho.basis(one);
  Json coset = Json::array();
  bool all = braid && s8 && v;
  std::ostringstream t;
  t << "(ST)^3 = S^2      " << (braid ? "ok" : "FAIL") << "\n"
    << "S^8 = 1           " << (s8 ? "ok" : "FAIL") << "\n"
    << "V^-1 e0 = e_1L    " << (v ? "ok" : "FAIL") << "\n";
  for (int l = 0; l < 4; ++l) {
    const auto c = coset_formula_check(q, sigma, l);
    coset.push_back(c.ok);
    all = all && c.ok;
    t << "coset l=" << l << "        " << (c.ok ? "ok" : "FAIL " + c.detail) << "\n";
  }
  emit(o,
       Json{{"sigma", sigma}, {"s_scale", "zeta^-sigma 2^(-a/2)"}, {"one", one}, {"braid", braid}, {"s8", s8}, {"v_inverse", v}, {"coset", coset}, {"ok", all}},
       t.str());
  if (!all) fail(ErrorCode::NotIsometry, "Weil relation check failed");
}

void weil_lift(const Options& o) {
  const int rm = o.r_minus;
  if (rm < 3) fail(ErrorCode::OutOfFamily, "r_- must be at least 3");
  const Lattice l = direct_sum(power(lattice_diag(2), 2), power(lattice_diag(-2), rm - 2));
  const auto q = discriminant_form(l);
  const VectorValuedForm f = lift_B(q, rm, rm, o.prec);
  Json pp = Json::array();
  std::ostringstream t;
  t << "weight " << f.weight.get_str() << ", 1_L = " << f.one << "\n"
    << "psi    " << f.psi.to_string().substr(0, f.psi.to_string().find('\n')) << " ...\n";
  for (const auto& term : principal_part(f)) {
    pp.push_back(Json{{"component", term.component},
                      {"exponent", term.exponent.get_str()},
                      {"coefficient", term.coefficient.get_str()}});
    t << "e_" << pad(std::to_string(term.component), 6) << "q^" << pad(term.exponent.get_str(), 6) << term.coefficient.get_str() << "\n";
  }
  Json h = Json::array();
  for (int k = 0; k < 4; ++k) h.push_back(io::series(f.h[k].truncated(FracSeries::units(2))));
  emit(o,
       Json{{"r_minus", rm},
            {"weight", f.weight.get_str()},
            {"one", f.one},
            {"scale", io::big(f.scale)},
            {"psi", io::series(f.psi.truncated(FracSeries::units(2)))},
            {"h", h},
            {"psi_v", io::series(f.psi_v.truncated(FracSeries::units(3)))},
            {"principal_part", pp}},
       t.str());
}

// ---- audit ----

void audit_kodaira(const Options& o) {
  if (o.all == !o.triplet.empty()) throw CLI::ValidationError("audit kodaira", "give exactly one of --all or --triplet");
  std::vector<CoverageRow> rows;
  if (o.all) {
    rows = kodaira_coverage();
  } else {
    const int r = o.triplet[0], a = o.triplet[1], d = o.triplet[2];
    if (!k3_triplet_realizable(r, a, d)) fail(ErrorCode::NotRealizable, "triplet " + to_string(Triplet{r, a, d}) + " is not realizable");
    CoverageRow row{{r, a, d}, std::nullopt, std::nullopt, Verdict::NotCovered};
    if (r >= 13 && r <= 17) row.case1 = case1_report(r, a, d);
    if (r + a == 22 && r >= 11 && r <= 17) row.case2 = case2_report(r, a, d);
    const bool minf = (row.case1 && row.case1->verdict == Verdict::MinusInfinity) ||
                      (row.case2 && row.case2->verdict == Verdict::MinusInfinity);
    row.verdict = minf ? Verdict::MinusInfinity : (row.case1 || row.case2) ? Verdict::Inconclusive : Verdict::NotCovered;
    rows.push_back(row);
  }
  Json out = Json::array();
  std::ostringstream t;
  t << "triplet     family  g   nu  k    n   slack  verdict\n";
  for (const auto& row : rows) {
    if (o.all && row.verdict == Verdict::NotCovered) continue;
    Json j{{"triplet", io::triplet(row.triplet)}, {"verdict", to_string(row.verdict)}};
    // headline fields from the family that decides the verdict; case 2 wins ties
    if (row.case2) {
      j["k"] = row.case2->k;
      j["n"] = row.case2->n;
    } else if (row.case1) {
      j["k"] = row.case1->k;
      j["n"] = row.case1->n;
    }
    Json reports = Json::array();
    if (row.case1) {
      reports.push_back(io::report(*row.case1));
      const auto& c = *row.case1;
      t << pad(to_string(row.triplet), 12) << pad("1", 8) << pad(std::to_string(c.g), 4) << pad(std::to_string(c.nu), 4)
        << pad(std::to_string(c.k), 5) << pad(std::to_string(c.n), 4) << pad(std::to_string(c.slack), 7) << to_string(c.verdict)
        << (c.special ? "  (norm -4 witness)" : "") << "\n";
    }
    if (row.case2) {
      reports.push_back(io::report(*row.case2));
      const auto& c = *row.case2;
      t << pad(to_string(row.triplet), 12) << pad("2", 8) << pad("-", 4) << pad("1", 4) << pad(std::to_string(c.k), 5)
        << pad(std::to_string(c.n), 4) << pad(std::to_string(c.slack), 7) << to_string(c.verdict) << "  (m = " << c.m
        << ", lift weight " << c.xi_weight.get_str() << ")\n";
    }
    if (!row.case1 && !row.case2) t << pad(to_string(row.triplet), 12) << "-       not covered\n";
    j["reports"] = reports;
    out.push_back(j);
  }
  if (o.all) {
    emit(o, Json{{"schema", io::kSchemaVersion}, {"rows", out}}, t.str());
  } else {
    Json j = out.at(0);
    j["schema"] = io::kSchemaVersion;
    emit(o, j, t.str());
  }
}

void audit_lift(const Options& o) {
  const auto c = lift_consistency(o.r_minus);
  std::ostringstream t;
  t << "r_-          " << c.r_minus << "\n"
    << "k            " << c.k << "\n"
    << "psi const    " << c.psi_constant.get_str() << "\n"
    << "e0 const     " << c.e0_constant.get_str() << "\n"
    << "lift weight  " << c.xi_weight.get_str() << "\n"
    << "consistent   " << (c.ok ? "yes" : "no: " + c.detail) << "\n";
  emit(o,
       Json{{"r_minus", c.r_minus},
            {"k", c.k},
            {"psi_constant", c.psi_constant.get_str()},
            {"e0_constant", c.e0_constant.get_str()},
            {"xi_weight", io::big(c.xi_weight)},
            {"ok", c.ok}},
       t.str());
  if (!c.ok) fail(ErrorCode::NotFound, c.detail);
}

int run(int argc, char** argv) {
  CLI::App app{"k3lat: 2-elementary lattices, discriminant forms and the K3 geography"};
  app.require_subcommand(1);
  Options o;
  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };

  auto* lat = app.add_subcommand("lat", "lattice expressions")->require_subcommand(1);
  auto* lat_info_c = lat->add_subcommand("info", "rank, signature, parity, main invariant");
  auto* lat_disc_c = lat->add_subcommand("disc", "discriminant group and form");
  auto* lat_dual_c = lat->add_subcommand("dual", "invariants of L^dual(2)");
  auto* lat_iso_c = lat->add_subcommand("isogeny", "overlattice with target (a, delta)");
  for (auto* c : {lat_info_c, lat_disc_c, lat_dual_c, lat_iso_c}) {
    c->add_option("expr", o.expr, "lattice expression, e.g. \"<2>^2 + <-2>^8\"")->required();
    json_flag(c);
  }
  lat_disc_c->add_flag("--orthogonal", o.orthogonal, "also compute |O(q)| (length <= 8)");
  lat_iso_c->add_option("a", o.a)->required();
  lat_iso_c->add_option("delta", o.delta)->required();

  auto* geo = app.add_subcommand("geo", "the 75 triplets")->require_subcommand(1);
  auto* geo_list_c = geo->add_subcommand("list", "all realizable triplets");
  geo_list_c->add_flag("--count", o.count, "print only the number of triplets");
  auto* geo_grid_c = geo->add_subcommand("grid", "text plot of the geography");
  auto* geo_trip_c = geo->add_subcommand("triplet", "invariants and model lattices of one triplet");
  geo_trip_c->add_option("triplet", o.triplet, "r a delta")->expected(3)->required();
  auto* geo_fix_c = geo->add_subcommand("fixtures", "recompute the fixture catalog");
  for (auto* c : {geo_list_c, geo_grid_c, geo_trip_c, geo_fix_c}) json_flag(c);

  auto* vec = app.add_subcommand("vec", "short and witness vectors")->require_subcommand(1);
  auto* vec_short_c = vec->add_subcommand("short", "Fincke-Pohst enumeration on a definite lattice");
  vec_short_c->add_option("--bound", o.bound, "bound on |x^2|")->capture_default_str();
  auto* vec_wit_c = vec->add_subcommand("witness", "box search for a vector of given norm");
  vec_wit_c->add_option("--norm", o.norm)->capture_default_str();
  vec_wit_c->add_option("--box", o.box, "coordinate box")->capture_default_str();
  for (auto* c : {vec_short_c, vec_wit_c}) {
    c->add_option("expr", o.expr)->required();
    json_flag(c);
  }

  auto* q = app.add_subcommand("qexp", "q-expansions")->require_subcommand(1);
  std::string qwhat;
  auto* q_eta = q->add_subcommand("eta", "eta quotient, e.g. 1^-8,2^8,4^-8");
  auto* q_theta = q->add_subcommand("theta", "theta series: integral | shifted");
  auto* q_psi = q->add_subcommand("psi", "psi_m");
  auto* q_psiv = q->add_subcommand("psiv", "psi_m at the V coset");
  auto* q_h = q->add_subcommand("h", "h_m^(i)");
  for (auto* c : {q_eta, q_theta, q_psi, q_psiv, q_h}) {
    c->add_option("arg", o.text)->required();
    c->add_option("--prec", o.prec, "exponent cutoff")->capture_default_str();
    json_flag(c);
    c->callback([&qwhat, c] { qwhat = c->get_name(); });
  }
  q_h->add_option("i", o.index, "congruence class mod 4")->required()->check(CLI::Range(0, 3));
  q_theta->get_option("arg")->check(CLI::IsMember({"integral", "shifted"}));

  auto* weil = app.add_subcommand("weil", "Weil representation of a discriminant form")->require_subcommand(1);
  std::string word;
  auto* w_t = weil->add_subcommand("T", "rho(T)");
  auto* w_s = weil->add_subcommand("S", "rho(S)");
  auto* w_word = weil->add_subcommand("word", "rho of a word in S, T, V, Z, e.g. \"(ST)^3\"");
  auto* w_check = weil->add_subcommand("check", "metaplectic relations and coset formulas");
  for (auto* c : {w_t, w_s, w_word, w_check}) {
    c->add_option("expr", o.expr, "lattice whose discriminant form is used")->required();
    json_flag(c);
  }
  w_word->add_option("word", word)->required();
  auto* w_lift = weil->add_subcommand("lift", "lift of psi_m for <2>^2 + <-2>^(r-2)");
  w_lift->add_option("--rminus", o.r_minus)->capture_default_str();
  w_lift->add_option("--prec", o.prec)->capture_default_str();
  json_flag(w_lift);

  auto* audit = app.add_subcommand("audit", "Kodaira dimension report")->require_subcommand(1);
  auto* a_k = audit->add_subcommand("kodaira", "verdicts of the two modular form families");
  a_k->add_flag("--all", o.all, "every realizable triplet");
  a_k->add_option("--triplet", o.triplet, "r a delta")->expected(3);
  auto* a_l = audit->add_subcommand("lift", "principal part and weight of the lift");
  a_l->add_option("--rminus", o.r_minus)->capture_default_str();
  for (auto* c : {a_k, a_l}) json_flag(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (lat_info_c->parsed()) lat_info(o);
    else if (lat_disc_c->parsed()) lat_disc(o);
    else if (lat_dual_c->parsed()) lat_dual(o);
    else if (lat_iso_c->parsed()) lat_isogeny(o);
    else if (geo_list_c->parsed()) geo_list(o);
    else if (geo_grid_c->parsed()) geo_grid(o);
    else if (geo_trip_c->parsed()) geo_triplet(o);
    else if (geo_fix_c->parsed()) geo_fixtures(o);
    else if (vec_short_c->parsed()) vec_short(o);
    else if (vec_wit_c->parsed()) vec_witness(o);
    else if (!qwhat.empty()) qexp(o, qwhat);
    else if (w_t->parsed()) weil_matrix(o, "T");
    else if (w_s->parsed()) weil_matrix(o, "S");
    else if (w_word->parsed()) weil_matrix(o, word);
    else if (w_check->parsed()) weil_check(o);
    else if (w_lift->parsed()) weil_lift(o);
    else if (a_k->parsed()) audit_kodaira(o);
    else if (a_l->parsed()) audit_lift(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const k3lat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidArgument;
    return usage ? 1 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
