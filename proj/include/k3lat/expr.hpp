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

// Lattice expressions:
//
//   expr  := sum [ "glue" "{" combo { ";" combo } "}" ]
//   sum   := term { "+" term }
//   term  := atom [ "(" int ")" ] [ "^" int ]
//   atom  := "U" | "E8" | "E7" | "D4" | "D6" | "A1" | "M" int | "LambdaK3" | "<" int ">"
//   combo := "(" lin ")" "/" int | lin
//   lin   := [ "-" ] mono { ("+" | "-") mono }
//   mono  := [ int [ "*" ] ] ( label | "sum(" label ".." label ")" )
//
// Basis labels: U gives u, v; <k> gives h (k > 0) or e (k < 0); A1 gives a;
// E8 gives r1..r8; E7 gives s1..s7; D4 and D6 give d1..; Mn gives h, e1..e(n-1).
// Root lattices are negative definite. A label that
// occurs more than once is numbered by occurrence: u1, u2, ... or r1_1, r1_2, ...
// when the label already ends in a digit.

#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

struct AtomTerm {
  enum class Kind { U, E8, E7, D4, D6, A1, M, K3, Diag };
  Kind kind = Kind::U;
  Integer param = 0;  // n for M, k for <k>
  Integer scale = 1;
  int repeat = 1;
};

struct GlueTerm {
  Integer coeff = 1;
  std::string label;
  std::size_t position = 0;
};

struct GlueCombo {
  std::vector<GlueTerm> terms;
  Integer denom = 1;
};

struct LatticeExpr {
  std::vector<AtomTerm> terms;
  std::vector<GlueCombo> glue;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  LatticeExpr parse() {
    LatticeExpr out;
    out.terms.push_back(term());
    while (accept('+')) out.terms.push_back(term());
    skip();
    if (keyword("glue")) {
      expect('{');
      out.glue.push_back(combo());
      while (accept(';')) out.glue.push_back(combo());
      expect('}');
    }
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  bool keyword(std::string_view k) {
    skip();
    if (s_.substr(pos_, k.size()) != k) return false;
    const std::size_t end = pos_ + k.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }
  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  Integer integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      error("expected an integer");
    }
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  int small_positive() {
    const std::size_t at = pos_;
    Integer n = integer();
    if (n < 1 || n > 4096) {
      pos_ = at;
      error("expected a positive count");
    }
    return static_cast<int>(n.get_si());
  }

  AtomTerm term() {
    AtomTerm t;
    skip();
    if (keyword("LambdaK3"))
      t.kind = AtomTerm::Kind::K3;
    else if (keyword("U"))
      t.kind = AtomTerm::Kind::U;
    else if (keyword("E8"))
      t.kind = AtomTerm::Kind::E8;
    else if (keyword("E7"))
      t.kind = AtomTerm::Kind::E7;
    else if (keyword("D4"))
      t.kind = AtomTerm::Kind::D4;
    else if (keyword("D6"))
      t.kind = AtomTerm::Kind::D6;
    else if (keyword("A1"))
      t.kind = AtomTerm::Kind::A1;
    else if (pos_ < s_.size() && s_[pos_] == 'M') {
      ++pos_;
      t.kind = AtomTerm::Kind::M;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected the rank of M");
      t.param = small_positive();
    } else if (accept('<')) {
      t.kind = AtomTerm::Kind::Diag;
      t.param = integer();
      if (t.param == 0) error("<0> is degenerate");
      expect('>');
    } else {
      error("expected a lattice atom");
    }
    if (accept('(')) {
      t.scale = integer();
      if (t.scale == 0) error("scale must be nonzero");
      expect(')');
    }
    if (accept('^')) t.repeat = small_positive();
    return t;
  }

  std::string label() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) error("expected a basis label");
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '*'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  static std::pair<std::string, long> split_index(const std::string& l) {
    std::size_t k = l.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(l[k - 1]))) --k;
    if (k == l.size() || k == 0) return {l, -1};
    return {l.substr(0, k), std::stol(l.substr(k))};
  }

  void mono(Integer sign, std::vector<GlueTerm>& out) {
    Integer coeff = sign;
    if (at_digit()) {
      coeff *= integer();
      accept('*');
    }
    skip();
    const std::size_t at = pos_;
    if (keyword("sum")) {
      expect('(');
      const std::string first = label();
      skip();
      if (s_.substr(pos_, 2) != "..") error("expected '..'");
      pos_ += 2;
      const std::string last = label();
      expect(')');
      auto [p1, i1] = split_index(first);
      auto [p2, i2] = split_index(last);
      if (p1 != p2 || i1 < 0 || i2 < i1) {
        pos_ = at;
        error("bad label range");
      }
      for (long i = i1; i <= i2; ++i) out.push_back({coeff, p1 + std::to_string(i), at});
      return;
    }
    out.push_back({coeff, label(), at});
  }

  std::vector<GlueTerm> lin() {
    std::vector<GlueTerm> out;
    Integer sign = accept('-') ? -1 : 1;
    mono(sign, out);
    while (true) {
      if (accept('+'))
        mono(1, out);
      else if (accept('-'))
        mono(-1, out);
      else
        break;
    }
    return out;
  }

  GlueCombo combo() {
    GlueCombo c;
    skip();
    // "(" starts a scaled combination.
    if (accept('(')) {
      c.terms = lin();
      expect(')');
      if (accept('/')) {
        c.denom = integer();
        if (c.denom <= 0) error("denominator must be positive");
      }
    } else {
      c.terms = lin();
    }
    return c;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline Lattice atom_lattice(const AtomTerm& t) {
  switch (t.kind) {
    case AtomTerm::Kind::U:
      return lattice_U();
    case AtomTerm::Kind::E8:
      return lattice_E8();
    case AtomTerm::Kind::E7:
      return lattice_E7();
    case AtomTerm::Kind::D4:
      return lattice_D4();
    case AtomTerm::Kind::D6:
      return lattice_D6();
    case AtomTerm::Kind::A1:
      return lattice_A1();
    case AtomTerm::Kind::M:
      return lattice_M(static_cast<int>(t.param.get_si()));
    case AtomTerm::Kind::Diag:
      return lattice_diag(t.param);
    case AtomTerm::Kind::K3:
      return lattice_K3();
  }
  return {};
}

}  // namespace detail

inline LatticeExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string to_string(const AtomTerm& t) {
  std::string s;
  switch (t.kind) {
    case AtomTerm::Kind::U: s = "U"; break;
    case AtomTerm::Kind::E8: s = "E8"; break;
    case AtomTerm::Kind::E7: s = "E7"; break;
    case AtomTerm::Kind::D4: s = "D4"; break;
    case AtomTerm::Kind::D6: s = "D6"; break;
    case AtomTerm::Kind::A1: s = "A1"; break;
    case AtomTerm::Kind::M: s = "M" + t.param.get_str(); break;
    case AtomTerm::Kind::Diag: s = "<" + t.param.get_str() + ">"; break;
    case AtomTerm::Kind::K3: s = "LambdaK3"; break;
  }
  if (t.scale != 1) s += "(" + t.scale.get_str() + ")";
  if (t.repeat != 1) s += "^" + std::to_string(t.repeat);
  return s;
}

inline std::string to_string(const GlueCombo& c) {
  std::string s;
  for (const auto& t : c.terms) {
    const Integer mag = abs(t.coeff);
    if (s.empty())
      s += t.coeff < 0 ? "-" : "";
    else
      s += t.coeff < 0 ? " - " : " + ";
    if (mag != 1) s += mag.get_str();
    s += t.label;
  }
  if (c.denom != 1) return "(" + s + ")/" + c.denom.get_str();
  return s;
}

inline std::string to_string(const LatticeExpr& e) {
  std::string s;
  for (const auto& t : e.terms) s += (s.empty() ? "" : " + ") + to_string(t);
  if (!e.glue.empty()) {
    s += " glue { ";
    for (std::size_t i = 0; i < e.glue.size(); ++i) s += (i ? " ; " : "") + to_string(e.glue[i]);
    s += " }";
  }
  return s;
}

/// The direct sum named by the expression, ignoring any glue clause.
inline Lattice base_lattice(const LatticeExpr& e) {
  std::vector<Lattice> parts;
  for (const auto& t : e.terms) {
    Lattice atom = detail::atom_lattice(t);
    if (t.scale != 1) atom = rescale(atom, t.scale);
    for (int i = 0; i < t.repeat; ++i) parts.push_back(atom);
  }
  std::map<std::string, int> count;
  for (const auto& p : parts)
    for (const auto& l : p.labels()) ++count[l];
  std::map<std::string, int> seen;
  std::vector<std::string> labels;
  Lattice out;
  for (const auto& p : parts) out = direct_sum(out, p);
  for (const auto& l : out.labels()) {
    if (count[l] == 1) {
      labels.push_back(l);
      continue;
    }
    const int k = ++seen[l];
    const bool digit_end = std::isdigit(static_cast<unsigned char>(l.back()));
    labels.push_back(l + (digit_end ? "_" : "") + std::to_string(k));
  }
  return Lattice(out.gram(), std::move(labels));
}

/// Glue vectors of the expression in coordinates of its base lattice.
inline std::vector<RatVector> glue_vectors(const LatticeExpr& e, const Lattice& base) {
  std::vector<RatVector> out;
  for (const auto& c : e.glue) {
    RatVector v(base.rank());
    for (const auto& t : c.terms) {
      auto idx = base.index_of(t.label);
      if (!idx) throw ParseError(t.position, "unknown basis label '" + t.label + "'");
      v[*idx] += make_rational(t.coeff, c.denom);
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// A parsed expression with its base lattice and, if glued, the overlattice.
struct ParsedLattice {
  LatticeExpr expr;
  Lattice base;
  std::optional<Overlattice> over;

  const Lattice& lattice() const { return over ? over->lattice : base; }
};

inline ParsedLattice parse_lattice_full(std::string_view text) {
  ParsedLattice p{parse_expr(text), {}, std::nullopt};
  p.base = base_lattice(p.expr);
  if (!p.expr.glue.empty()) p.over = overlattice(p.base, glue_vectors(p.expr, p.base));
  return p;
}

inline Lattice parse_lattice(std::string_view text) { return parse_lattice_full(text).lattice(); }

}  // namespace k3lat
