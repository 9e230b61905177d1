// Copyright 2026 The mring Authors
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

#include "parser.hpp"

#include <cctype>
#include <map>

#include "poly.hpp"

namespace mring {

bool Expr::operator==(const Expr& o) const {
  if (kind != o.kind || num != o.num || den != o.den || index != o.index ||
      factor != o.factor || kids.size() != o.kids.size())
    return false;
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (!(*kids[i] == *o.kids[i])) return false;
  return true;
}

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr unary(Expr::Kind kind, ExprPtr kid) {
  Expr e;
  e.kind = kind;
  e.kids.push_back(std::move(kid));
  return node(std::move(e));
}

ExprPtr binary(Expr::Kind kind, ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = kind;
  e.kids.push_back(std::move(a));
  e.kids.push_back(std::move(b));
  return node(std::move(e));
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (!at_end()) fail("end of input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') ++line, col = 1;
      else ++col;
    }
    const std::string got =
        at_end() ? "end of input" : "'" + std::string(1, src_[pos_]) + "'";
    throw ParseError(line, col, expected,
                     "parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                         ": expected " + expected + ", found " + got);
  }

  void expect(char ch, const std::string& what) {
    skip_ws();
    if (peek() != ch) fail(what);
    ++pos_;
  }

  Integer parse_uint() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("integer");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += src_[pos_++];
    return Integer(digits);
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (true) {
      skip_ws();
      const char op = peek();
      if (op != '+' && op != '-') return lhs;
      ++pos_;
      lhs = binary(op == '+' ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs),
                   parse_term());
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (true) {
      skip_ws();
      if (peek() != '*') return lhs;
      ++pos_;
      lhs = binary(Expr::Kind::Mul, std::move(lhs), parse_factor());
    }
  }

  ExprPtr parse_factor() {
    skip_ws();
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return unary(Expr::Kind::Neg, parse_factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = parse_uint();
      expect('*', "'*' after integer scalar");
      Expr e;
      e.kind = Expr::Kind::Scalar;
      e.factor = std::move(n);
      e.kids.push_back(parse_factor());
      return node(std::move(e));
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_expr();
      expect(')', "')'");
      return e;
    }
    if (c == '[') {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::Atom;
      e.num = parse_poly();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        e.den = parse_poly();
      }
      expect(']', "']'");
      return node(std::move(e));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek()))) name += src_[pos_++];
      Expr::Kind kind;
      if (name == "cyc") kind = Expr::Kind::Cyc;
      else if (name == "xn1") kind = Expr::Kind::Xn1;
      else if (name == "b") kind = Expr::Kind::Basis;
      else fail("'cyc', 'xn1' or 'b'");
      expect('(', "'('");
      const Integer n = parse_uint();
      if (n < 1) fail("positive integer");
      if (!n.fits_ulong_p()) fail("argument within range");
      expect(')', "')'");
      Expr e;
      e.kind = kind;
      e.index = static_cast<std::size_t>(n.get_ui());
      return node(std::move(e));
    }
    fail("'[', '(', 'cyc', 'xn1', 'b', '-' or an integer scalar");
  }

  // One polynomial literal: signed integer-coefficient terms in x, '^' powers,
  // implicit coefficient*x multiplication. Ends before '/', ']' or any other
  // unconsumed character.
  std::vector<Integer> parse_poly() {
    std::map<std::size_t, Integer> terms;
    bool first = true;
    std::size_t max_deg = 0;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        break;  // no sign: the literal is over
      }
      Integer coef(sign);
      bool has_coef = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = sign * parse_uint();
        has_coef = true;
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
          if (peek() != 'x') fail("'x'");
        }
      }
      std::size_t degree = 0;
      if (peek() == 'x') {
        ++pos_;
        degree = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          const Integer d = parse_uint();
          if (!d.fits_ulong_p()) fail("exponent within range");
          degree = static_cast<std::size_t>(d.get_ui());
        }
      } else if (!has_coef) {
        fail("polynomial term");
      }
      terms[degree] += coef;
      max_deg = std::max(max_deg, degree);
      first = false;
    }
    std::vector<Integer> coeffs(max_deg + 1, Integer(0));
    for (const auto& [d, c] : terms) coeffs[d] = c;
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() == 1 && coeffs[0] == 0) fail("nonzero polynomial");
    return coeffs;
  }
};

MonicPoly to_monic(const std::vector<Integer>& coeffs) {
  std::vector<Rational> q;
  q.reserve(coeffs.size());
  for (const Integer& c : coeffs) q.emplace_back(c);
  return MonicPoly::normalize(std::move(q));
}

std::string int_poly_display(const std::vector<Integer>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Integer& c = coeffs[i];
    if (c == 0) continue;
    const bool leading = out.empty();
    const Integer a = abs(c);
    if (c < 0)
      out += "-";
    else if (!leading)
      out += "+";
    if (a != 1 || i == 0) out += a.get_str();
    if (i >= 1) {
      out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 0;
    case Expr::Kind::Mul:
      return 1;
    case Expr::Kind::Neg:
    case Expr::Kind::Scalar:
      return 2;
    default:
      return 3;
  }
}

void print(const Expr& e, std::string& out) {
  auto child = [&out](const Expr& kid, int min_prec) {
    if (precedence(kid.kind) < min_prec) {
      out += "(";
      print(kid, out);
      out += ")";
    } else {
      print(kid, out);
    }
  };
  switch (e.kind) {
    case Expr::Kind::Atom:
      out += "[" + int_poly_display(e.num);
      if (!e.den.empty()) out += "/" + int_poly_display(e.den);
      out += "]";
      return;
    case Expr::Kind::Cyc:
      out += "cyc(" + std::to_string(e.index) + ")";
      return;
    case Expr::Kind::Xn1:
      out += "xn1(" + std::to_string(e.index) + ")";
      return;
    case Expr::Kind::Basis:
      out += "b(" + std::to_string(e.index) + ")";
      return;
    case Expr::Kind::Neg:
      out += "-";
      child(*e.kids[0], 3);
      return;
    case Expr::Kind::Scalar:
      out += e.factor.get_str() + "*";
      child(*e.kids[0], 3);
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      child(*e.kids[0], 0);
      out += e.kind == Expr::Kind::Add ? " + " : " - ";
      child(*e.kids[1], 1);
      return;
    case Expr::Kind::Mul:
      child(*e.kids[0], 1);
      out += "*";
      child(*e.kids[1], 2);
      return;
  }
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

MElem eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Atom: {
      MonicPoly num = to_monic(e.num);
      MonicPoly den = e.den.empty() ? MonicPoly::one() : to_monic(e.den);
      return MElem::make(std::move(num), std::move(den));
    }
    case Expr::Kind::Cyc:
      return MElem::bracket(cyclotomic(e.index));
    case Expr::Kind::Xn1:
      return MElem::xn1(e.index);
    case Expr::Kind::Basis:
      return MElem::basis(e.index);
    case Expr::Kind::Neg:
      return -eval(*e.kids[0]);
    case Expr::Kind::Scalar:
      return scalar_mul(e.factor, eval(*e.kids[0]));
    case Expr::Kind::Add:
      return eval(*e.kids[0]) + eval(*e.kids[1]);
    case Expr::Kind::Sub:
      return eval(*e.kids[0]) - eval(*e.kids[1]);
    case Expr::Kind::Mul:
      return eval(*e.kids[0]) * eval(*e.kids[1]);
  }
  throw Error(errc::invalid_argument, "corrupt expression node");
}

std::string poly_to_display(const MonicPoly& p) {
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool leading = out.empty();
    Rational a = abs(c[i]);
    if (c[i] < 0)
      out += "-";
    else if (!leading)
      out += "+";
    if (a != 1 || i == 0) out += a.get_str();
    if (i >= 1) {
      out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string format(const MElem& r) {
  std::string out = "[" + poly_to_display(r.num());
  if (!r.den().is_one()) out += "/" + poly_to_display(r.den());
  return out + "]";
}

}  // namespace mring
