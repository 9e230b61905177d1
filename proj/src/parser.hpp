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

#ifndef MRING_PARSER_HPP
#define MRING_PARSER_HPP

#include <memory>
#include <string>
#include <string_view>

#include "melem.hpp"

namespace mring {

/// Expression AST for the surface language.
///
/// Grammar (LL(1)):
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT '*' factor | '-' factor | atom
///   atom   := '[' poly ('/' poly)? ']' | 'cyc(' INT ')' | 'xn1(' INT ')'
///           | 'b(' INT ')' | '(' expr ')'
///   poly   := signed integer-coefficient polynomial in x with '^' powers;
///             implicit multiplication ("3x") is allowed inside poly
///             literals only.
struct Expr {
  enum class Kind { Atom, Cyc, Xn1, Basis, Neg, Scalar, Add, Sub, Mul };

  Kind kind;
  std::vector<Integer> num;                            // Atom: ascending, nonzero
  std::vector<Integer> den;                            // Atom: empty when absent
  std::size_t index = 0;                               // Cyc/Xn1/Basis argument
  Integer factor;                                      // Scalar prefix
  std::vector<std::shared_ptr<const Expr>> kids;       // Neg/Scalar: 1; binary: 2

  bool operator==(const Expr& o) const;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses the expression language; throws ParseError with line/column and the
/// expected-token set on malformed input.
ExprPtr parse(std::string_view text);

/// Pretty-printer; parse(to_string(e)) reproduces e structurally.
std::string to_string(const Expr& e);

/// Evaluates an AST to a canonical ring element.
MElem eval(const Expr& e);

/// Canonical display form "[num]" or "[num/den]" with descending-power
/// polynomials; reparses to the same element whenever the coefficients are
/// integers (always the case for elements built through the CLI).
std::string format(const MElem& r);

/// Descending-power rendering of one polynomial, e.g. "x^2-5x+6".
std::string poly_to_display(const MonicPoly& p);

}  // namespace mring

#endif  // MRING_PARSER_HPP
