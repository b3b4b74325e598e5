#pragma once

#include <string>

#include "sl2loc/weyl.hpp"

namespace sl2loc {

// Fixed textual grammar for operators in normal form, e.g.
//   "z^2*d - (t-1)*z",  "-2*w*d + 1",  "-d^2 + 3/2*z^-1".
// Terms are listed by descending d-order, then descending coordinate
// exponent. Rational coefficients render as "p/q" (q omitted when 1);
// symbolic coefficients render parenthesized in the variable order
// (k, t, eta). "d" stands for differentiation in the chart coordinate.

namespace detail {

template <typename S>
std::string render_term(const S& coeff_abs, char coord, int exp, int del_order) {
  std::string parts;
  bool coeff_is_one = ScalarTraits<S>::is_one_like(coeff_abs);
  bool have_var = (exp != 0) || (del_order != 0);
  if (!coeff_is_one || !have_var) {
    if (ScalarTraits<S>::needs_parens(coeff_abs))
      parts += "(" + ScalarTraits<S>::to_string(coeff_abs) + ")";
    else
      parts += ScalarTraits<S>::to_string(coeff_abs);
  }
  if (exp != 0) {
    if (!parts.empty()) parts += "*";
    parts += coord;
    if (exp != 1) parts += "^" + std::to_string(exp);
  }
  if (del_order != 0) {
    if (!parts.empty()) parts += "*";
    parts += "d";
    if (del_order != 1) parts += "^" + std::to_string(del_order);
  }
  return parts;
}

}  // namespace detail

template <typename S>
std::string render(const WeylOp<S>& op) {
  if (op.is_zero()) return "0";
  const char coord = chart_coordinate(op.chart());
  std::string out;
  // descending d-order, then descending coordinate exponent
  for (auto it = op.coeffs().rbegin(); it != op.coeffs().rend(); ++it) {
    const auto& [order, poly] = *it;
    for (auto jt = poly.terms().rbegin(); jt != poly.terms().rend(); ++jt) {
      const auto& [exp, c] = *jt;
      bool neg = ScalarTraits<S>::leading_is_negative(c);
      S abs = neg ? -c : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      out += detail::render_term(abs, coord, exp, order);
    }
  }
  return out;
}

template <typename S>
std::string render(const LaurentPoly<S>& p) {
  return render(WeylOp<S>::from_poly(p));
}

/// Parses the grammar above. Operators with no coordinate letter (pure
/// scalars) land in `fallback_chart`. Throws Error on malformed input or
/// on text that is not in normal form (a coordinate factor after "d").
WeylOp<IndexPoly> parse_weyl(const std::string& text, Chart fallback_chart);

/// Narrows a parsed operator to numeric coefficients; throws if any
/// coefficient still involves k, t, or eta.
WeylOp<Rational> narrow_to_rational(const WeylOp<IndexPoly>& op);

/// Parses an operator expected to be numeric.
WeylOp<Rational> parse_weyl_rational(const std::string& text, Chart fallback_chart);

/// Parses a standalone coefficient polynomial in (k, t, eta).
IndexPoly parse_indexpoly(const std::string& text);

}  // namespace sl2loc
