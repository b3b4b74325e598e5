#pragma once

#include <map>
#include <string>

#include "sl2loc/chart.hpp"
#include "sl2loc/indexpoly.hpp"
#include "sl2loc/rational.hpp"

namespace sl2loc {

/// Laurent polynomial in one chart coordinate with coefficients in the
/// scalar ring S. Keys are exponents (any integer), values are nonzero.
/// The chart tag travels with the value so cross-chart arithmetic is a
/// detectable error rather than a silent bug.
template <typename S>
class LaurentPoly {
 public:
  explicit LaurentPoly(Chart chart) : chart_(chart) {}

  static LaurentPoly zero(Chart chart) { return LaurentPoly(chart); }
  static LaurentPoly constant(Chart chart, const S& c) {
    return monomial(chart, 0, c);
  }
  static LaurentPoly coordinate(Chart chart) {
    return monomial(chart, 1, ScalarTraits<S>::from_int(1));
  }
  static LaurentPoly monomial(Chart chart, int exp, const S& c) {
    LaurentPoly p(chart);
    p.set(exp, c);
    return p;
  }

  Chart chart() const { return chart_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  S constant_value() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? S() : it->second;
  }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  S coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? S() : it->second;
  }
  void set(int exp, const S& c) {
    if (ScalarTraits<S>::is_zero(c))
      terms_.erase(exp);
    else
      terms_[exp] = c;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(chart_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  LaurentPoly operator+(const LaurentPoly& o) const {
    require_same_chart(chart_, o.chart_, "laurent_add");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const {
    require_same_chart(chart_, o.chart_, "laurent_mul");
    LaurentPoly r(chart_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }

  LaurentPoly scaled(const S& c) const {
    LaurentPoly r(chart_);
    for (const auto& [e, v] : terms_) r.set(e, v * c);
    return r;
  }

  /// d/dcoord, termwise e -> e-1 with factor e.
  LaurentPoly derivative() const {
    LaurentPoly r(chart_);
    for (const auto& [e, c] : terms_) {
      if (e == 0) continue;
      r.set(e - 1, c * ScalarTraits<S>::from_int(e));
    }
    return r;
  }

  /// Substitutes coordinate -> coordinate^{-1} and flips the chart tag
  /// (the coordinate relation w = 1/z on the overlap).
  LaurentPoly invert_coordinate() const {
    LaurentPoly r(other_chart(chart_));
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  bool operator==(const LaurentPoly& o) const {
    return chart_ == o.chart_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  const std::map<int, S>& terms() const { return terms_; }

 private:
  Chart chart_;
  std::map<int, S> terms_;
};

template <typename S>
LaurentPoly<S> laurent_mul(const LaurentPoly<S>& a, const LaurentPoly<S>& b) {
  return a * b;
}

template <typename S>
LaurentPoly<S> laurent_invert_coordinate(const LaurentPoly<S>& a) {
  return a.invert_coordinate();
}

/// Exact substitution of the three symbols of an IndexPoly, as an operation
/// on the polynomial itself.
inline Rational indexpoly_eval(const IndexPoly& p, const Rational& k,
                               const Rational& t, const Rational& eta) {
  return p.eval(k, t, eta);
}

}  // namespace sl2loc
