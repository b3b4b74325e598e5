#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2loc/laurent.hpp"

namespace sl2loc {

/// Twist parameter of the sheaf D_t. Any rational t is accepted at this
/// layer; the module families later restrict to integers t >= 1.
template <typename S>
struct TwistParam {
  S t;
};

using RationalTwist = TwistParam<Rational>;

/// Differential operator in normal form sum_i p_i(coord) * d^i, with Laurent
/// coefficients p_i over the scalar ring S. All coordinate factors stand to
/// the left of all d factors; no zero p_i is stored; every p_i carries the
/// operator's chart tag.
template <typename S>
class WeylOp {
 public:
  explicit WeylOp(Chart chart) : chart_(chart) {}

  static WeylOp zero(Chart chart) { return WeylOp(chart); }
  static WeylOp one(Chart chart) {
    return from_poly(LaurentPoly<S>::constant(chart, ScalarTraits<S>::from_int(1)));
  }
  static WeylOp coordinate(Chart chart) {
    return from_poly(LaurentPoly<S>::coordinate(chart));
  }
  static WeylOp del(Chart chart) {
    return monomial(chart, 0, 1, ScalarTraits<S>::from_int(1));
  }
  static WeylOp from_poly(const LaurentPoly<S>& p) {
    WeylOp op(p.chart());
    op.set(0, p);
    return op;
  }
  /// coeff * coord^exp * d^order
  static WeylOp monomial(Chart chart, int coord_exp, int del_order, const S& coeff) {
    WeylOp op(chart);
    op.set(del_order, LaurentPoly<S>::monomial(chart, coord_exp, coeff));
    return op;
  }

  Chart chart() const { return chart_; }
  bool is_zero() const { return coeffs_.empty(); }
  int order() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  /// True when the operator is multiplication by a constant scalar.
  bool is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
                               coeffs_.begin()->second.is_constant());
  }
  S constant_value() const {
    auto it = coeffs_.find(0);
    return it == coeffs_.end() ? S() : it->second.constant_value();
  }

  LaurentPoly<S> coeff(int del_order) const {
    auto it = coeffs_.find(del_order);
    return it == coeffs_.end() ? LaurentPoly<S>::zero(chart_) : it->second;
  }
  void set(int del_order, const LaurentPoly<S>& p) {
    if (del_order < 0) throw Error("WeylOp: negative del order");
    require_same_chart(chart_, p.chart(), "WeylOp::set");
    if (p.is_zero())
      coeffs_.erase(del_order);
    else
      coeffs_.insert_or_assign(del_order, p);
  }

  WeylOp operator-() const {
    WeylOp r(chart_);
    for (const auto& [i, p] : coeffs_) r.coeffs_.insert_or_assign(i, -p);
    return r;
  }
  WeylOp operator+(const WeylOp& o) const {
    require_same_chart(chart_, o.chart_, "weyl_add");
    WeylOp r = *this;
    for (const auto& [i, p] : o.coeffs_) r.set(i, r.coeff(i) + p);
    return r;
  }
  WeylOp operator-(const WeylOp& o) const { return *this + (-o); }
  WeylOp& operator+=(const WeylOp& o) { return *this = *this + o; }
  WeylOp& operator-=(const WeylOp& o) { return *this = *this - o; }

  WeylOp scaled(const S& c) const {
    WeylOp r(chart_);
    for (const auto& [i, p] : coeffs_) r.set(i, p.scaled(c));
    return r;
  }

  /// Normal-form product via repeated application of d * p = p * d + p':
  /// d^i q = sum_m binom(i, m) q^{(m)} d^{i-m}.
  WeylOp operator*(const WeylOp& o) const {
    require_same_chart(chart_, o.chart_, "weyl_mul");
    WeylOp r(chart_);
    for (const auto& [i, p] : coeffs_) {
      for (const auto& [j, q] : o.coeffs_) {
        LaurentPoly<S> qd = q;  // q^{(m)}
        long binom = 1;
        for (int m = 0; m <= i; ++m) {
          if (m > 0) {
            qd = qd.derivative();
            binom = binom * (i - m + 1) / m;
          }
          if (qd.is_zero()) break;
          LaurentPoly<S> add = (p * qd).scaled(ScalarTraits<S>::from_int(binom));
          r.set(i - m + j, r.coeff(i - m + j) + add);
        }
      }
    }
    return r;
  }

  WeylOp pow(int n) const {
    if (n < 0) throw Error("WeylOp::pow: negative exponent");
    WeylOp r = one(chart_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  /// Applies the operator to a function on the chart (or the overlap).
  LaurentPoly<S> apply(const LaurentPoly<S>& f) const {
    require_same_chart(chart_, f.chart(), "weyl_apply");
    LaurentPoly<S> r = LaurentPoly<S>::zero(chart_);
    for (const auto& [i, p] : coeffs_) {
      LaurentPoly<S> fd = f;
      for (int m = 0; m < i; ++m) fd = fd.derivative();
      r += p * fd;
    }
    return r;
  }

  bool operator==(const WeylOp& o) const {
    return chart_ == o.chart_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const WeylOp& o) const { return !(*this == o); }

  const std::map<int, LaurentPoly<S>>& coeffs() const { return coeffs_; }

 private:
  Chart chart_;
  std::map<int, LaurentPoly<S>> coeffs_;
};

template <typename S>
WeylOp<S> weyl_mul(const WeylOp<S>& a, const WeylOp<S>& b) {
  return a * b;
}

template <typename S>
WeylOp<S> weyl_commutator(const WeylOp<S>& a, const WeylOp<S>& b) {
  return a * b - b * a;
}

/// The anti-automorphism fixing coordinates and sending d -> -d.
/// transpose(p d^i) = (-d)^i p, renormalized.
template <typename S>
WeylOp<S> weyl_transpose(const WeylOp<S>& a) {
  WeylOp<S> r = WeylOp<S>::zero(a.chart());
  const WeylOp<S> md = -WeylOp<S>::del(a.chart());
  for (const auto& [i, p] : a.coeffs()) r += md.pow(i) * WeylOp<S>::from_poly(p);
  return r;
}

/// Rewrites an operator valid on the overlap in the other chart's
/// coordinate: coord -> coord^{-1} and d_w -> -z^2 d_z (symmetrically
/// d_z -> -w^2 d_w). Involutive.
template <typename S>
WeylOp<S> chart_rewrite(const WeylOp<S>& a) {
  Chart target = other_chart(a.chart());
  // -x^2 d in the target chart
  const WeylOp<S> dnew =
      WeylOp<S>::monomial(target, 2, 1, ScalarTraits<S>::from_int(-1));
  WeylOp<S> r = WeylOp<S>::zero(target);
  for (const auto& [i, p] : a.coeffs())
    r += WeylOp<S>::from_poly(p.invert_coordinate()) * dnew.pow(i);
  return r;
}

/// The twist isomorphism psi of D(V): z -> z, d_z -> d_z - (t-1)/z,
/// extended multiplicatively and normalized. Defined in the z chart.
/// Its inverse is the same map with t-1 negated.
template <typename S>
WeylOp<S> twist_psi(const WeylOp<S>& a, const TwistParam<S>& tp) {
  if (a.chart() != Chart::Zero)
    throw Error("twist_psi: operator must be in the z chart");
  const S tm1 = tp.t - ScalarTraits<S>::from_int(1);
  const WeylOp<S> dnew =
      WeylOp<S>::del(Chart::Zero) - WeylOp<S>::monomial(Chart::Zero, -1, 0, tm1);
  WeylOp<S> r = WeylOp<S>::zero(Chart::Zero);
  for (const auto& [i, p] : a.coeffs()) r += WeylOp<S>::from_poly(p) * dnew.pow(i);
  return r;
}

template <typename S>
WeylOp<S> twist_psi_inverse(const WeylOp<S>& a, const TwistParam<S>& tp) {
  const S two = ScalarTraits<S>::from_int(2);
  return twist_psi(a, TwistParam<S>{two - tp.t});
}

/// z^n a z^{-n} in normal form (z chart).
template <typename S>
WeylOp<S> conjugate_by_power(const WeylOp<S>& a, int n) {
  if (a.chart() != Chart::Zero)
    throw Error("conjugate_by_power: operator must be in the z chart");
  const S one = ScalarTraits<S>::from_int(1);
  const WeylOp<S> zn = WeylOp<S>::monomial(Chart::Zero, n, 0, one);
  const WeylOp<S> zmn = WeylOp<S>::monomial(Chart::Zero, -n, 0, one);
  return zn * a * zmn;
}

}  // namespace sl2loc
