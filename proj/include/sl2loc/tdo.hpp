#pragma once

#include <string>
#include <vector>

#include "sl2loc/weyl.hpp"
#include "sl2loc/weyl_text.hpp"

namespace sl2loc {

/// Element of sl(2): trace-zero 2x2 rational matrix. The standard basis
/// E, F, H is provided as constants.
struct TracelessMatrix {
  Rational x11, x12, x21, x22;

  TracelessMatrix(Rational a11, Rational a12, Rational a21, Rational a22)
      : x11(a11), x12(a12), x21(a21), x22(a22) {
    if (x11 + x22 != Rational(0)) throw Error("TracelessMatrix: nonzero trace");
  }

  static TracelessMatrix E() { return {0, 1, 0, 0}; }
  static TracelessMatrix F() { return {0, 0, 1, 0}; }
  static TracelessMatrix H() { return {1, 0, 0, -1}; }
  static TracelessMatrix zero() { return {0, 0, 0, 0}; }
};

/// Dual number a + b*r with r^2 = 0, over the scalar ring S.
template <typename S>
struct Dual {
  S a{};  // value
  S b{};  // first-order part

  Dual operator+(const Dual& o) const { return {a + o.a, b + o.b}; }
  Dual operator-(const Dual& o) const { return {a - o.a, b - o.b}; }
  Dual operator*(const Dual& o) const { return {a * o.a, a * o.b + b * o.a}; }
  bool operator==(const Dual& o) const { return a == o.a && b == o.b; }
};

/// 2x2 matrix over dual numbers; the image of exp(rX) to first order.
template <typename S>
struct MatrixJet {
  Dual<S> e11, e12, e21, e22;
};

/// I + rX, the first-order truncation of exp(rX).
template <typename S = Rational>
MatrixJet<S> exp_first_order(const TracelessMatrix& X) {
  auto lift = [](long diag, const Rational& x) {
    return Dual<S>{ScalarTraits<S>::from_int(diag), ScalarTraits<S>::from_rational(x)};
  };
  return MatrixJet<S>{lift(1, X.x11), lift(0, X.x12), lift(0, X.x21), lift(1, X.x22)};
}

namespace detail {

/// Laurent polynomial with an infinitesimal part: f + r*g, r^2 = 0.
template <typename S>
struct DualLaurent {
  LaurentPoly<S> val;
  LaurentPoly<S> eps;

  DualLaurent(Chart c) : val(LaurentPoly<S>::zero(c)), eps(LaurentPoly<S>::zero(c)) {}
  DualLaurent(LaurentPoly<S> v, LaurentPoly<S> e) : val(std::move(v)), eps(std::move(e)) {}

  DualLaurent operator*(const DualLaurent& o) const {
    return {val * o.val, val * o.eps + eps * o.val};
  }
  DualLaurent pow(int n) const {
    DualLaurent r(LaurentPoly<S>::constant(val.chart(), ScalarTraits<S>::from_int(1)),
                  LaurentPoly<S>::zero(val.chart()));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }
};

}  // namespace detail

/// Derives the first-order differential operator by which X acts on the
/// chart, for twist parameter t, by differentiating the group action:
/// the jet I + rX acts on functions through the Moebius substitution with
/// the chart's twisted multiplier, and the r-linear part of that action on
/// the monomials 1 and x reconstructs the operator f(x) + g(x) d. The
/// reconstruction is certified against the jet action on x^2 and x^3.
template <typename S>
WeylOp<S> derive_chart_operator(const TracelessMatrix& X, Chart chart, const S& t) {
  using LP = LaurentPoly<S>;
  const MatrixJet<S> jet = exp_first_order<S>(X);
  const S one = ScalarTraits<S>::from_int(1);
  const S tm1 = t - one;

  // In the z chart the group element (a b; c d) acts by
  //   p(z) -> (d - b z)^{t-1} p((-c + a z)/(d - b z)),
  // in the w chart by
  //   q(w) -> (-c w + a)^{t-1} q((d w - b)/(-c w + a)).
  // For the jet I + rX both the multiplier base and the substitution
  // denominator have the form 1 + r*beta, and the numerator x + r*num.
  auto linear = [&](const Dual<S>& s0, const Dual<S>& s1) {
    // s0 + s1 * x as a dual Laurent polynomial
    LP v = LP::constant(chart, s0.a) + LP::monomial(chart, 1, s1.a);
    LP e = LP::constant(chart, s0.b) + LP::monomial(chart, 1, s1.b);
    return detail::DualLaurent<S>{v, e};
  };

  detail::DualLaurent<S> num(chart), den(chart);
  if (chart == Chart::Zero) {
    num = linear(Dual<S>{S{}, S{}} - jet.e21, jet.e11);  // -c + a z
    den = linear(jet.e22, Dual<S>{S{}, S{}} - jet.e12);  // d - b z
  } else {
    num = linear(Dual<S>{S{}, S{}} - jet.e12, jet.e22);  // d w - b
    den = linear(jet.e11, Dual<S>{S{}, S{}} - jet.e21);  // -c w + a
  }
  if (num.val != LP::coordinate(chart) || den.val != LP::constant(chart, one))
    throw Error("derive_chart_operator: jet is not of the form I + rX");

  const LP beta = den.eps;
  // den^{-1} = 1 - r*beta, so the substituted coordinate is x + r*(num.eps - x*beta)
  detail::DualLaurent<S> arg{LP::coordinate(chart),
                             num.eps - LP::coordinate(chart) * beta};
  // (1 + r*beta)^{t-1} = 1 + r*(t-1)*beta to first order
  detail::DualLaurent<S> multiplier{LP::constant(chart, one), beta.scaled(tm1)};

  // r-linear part of the action on x^m
  auto act_on_monomial = [&](int m) { return (multiplier * arg.pow(m)).eps; };

  const LP f = act_on_monomial(0);
  const LP g = act_on_monomial(1) - LP::coordinate(chart) * f;

  WeylOp<S> op = WeylOp<S>::from_poly(f);
  op += WeylOp<S>::from_poly(g) * WeylOp<S>::del(chart);

  // certify the first-order reconstruction on two further monomials
  for (int m = 2; m <= 3; ++m) {
    if (op.apply(LP::monomial(chart, m, one)) != act_on_monomial(m))
      throw Error("derive_chart_operator: reconstruction failed on x^" +
                  std::to_string(m));
  }
  return op;
}

// ---------------------------------------------------------------------------
// Words in the enveloping algebra and the beta map
// ---------------------------------------------------------------------------

enum class Letter { E, F, H };

inline char letter_name(Letter l) {
  return l == Letter::E ? 'E' : l == Letter::F ? 'F' : 'H';
}

inline TracelessMatrix letter_matrix(Letter l) {
  switch (l) {
    case Letter::E: return TracelessMatrix::E();
    case Letter::F: return TracelessMatrix::F();
    default: return TracelessMatrix::H();
  }
}

/// Rational-linear combination of finite words in the letters E, F, H.
/// The empty word is the identity of U(g).
struct LieWord {
  struct Summand {
    Rational coeff;
    std::vector<Letter> letters;
  };
  std::vector<Summand> summands;

  static LieWord letter(Letter l) { return {{{Rational(1), {l}}}}; }
  static LieWord identity() { return {{{Rational(1), {}}}}; }

  /// Omega = H*H + 2*E*F + 2*F*E
  static LieWord casimir() {
    using L = Letter;
    return {{{Rational(1), {L::H, L::H}},
             {Rational(2), {L::E, L::F}},
             {Rational(2), {L::F, L::E}}}};
  }

  LieWord operator+(const LieWord& o) const {
    LieWord r = *this;
    r.summands.insert(r.summands.end(), o.summands.begin(), o.summands.end());
    return r;
  }
  LieWord operator-(const LieWord& o) const {
    LieWord r = *this;
    for (auto s : o.summands) {
      s.coeff = -s.coeff;
      r.summands.push_back(s);
    }
    return r;
  }
  LieWord operator*(const LieWord& o) const {
    LieWord r;
    for (const auto& a : summands)
      for (const auto& b : o.summands) {
        Summand s{a.coeff * b.coeff, a.letters};
        s.letters.insert(s.letters.end(), b.letters.begin(), b.letters.end());
        r.summands.push_back(s);
      }
    return r;
  }
};

/// A global section of D_t presented chartwise: a pair of operators, one per
/// chart, that agree on the overlap through the twist isomorphism.
template <typename S>
struct GlobalOp {
  S t;
  WeylOp<S> op0;    // z chart
  WeylOp<S> opinf;  // w chart

  bool operator==(const GlobalOp& o) const {
    return t == o.t && op0 == o.op0 && opinf == o.opinf;
  }
};

/// The beta map on words: each letter acts by its derived chart operators,
/// words multiply chartwise, linear combinations extend linearly.
template <typename S>
GlobalOp<S> beta(const LieWord& word, const S& t) {
  GlobalOp<S> acc{t, WeylOp<S>::zero(Chart::Zero), WeylOp<S>::zero(Chart::Infinity)};
  for (const auto& s : word.summands) {
    WeylOp<S> p0 = WeylOp<S>::one(Chart::Zero);
    WeylOp<S> pinf = WeylOp<S>::one(Chart::Infinity);
    for (Letter l : s.letters) {
      p0 = p0 * derive_chart_operator(letter_matrix(l), Chart::Zero, t);
      pinf = pinf * derive_chart_operator(letter_matrix(l), Chart::Infinity, t);
    }
    const S c = ScalarTraits<S>::from_rational(s.coeff);
    acc.op0 += p0.scaled(c);
    acc.opinf += pinf.scaled(c);
  }
  return acc;
}

template <typename S>
struct GlueReport {
  bool ok;
  WeylOp<S> transported;  // psi(chart_rewrite(opinf))
  WeylOp<S> expected;     // op0

  std::string describe() const {
    if (ok) return "glue ok";
    return "glue mismatch: psi(rewrite(opinf)) = " + render(transported) +
           " but op0 = " + render(expected);
  }
};

/// Checks the defining property of a global section: rewriting the w-chart
/// operator in the z coordinate and applying psi must reproduce the z-chart
/// operator exactly. Failure is reported as a value, not an error.
template <typename S>
GlueReport<S> glue_check(const GlobalOp<S>& g) {
  WeylOp<S> transported = twist_psi(chart_rewrite(g.opinf), TwistParam<S>{g.t});
  return GlueReport<S>{transported == g.op0, transported, g.op0};
}

/// Computes beta(Omega, t), asserts both chart components are multiplication
/// by a constant, and returns that constant. The value must come out to
/// (t-1)^2 + 2(t-1); callers assert that identity.
template <typename S>
S casimir_scalar_identity(const S& t) {
  GlobalOp<S> omega = beta<S>(LieWord::casimir(), t);
  if (!omega.op0.is_constant() || !omega.opinf.is_constant())
    throw Error("casimir_scalar_identity: beta(Omega) is not a scalar: chart0 = " +
                render(omega.op0) + ", chartinf = " + render(omega.opinf));
  const S c0 = omega.op0.constant_value();
  const S cinf = omega.opinf.constant_value();
  if (!(c0 == cinf))
    throw Error("casimir_scalar_identity: chart constants disagree");
  return c0;
}

}  // namespace sl2loc
