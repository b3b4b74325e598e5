#include <doctest.h>

#include <random>

#include "sl2loc/weyl.hpp"
#include "sl2loc/weyl_text.hpp"

using namespace sl2loc;

namespace {

using Op = WeylOp<Rational>;
using OpS = WeylOp<IndexPoly>;

std::mt19937 rng(987654);

Op random_op(Chart chart) {
  std::uniform_int_distribution<int> exp(-3, 3), ord(0, 2), nterms(0, 3);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  Op op(chart);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    op += Op::monomial(chart, exp(rng), ord(rng), Rational(num(rng), den(rng)));
  return op;
}

Op zop(const std::string& text) { return parse_weyl_rational(text, Chart::Zero); }

}  // namespace

TEST_CASE("normal form product examples") {
  Op d = Op::del(Chart::Zero), z = Op::coordinate(Chart::Zero);
  CHECK(weyl_mul(d, z) == zop("z*d + 1"));
  CHECK(weyl_mul(z, z) == zop("z^2"));
  // (z^2 d - (t-1) z)(-d) at t=3, normal-ordered by hand
  Op e0 = zop("z^2*d - 2*z");
  CHECK(weyl_mul(e0, -d) == zop("-z^2*d^2 + 2*z*d"));
  CHECK_THROWS_AS(weyl_mul(d, Op::coordinate(Chart::Infinity)), Error);
}

TEST_CASE("normal form is canonical across construction orders") {
  // assemble z^2 d + z d two ways
  Op a = zop("z^2*d") + zop("z*d");
  Op b = weyl_mul(zop("z"), zop("z*d")) + weyl_mul(zop("z*d"), zop("1"));
  CHECK(a == b);
  CHECK(a.coeffs().size() == 1);
}

TEST_CASE("commutators") {
  Op d = Op::del(Chart::Zero), z = Op::coordinate(Chart::Zero);
  CHECK(weyl_commutator(d, z) == Op::one(Chart::Zero));
  CHECK(weyl_commutator(z, weyl_mul(z, z)).is_zero());

  // [E_0, F_0] = H_0 at symbolic t
  OpS e0 = parse_weyl("z^2*d - (t-1)*z", Chart::Zero);
  OpS f0 = parse_weyl("-d", Chart::Zero);
  OpS h0 = parse_weyl("2*z*d - (t-1)", Chart::Zero);
  CHECK(weyl_commutator(e0, f0) == h0);
}

TEST_CASE("transpose is the anti-automorphism fixing functions") {
  Op d = Op::del(Chart::Zero);
  CHECK(weyl_transpose(d) == -d);
  CHECK(weyl_transpose(zop("z*d")) == zop("-z*d - 1"));
  CHECK(weyl_transpose(zop("z^3")) == zop("z^3"));
  for (int i = 0; i < 60; ++i) {
    Op a = random_op(Chart::Zero), b = random_op(Chart::Zero);
    CHECK(weyl_transpose(weyl_mul(a, b)) ==
          weyl_mul(weyl_transpose(b), weyl_transpose(a)));
    CHECK(weyl_transpose(weyl_transpose(a)) == a);
  }
}

TEST_CASE("chart rewriting agrees with substitution on functions") {
  // the defining property: expressing T in the other coordinate and acting
  // directly equals conjugating the action by the substitution w = 1/z
  std::uniform_int_distribution<int> exp(-4, 4);
  std::uniform_int_distribution<long> num(-5, 5);
  for (int i = 0; i < 80; ++i) {
    Op T = random_op(Chart::Infinity);
    LaurentPoly<Rational> f(Chart::Zero);
    for (int j = 0; j < 3; ++j) f.set(exp(rng), Rational(num(rng)));
    auto lhs = chart_rewrite(T).apply(f);
    auto rhs = laurent_invert_coordinate(T.apply(laurent_invert_coordinate(f)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("chart rewriting") {
  Op dw = Op::del(Chart::Infinity);
  CHECK(chart_rewrite(dw) == zop("-z^2*d"));
  CHECK(chart_rewrite(Op::coordinate(Chart::Infinity)) == zop("z^-1"));

  // w^2 d_w - w(t-1) at t = 4 -> -d_z - 3 z^-1
  Op finf = parse_weyl_rational("w^2*d - 3*w", Chart::Infinity);
  CHECK(chart_rewrite(finf) == zop("-d - 3*z^-1"));

  for (int i = 0; i < 60; ++i) {
    Op a = random_op(Chart::Infinity), b = random_op(Chart::Infinity);
    CHECK(chart_rewrite(chart_rewrite(a)) == a);
    CHECK(chart_rewrite(weyl_mul(a, b)) == weyl_mul(chart_rewrite(a), chart_rewrite(b)));
  }
}

TEST_CASE("twist isomorphism psi") {
  TwistParam<Rational> t4{Rational(4)};
  CHECK(twist_psi(Op::del(Chart::Zero), t4) == zop("d - 3*z^-1"));
  CHECK(twist_psi(Op::coordinate(Chart::Zero), t4) == zop("z"));
  CHECK_THROWS_AS(twist_psi(Op::del(Chart::Infinity), t4), Error);

  // symbolic t: psi(z^2 d) = z^2 d - (t-1) z
  TwistParam<IndexPoly> ts{IndexPoly::t()};
  OpS z2d = parse_weyl("z^2*d", Chart::Zero);
  CHECK(twist_psi(z2d, ts) == parse_weyl("z^2*d - (t-1)*z", Chart::Zero));

  for (int i = 0; i < 60; ++i) {
    Op a = random_op(Chart::Zero), b = random_op(Chart::Zero);
    TwistParam<Rational> tp{Rational(i % 7 - 3, (i % 2) + 1)};
    CHECK(twist_psi(weyl_mul(a, b), tp) ==
          weyl_mul(twist_psi(a, tp), twist_psi(b, tp)));
    CHECK(twist_psi_inverse(twist_psi(a, tp), tp) == a);
  }
}

TEST_CASE("conjugation by coordinate powers") {
  // t = 5: z^4 d z^-4 = d - 4/z
  CHECK(conjugate_by_power(Op::del(Chart::Zero), 4) == zop("d - 4*z^-1"));
  CHECK(conjugate_by_power(Op::coordinate(Chart::Zero), 7) == zop("z"));
  CHECK(conjugate_by_power(zop("d^2"), 1) == zop("d^2 - 2*z^-1*d + 2*z^-2"));

  // psi agrees with conjugation whenever t-1 is an integer
  for (long t : {-2L, 0L, 1L, 2L, 5L}) {
    TwistParam<Rational> tp{Rational(t)};
    for (int i = 0; i < 20; ++i) {
      Op a = random_op(Chart::Zero);
      CHECK(twist_psi(a, tp) == conjugate_by_power(a, static_cast<int>(t - 1)));
    }
  }
}

TEST_CASE("weyl product is associative on random triples") {
  for (int i = 0; i < 80; ++i) {
    Op a = random_op(Chart::Zero), b = random_op(Chart::Zero), c = random_op(Chart::Zero);
    CHECK(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c)));
  }
}

TEST_CASE("operators act on functions") {
  using LP = LaurentPoly<Rational>;
  Op e0 = zop("z^2*d - 2*z");  // t = 3
  LP z3 = LP::monomial(Chart::Zero, 3, Rational(1));
  // (z^2 d - 2z) z^3 = 3 z^4 - 2 z^4 = z^4
  CHECK(e0.apply(z3) == LP::monomial(Chart::Zero, 4, Rational(1)));
}
