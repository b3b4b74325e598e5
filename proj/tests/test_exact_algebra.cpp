#include <doctest.h>

#include <random>

#include "sl2loc/laurent.hpp"

using namespace sl2loc;

namespace {

using LP = LaurentPoly<Rational>;

std::mt19937 rng(20240811);

Rational random_rational() {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
  return Rational(num(rng), den(rng));
}

LP random_laurent(Chart chart) {
  std::uniform_int_distribution<int> exp(-5, 5), nterms(0, 4);
  LP p(chart);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.set(exp(rng), p.coeff(exp(rng)) + random_rational());
  return p;
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced and exact") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK(a.to_string() == "1/2");
  CHECK(Rational(-4, 6).to_string() == "-2/3");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(3, 7) * Rational(7, 3)).is_one());
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string("5") == Rational(5));

  // cross-multiplication oracle on random pairs
  std::uniform_int_distribution<long> num(-40, 40), den(1, 23);
  for (int i = 0; i < 200; ++i) {
    long a1 = num(rng), b1 = den(rng), c1 = num(rng), d1 = den(rng);
    CHECK(Rational(a1, b1) + Rational(c1, d1) == Rational(a1 * d1 + c1 * b1, b1 * d1));
  }
}

TEST_CASE("rational exact square roots") {
  CHECK(Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK(Rational(0).exact_sqrt() == Rational(0));
  CHECK_FALSE(Rational(2).exact_sqrt().has_value());
  CHECK_FALSE(Rational(-1).exact_sqrt().has_value());
}

TEST_CASE("indexpoly evaluation") {
  IndexPoly k = IndexPoly::k(), t = IndexPoly::t();
  // coefficient of the Verma E action at k=2, t=3
  IndexPoly p = -t - k;
  CHECK(indexpoly_eval(p, Rational(2), Rational(3), Rational(0)) == Rational(-5));
  // the half-integer lowering coefficient at k=0
  IndexPoly q = k + IndexPoly(Rational(1, 2));
  CHECK(indexpoly_eval(q, Rational(0), Rational(7), Rational(1)) == Rational(1, 2));
  CHECK(indexpoly_eval(IndexPoly(), Rational(5), Rational(-2), Rational(9)) == Rational(0));
}

TEST_CASE("indexpoly ring operations and rendering") {
  IndexPoly k = IndexPoly::k(), t = IndexPoly::t(), eta = IndexPoly::eta();
  CHECK((t - IndexPoly(1)).to_string() == "t-1");
  CHECK((-IndexPoly(2) * k - t - IndexPoly(1)).to_string() == "-2*k-t-1");
  CHECK((k * k - eta.scaled(Rational(1, 2))).to_string() == "k^2-1/2*eta");
  CHECK(((t - IndexPoly(1)) * (t + IndexPoly(1))) == t * t - IndexPoly(1));
  CHECK(IndexPoly().to_string() == "0");

  IndexPoly p = (k + t) * (k - t);
  CHECK(p.shift_k(2) == (k + IndexPoly(2) + t) * (k + IndexPoly(2) - t));
  CHECK(p.eval_t_eta(Rational(3), Rational(0)) == k * k - IndexPoly(9));
}

TEST_CASE("laurent multiplication examples") {
  LP z = LP::coordinate(Chart::Zero);
  LP zinv = LP::monomial(Chart::Zero, -1, Rational(1));
  CHECK(laurent_mul(z, zinv) == LP::constant(Chart::Zero, Rational(1)));

  // (z^2 - z)(z + 1) = z^3 - z, expanded by hand
  LP a = LP::monomial(Chart::Zero, 2, Rational(1)) - z;
  LP b = z + LP::constant(Chart::Zero, Rational(1));
  LP want = LP::monomial(Chart::Zero, 3, Rational(1)) - z;
  CHECK(laurent_mul(a, b) == want);

  CHECK(laurent_mul(LP::zero(Chart::Zero), LP::monomial(Chart::Zero, 5, Rational(1)))
            .is_zero());

  LP w = LP::coordinate(Chart::Infinity);
  CHECK_THROWS_AS(laurent_mul(z, w), Error);
}

TEST_CASE("coordinate inversion flips chart and exponents") {
  LP w2 = LP::monomial(Chart::Infinity, 2, Rational(1));
  LP zm2 = LP::monomial(Chart::Zero, -2, Rational(1));
  CHECK(laurent_invert_coordinate(w2) == zm2);

  LP one = LP::constant(Chart::Zero, Rational(1));
  CHECK(laurent_invert_coordinate(one) == LP::constant(Chart::Infinity, Rational(1)));

  // 3w - 2w^-1 -> 3z^-1 - 2z, termwise exponent negation
  LP a = LP::monomial(Chart::Infinity, 1, Rational(3)) +
         LP::monomial(Chart::Infinity, -1, Rational(-2));
  LP want = LP::monomial(Chart::Zero, -1, Rational(3)) +
            LP::monomial(Chart::Zero, 1, Rational(-2));
  CHECK(laurent_invert_coordinate(a) == want);
}

TEST_CASE("laurent ring axioms on random instances") {
  for (int i = 0; i < 120; ++i) {
    LP a = random_laurent(Chart::Zero), b = random_laurent(Chart::Zero),
       c = random_laurent(Chart::Zero);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(laurent_invert_coordinate(laurent_invert_coordinate(a)) == a);
    CHECK(laurent_invert_coordinate(a * b) ==
          laurent_invert_coordinate(a) * laurent_invert_coordinate(b));
  }
}
