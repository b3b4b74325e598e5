#include <doctest.h>

#include <random>

#include "sl2loc/weyl_text.hpp"

using namespace sl2loc;

namespace {

std::mt19937 rng(424242);

WeylOp<IndexPoly> random_symbolic_op(Chart chart) {
  std::uniform_int_distribution<int> exp(-3, 3), ord(0, 2), nterms(1, 3), which(0, 3);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  WeylOp<IndexPoly> op(chart);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    IndexPoly c(Rational(num(rng), den(rng)));
    switch (which(rng)) {
      case 0: c *= IndexPoly::t(); break;
      case 1: c *= IndexPoly::t() - IndexPoly(1); break;
      case 2: c *= IndexPoly::eta() + IndexPoly::k(); break;
      default: break;
    }
    op += WeylOp<IndexPoly>::monomial(chart, exp(rng), ord(rng), c);
  }
  return op;
}

}  // namespace

TEST_CASE("rendering matches the fixed grammar") {
  CHECK(render(parse_weyl("z^2*d - (t-1)*z", Chart::Zero)) == "z^2*d - (t-1)*z");
  CHECK(render(parse_weyl_rational("-2*w*d + 1", Chart::Infinity)) == "-2*w*d + 1");
  CHECK(render(WeylOp<Rational>::zero(Chart::Zero)) == "0");
  CHECK(render(WeylOp<Rational>::one(Chart::Infinity)) == "1");
  CHECK(render(parse_weyl_rational("d - 3*z^-1", Chart::Zero)) == "d - 3*z^-1");
  CHECK(render(parse_weyl_rational("3/2*z", Chart::Zero)) == "3/2*z");
  CHECK(render(parse_weyl("(2*t)*w", Chart::Infinity)) == "(2*t)*w");
}

TEST_CASE("parser accepts whitespace and signs") {
  CHECK(parse_weyl_rational(" -d ", Chart::Zero) ==
        -WeylOp<Rational>::del(Chart::Zero));
  CHECK(parse_weyl_rational("+2*z^2", Chart::Zero) ==
        WeylOp<Rational>::monomial(Chart::Zero, 2, 0, Rational(2)));
  CHECK(parse_weyl("(t-1)", Chart::Zero).constant_value() ==
        IndexPoly::t() - IndexPoly(1));
}

TEST_CASE("parser rejects text that is not in normal form") {
  CHECK_THROWS_AS(parse_weyl("d*z", Chart::Zero), Error);
  CHECK_THROWS_AS(parse_weyl("z*w", Chart::Zero), Error);
  CHECK_THROWS_AS(parse_weyl("d^-1", Chart::Zero), Error);
  CHECK_THROWS_AS(parse_weyl("z + ", Chart::Zero), Error);
  CHECK_THROWS_AS(parse_weyl("(z + 1)*d", Chart::Zero), Error);
  CHECK_THROWS_AS(parse_weyl("z^99999999999999999999", Chart::Zero), Error);
  CHECK_THROWS_AS(narrow_to_rational(parse_weyl("(t)*z", Chart::Zero)), Error);
}

TEST_CASE("indexpoly literals parse") {
  CHECK(parse_indexpoly("-2*k-t-1") ==
        -IndexPoly(2) * IndexPoly::k() - IndexPoly::t() - IndexPoly(1));
  CHECK(parse_indexpoly("k^2*eta - 1/2") ==
        IndexPoly::k() * IndexPoly::k() * IndexPoly::eta() - IndexPoly(Rational(1, 2)));
}

TEST_CASE("parser survives arbitrary input without crashing") {
  std::uniform_int_distribution<int> len(0, 24), pick(0, 19);
  const char alphabet[] = "zwdket()+-*/^ 0129a";
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    int n = len(rng);
    for (int j = 0; j < n; ++j) s += alphabet[static_cast<size_t>(pick(rng))];
    try {
      auto op = parse_weyl(s, Chart::Zero);
      // anything accepted must round-trip through the renderer
      CHECK(parse_weyl(render(op), Chart::Zero) == op);
    } catch (const Error&) {
      // rejection is fine; crashes or foreign exceptions are not
    }
  }
}

TEST_CASE("render/parse round-trip on random operators") {
  for (int i = 0; i < 150; ++i) {
    Chart chart = (i % 2 == 0) ? Chart::Zero : Chart::Infinity;
    auto op = random_symbolic_op(chart);
    CHECK(parse_weyl(render(op), chart) == op);
  }
}
