#include <doctest.h>

#include "sl2loc/reps/tables.hpp"
#include "sl2loc/weyl_text.hpp"

using namespace sl2loc;
using namespace sl2loc::reps;

namespace {

ActionRule rule(long shift, const std::string& coeff) {
  return single_rule(shift, parse_indexpoly(coeff));
}

}  // namespace

TEST_CASE("interpolated tables match the closed forms") {
  // Verma at the point: E, F, H
  CHECK(action_table(Family::VermaPoint, Chart::Zero, Letter::E) == rule(-1, "-t-k"));
  CHECK(action_table(Family::VermaPoint, Chart::Zero, Letter::F) == rule(+1, "k+1"));
  CHECK(action_table(Family::VermaPoint, Chart::Zero, Letter::H) ==
        rule(0, "-t-1-2*k"));

  // trivial principal series in the w chart
  CHECK(action_table(Family::PrincipalEven, Chart::Infinity, Letter::F) ==
        rule(+1, "t-1-k"));

  // finite module = dual Verma rules on the w chart
  CHECK(action_table(Family::FiniteO, Chart::Infinity, Letter::E) == rule(-1, "k"));
  CHECK(action_table(Family::FiniteO, Chart::Infinity, Letter::H) ==
        rule(0, "t-1-2*k"));

  // discrete series at infinity
  CHECK(action_table(Family::DeltaInfinity, Chart::Infinity, Letter::E) ==
        rule(+1, "k+1"));
  CHECK(action_table(Family::DeltaInfinity, Chart::Infinity, Letter::F) ==
        rule(-1, "-t-k"));
}

TEST_CASE("half-twist module tables, including the corrected F") {
  CHECK(action_table(Family::PrincipalOdd, Chart::Zero, Letter::E) ==
        rule(+1, "-t+3/2+k"));
  CHECK(action_table(Family::PrincipalOdd, Chart::Zero, Letter::F) ==
        rule(-1, "-k-1/2"));
  CHECK(action_table(Family::PrincipalOdd, Chart::Zero, Letter::H) ==
        rule(0, "-t+2+2*k"));
  CHECK(action_table(Family::PrincipalOdd, Chart::Infinity, Letter::E) ==
        rule(+1, "k+1/2"));
  // the generically derived value; the printed one is -t-1/2-k and breaks [E,F]=H
  CHECK(action_table(Family::PrincipalOdd, Chart::Infinity, Letter::F) ==
        rule(-1, "-t+1/2-k"));
  CHECK(action_table(Family::PrincipalOdd, Chart::Infinity, Letter::H) ==
        rule(0, "2*k+t"));
}

TEST_CASE("Whittaker tables carry the eta terms") {
  CHECK(action_table(Family::WhittakerOpen, Chart::Infinity, Letter::E) ==
        single_rule(-1, parse_indexpoly("k")) + single_rule(0, parse_indexpoly("eta")));
  CHECK(action_table(Family::WhittakerOpen, Chart::Infinity, Letter::H) ==
        single_rule(0, parse_indexpoly("t-1-2*k")) +
            single_rule(1, parse_indexpoly("-2*eta")));
  CHECK(action_table(Family::WhittakerOpen, Chart::Zero, Letter::F) ==
        single_rule(1, parse_indexpoly("-k")) + single_rule(2, parse_indexpoly("-eta")));
}

TEST_CASE("symbolic composition agrees with element-level application") {
  BasisModule m =
      make_local(Family::WhittakerOpen, Chart::Infinity, Rational(3), Rational(2));
  ActionRule e = action_table(Family::WhittakerOpen, Chart::Infinity, Letter::E);
  ActionRule f = action_table(Family::WhittakerOpen, Chart::Infinity, Letter::F);
  ActionRule ef = e.compose(f).at(m.t, m.eta);
  for (long k = 2; k <= 9; ++k) {
    Element direct = act_lie(m, Letter::E, act_lie(m, Letter::F, m.basis_element(k)));
    Element composed = apply_rule_numeric(ef, m.domain, m.boundary, m.basis_element(k));
    CHECK(direct == composed);
  }
}

TEST_CASE("symbolic commutators of the tables close the sl(2) relations") {
  for (Family f : {Family::VermaPoint, Family::DeltaInfinity, Family::PrincipalOdd,
                   Family::WhittakerOpen}) {
    Chart c = f == Family::VermaPoint ? Chart::Zero : Chart::Infinity;
    ActionRule e = action_table(f, c, Letter::E);
    ActionRule fr = action_table(f, c, Letter::F);
    ActionRule h = action_table(f, c, Letter::H);
    CHECK(e.commutator(fr) == h);
    CHECK(h.commutator(e) == e.scaled(IndexPoly(2)));
    CHECK(h.commutator(fr) == fr.scaled(IndexPoly(-2)));
  }
}
