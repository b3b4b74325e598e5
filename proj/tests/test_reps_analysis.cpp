#include <doctest.h>

#include "sl2loc/reps/analysis.hpp"

using namespace sl2loc;
using namespace sl2loc::reps;

TEST_CASE("weights and non-weight witnesses") {
  // lowest-weight ladder t+1, t+3, ... at t = 2
  Sl2Module d2 = global_module(Family::DeltaInfinity, Rational(2), Rational(0));
  auto w = weights(d2, 3);
  auto* list = std::get_if<WeightList>(&w);
  REQUIRE(list != nullptr);
  std::vector<std::pair<long, Rational>> expect = {
      {0, Rational(3)}, {1, Rational(5)}, {2, Rational(7)}, {3, Rational(9)}};
  CHECK(list->entries == expect);

  Sl2Module triv = global_module(Family::FiniteO, Rational(1), Rational(0));
  auto wt = weights(triv, 5);
  auto* lt = std::get_if<WeightList>(&wt);
  REQUIRE(lt != nullptr);
  CHECK(lt->entries == std::vector<std::pair<long, Rational>>{{0, Rational(0)}});

  Sl2Module wh = global_module(Family::WhittakerOpen, Rational(2), Rational(1));
  auto ww = weights(wh, 5);
  auto* nb = std::get_if<NotAWeightBasis>(&ww);
  REQUIRE(nb != nullptr);
  CHECK(nb->witness_shift == 1);
}

TEST_CASE("casimir scalars across families") {
  for (Family f : {Family::FiniteO, Family::VermaPoint, Family::DeltaInfinity,
                   Family::PrincipalOdd}) {
    Sl2Module M3 = global_module(f, Rational(3), Rational(0));
    CHECK(casimir_scalar(M3, 20) == Rational(8));
    Sl2Module M1 = global_module(f, Rational(1), Rational(0));
    CHECK(casimir_scalar(M1, 20) == Rational(0));
  }
  // the eta terms must cancel exactly
  Sl2Module wh = global_module(Family::WhittakerOpen, Rational(2), Rational(5));
  CHECK(casimir_scalar(wh, 20) == Rational(3));
}

TEST_CASE("highest and lowest weight scans") {
  Sl2Module verma = global_module(Family::VermaPoint, Rational(2), Rational(0));
  auto hw = highest_weight_vectors(verma, 16);
  REQUIRE(hw.size() == 1);
  CHECK(hw[0] == verma.basis_element(0));
  CHECK(verma.act(Letter::H, hw[0]) == hw[0].scaled(Rational(-3)));
  CHECK(lowest_weight_vectors(verma, 16).empty());

  Sl2Module fin = global_module(Family::FiniteO, Rational(3), Rational(0));
  auto fhw = highest_weight_vectors(fin, 16);
  REQUIRE(fhw.size() == 1);
  CHECK(fhw[0] == fin.basis_element(0));
  CHECK(weight_of(fin, 0) == Rational(2));
  auto flw = lowest_weight_vectors(fin, 16);
  REQUIRE(flw.size() == 1);
  CHECK(flw[0] == fin.basis_element(2));

  // E n_0 = 0 n_{-1} = 0 on the trivial principal series
  Sl2Module pe = global_module(Family::PrincipalEven, Rational(2), Rational(0));
  auto phw = highest_weight_vectors(pe, 10);
  REQUIRE(phw.size() == 1);
  CHECK(phw[0] == pe.basis_element(0));
  CHECK(weight_of(pe, 0) == Rational(1));

  Sl2Module delta = global_module(Family::DeltaInfinity, Rational(4), Rational(0));
  CHECK(highest_weight_vectors(delta, 16).empty());
  auto dlw = lowest_weight_vectors(delta, 16);
  REQUIRE(dlw.size() == 1);
  CHECK(dlw[0] == delta.basis_element(0));

  Sl2Module podd = global_module(Family::PrincipalOdd, Rational(3), Rational(0));
  CHECK(highest_weight_vectors(podd, 10).empty());
  CHECK(lowest_weight_vectors(podd, 10).empty());
}

TEST_CASE("whittaker vector solves") {
  Sl2Module wh = global_module(Family::WhittakerOpen, Rational(3), Rational(2));
  auto wv = whittaker_vectors(wh, Rational(2), 20);
  REQUIRE(wv.size() == 1);
  CHECK(wv[0] == wh.basis_element(0));

  // a highest-weight vector is a 0-Whittaker vector
  Sl2Module verma = global_module(Family::VermaPoint, Rational(2), Rational(0));
  auto v0 = whittaker_vectors(verma, Rational(0), 20);
  REQUIRE(v0.size() == 1);
  CHECK(v0[0] == verma.basis_element(0));
  // and no eta != 0 Whittaker vector exists there
  CHECK(whittaker_vectors(verma, Rational(1), 20).empty());
}

TEST_CASE("H eigenvector solves on the Whittaker module return only zero") {
  for (const Rational& eta : {Rational(1), Rational(-2), Rational(3, 2)}) {
    Sl2Module wh = global_module(Family::WhittakerOpen, Rational(2), eta);
    CHECK(h_eigenvectors(wh, 8).empty());
    CHECK(h_eigenvectors(wh, 24).empty());
  }
  Sl2Module verma = global_module(Family::VermaPoint, Rational(2), Rational(0));
  CHECK(h_eigenvectors(verma, 8).size() == 9);
}

TEST_CASE("generated subspaces") {
  Sl2Module dv = global_module(Family::DualVermaOpen, Rational(2), Rational(0));
  auto sub = submodule_generated(dv, dv.basis_element(0), 24);
  CHECK(sub.window_closed);
  REQUIRE(sub.basis.size() == 2);
  CHECK(sub.basis[0] == dv.basis_element(0));
  CHECK(sub.basis[1] == dv.basis_element(1));

  // one delta vector generates the whole Verma module
  Sl2Module verma = global_module(Family::VermaPoint, Rational(1), Rational(0));
  auto all = submodule_generated(verma, verma.basis_element(3), 18);
  CHECK(all.basis.size() == 19);

  Sl2Module fin = global_module(Family::FiniteO, Rational(2), Rational(0));
  auto span = submodule_generated(fin, fin.basis_element(1), 24);
  CHECK(span.window_closed);
  CHECK(span.basis.size() == 2);
}

TEST_CASE("composition reports") {
  CompositionReport pe1 = composition_report(Family::PrincipalEven, Rational(1), 8);
  CHECK(pe1.sub_indices.size() == 1);
  CHECK(pe1.sub_invariant);
  CHECK(pe1.split_verified);
  // quotient weights 2, 4, ... and -2, -4, ...
  CHECK(pe1.quotient_lower_weights[0] == Rational(2));
  CHECK(pe1.quotient_lower_weights[1] == Rational(4));
  CHECK(pe1.quotient_upper_weights[0] == Rational(-2));
  CHECK(pe1.quotient_upper_weights[1] == Rational(-4));

  CompositionReport dv3 = composition_report(Family::DualVermaOpen, Rational(3), 10);
  CHECK(dv3.sub_indices == std::vector<long>{0, 1, 2});
  CHECK(dv3.sub_weights ==
        std::vector<Rational>{Rational(2), Rational(0), Rational(-2)});
  CHECK(dv3.sub_invariant);
  CHECK(dv3.sub_irreducible);
  REQUIRE(dv3.quotient_highest.has_value());
  CHECK(dv3.quotient_highest->index == 3);
  CHECK(dv3.quotient_highest->weight == Rational(-4));
  CHECK_FALSE(dv3.quotient_lowest.has_value());

  CompositionReport pe2 = composition_report(Family::PrincipalEven, Rational(2), 6);
  CHECK(pe2.sub_indices == std::vector<long>{0, 1});
  REQUIRE(pe2.quotient_lowest.has_value());
  REQUIRE(pe2.quotient_highest.has_value());
  CHECK(pe2.quotient_lowest->index == -1);
  CHECK(pe2.quotient_lowest->weight == Rational(3));
  CHECK(pe2.quotient_highest->index == 2);
  CHECK(pe2.quotient_highest->weight == Rational(-3));

  CHECK_THROWS_AS(composition_report(Family::VermaPoint, Rational(2), 8), Error);
}

TEST_CASE("irreducibility certificates") {
  Sl2Module verma = global_module(Family::VermaPoint, Rational(1), Rational(0));
  auto cv = irreducibility_certificate(verma, 16);
  CHECK(cv.kind == Certificate::Kind::IrreducibleWeight);
  CHECK(cv.window_stable);

  Sl2Module dv = global_module(Family::DualVermaOpen, Rational(2), Rational(0));
  auto cd = irreducibility_certificate(dv, 16);
  CHECK(cd.kind == Certificate::Kind::Reducible);
  CHECK(cd.witness == std::vector<long>{0, 1});
  CHECK(cd.window_stable);

  Sl2Module wh = global_module(Family::WhittakerOpen, Rational(4), Rational(3));
  auto cw = irreducibility_certificate(wh, 16);
  CHECK(cw.kind == Certificate::Kind::IrreducibleWhittaker);
  CHECK(cw.window_stable);

  Sl2Module pe = global_module(Family::PrincipalEven, Rational(2), Rational(0));
  auto cp = irreducibility_certificate(pe, 16);
  CHECK(cp.kind == Certificate::Kind::Reducible);
  CHECK(cp.witness == std::vector<long>{0, 1});
}

TEST_CASE("K-weight parity dichotomy") {
  ParityReport even3 = k_weight_parity(Family::PrincipalEven, Rational(3));
  CHECK(even3.single_parity);
  CHECK(even3.parity == 0);  // t-1 = 2 is even
  CHECK(even3.distinct);
  ParityReport odd3 = k_weight_parity(Family::PrincipalOdd, Rational(3));
  CHECK(odd3.single_parity);
  CHECK(odd3.parity == 1);  // 2k+t with t = 3 is odd
  ParityReport even1 = k_weight_parity(Family::PrincipalEven, Rational(1));
  CHECK(even1.parity == 0);
  CHECK_THROWS_AS(k_weight_parity(Family::VermaPoint, Rational(2)), Error);
}

TEST_CASE("Borel-Weil dimension count from the pairing constraint") {
  CHECK(borel_weil_dim(4) == 5);
  CHECK(borel_weil_dim(-2) == 0);
  CHECK(borel_weil_dim(0) == 1);
  CHECK(borel_weil_dim(6) == 7);
  CHECK(borel_weil_dim(-1) == 0);
}
