#include "sl2loc/reps/global.hpp"

namespace sl2loc::reps {

Sl2Module global_module(Family family, const Rational& t, const Rational& eta,
                        Gate gate) {
  // realization chart of the global sections
  Chart chart = family == Family::VermaPoint ? Chart::Zero : Chart::Infinity;
  // validate parameters through the same gate as the local constructor
  BasisModule local = make_local(family, chart, t, eta, gate);

  Sl2Module M;
  M.family = family;
  M.t = t;
  M.eta = local.eta;
  M.realization = chart;
  M.basis_label = local.basis_label;
  M.actE = action_table(family, chart, Letter::E);
  M.actF = action_table(family, chart, Letter::F);
  M.actH = action_table(family, chart, Letter::H);

  const long tm1 = t.to_long() - 1;
  switch (family) {
    case Family::FiniteO:
      // the t-dimensional space of section pairs, in its w-chart basis
      M.domain = IndexDomain::finite_range(0, tm1);
      M.intertwiner_shift = tm1;  // reversal pivot of the twist pairing
      break;
    case Family::VermaPoint:
    case Family::DeltaInfinity:
      M.domain = IndexDomain::non_negative();
      M.intertwiner_shift = std::nullopt;
      break;
    case Family::DualVermaOpen:
    case Family::WhittakerOpen:
      M.domain = IndexDomain::non_negative();
      M.intertwiner_shift = -tm1;
      break;
    case Family::PrincipalEven:
      M.domain = IndexDomain::all_integers();
      M.intertwiner_shift = -tm1;
      break;
    case Family::PrincipalOdd:
      M.domain = IndexDomain::all_integers();
      M.intertwiner_shift = tm1;
      break;
  }
  return M;
}

std::string OverlapReport::describe() const {
  std::string head = family_name(family) + " t=" + t.to_string() +
                     (eta.is_zero() ? "" : " eta=" + eta.to_string());
  if (ok) {
    if (twist_pairing)
      return head + ": twist pairing p(z) = z^" + std::to_string(shift) +
             " q(1/z) intertwines E, F, H";
    return head + ": index shift " + std::to_string(shift) + " intertwines E, F, H";
  }
  return head + ": " + detail;
}

namespace {

Element shift_element(const Element& e, long shift, const BasisModule& target) {
  Element r = target.zero_element();
  for (const auto& [k, c] : e.parts) {
    if (!target.domain.contains(k + shift))
      throw Error("overlap_check: shifted index leaves the target domain");
    r.add(k + shift, c);
  }
  return r;
}

/// FiniteO pairing u_k -> z^{t-1} (u_k with w = 1/z), expanded in the
/// z-chart basis v_j = (-1)^j z^j. Computed through Laurent arithmetic, not
/// a hand-coded sign.
Element twist_pair_element(const Element& e, long tm1, const BasisModule& target) {
  LaurentPoly<Rational> q(Chart::Infinity);
  for (const auto& [k, c] : e.parts) {
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);  // u_k = (-1)^k w^k
    q.set(static_cast<int>(k), q.coeff(static_cast<int>(k)) + c * sign);
  }
  LaurentPoly<Rational> p =
      LaurentPoly<Rational>::monomial(Chart::Zero, static_cast<int>(tm1), Rational(1)) *
      q.invert_coordinate();
  Element r = target.zero_element();
  for (const auto& [exp, c] : p.terms()) {
    if (exp < 0) throw Error("overlap_check: twist pairing left the polynomial ring");
    Rational sign = (exp % 2 == 0) ? Rational(1) : Rational(-1);  // v_j = (-1)^j z^j
    r.add(exp, c * sign);
  }
  return r;
}

}  // namespace

OverlapReport overlap_check(Family family, const Rational& t, const Rational& eta,
                            long window) {
  if (family == Family::VermaPoint || family == Family::DeltaInfinity)
    throw Error("overlap_check: " + family_name(family) +
                " is realized in a single chart");

  OverlapReport rep;
  rep.family = family;
  rep.t = t;
  rep.eta = eta;

  BasisModule minf = make_local(family, Chart::Infinity, t, eta);
  BasisModule m0 = make_local(family, Chart::Zero, t, eta);
  const long tm1 = t.to_long() - 1;

  const bool finite = family == Family::FiniteO;
  rep.twist_pairing = finite;
  // the shift under test is the one the global module records
  rep.shift = global_module(family, t, eta).intertwiner_shift.value();

  auto transport = [&](const Element& e) {
    return finite ? twist_pair_element(e, tm1, m0) : shift_element(e, rep.shift, m0);
  };

  std::vector<long> ks =
      finite ? IndexDomain::finite_range(0, tm1).window_slice(window)
             : minf.domain.window_slice(window);
  for (long k : ks) {
    for (Letter x : {Letter::E, Letter::F, Letter::H}) {
      Element lhs = transport(act_lie(minf, x, minf.basis_element(k)));
      Element rhs = act_lie(m0, x, transport(minf.basis_element(k)));
      if (!(lhs == rhs)) {
        rep.ok = false;
        rep.detail = std::string("square fails at ") + letter_name(x) + ", k=" +
                     std::to_string(k) + ": transported image " +
                     lhs.to_string(m0.basis_label) + " vs chart-0 action " +
                     rhs.to_string(m0.basis_label);
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace sl2loc::reps
