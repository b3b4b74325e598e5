#include "sl2loc/reps/module.hpp"

namespace sl2loc::reps {

std::string family_name(Family f) {
  switch (f) {
    case Family::FiniteO: return "FiniteO";
    case Family::VermaPoint: return "VermaPoint";
    case Family::DualVermaOpen: return "DualVermaOpen";
    case Family::DeltaInfinity: return "DeltaInfinity";
    case Family::PrincipalEven: return "PrincipalEven";
    case Family::PrincipalOdd: return "PrincipalOdd";
    default: return "WhittakerOpen";
  }
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::FiniteO, Family::VermaPoint, Family::DualVermaOpen,
                   Family::DeltaInfinity, Family::PrincipalEven, Family::PrincipalOdd,
                   Family::WhittakerOpen})
    if (family_name(f) == name) return f;
  throw Error("unknown family '" + name + "'");
}

std::string ModuleId::to_string() const {
  return family_name(family) + "/" + chart_name(chart) + "/t=" + t.to_string() +
         "/eta=" + eta.to_string() + (global ? "/global" : "");
}

std::string Element::to_string(const std::string& basis_label) const {
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : parts) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + "*" + basis_label + "_" + std::to_string(k);
  }
  return out;
}

Element BasisModule::basis_element(long k) const {
  if (!domain.contains(k))
    throw Error("basis_element: index " + std::to_string(k) + " outside domain of " +
                id().to_string());
  Element e{id(), {}};
  e.parts[k] = Rational(1);
  return e;
}

Element apply_rule_numeric(const ActionRule& rule, const IndexDomain& domain,
                           Boundary boundary, const Element& e) {
  for (const auto& term : rule.terms)
    if (term.coeff.degree_in(1) > 0 || term.coeff.degree_in(2) > 0)
      throw Error("apply_rule_numeric: rule still carries symbolic t or eta");
  Element r{e.module, {}};
  for (const auto& [k, c] : e.parts) {
    for (const auto& term : rule.terms) {
      Rational coeff = term.coeff.eval(Rational(k), Rational(0), Rational(0));
      if (coeff.is_zero()) continue;
      long target = k + term.shift;
      if (!domain.contains(target)) {
        if (boundary == Boundary::Exact)
          throw Error("apply_rule: nonzero coefficient escapes the index domain at k=" +
                      std::to_string(k) + " (module " + e.module.to_string() + ")");
        continue;  // quotient relation: the target symbol is zero
      }
      r.add(target, c * coeff);
    }
  }
  return r;
}

Element BasisModule::apply_coord(const Element& e) const {
  return apply_rule_numeric(coord_action.at(t, eta), domain, boundary, e);
}

Element BasisModule::apply_del(const Element& e) const {
  return apply_rule_numeric(del_action.at(t, eta), domain, boundary, e);
}

Element BasisModule::apply_coord_inverse(const Element& e) const {
  if (domain.kind != IndexDomain::Kind::AllIntegers)
    throw Error("coordinate action is not invertible on " + id().to_string());
  ActionRule rule = coord_action.at(t, eta);
  if (rule.terms.size() != 1)
    throw Error("coordinate action is not a single shift on " + id().to_string());
  long s = rule.terms[0].shift;
  Element r{e.module, {}};
  for (const auto& [k, c] : e.parts) {
    Rational coeff = rule.terms[0].coeff.eval(Rational(k - s), Rational(0), Rational(0));
    if (coeff.is_zero())
      throw Error("coordinate action vanishes at k=" + std::to_string(k - s));
    r.add(k - s, c / coeff);
  }
  return r;
}

bool family_has_chart(Family family, Chart chart) {
  if (family == Family::VermaPoint) return chart == Chart::Zero;
  if (family == Family::DeltaInfinity) return chart == Chart::Infinity;
  return true;
}

namespace {

const IndexPoly kSym = IndexPoly::k();
const IndexPoly kEta = IndexPoly::eta();

ActionRule polynomial_coord() { return single_rule(+1, IndexPoly(-1)); }   // x . b_k = -b_{k+1}
ActionRule polynomial_del() { return single_rule(-1, -kSym); }             // d . b_k = -k b_{k-1}
ActionRule laurent_inverse_coord() { return single_rule(-1, IndexPoly(-1)); }
ActionRule laurent_inverse_del() { return single_rule(+1, kSym); }

}  // namespace

BasisModule make_local(Family family, Chart chart, const Rational& t,
                       const Rational& eta, Gate gate) {
  if (!t.is_integer() || (gate == Gate::Standard && t < Rational(1)) ||
      (gate == Gate::SingularTestOnly && t < Rational(0)))
    throw Error("make_local: regular dominant integral required (integer t >= 1), got t=" +
                t.to_string());
  if (!family_has_chart(family, chart))
    throw Error("make_local: " + family_name(family) +
                (family == Family::VermaPoint
                     ? " is supported at the point 0 and has sections only in the z chart"
                     : " is supported at the point infinity and has sections only in the w chart"));
  if (!eta.is_zero() &&
      (family == Family::VermaPoint || family == Family::DeltaInfinity))
    throw Error("make_local: no eta-twisted module exists on a point orbit; a nilpotent "
                "element can only act by zero there (requested eta=" + eta.to_string() + ")");

  BasisModule m;
  m.family = family;
  m.chart = chart;
  m.t = t;
  m.eta = family == Family::WhittakerOpen ? eta : Rational(0);

  switch (family) {
    case Family::FiniteO:
      // local sections of O(t-1) on either chart: polynomials with basis
      // u_k = (-1)^k x^k
      m.domain = IndexDomain::non_negative();
      m.coord_action = polynomial_coord();
      m.del_action = polynomial_del();
      m.basis_label = "u";
      m.boundary = Boundary::Exact;
      break;
    case Family::VermaPoint:
      // delta module D(U_0)/D(U_0) z, basis m_k = ((-1)^k / k!) d^k delta:
      // z . m_k = m_{k-1} (zero at k = 0), d . m_k = -(k+1) m_{k+1}
      m.domain = IndexDomain::non_negative();
      m.coord_action = single_rule(-1, IndexPoly(1));
      m.del_action = single_rule(+1, -(kSym + IndexPoly(1)));
      m.basis_label = "m";
      m.boundary = Boundary::Quotient;
      break;
    case Family::DualVermaOpen:
      m.basis_label = "n";
      m.boundary = Boundary::Exact;
      if (chart == Chart::Infinity) {
        // C[w] with n_k = (-1)^k w^k
        m.domain = IndexDomain::non_negative();
        m.coord_action = polynomial_coord();
        m.del_action = polynomial_del();
      } else {
        // C[z, z^-1] with n_k = (-1)^k z^-k
        m.domain = IndexDomain::all_integers();
        m.coord_action = laurent_inverse_coord();
        m.del_action = laurent_inverse_del();
      }
      break;
    case Family::DeltaInfinity:
      // mirror of VermaPoint at infinity, basis d_k = ((-1)^k / k!) d_w^k delta
      m.domain = IndexDomain::non_negative();
      m.coord_action = single_rule(-1, IndexPoly(1));
      m.del_action = single_rule(+1, -(kSym + IndexPoly(1)));
      m.basis_label = "d";
      m.boundary = Boundary::Quotient;
      break;
    case Family::PrincipalEven:
      // R(V) = C[x, x^-1] in either trivialization, n_k = (-1)^k w^k = (-1)^k z^-k
      m.domain = IndexDomain::all_integers();
      m.basis_label = "n";
      m.boundary = Boundary::Exact;
      if (chart == Chart::Infinity) {
        m.coord_action = polynomial_coord();
        m.del_action = polynomial_del();
      } else {
        m.coord_action = laurent_inverse_coord();
        m.del_action = laurent_inverse_del();
      }
      break;
    case Family::PrincipalOdd:
      // the half-twist module: p_k behaves like z^{k+1/2};
      // z . p_k = p_{k+1}, d_z . p_k = (k + 1/2) p_{k-1},
      // w . p_k = p_{k-1},  d_w . p_k = -(k + 1/2) p_{k+1}
      m.domain = IndexDomain::all_integers();
      m.basis_label = "p";
      m.boundary = Boundary::Exact;
      if (chart == Chart::Zero) {
        m.coord_action = single_rule(+1, IndexPoly(1));
        m.del_action = single_rule(-1, kSym + IndexPoly(Rational(1, 2)));
      } else {
        m.coord_action = single_rule(-1, IndexPoly(1));
        m.del_action = single_rule(+1, -(kSym + IndexPoly(Rational(1, 2))));
      }
      break;
    case Family::WhittakerOpen:
      // eta-twisted structure sheaf of U_infty; at eta = 0 these rules are
      // exactly DualVermaOpen's
      m.basis_label = "n";
      m.boundary = Boundary::Exact;
      if (chart == Chart::Infinity) {
        // d_w . w^k = k w^{k-1} - eta w^k on n_k = (-1)^k w^k
        m.domain = IndexDomain::non_negative();
        m.coord_action = polynomial_coord();
        m.del_action = single_rule(-1, -kSym) + single_rule(0, -kEta);
      } else {
        // d_z . z^k = k z^{k-1} + eta z^{k-2} on n_k = (-1)^k z^-k
        m.domain = IndexDomain::all_integers();
        m.coord_action = laurent_inverse_coord();
        m.del_action = single_rule(+1, kSym) + single_rule(+2, kEta);
      }
      break;
  }
  return m;
}

Element act_weyl(const BasisModule& m, const WeylOp<Rational>& op, const Element& e) {
  require_same_chart(m.chart, op.chart(), "act_weyl");
  if (!(e.module == m.id()))
    throw Error("act_weyl: element belongs to " + e.module.to_string() + ", not " +
                m.id().to_string());
  Element result = m.zero_element();
  Element diff = e;  // d^i e, computed incrementally
  int reached = 0;
  for (const auto& [order, poly] : op.coeffs()) {
    while (reached < order) {
      diff = m.apply_del(diff);
      ++reached;
    }
    for (const auto& [exp, c] : poly.terms()) {
      Element cur = diff;
      for (int s = 0; s < exp; ++s) cur = m.apply_coord(cur);
      for (int s = 0; s > exp; --s) cur = m.apply_coord_inverse(cur);
      result = result + cur.scaled(c);
    }
  }
  return result;
}

Element act_lie(const BasisModule& m, Letter x, const Element& e) {
  WeylOp<Rational> op = derive_chart_operator<Rational>(letter_matrix(x), m.chart, m.t);
  return act_weyl(m, op, e);
}

}  // namespace sl2loc::reps
