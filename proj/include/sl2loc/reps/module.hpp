#pragma once

#include <map>
#include <string>

#include "sl2loc/reps/action_rule.hpp"
#include "sl2loc/tdo.hpp"
#include "sl2loc/weyl.hpp"

namespace sl2loc::reps {

/// The eight module families (VermaPoint is shared by the highest-weight
/// and discrete-series stories; WhittakerOpen at eta = 0 coincides with
/// DualVermaOpen).
enum class Family {
  FiniteO,
  VermaPoint,
  DualVermaOpen,
  DeltaInfinity,
  PrincipalEven,
  PrincipalOdd,
  WhittakerOpen,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Gate for the twist parameter. Standard enforces the dominant-regular
/// hypothesis
/// t >= 1; SingularTestOnly additionally admits t = 0 (singular
/// infinitesimal character) for boundary tests.
enum class Gate { Standard, SingularTestOnly };

/// Identity of a module instance; elements carry it so that cross-module
/// arithmetic is detected.
struct ModuleId {
  Family family;
  Chart chart;
  Rational t;
  Rational eta;
  bool global = false;

  bool operator==(const ModuleId& o) const {
    return family == o.family && chart == o.chart && t == o.t && eta == o.eta &&
           global == o.global;
  }
  std::string to_string() const;
};

/// Finite rational combination of basis symbols of one module.
struct Element {
  ModuleId module;
  std::map<long, Rational> parts;  // index -> nonzero coefficient

  bool is_zero() const { return parts.empty(); }
  Rational coeff(long k) const {
    auto it = parts.find(k);
    return it == parts.end() ? Rational(0) : it->second;
  }
  void add(long k, const Rational& c) {
    auto it = parts.find(k);
    Rational v = (it == parts.end() ? Rational(0) : it->second) + c;
    if (v.is_zero()) {
      if (it != parts.end()) parts.erase(it);
    } else {
      parts[k] = v;
    }
  }
  Element operator+(const Element& o) const {
    if (!(module == o.module)) throw Error("Element: module mismatch in +");
    Element r = *this;
    for (const auto& [k, c] : o.parts) r.add(k, c);
    return r;
  }
  Element operator-(const Element& o) const { return *this + o.scaled(Rational(-1)); }
  Element scaled(const Rational& c) const {
    Element r{module, {}};
    if (c.is_zero()) return r;
    for (const auto& [k, v] : parts) r.parts[k] = v * c;
    return r;
  }
  long min_index() const { return parts.empty() ? 0 : parts.begin()->first; }
  long max_index() const { return parts.empty() ? 0 : parts.rbegin()->first; }
  bool operator==(const Element& o) const {
    return module == o.module && parts == o.parts;
  }
  std::string to_string(const std::string& basis_label) const;
};

/// How out-of-domain targets behave when a rule is applied. Function-space
/// modules never produce them with a nonzero coefficient (so hitting one is
/// an engine bug); delta modules drop them, which implements the defining
/// relation (z . delta = 0 and its mirror).
enum class Boundary { Exact, Quotient };

/// A module with basis indexed by integers, defined by the action of the
/// chart coordinate and of d on basis symbols. The stored rules are
/// symbolic in (k, t, eta); applications substitute the instance's numeric
/// t and eta.
struct BasisModule {
  Family family;
  Chart chart;
  Rational t;
  Rational eta;
  IndexDomain domain;
  ActionRule coord_action;
  ActionRule del_action;
  std::string basis_label;
  Boundary boundary = Boundary::Exact;

  ModuleId id() const { return ModuleId{family, chart, t, eta, false}; }

  Element zero_element() const { return Element{id(), {}}; }
  Element basis_element(long k) const;

  Element apply_coord(const Element& e) const;
  Element apply_del(const Element& e) const;
  /// Inverse of the coordinate action; only AllIntegers domains support it.
  Element apply_coord_inverse(const Element& e) const;
};

/// Applies a numeric rule (coefficients polynomial in k only) to an
/// element, dropping out-of-domain targets. With Boundary::Exact a nonzero
/// dropped coefficient raises an error.
Element apply_rule_numeric(const ActionRule& rule, const IndexDomain& domain,
                           Boundary boundary, const Element& e);

/// Constructs the local model of the family on the chart, with the
/// generator rules and sign conventions baked into the basis symbols.
/// Preconditions: integer t >= 1 (t = 0 only through the singular gate);
/// eta is meaningful only for WhittakerOpen and must be 0 for the
/// point-supported families; VermaPoint lives only in the z chart and
/// DeltaInfinity only in the w chart.
BasisModule make_local(Family family, Chart chart, const Rational& t,
                       const Rational& eta, Gate gate = Gate::Standard);

/// True when the family has a local model on the chart.
bool family_has_chart(Family family, Chart chart);

/// Applies a differential operator in normal form through the module's
/// generator rules. Negative coordinate powers require an invertible
/// coordinate action (AllIntegers domains).
Element act_weyl(const BasisModule& m, const WeylOp<Rational>& op, const Element& e);

/// Action of a Lie algebra basis element through the chart operator derived
/// from the group action at the module's twist.
Element act_lie(const BasisModule& m, Letter x, const Element& e);

}  // namespace sl2loc::reps
