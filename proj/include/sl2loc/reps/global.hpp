#pragma once

#include <optional>

#include "sl2loc/reps/tables.hpp"

namespace sl2loc::reps {

/// Global sections of the family's sheaf, presented in the chart
/// realization the construction identifies them with. Action rules are
/// symbolic in (k, t, eta); applications substitute the instance's numeric
/// parameters. Out-of-domain targets of an action vanish (the index domain
/// carries the module's defining relations).
struct Sl2Module {
  Family family;
  Rational t;
  Rational eta;
  Chart realization;
  IndexDomain domain;
  ActionRule actE, actF, actH;
  /// Index shift of the map identifying the chart-infinity realization with
  /// the chart-zero one on the overlap (b_k -> b_{k+shift}); absent for the
  /// point-supported families. For FiniteO the identification is the twist
  /// pairing q -> z^{t-1} q(1/z), an index reversal about t-1.
  std::optional<long> intertwiner_shift;
  std::string basis_label;

  ModuleId id() const { return ModuleId{family, realization, t, eta, true}; }

  Element zero_element() const { return Element{id(), {}}; }
  Element basis_element(long k) const {
    if (!domain.contains(k))
      throw Error("basis_element: index " + std::to_string(k) +
                  " outside domain of " + id().to_string());
    Element e{id(), {}};
    e.parts[k] = Rational(1);
    return e;
  }

  const ActionRule& rule(Letter x) const {
    return x == Letter::E ? actE : x == Letter::F ? actF : actH;
  }
  ActionRule numeric_rule(Letter x) const { return rule(x).at(t, eta); }

  Element act(Letter x, const Element& e) const {
    if (!(e.module == id()))
      throw Error("Sl2Module::act: element belongs to " + e.module.to_string());
    return apply_rule_numeric(numeric_rule(x), domain, Boundary::Quotient, e);
  }

  /// Same realization, domain, and numeric action (used e.g. to compare
  /// WhittakerOpen at eta = 0 with DualVermaOpen).
  bool same_action(const Sl2Module& o) const {
    return realization == o.realization && domain == o.domain &&
           numeric_rule(Letter::E) == o.numeric_rule(Letter::E) &&
           numeric_rule(Letter::F) == o.numeric_rule(Letter::F) &&
           numeric_rule(Letter::H) == o.numeric_rule(Letter::H);
  }
};

/// Builds the global-sections module of the family at integer t >= 1.
Sl2Module global_module(Family family, const Rational& t, const Rational& eta,
                        Gate gate = Gate::Standard);

struct OverlapReport {
  Family family;
  Rational t, eta;
  bool ok = false;
  long shift = 0;           // verified index shift (chart inf -> chart 0)
  bool twist_pairing = false;  // FiniteO: reversal through z^{t-1} q(1/z)
  std::string detail;       // first non-commuting square on failure

  std::string describe() const;
};

/// Verifies that the chart identification intertwines all three Lie actions
/// between the two local realizations over the test window. For FiniteO the
/// map is computed from the twist pairing itself; for the other two-chart
/// families it is the index shift recorded on the global module. Families
/// supported in a single chart are rejected.
OverlapReport overlap_check(Family family, const Rational& t, const Rational& eta,
                            long window);

}  // namespace sl2loc::reps
