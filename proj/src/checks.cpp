#include "sl2loc/checks.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sl2loc::checks {

using namespace reps;

namespace {

const IndexPoly K = IndexPoly::k();
const IndexPoly T = IndexPoly::t();
const IndexPoly ETA = IndexPoly::eta();

IndexPoly ip(long n) { return IndexPoly(n); }
IndexPoly iph(long num, long den) { return IndexPoly(Rational(num, den)); }

ActionRule rule1(long s, IndexPoly c) { return single_rule(s, c); }
ActionRule rule2(long s1, IndexPoly c1, long s2, IndexPoly c2) {
  ActionRule r;
  r.add_term(s1, c1);
  r.add_term(s2, c2);
  return r;
}

Rational casimir_value(const Rational& t) {
  Rational tm1 = t - Rational(1);
  return tm1 * tm1 + Rational(2) * tm1;
}

void corrupt(ActionRule& rule) {
  if (rule.terms.empty())
    rule.add_term(0, ip(1));
  else
    rule.terms[0].coeff += ip(1);
}

struct Runner {
  const CheckOptions& opts;
  std::vector<CheckResult> results;

  void check(const std::string& id, const std::function<std::string()>& fn) {
    CheckResult r;
    r.id = id;
    try {
      r.detail = fn();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }

  std::vector<Rational> etas_for(Family f) const {
    if (f == Family::WhittakerOpen) return opts.etas;
    return {Rational(0)};
  }

  // ---- criterion 1: chart operator derivation --------------------------------

  std::string derive_golden() {
    struct Row {
      Letter l;
      Chart c;
      const char* expect;
    };
    const Row rows[] = {
        {Letter::E, Chart::Zero, "z^2*d - (t-1)*z"},
        {Letter::F, Chart::Zero, "-d"},
        {Letter::H, Chart::Zero, "2*z*d - (t-1)"},
        {Letter::E, Chart::Infinity, "-d"},
        {Letter::F, Chart::Infinity, "w^2*d - (t-1)*w"},
        {Letter::H, Chart::Infinity, "-2*w*d + (t-1)"},
    };
    for (const auto& row : rows) {
      WeylOp<IndexPoly> got =
          derive_chart_operator<IndexPoly>(letter_matrix(row.l), row.c, T);
      if (opts.inject_fault == "derive.golden")
        got += WeylOp<IndexPoly>::one(row.c);
      WeylOp<IndexPoly> want = parse_weyl(row.expect, row.c);
      if (!(got == want))
        return std::string("derived ") + letter_name(row.l) + " on " +
               chart_name(row.c) + " as " + render(got) + ", chart formula is " +
               row.expect;
    }
    return {};
  }

  // ---- criterion 2: gluing ----------------------------------------------------

  std::string glue_beta() {
    for (Letter l : {Letter::E, Letter::F, Letter::H}) {
      auto sym = glue_check(beta<IndexPoly>(LieWord::letter(l), T));
      if (!sym.ok)
        return std::string("symbolic t: ") + letter_name(l) + ": " + sym.describe();
      for (long t : opts.ts) {
        auto rep = glue_check(beta<Rational>(LieWord::letter(l), Rational(t)));
        if (!rep.ok)
          return std::string(1, letter_name(l)) + " at t=" + std::to_string(t) + ": " +
                 rep.describe();
      }
    }
    return {};
  }

  // ---- criterion 3: sl(2) relations -------------------------------------------

  std::string sl2_relations() {
    for (Chart c : {Chart::Zero, Chart::Infinity}) {
      auto op = [&](Letter l) {
        return derive_chart_operator<IndexPoly>(letter_matrix(l), c, T);
      };
      WeylOp<IndexPoly> e = op(Letter::E), f = op(Letter::F), h = op(Letter::H);
      if (!(weyl_commutator(e, f) == h))
        return "[E,F] != H on " + chart_name(c);
      if (!(weyl_commutator(h, e) == e.scaled(ip(2))))
        return "[H,E] != 2E on " + chart_name(c);
      if (!(weyl_commutator(h, f) == f.scaled(ip(-2))))
        return "[H,F] != -2F on " + chart_name(c);
    }
    return {};
  }

  std::string psi_conjugation() {
    for (long t : opts.ts) {
      TwistParam<Rational> tp{Rational(t)};
      const int n = static_cast<int>(t) - 1;
      std::vector<WeylOp<Rational>> samples = {
          WeylOp<Rational>::del(Chart::Zero),
          WeylOp<Rational>::coordinate(Chart::Zero) * WeylOp<Rational>::del(Chart::Zero),
          WeylOp<Rational>::del(Chart::Zero).pow(2),
          WeylOp<Rational>::monomial(Chart::Zero, 2, 1, Rational(1)) -
              WeylOp<Rational>::monomial(Chart::Zero, 1, 0, Rational(t - 1)),
      };
      for (const auto& a : samples) {
        if (!(twist_psi(a, tp) == conjugate_by_power(a, n)))
          return "psi != z^{t-1} (.) z^{-(t-1)} at t=" + std::to_string(t) + " on " +
                 render(a);
      }
    }
    return {};
  }

  // ---- criterion 4: Casimir -----------------------------------------------------

  std::string casimir_operator() {
    IndexPoly sym = casimir_scalar_identity<IndexPoly>(T);
    IndexPoly want = (T - ip(1)) * (T - ip(1)) + ip(2) * (T - ip(1));
    if (!(sym == want))
      return "beta(Omega) at symbolic t is " + sym.to_string() + ", expected " +
             want.to_string();
    for (long t : opts.ts) {
      Rational got = casimir_scalar_identity<Rational>(Rational(t));
      if (!(got == casimir_value(Rational(t))))
        return "beta(Omega) at t=" + std::to_string(t) + " is " + got.to_string();
    }
    return {};
  }

  std::string sl2_modules() {
    // the commutation relations at the element level, across every window
    // index including the domain boundaries where the quotient relations act
    for (Family f :
         {Family::FiniteO, Family::VermaPoint, Family::DualVermaOpen,
          Family::DeltaInfinity, Family::PrincipalEven, Family::PrincipalOdd,
          Family::WhittakerOpen}) {
      for (long t : opts.ts) {
        for (const Rational& eta : etas_for(f)) {
          Sl2Module M = global_module(f, Rational(t), eta);
          for (long k : M.domain.window_slice(opts.window)) {
            Element v = M.basis_element(k);
            auto act2 = [&](Letter a, Letter b) { return M.act(a, M.act(b, v)); };
            Element ef = act2(Letter::E, Letter::F) - act2(Letter::F, Letter::E);
            if (!(ef == M.act(Letter::H, v)))
              return M.id().to_string() + ": [E,F] != H at k=" + std::to_string(k);
            Element he = act2(Letter::H, Letter::E) - act2(Letter::E, Letter::H);
            if (!(he == M.act(Letter::E, v).scaled(Rational(2))))
              return M.id().to_string() + ": [H,E] != 2E at k=" + std::to_string(k);
            Element hf = act2(Letter::H, Letter::F) - act2(Letter::F, Letter::H);
            if (!(hf == M.act(Letter::F, v).scaled(Rational(-2))))
              return M.id().to_string() + ": [H,F] != -2F at k=" + std::to_string(k);
          }
        }
      }
    }
    return {};
  }

  std::string casimir_modules() {
    for (Family f :
         {Family::FiniteO, Family::VermaPoint, Family::DualVermaOpen,
          Family::DeltaInfinity, Family::PrincipalEven, Family::PrincipalOdd,
          Family::WhittakerOpen}) {
      for (long t : opts.ts) {
        for (const Rational& eta : etas_for(f)) {
          Sl2Module M = global_module(f, Rational(t), eta);
          Rational got = casimir_scalar(M, opts.window);
          if (!(got == casimir_value(Rational(t))))
            return family_name(f) + " t=" + std::to_string(t) + " eta=" +
                   eta.to_string() + ": Casimir " + got.to_string() + " != " +
                   casimir_value(Rational(t)).to_string();
        }
      }
    }
    return {};
  }

  // ---- criterion 5: Borel-Weil --------------------------------------------------

  std::string borel_weil_dims() {
    for (long n = 0; n <= 6; ++n)
      if (borel_weil_dim(n) != n + 1)
        return "dim at n=" + std::to_string(n) + " is " +
               std::to_string(borel_weil_dim(n));
    for (long n = -3; n <= -1; ++n)
      if (borel_weil_dim(n) != 0)
        return "dim at n=" + std::to_string(n) + " is " +
               std::to_string(borel_weil_dim(n));
    return {};
  }

  std::string finite_module() {
    for (long t : opts.ts) {
      Sl2Module M = global_module(Family::FiniteO, Rational(t), Rational(0));
      if (M.domain.hi - M.domain.lo + 1 != t)
        return "t=" + std::to_string(t) + ": dimension is not t";
      for (long k = 0; k < t; ++k)
        if (!(weight_of(M, k) == Rational(t - 1 - 2 * k)))
          return "t=" + std::to_string(t) + ": weight at k=" + std::to_string(k) +
                 " is " + weight_of(M, k).to_string();
      if (!M.act(Letter::E, M.basis_element(0)).is_zero())
        return "t=" + std::to_string(t) + ": E does not kill u_0";
      if (!M.act(Letter::F, M.basis_element(t - 1)).is_zero())
        return "t=" + std::to_string(t) + ": F does not kill u_{t-1}";
      auto hw = highest_weight_vectors(M, opts.window);
      if (hw.size() != 1 || !(hw[0] == M.basis_element(0)))
        return "t=" + std::to_string(t) + ": highest-weight scan is not {u_0}";
      auto cert = irreducibility_certificate(M, opts.window);
      if (!cert.irreducible() || !cert.window_stable)
        return "t=" + std::to_string(t) + ": " + cert.describe();
    }
    return {};
  }

  // ---- golden action tables -------------------------------------------------------

  std::string table_check(const std::string& id, Family f, Chart c, Letter l,
                          const ActionRule& expected) {
    ActionRule got = action_table(f, c, l);
    if (opts.inject_fault == id) corrupt(got);
    if (got != expected)
      return "computed {" + got.to_string() + "}, closed form is {" +
             expected.to_string() + "}";
    return {};
  }

  void all_tables() {
    const IndexPoly tm1 = T - ip(1);
    struct Entry {
      const char* id;
      Family f;
      Chart c;
      Letter l;
      ActionRule rule;
    };
    const std::vector<Entry> entries = {
        // finite module, w chart
        {"table.FiniteO.chartinf.E", Family::FiniteO, Chart::Infinity, Letter::E,
         rule1(-1, K)},
        {"table.FiniteO.chartinf.F", Family::FiniteO, Chart::Infinity, Letter::F,
         rule1(+1, tm1 - K)},
        {"table.FiniteO.chartinf.H", Family::FiniteO, Chart::Infinity, Letter::H,
         rule1(0, tm1 - ip(2) * K)},
        // delta module at 0
        {"table.VermaPoint.chart0.E", Family::VermaPoint, Chart::Zero, Letter::E,
         rule1(-1, ip(0) - T - K)},
        {"table.VermaPoint.chart0.F", Family::VermaPoint, Chart::Zero, Letter::F,
         rule1(+1, K + ip(1))},
        {"table.VermaPoint.chart0.H", Family::VermaPoint, Chart::Zero, Letter::H,
         rule1(0, ip(0) - T - ip(1) - ip(2) * K)},
        // dual Verma, both charts
        {"table.DualVermaOpen.chartinf.E", Family::DualVermaOpen, Chart::Infinity,
         Letter::E, rule1(-1, K)},
        {"table.DualVermaOpen.chartinf.F", Family::DualVermaOpen, Chart::Infinity,
         Letter::F, rule1(+1, tm1 - K)},
        {"table.DualVermaOpen.chartinf.H", Family::DualVermaOpen, Chart::Infinity,
         Letter::H, rule1(0, tm1 - ip(2) * K)},
        {"table.DualVermaOpen.chart0.E", Family::DualVermaOpen, Chart::Zero, Letter::E,
         rule1(-1, tm1 + K)},
        {"table.DualVermaOpen.chart0.F", Family::DualVermaOpen, Chart::Zero, Letter::F,
         rule1(+1, ip(0) - K)},
        {"table.DualVermaOpen.chart0.H", Family::DualVermaOpen, Chart::Zero, Letter::H,
         rule1(0, ip(0) - tm1 - ip(2) * K)},
        // delta module at infinity
        {"table.DeltaInfinity.chartinf.E", Family::DeltaInfinity, Chart::Infinity,
         Letter::E, rule1(+1, K + ip(1))},
        {"table.DeltaInfinity.chartinf.F", Family::DeltaInfinity, Chart::Infinity,
         Letter::F, rule1(-1, ip(0) - T - K)},
        {"table.DeltaInfinity.chartinf.H", Family::DeltaInfinity, Chart::Infinity,
         Letter::H, rule1(0, T + ip(1) + ip(2) * K)},
        // trivial principal series, both charts
        {"table.PrincipalEven.chartinf.E", Family::PrincipalEven, Chart::Infinity,
         Letter::E, rule1(-1, K)},
        {"table.PrincipalEven.chartinf.F", Family::PrincipalEven, Chart::Infinity,
         Letter::F, rule1(+1, tm1 - K)},
        {"table.PrincipalEven.chartinf.H", Family::PrincipalEven, Chart::Infinity,
         Letter::H, rule1(0, tm1 - ip(2) * K)},
        {"table.PrincipalEven.chart0.E", Family::PrincipalEven, Chart::Zero, Letter::E,
         rule1(-1, tm1 + K)},
        {"table.PrincipalEven.chart0.F", Family::PrincipalEven, Chart::Zero, Letter::F,
         rule1(+1, ip(0) - K)},
        {"table.PrincipalEven.chart0.H", Family::PrincipalEven, Chart::Zero, Letter::H,
         rule1(0, ip(0) - tm1 - ip(2) * K)},
        // half-twist principal series; the chart-infinity F value is handled
        // by the erratum check
        {"table.PrincipalOdd.chart0.E", Family::PrincipalOdd, Chart::Zero, Letter::E,
         rule1(+1, ip(0) - T + iph(3, 2) + K)},
        {"table.PrincipalOdd.chart0.F", Family::PrincipalOdd, Chart::Zero, Letter::F,
         rule1(-1, ip(0) - K - iph(1, 2))},
        {"table.PrincipalOdd.chart0.H", Family::PrincipalOdd, Chart::Zero, Letter::H,
         rule1(0, ip(0) - T + ip(2) + ip(2) * K)},
        {"table.PrincipalOdd.chartinf.E", Family::PrincipalOdd, Chart::Infinity,
         Letter::E, rule1(+1, K + iph(1, 2))},
        {"table.PrincipalOdd.chartinf.H", Family::PrincipalOdd, Chart::Infinity,
         Letter::H, rule1(0, ip(2) * K + T)},
        // Whittaker, both charts
        {"table.WhittakerOpen.chartinf.E", Family::WhittakerOpen, Chart::Infinity,
         Letter::E, rule2(-1, K, 0, ETA)},
        {"table.WhittakerOpen.chartinf.F", Family::WhittakerOpen, Chart::Infinity,
         Letter::F, rule2(+1, tm1 - K, +2, ip(0) - ETA)},
        {"table.WhittakerOpen.chartinf.H", Family::WhittakerOpen, Chart::Infinity,
         Letter::H, rule2(0, tm1 - ip(2) * K, +1, ip(0) - ip(2) * ETA)},
        {"table.WhittakerOpen.chart0.E", Family::WhittakerOpen, Chart::Zero, Letter::E,
         rule2(-1, tm1 + K, 0, ETA)},
        {"table.WhittakerOpen.chart0.F", Family::WhittakerOpen, Chart::Zero, Letter::F,
         rule2(+1, ip(0) - K, +2, ip(0) - ETA)},
        {"table.WhittakerOpen.chart0.H", Family::WhittakerOpen, Chart::Zero, Letter::H,
         rule2(0, ip(0) - tm1 - ip(2) * K, +1, ip(0) - ip(2) * ETA)},
    };
    for (const auto& e : entries)
      check(e.id, [&] { return table_check(e.id, e.f, e.c, e.l, e.rule); });
  }

  // ---- criterion 6: Verma structure ------------------------------------------------

  std::string verma_structure() {
    for (long t : opts.ts) {
      Sl2Module M = global_module(Family::VermaPoint, Rational(t), Rational(0));
      auto hw = highest_weight_vectors(M, opts.window);
      if (hw.size() != 1 || !(hw[0] == M.basis_element(0)))
        return "t=" + std::to_string(t) + ": highest-weight scan is not {m_0}";
      if (!(weight_of(M, 0) == Rational(-t - 1)))
        return "t=" + std::to_string(t) + ": highest weight is " +
               weight_of(M, 0).to_string() + ", expected " +
               Rational(-t - 1).to_string();
      auto cert = irreducibility_certificate(M, opts.window);
      if (cert.kind != Certificate::Kind::IrreducibleWeight || !cert.window_stable)
        return "t=" + std::to_string(t) + ": " + cert.describe();
    }
    return {};
  }

  // ---- criterion 7: dual Verma -------------------------------------------------------

  std::string dual_verma_submodule() {
    for (long t : opts.ts) {
      CompositionReport rep =
          composition_report(Family::DualVermaOpen, Rational(t), opts.window);
      if (!rep.sub_invariant || !rep.sub_irreducible ||
          rep.sub_indices.size() != static_cast<size_t>(t))
        return "t=" + std::to_string(t) + ": " + rep.describe();
      for (long k = 0; k < t; ++k)
        if (!(rep.sub_weights[k] == Rational(t - 1 - 2 * k)))
          return "t=" + std::to_string(t) + ": submodule weight at k=" +
                 std::to_string(k) + " is " + rep.sub_weights[k].to_string();
      if (!rep.quotient_highest || rep.quotient_highest->index != t ||
          !(rep.quotient_highest->weight == Rational(-t - 1)))
        return "t=" + std::to_string(t) + ": quotient is not highest-weight -t-1";
      Sl2Module M = global_module(Family::DualVermaOpen, Rational(t), Rational(0));
      auto cert = irreducibility_certificate(M, opts.window);
      std::vector<long> expect;
      for (long k = 0; k < t; ++k) expect.push_back(k);
      if (cert.kind != Certificate::Kind::Reducible || cert.witness != expect)
        return "t=" + std::to_string(t) + ": certificate " + cert.describe();
    }
    return {};
  }

  // ---- criterion 8: discrete series ----------------------------------------------------

  std::string discrete_structure() {
    for (long t : opts.ts) {
      Sl2Module D = global_module(Family::DeltaInfinity, Rational(t), Rational(0));
      auto lw = lowest_weight_vectors(D, opts.window);
      if (lw.size() != 1 || !(lw[0] == D.basis_element(0)))
        return "t=" + std::to_string(t) + ": lowest-weight scan is not {d_0}";
      if (!(weight_of(D, 0) == Rational(t + 1)))
        return "t=" + std::to_string(t) + ": lowest weight is " +
               weight_of(D, 0).to_string();
      auto cd = irreducibility_certificate(D, opts.window);
      if (!cd.irreducible() || !cd.window_stable)
        return "t=" + std::to_string(t) + " (infinity orbit): " + cd.describe();
      Sl2Module V = global_module(Family::VermaPoint, Rational(t), Rational(0));
      auto cv = irreducibility_certificate(V, opts.window);
      if (!cv.irreducible() || !cv.window_stable)
        return "t=" + std::to_string(t) + " (zero orbit): " + cv.describe();
    }
    return {};
  }

  // ---- criterion 9: principal series ----------------------------------------------------

  std::string principal_composition() {
    for (long t : opts.ts) {
      CompositionReport rep =
          composition_report(Family::PrincipalEven, Rational(t), opts.window);
      if (!rep.sub_invariant || !rep.sub_irreducible ||
          rep.sub_indices.size() != static_cast<size_t>(t) || !rep.split_verified)
        return "t=" + std::to_string(t) + ": " + rep.describe();
      if (!rep.quotient_lowest || rep.quotient_lowest->index != -1 ||
          !(rep.quotient_lowest->weight == Rational(t + 1)))
        return "t=" + std::to_string(t) + ": lowest-weight piece is wrong";
      if (!rep.quotient_highest || rep.quotient_highest->index != t ||
          !(rep.quotient_highest->weight == Rational(-t - 1)))
        return "t=" + std::to_string(t) + ": highest-weight piece is wrong";
      for (size_t i = 0; i < rep.quotient_lower_weights.size(); ++i)
        if (!(rep.quotient_lower_weights[i] == Rational(t + 1 + 2 * (long)i)))
          return "t=" + std::to_string(t) + ": lower quotient weights are not t+1, t+3, ...";
      for (size_t i = 0; i < rep.quotient_upper_weights.size(); ++i)
        if (!(rep.quotient_upper_weights[i] == Rational(-t - 1 - 2 * (long)i)))
          return "t=" + std::to_string(t) + ": upper quotient weights are not -t-1, -t-3, ...";
    }
    return {};
  }

  std::string principal_overlap() {
    for (long t : opts.ts) {
      OverlapReport rep =
          overlap_check(Family::PrincipalEven, Rational(t), Rational(0), opts.window);
      if (!rep.ok || rep.shift != -(t - 1))
        return "t=" + std::to_string(t) + ": " + rep.describe();
    }
    return {};
  }

  std::string principal_odd_irreducible() {
    for (long t : opts.ts) {
      Sl2Module M = global_module(Family::PrincipalOdd, Rational(t), Rational(0));
      auto cert = irreducibility_certificate(M, opts.window);
      if (cert.kind != Certificate::Kind::IrreducibleWeight || !cert.window_stable)
        return "t=" + std::to_string(t) + ": " + cert.describe();
    }
    return {};
  }

  std::string k_parity_dichotomy() {
    for (long t : opts.ts) {
      ParityReport even = k_weight_parity(Family::PrincipalEven, Rational(t));
      ParityReport odd = k_weight_parity(Family::PrincipalOdd, Rational(t));
      if (!even.single_parity || !odd.single_parity)
        return "t=" + std::to_string(t) + ": a family mixes parities";
      if (!even.distinct || !odd.distinct || even.parity == odd.parity)
        return "t=" + std::to_string(t) + ": parities do not distinguish the families";
      if (even.parity != static_cast<int>(((t - 1) % 2 + 2) % 2) ||
          odd.parity != static_cast<int>((t % 2 + 2) % 2))
        return "t=" + std::to_string(t) + ": parities are not those of t-1 and t";
    }
    return {};
  }

  // ---- criterion 10: erratum arbitration ---------------------------------------------------

  std::string erratum_arbitration() {
    const IndexPoly derived_coeff = ip(0) - T + iph(1, 2) - K;
    const IndexPoly printed_coeff = ip(0) - T - iph(1, 2) - K;
    ActionRule got = action_table(Family::PrincipalOdd, Chart::Infinity, Letter::F);
    if (opts.inject_fault == "erratum.arbitration") corrupt(got);
    if (got != rule1(-1, derived_coeff))
      return "derived chart-infinity F table is {" + got.to_string() + "}";

    ActionRule e = action_table(Family::PrincipalOdd, Chart::Infinity, Letter::E);
    ActionRule h = action_table(Family::PrincipalOdd, Chart::Infinity, Letter::H);
    if (e.commutator(got) != h)
      return "derived value does not satisfy [E,F] = H";
    ActionRule printed = rule1(-1, printed_coeff);
    ActionRule viol = e.commutator(printed) - h;
    if (viol.is_zero())
      return "printed value unexpectedly satisfies [E,F] = H";
    // the violation must be visible on the window at numeric parameters
    bool witnessed = false;
    for (long t : opts.ts) {
      ActionRule vn = viol.at(Rational(t), Rational(0));
      for (long k = -opts.window; k <= opts.window && !witnessed; ++k)
        for (const auto& term : vn.terms)
          if (!term.coeff.eval(Rational(k), Rational(0), Rational(0)).is_zero())
            witnessed = true;
    }
    if (!witnessed) return "printed-value violation not witnessed on the window";
    return {};
  }

  // ---- criterion 11: Whittaker --------------------------------------------------------------

  std::string whittaker_structure() {
    for (long t : opts.ts) {
      for (const Rational& eta : opts.etas) {
        if (eta.is_zero()) continue;
        Sl2Module M = global_module(Family::WhittakerOpen, Rational(t), eta);
        Element en0 = M.act(Letter::E, M.basis_element(0));
        if (!(en0 == M.basis_element(0).scaled(eta)))
          return "t=" + std::to_string(t) + " eta=" + eta.to_string() +
                 ": E n_0 != eta n_0";
        auto wv = whittaker_vectors(M, eta, opts.window);
        if (wv.size() != 1 || !(wv[0] == M.basis_element(0)))
          return "t=" + std::to_string(t) + " eta=" + eta.to_string() +
                 ": Whittaker solve is not span{n_0}";
        auto gen = submodule_generated(M, M.basis_element(0), opts.window);
        if (gen.basis.size() != static_cast<size_t>(opts.window + 1))
          return "t=" + std::to_string(t) + " eta=" + eta.to_string() +
                 ": n_0 does not generate the window";
        auto cert = irreducibility_certificate(M, opts.window);
        if (cert.kind != Certificate::Kind::IrreducibleWhittaker || !cert.window_stable)
          return "t=" + std::to_string(t) + " eta=" + eta.to_string() + ": " +
                 cert.describe();
      }
    }
    return {};
  }

  std::string whittaker_eta_zero() {
    for (long t : opts.ts) {
      Sl2Module W = global_module(Family::WhittakerOpen, Rational(t), Rational(0));
      Sl2Module I = global_module(Family::DualVermaOpen, Rational(t), Rational(0));
      if (!W.same_action(I))
        return "t=" + std::to_string(t) + ": eta=0 module differs from DualVermaOpen";
      for (Chart c : {Chart::Zero, Chart::Infinity}) {
        BasisModule w = make_local(Family::WhittakerOpen, c, Rational(t), Rational(0));
        BasisModule i = make_local(Family::DualVermaOpen, c, Rational(t), Rational(0));
        if (w.coord_action.at(w.t, w.eta) != i.coord_action.at(i.t, i.eta) ||
            w.del_action.at(w.t, w.eta) != i.del_action.at(i.t, i.eta))
          return "t=" + std::to_string(t) + ": local rules differ at eta=0 on " +
                 chart_name(c);
      }
    }
    return {};
  }

  std::string whittaker_non_weight() {
    for (long t : opts.ts) {
      for (const Rational& eta : opts.etas) {
        if (eta.is_zero()) continue;
        Sl2Module M = global_module(Family::WhittakerOpen, Rational(t), eta);
        auto w = weights(M, opts.window);
        auto* nb = std::get_if<NotAWeightBasis>(&w);
        if (!nb || nb->witness_shift != 1)
          return "t=" + std::to_string(t) + " eta=" + eta.to_string() +
                 ": weights() did not report the raising H term";
        for (long win : {8L, opts.window}) {
          if (!h_eigenvectors(M, win).empty())
            return "t=" + std::to_string(t) + " eta=" + eta.to_string() +
                   ": nonzero H eigenvector at window " + std::to_string(win);
        }
      }
    }
    return {};
  }

  // ---- criterion 12: representation property --------------------------------------------------

  std::string representation_property() {
    for (Family f :
         {Family::FiniteO, Family::VermaPoint, Family::DualVermaOpen,
          Family::DeltaInfinity, Family::PrincipalEven, Family::PrincipalOdd,
          Family::WhittakerOpen}) {
      for (Chart c : {Chart::Zero, Chart::Infinity}) {
        if (!family_has_chart(f, c)) continue;
        for (long t : opts.ts) {
          for (const Rational& eta : etas_for(f)) {
            BasisModule m = make_local(f, c, Rational(t), eta);
            for (long k : m.domain.window_slice(opts.window)) {
              Element b = m.basis_element(k);
              Element lhs = m.apply_del(m.apply_coord(b)) - m.apply_coord(m.apply_del(b));
              if (!(lhs == b))
                return m.id().to_string() + ": [d, coord] != 1 at k=" +
                       std::to_string(k);
            }
          }
        }
      }
    }
    return {};
  }

  // ---- further invariants ------------------------------------------------------------------

  std::string support_closure() {
    for (long t : opts.ts) {
      const Rational tr(t);
      BasisModule verma = make_local(Family::VermaPoint, Chart::Zero, tr, Rational(0));
      if (!act_lie(verma, Letter::E, verma.basis_element(0)).is_zero())
        return "t=" + std::to_string(t) + ": E m_0 != 0";
      BasisModule delta =
          make_local(Family::DeltaInfinity, Chart::Infinity, tr, Rational(0));
      if (!act_lie(delta, Letter::F, delta.basis_element(0)).is_zero())
        return "t=" + std::to_string(t) + ": F d_0 != 0";
      // on the function modules the lowering coefficients vanish exactly at
      // the boundary, so nothing ever escapes below index 0
      for (Family f : {Family::FiniteO, Family::DualVermaOpen, Family::WhittakerOpen}) {
        for (const Rational& eta : etas_for(f)) {
          BasisModule m = make_local(f, Chart::Infinity, tr, eta);
          for (long k = 0; k <= 2; ++k)
            for (Letter x : {Letter::E, Letter::F, Letter::H}) {
              Element img = act_lie(m, x, m.basis_element(k));  // Exact boundary throws on escape
              if (!img.is_zero() && img.min_index() < 0)
                return family_name(f) + ": image below index 0";
            }
        }
      }
    }
    return {};
  }

  std::string overlap_all() {
    for (Family f : {Family::FiniteO, Family::DualVermaOpen, Family::PrincipalEven,
                     Family::PrincipalOdd, Family::WhittakerOpen}) {
      for (long t : opts.ts) {
        for (const Rational& eta : etas_for(f)) {
          OverlapReport rep = overlap_check(f, Rational(t), eta, opts.window);
          if (!rep.ok) return rep.describe();
        }
      }
    }
    return {};
  }

  std::string singular_boundary() {
    // t = 0: the constructions still satisfy every relation invariant
    for (Family f : {Family::VermaPoint, Family::DeltaInfinity}) {
      Chart c = f == Family::VermaPoint ? Chart::Zero : Chart::Infinity;
      BasisModule m = make_local(f, c, Rational(0), Rational(0), Gate::SingularTestOnly);
      for (long k = 0; k <= 12; ++k) {
        Element b = m.basis_element(k);
        if (!(m.apply_del(m.apply_coord(b)) - m.apply_coord(m.apply_del(b)) == b))
          return family_name(f) + " t=0: [d, coord] != 1 at k=" + std::to_string(k);
        Element lhs = act_lie(m, Letter::E, act_lie(m, Letter::F, b)) -
                      act_lie(m, Letter::F, act_lie(m, Letter::E, b));
        if (!(lhs == act_lie(m, Letter::H, b)))
          return family_name(f) + " t=0: [E,F] != H at k=" + std::to_string(k);
        Element omega = act_lie(m, Letter::H, act_lie(m, Letter::H, b)) +
                        act_lie(m, Letter::E, act_lie(m, Letter::F, b)).scaled(Rational(2)) +
                        act_lie(m, Letter::F, act_lie(m, Letter::E, b)).scaled(Rational(2));
        if (!(omega == b.scaled(casimir_value(Rational(0)))))
          return family_name(f) + " t=0: Casimir is not -1 at k=" + std::to_string(k);
      }
    }
    return {};
  }

  std::string determinism_emission() {
    // module diagrams: byte-identical double emission + parse round-trip
    struct Cfg {
      Family f;
      long t;
      Rational eta;
      std::optional<Chart> chart;
    };
    const std::vector<Cfg> cfgs = {
        {Family::VermaPoint, 2, Rational(0), std::nullopt},
        {Family::WhittakerOpen, 2, Rational(1), std::nullopt},
        {Family::WhittakerOpen, 3, Rational(3, 2), Chart::Zero},
        {Family::FiniteO, 3, Rational(0), Chart::Zero},
        {Family::PrincipalOdd, 3, Rational(0), std::nullopt},
        {Family::PrincipalEven, 1, Rational(0), Chart::Infinity},
    };
    for (const auto& cfg : cfgs) {
      auto make = [&] {
        if (cfg.chart)
          return diagram_of_local(make_local(cfg.f, *cfg.chart, Rational(cfg.t), cfg.eta),
                                  10);
        return diagram_of_global(global_module(cfg.f, Rational(cfg.t), cfg.eta), 10);
      };
      DiagramDoc doc = make();
      DiagramDoc again = make();
      if (diagram_to_json(doc) != diagram_to_json(again) ||
          diagram_to_dot(doc) != diagram_to_dot(again))
        return family_name(cfg.f) + ": emission is not byte-deterministic";
      if (!(diagram_from_json(diagram_to_json(doc)) == doc))
        return family_name(cfg.f) + ": JSON round-trip changed the document";
    }
    // derive tables
    for (long t : opts.ts) {
      DeriveDoc doc = derive_doc(t);
      if (derive_doc_to_json(doc) != derive_doc_to_json(derive_doc(t)))
        return "derive t=" + std::to_string(t) + ": emission is not deterministic";
      if (!(derive_doc_from_json(derive_doc_to_json(doc)) == doc))
        return "derive t=" + std::to_string(t) + ": JSON round-trip changed the table";
      if (!derive_doc_roundtrip_ok(doc))
        return "derive t=" + std::to_string(t) + ": operator grammar round-trip failed";
    }
    return {};
  }
};

}  // namespace

std::vector<CheckResult> run_all(const CheckOptions& opts) {
  Runner r{opts, {}};
  r.check("derive.golden", [&] { return r.derive_golden(); });
  r.check("glue.beta", [&] { return r.glue_beta(); });
  r.check("weyl.sl2_relations", [&] { return r.sl2_relations(); });
  r.check("weyl.psi_conjugation", [&] { return r.psi_conjugation(); });
  r.check("casimir.operator", [&] { return r.casimir_operator(); });
  r.check("sl2.modules", [&] { return r.sl2_modules(); });
  r.check("casimir.modules", [&] { return r.casimir_modules(); });
  r.check("borel_weil.dims", [&] { return r.borel_weil_dims(); });
  r.check("finite.module", [&] { return r.finite_module(); });
  r.all_tables();
  r.check("erratum.arbitration", [&] { return r.erratum_arbitration(); });
  r.check("verma.structure", [&] { return r.verma_structure(); });
  r.check("dual_verma.submodule", [&] { return r.dual_verma_submodule(); });
  r.check("discrete.structure", [&] { return r.discrete_structure(); });
  r.check("principal.composition", [&] { return r.principal_composition(); });
  r.check("principal.overlap", [&] { return r.principal_overlap(); });
  r.check("principal_odd.irreducible", [&] { return r.principal_odd_irreducible(); });
  r.check("k_parity.dichotomy", [&] { return r.k_parity_dichotomy(); });
  r.check("whittaker.structure", [&] { return r.whittaker_structure(); });
  r.check("whittaker.eta_zero", [&] { return r.whittaker_eta_zero(); });
  r.check("whittaker.non_weight", [&] { return r.whittaker_non_weight(); });
  r.check("representation.property", [&] { return r.representation_property(); });
  r.check("support.closure", [&] { return r.support_closure(); });
  r.check("overlap.all", [&] { return r.overlap_all(); });
  r.check("singular.boundary", [&] { return r.singular_boundary(); });
  r.check("determinism.emission", [&] { return r.determinism_emission(); });
  return r.results;
}

namespace {

struct Criterion {
  std::string label;
  std::vector<std::string> ids;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {"chart operator derivation matches the six formulas at symbolic t",
       {"derive.golden"}},
      {"gluing through psi holds for beta(E), beta(F), beta(H)", {"glue.beta"}},
      {"sl(2) commutation relations hold as exact operator identities",
       {"weyl.sl2_relations"}},
      {"Casimir is the constant (t-1)^2 + 2(t-1), as an operator and on every module",
       {"casimir.operator", "casimir.modules"}},
      {"section-pair dimension count and the finite module structure",
       {"borel_weil.dims", "finite.module"}},
      {"Verma tables, irreducibility, and highest weight -t-1",
       {"table.VermaPoint.chart0.E", "table.VermaPoint.chart0.F",
        "table.VermaPoint.chart0.H", "verma.structure"}},
      {"dual Verma t-dimensional submodule and quotient",
       {"dual_verma.submodule"}},
      {"discrete-series tables, lowest weight t+1, irreducibility",
       {"table.DeltaInfinity.chartinf.E", "table.DeltaInfinity.chartinf.F",
        "table.DeltaInfinity.chartinf.H", "discrete.structure"}},
      {"principal-series composition, intertwiner, and parity dichotomy",
       {"principal.composition", "principal.overlap", "principal_odd.irreducible",
        "k_parity.dichotomy"}},
      {"erratum arbitration through [E,F] = H", {"erratum.arbitration"}},
      {"Whittaker tables, vectors, irreducibility, and the eta = 0 degeneration",
       {"table.WhittakerOpen.chartinf.E", "table.WhittakerOpen.chartinf.F",
        "table.WhittakerOpen.chartinf.H", "table.WhittakerOpen.chart0.E",
        "table.WhittakerOpen.chart0.F", "table.WhittakerOpen.chart0.H",
        "whittaker.structure", "whittaker.eta_zero", "whittaker.non_weight"}},
      {"[d, coord] = identity on every module cell", {"representation.property"}},
      {"deterministic emission and round-trip", {"determinism.emission"}},
  };
  return c;
}

}  // namespace

int criteria_count() { return static_cast<int>(criteria().size()); }

std::string criterion_label(int criterion) {
  return criteria().at(static_cast<size_t>(criterion - 1)).label;
}

std::vector<std::string> criterion_check_ids(int criterion) {
  return criteria().at(static_cast<size_t>(criterion - 1)).ids;
}

std::string summary_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  size_t passed = 0;
  for (const auto& r : results) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id;
    if (!r.pass) os << ": " << r.detail;
    os << "\n";
    if (r.pass) ++passed;
  }
  os << passed << "/" << results.size() << " checks passed\n";
  return os.str();
}

std::string summary_json(const std::vector<CheckResult>& results) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["checks"] = nlohmann::json::array();
  size_t passed = 0;
  for (const auto& r : results) {
    j["checks"].push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    if (r.pass) ++passed;
  }
  j["passed"] = passed;
  j["total"] = results.size();
  return j.dump(2) + "\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace sl2loc::checks
