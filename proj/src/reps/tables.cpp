#include "sl2loc/reps/tables.hpp"

#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace sl2loc::reps {

namespace {

/// Lagrange interpolation in one symbol through (x_i, v_i), exact over Q.
IndexPoly lagrange(const IndexPoly& symbol, const std::vector<long>& xs,
                   const std::vector<IndexPoly>& vs) {
  IndexPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    IndexPoly basis(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= symbol - IndexPoly(Rational(xs[j]));
      denom *= Rational(xs[i] - xs[j]);
    }
    acc += basis * vs[i].scaled(Rational(1) / denom);
  }
  return acc;
}

using GridKey = std::tuple<long, long, long>;  // (k, t, eta)

std::map<long, Rational> sample_action(Family family, Chart chart, Letter x,
                                       long k, long t, long eta) {
  BasisModule m = make_local(family, chart, Rational(t), Rational(eta));
  Element image = act_lie(m, x, m.basis_element(k));
  std::map<long, Rational> by_shift;
  for (const auto& [idx, c] : image.parts) by_shift[idx - k] = c;
  return by_shift;
}

ActionRule derive_table(Family family, Chart chart, Letter x) {
  const bool uses_eta = family == Family::WhittakerOpen;
  const std::vector<long> k_fit = {3, 4, 5}, k_extra = {6, 7};
  const std::vector<long> t_fit = {1, 2, 3}, t_extra = {4, 5};
  const std::vector<long> e_fit = uses_eta ? std::vector<long>{0, 1, 2}
                                           : std::vector<long>{0};
  const std::vector<long> e_extra = uses_eta ? std::vector<long>{3}
                                             : std::vector<long>{};

  auto all_of = [](std::vector<long> a, const std::vector<long>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const std::vector<long> k_all = all_of(k_fit, k_extra);
  const std::vector<long> t_all = all_of(t_fit, t_extra);
  const std::vector<long> e_all = all_of(e_fit, e_extra);

  std::map<GridKey, std::map<long, Rational>> samples;
  std::set<long> shifts;
  for (long k : k_all)
    for (long t : t_all)
      for (long e : e_all) {
        auto s = sample_action(family, chart, x, k, t, e);
        for (const auto& [shift, c] : s) shifts.insert(shift);
        samples[{k, t, e}] = std::move(s);
      }

  auto value_at = [&](long shift, long k, long t, long e) {
    const auto& s = samples.at({k, t, e});
    auto it = s.find(shift);
    return it == s.end() ? Rational(0) : it->second;
  };

  // tensor-product Lagrange: first in k, then t, then eta
  ActionRule rule;
  for (long shift : shifts) {
    std::vector<IndexPoly> per_eta;
    for (long e : e_fit) {
      std::vector<IndexPoly> per_t;
      for (long t : t_fit) {
        std::vector<IndexPoly> vals;
        for (long k : k_fit) vals.push_back(IndexPoly(value_at(shift, k, t, e)));
        per_t.push_back(lagrange(IndexPoly::k(), k_fit, vals));
      }
      per_eta.push_back(lagrange(IndexPoly::t(), t_fit, per_t));
    }
    IndexPoly coeff = uses_eta ? lagrange(IndexPoly::eta(), e_fit, per_eta)
                               : per_eta[0];
    rule.add_term(shift, coeff);
  }

  // certify the fit on every sampled point, including the off-grid ones
  for (long k : k_all)
    for (long t : t_all)
      for (long e : e_all) {
        std::set<long> check = shifts;
        for (const auto& [shift, c] : samples.at({k, t, e})) check.insert(shift);
        for (long shift : check) {
          auto fitted = rule.coeff_at(shift);
          Rational predicted =
              fitted ? fitted->eval(Rational(k), Rational(t), Rational(e)) : Rational(0);
          if (predicted != value_at(shift, k, t, e))
            throw Error("action_table: interpolation not certified for " +
                        family_name(family) + "/" + chart_name(chart) + "/" +
                        letter_name(x) + " at k=" + std::to_string(k) +
                        ",t=" + std::to_string(t) + ",eta=" + std::to_string(e));
        }
      }
  return rule;
}

}  // namespace

ActionRule action_table(Family family, Chart chart, Letter x) {
  // the derivation is pure; memoize it for the sweep-style callers
  static std::mutex mu;
  static std::map<std::tuple<Family, Chart, Letter>, ActionRule> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({family, chart, x});
    if (it != cache.end()) return it->second;
  }
  ActionRule rule = derive_table(family, chart, x);
  std::lock_guard<std::mutex> lock(mu);
  cache[{family, chart, x}] = rule;
  return rule;
}

}  // namespace sl2loc::reps
