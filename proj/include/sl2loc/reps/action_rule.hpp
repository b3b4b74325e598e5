#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2loc/indexpoly.hpp"

namespace sl2loc::reps {

/// Index set of a basis-indexed module: k >= 0, all of Z, or the finite
/// range 0..t-1 (the global sections of O(t-1)).
struct IndexDomain {
  enum class Kind { NonNegative, AllIntegers, FiniteRange };
  Kind kind = Kind::NonNegative;
  long lo = 0, hi = 0;  // FiniteRange bounds, inclusive

  static IndexDomain non_negative() { return {Kind::NonNegative, 0, 0}; }
  static IndexDomain all_integers() { return {Kind::AllIntegers, 0, 0}; }
  static IndexDomain finite_range(long lo, long hi) {
    return {Kind::FiniteRange, lo, hi};
  }

  bool contains(long k) const {
    switch (kind) {
      case Kind::NonNegative: return k >= 0;
      case Kind::AllIntegers: return true;
      default: return lo <= k && k <= hi;
    }
  }

  /// Indices surveyed by window-bounded computations: the window slice of
  /// the domain.
  std::vector<long> window_slice(long window) const {
    std::vector<long> ks;
    long a = kind == Kind::AllIntegers ? -window : (kind == Kind::FiniteRange ? lo : 0);
    long b = kind == Kind::FiniteRange ? hi : window;
    for (long k = a; k <= b; ++k) ks.push_back(k);
    return ks;
  }

  bool operator==(const IndexDomain& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::FiniteRange) return lo == o.lo && hi == o.hi;
    return true;
  }
};

/// One generator's action on the basis: generator . b_k =
/// sum over terms of coeff(k, t, eta) * b_{k + shift}. Shifts are distinct
/// and coefficients are nonzero as polynomials.
struct ActionRule {
  struct Term {
    long shift;
    IndexPoly coeff;
  };
  std::vector<Term> terms;  // sorted by shift

  ActionRule() = default;
  explicit ActionRule(std::vector<Term> ts) {
    for (auto& term : ts) add_term(term.shift, term.coeff);
  }

  void add_term(long shift, const IndexPoly& coeff) {
    if (coeff.is_zero()) return;
    for (auto& term : terms) {
      if (term.shift == shift) {
        term.coeff += coeff;
        if (term.coeff.is_zero())
          terms.erase(terms.begin() + (&term - terms.data()));
        return;
      }
    }
    auto it = terms.begin();
    while (it != terms.end() && it->shift < shift) ++it;
    terms.insert(it, Term{shift, coeff});
  }

  bool is_zero() const { return terms.empty(); }

  /// Single diagonal term (a weight-basis action)?
  bool is_diagonal() const {
    return terms.empty() || (terms.size() == 1 && terms[0].shift == 0);
  }

  std::optional<IndexPoly> coeff_at(long shift) const {
    for (const auto& term : terms)
      if (term.shift == shift) return term.coeff;
    return std::nullopt;
  }

  /// Substitutes numeric t and eta; drops terms that evaluate to zero.
  ActionRule at(const Rational& t, const Rational& eta) const {
    ActionRule r;
    for (const auto& term : terms) r.add_term(term.shift, term.coeff.eval_t_eta(t, eta));
    return r;
  }

  ActionRule operator-() const {
    ActionRule r;
    for (const auto& term : terms) r.add_term(term.shift, -term.coeff);
    return r;
  }
  ActionRule operator+(const ActionRule& o) const {
    ActionRule r = *this;
    for (const auto& term : o.terms) r.add_term(term.shift, term.coeff);
    return r;
  }
  ActionRule operator-(const ActionRule& o) const { return *this + (-o); }
  ActionRule scaled(const IndexPoly& c) const {
    ActionRule r;
    for (const auto& term : terms) r.add_term(term.shift, term.coeff * c);
    return r;
  }

  /// Composition (this after other) as a symbolic rule:
  /// (R1 . R2) b_k = sum c2_j(k) * c1_i(k + s2_j) * b_{k + s2_j + s1_i}.
  /// Valid away from domain boundaries; boundary behavior is checked at
  /// the element level.
  ActionRule compose(const ActionRule& other) const {
    ActionRule r;
    for (const auto& t2 : other.terms)
      for (const auto& t1 : terms)
        r.add_term(t1.shift + t2.shift, t2.coeff * t1.coeff.shift_k(t2.shift));
    return r;
  }

  ActionRule commutator(const ActionRule& o) const {
    return compose(o) - o.compose(*this);
  }

  bool operator==(const ActionRule& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
      if (terms[i].shift != o.terms[i].shift || terms[i].coeff != o.terms[i].coeff)
        return false;
    return true;
  }
  bool operator!=(const ActionRule& o) const { return !(*this == o); }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& term : terms) {
      if (!out.empty()) out += ", ";
      out += "(" + std::to_string(term.shift) + ": " + term.coeff.to_string() + ")";
    }
    return out;
  }
};

/// Convenience builder: rule with a single term.
inline ActionRule single_rule(long shift, const IndexPoly& coeff) {
  ActionRule r;
  r.add_term(shift, coeff);
  return r;
}

}  // namespace sl2loc::reps
