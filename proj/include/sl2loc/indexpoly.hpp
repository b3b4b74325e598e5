#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sl2loc/rational.hpp"

namespace sl2loc {

/// Polynomial with Rational coefficients in the three formal symbols
///   k   — basis index
///   t   — twist parameter
///   eta — Whittaker parameter
/// stored as a map from exponent triples (e_k, e_t, e_eta) to nonzero
/// coefficients. The map ordering fixes a canonical monomial order.
class IndexPoly {
 public:
  using Monomial = std::array<int, 3>;  // exponents of (k, t, eta)

  IndexPoly() = default;
  IndexPoly(const Rational& c) { set(Monomial{0, 0, 0}, c); }  // implicit constant
  IndexPoly(long c) : IndexPoly(Rational(c)) {}

  static IndexPoly k() { return monomial({1, 0, 0}, Rational(1)); }
  static IndexPoly t() { return monomial({0, 1, 0}, Rational(1)); }
  static IndexPoly eta() { return monomial({0, 0, 1}, Rational(1)); }
  static IndexPoly from_int(long c) { return IndexPoly(c); }
  static IndexPoly from_rational(const Rational& c) { return IndexPoly(c); }

  static IndexPoly monomial(const Monomial& m, const Rational& c) {
    IndexPoly p;
    p.set(m, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0});
  }
  /// Constant term (the full value when is_constant()).
  Rational constant_value() const {
    auto it = terms_.find(Monomial{0, 0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  IndexPoly operator-() const {
    IndexPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  IndexPoly operator+(const IndexPoly& o) const {
    IndexPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.set(m, r.coeff(m) + c);
    return r;
  }
  IndexPoly operator-(const IndexPoly& o) const { return *this + (-o); }
  IndexPoly operator*(const IndexPoly& o) const {
    IndexPoly r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
        r.set(m, r.coeff(m) + ca * cb);
      }
    return r;
  }
  IndexPoly& operator+=(const IndexPoly& o) { return *this = *this + o; }
  IndexPoly& operator-=(const IndexPoly& o) { return *this = *this - o; }
  IndexPoly& operator*=(const IndexPoly& o) { return *this = *this * o; }

  IndexPoly scaled(const Rational& c) const {
    IndexPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
  }

  bool operator==(const IndexPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const IndexPoly& o) const { return !(*this == o); }

  /// Exact substitution of all three symbols.
  Rational eval(const Rational& k, const Rational& t, const Rational& eta) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_)
      acc += c * power(k, m[0]) * power(t, m[1]) * power(eta, m[2]);
    return acc;
  }

  /// Substitutes numeric t and eta, leaving a polynomial in k alone.
  IndexPoly eval_t_eta(const Rational& t, const Rational& eta) const {
    IndexPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial mk{m[0], 0, 0};
      r.set(mk, r.coeff(mk) + c * power(t, m[1]) * power(eta, m[2]));
    }
    return r;
  }

  /// Substitutes k -> k + s.
  IndexPoly shift_k(long s) const {
    IndexPoly kp = IndexPoly::k() + IndexPoly(Rational(s));
    IndexPoly r;
    for (const auto& [m, c] : terms_) {
      IndexPoly term = IndexPoly(c);
      for (int i = 0; i < m[0]; ++i) term *= kp;
      term *= monomial({0, m[1], m[2]}, Rational(1));
      r += term;
    }
    return r;
  }

  /// Sign of the leading monomial (under the canonical order); used by the
  /// renderer to pull a minus sign out front. Zero polynomial counts positive.
  bool leading_is_negative() const {
    if (terms_.empty()) return false;
    return terms_.rbegin()->second.is_negative();
  }

  /// Rendering in the fixed variable order (k, t, eta): monomials in
  /// descending canonical order, e.g. "-2*k-t-1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational a = c.abs();
      bool first = out.empty();
      if (!first) out += c.is_negative() ? "-" : "+";
      else if (c.is_negative()) out += "-";
      std::string factors;
      static const char* names[3] = {"k", "t", "eta"};
      for (int v = 0; v < 3; ++v) {
        if (m[v] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += names[v];
        if (m[v] != 1) factors += "^" + std::to_string(m[v]);
      }
      if (factors.empty()) {
        out += a.to_string();
      } else if (a.is_one()) {
        out += factors;
      } else {
        out += a.to_string() + "*" + factors;
      }
    }
    return out;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }

 private:
  void set(const Monomial& m, const Rational& c) {
    if (c.is_zero())
      terms_.erase(m);
    else
      terms_[m] = c;
  }
  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  static Rational power(const Rational& b, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

  std::map<Monomial, Rational> terms_;
};

inline IndexPoly operator*(const Rational& c, const IndexPoly& p) { return p.scaled(c); }
inline IndexPoly operator*(long c, const IndexPoly& p) { return p.scaled(Rational(c)); }

// --- scalar-ring trait hooks shared by Rational and IndexPoly -------------
//
// The weyl layer is templated on its coefficient ring so that the same
// operators can be computed with numeric entries or with entries symbolic
// in t (and eta). These small helpers are the entire interface it needs.

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational from_int(long n) { return Rational(n); }
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
  static bool leading_is_negative(const Rational& r) { return r.is_negative(); }
  static bool needs_parens(const Rational&) { return false; }
  static bool is_one_like(const Rational& r) { return r.is_one(); }
  static std::string to_string(const Rational& r) { return r.to_string(); }
};

template <>
struct ScalarTraits<IndexPoly> {
  static IndexPoly from_int(long n) { return IndexPoly(n); }
  static IndexPoly from_rational(const Rational& r) { return IndexPoly(r); }
  static bool is_zero(const IndexPoly& p) { return p.is_zero(); }
  static bool leading_is_negative(const IndexPoly& p) { return p.leading_is_negative(); }
  static bool needs_parens(const IndexPoly& p) { return !p.is_constant(); }
  static bool is_one_like(const IndexPoly& p) {
    return p.is_constant() && p.constant_value().is_one();
  }
  static std::string to_string(const IndexPoly& p) { return p.to_string(); }
};

}  // namespace sl2loc
