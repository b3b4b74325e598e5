#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sl2loc {

/// Domain error for all algebra-layer failures (chart mismatches,
/// unsupported module requests, parse errors, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact arbitrary-precision rational. Always stored reduced with a
/// positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit: integer literals are rationals
  Rational(long num, long den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational from_int(long n) { return Rational(n); }

  /// Parses "p", "-p", or "p/q". Throws on malformed input.
  static Rational from_string(const std::string& s) {
    if (s.empty()) throw Error("Rational: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw Error("Rational: bad literal '" + s + "'");
    if (v.get_den() == 0) throw Error("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(v);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_negative() const { return v_ < 0; }

  /// Exact conversion to long; throws if not an integer or out of range.
  long to_long() const {
    if (!is_integer()) throw Error("Rational: " + to_string() + " is not an integer");
    if (!v_.get_num().fits_slong_p()) throw Error("Rational: out of long range");
    return v_.get_num().get_si();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  Rational abs() const { return is_negative() ? -*this : *this; }

  std::string numerator_string() const { return v_.get_num().get_str(); }
  std::string denominator_string() const { return v_.get_den().get_str(); }

  /// The exact nonnegative square root, when one exists in Q.
  std::optional<Rational> exact_sqrt() const {
    if (is_negative()) return std::nullopt;
    if (mpz_perfect_square_p(v_.get_num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(v_.get_den().get_mpz_t()) == 0) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(mpq_class(n, d));
  }

  /// Canonical rendering "p/q", with "/q" omitted when q = 1.
  std::string to_string() const {
    if (is_integer()) return numerator_string();
    return numerator_string() + "/" + denominator_string();
  }

 private:
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace sl2loc
