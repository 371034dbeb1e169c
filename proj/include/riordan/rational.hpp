#ifndef RIORDAN_RATIONAL_HPP
#define RIORDAN_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "riordan/errors.hpp"

namespace riordan {

using BigInt = mpz_class;

/// Exact integer k-th root of a non-negative (or, for odd k, any) integer.
/// Returns nothing when the root is irrational.
inline std::optional<BigInt> integer_kth_root(const BigInt& n, unsigned k) {
  if (k == 0) throw InvalidStepError("integer_kth_root: k must be >= 1");
  if (n == 0) return BigInt(0);
  if (n < 0 && k % 2 == 0) return std::nullopt;
  BigInt root;
  const int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), k);
  if (!exact) return std::nullopt;
  return root;
}

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. All arithmetic is exact.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design, enables literals
  explicit Rational(const BigInt& n) : value_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw NotAUnitError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p" or "p/q" (optionally signed).
  static Rational parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw Error("malformed rational: '" + text + "'");
    if (v.get_den() == 0) throw NotAUnitError("rational with zero denominator");
    v.canonicalize();
    Rational r;
    r.value_ = std::move(v);
    return r;
  }

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw NotAUnitError("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  Rational reciprocal() const {
    if (is_zero()) throw NotAUnitError("reciprocal of zero");
    return Rational(denominator(), numerator());
  }

  Rational pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), value_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), value_.get_den().get_mpz_t(), e);
    Rational out;
    out.value_ = std::move(r);  // powers of a canonical fraction stay canonical
    return out;
  }

  /// Exact rational k-th root; for even k the non-negative root.
  std::optional<Rational> kth_root(unsigned k) const {
    const auto num = integer_kth_root(numerator(), k);
    if (!num) return std::nullopt;
    const auto den = integer_kth_root(denominator(), k);
    if (!den) return std::nullopt;
    return Rational(*num, *den);
  }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const { return value_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.value_;
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;  // canonical at all times
};

}  // namespace riordan

#endif  // RIORDAN_RATIONAL_HPP
