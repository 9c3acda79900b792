#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "pgc/errors.hpp"

namespace pgc {

using Int = boost::multiprecision::cpp_int;

Int pow10(unsigned k);
Int factorial(unsigned k);

// Floor division (quotient rounded toward minus infinity). b > 0.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// Exact rational number, always kept canonical: denominator positive,
// gcd(|num|, den) == 1. Canonical form makes equality structural and
// keeps serialized certificates byte-stable.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  Rational reciprocal() const;

  // Binary exponentiation; num and den stay coprime, so no gcd is needed.
  Rational pow(int e) const;

  // Canonical rendering: "n" for integers, "n/d" otherwise.
  std::string str() const;

  // Inverse of str(). Rejects non-canonical forms ("4/8", "1/-2", "03").
  static Rational from_str(std::string_view s);

 private:
  void normalize();
  Int num_;
  Int den_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace pgc
