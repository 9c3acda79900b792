#include "pgc/rational.hpp"

#include <utility>

namespace pgc {

Int pow10(unsigned k) {
  Int r = 1;
  Int base = 10;
  while (k) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return r;
}

Int factorial(unsigned k) {
  Int r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
  return q;
}

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw DomainError("reciprocal of zero");
  Rational r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_ < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Rational Rational::pow(int e) const {
  if (e == 0) return Rational(1);
  if (e < 0) return reciprocal().pow(-e);
  Rational r;
  r.num_ = boost::multiprecision::pow(num_, static_cast<unsigned>(e));
  r.den_ = boost::multiprecision::pow(den_, static_cast<unsigned>(e));
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

namespace {

bool canonical_int_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-') {
    if (s.size() == 1) return false;
    i = 1;
  }
  if (s[i] == '0' && s.size() > i + 1) return false;  // no leading zeros
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational Rational::from_str(std::string_view s) {
  std::size_t slash = s.find('/');
  std::string_view num_text = s.substr(0, slash);
  if (!canonical_int_text(num_text))
    throw ParseError("malformed rational '" + std::string(s) + "'", 0);
  Rational r;
  r.num_ = Int(std::string(num_text));
  if (slash == std::string_view::npos) {
    r.den_ = 1;
    return r;
  }
  std::string_view den_text = s.substr(slash + 1);
  if (!canonical_int_text(den_text) || den_text[0] == '-')
    throw ParseError("malformed rational '" + std::string(s) + "'", slash + 1);
  r.den_ = Int(std::string(den_text));
  if (r.den_ == 0) throw ParseError("zero denominator in '" + std::string(s) + "'", slash + 1);
  if (r.den_ == 1)
    throw ParseError("non-canonical rational '" + std::string(s) + "'", slash);
  if (gcd(r.num_ < 0 ? Int(-r.num_) : r.num_, r.den_) != 1)
    throw ParseError("non-canonical rational '" + std::string(s) + "'", 0);
  return r;
}

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace pgc
