#include "pgc/interval.hpp"

#include <utility>

namespace pgc {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_)
    throw DomainError("interval endpoints out of order: [" + lo_.str() + "," + hi_.str() + "]");
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo_ * b.lo_;
  Rational p2 = a.lo_ * b.hi_;
  Rational p3 = a.hi_ * b.lo_;
  Rational p4 = a.hi_ * b.hi_;
  return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero())
    throw DomainError("division by interval containing zero: " + b.str());
  Interval reciprocal(b.hi_.reciprocal(), b.lo_.reciprocal());
  return a * reciprocal;
}

Interval Interval::pow(int e) const {
  if (e == 0) return Interval(Rational(1));
  if (e < 0) {
    if (contains_zero())
      throw DomainError("negative power of interval containing zero: " + str());
    Interval p = pow(-e);
    return Interval(p.hi_.reciprocal(), p.lo_.reciprocal());
  }
  Rational plo = lo_.pow(e);
  Rational phi = hi_.pow(e);
  if (e % 2 == 1) return Interval(plo, phi);
  if (lo_.sign() >= 0) return Interval(plo, phi);
  if (hi_.sign() <= 0) return Interval(phi, plo);
  return Interval(Rational(0), max(plo, phi));  // even power, zero interior
}

DecimalBounds outward_round(const Interval& x, unsigned digits) {
  Rational lo = decimal_floor(x.lo(), digits);
  Rational hi = decimal_ceil(x.hi(), digits);
  return DecimalBounds{to_decimal_string(lo, digits), to_decimal_string(hi, digits), lo, hi};
}

Interval widen_to_grid(const Interval& x, unsigned digits) {
  return Interval(decimal_floor(x.lo(), digits), decimal_ceil(x.hi(), digits));
}

}  // namespace pgc
