#pragma once

#include <string>

#include "pgc/decimal.hpp"
#include "pgc/rational.hpp"

namespace pgc {

// Closed interval with exact rational endpoints. All operations return
// the exact image hull; no rounding ever occurs. Values are immutable.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  explicit Interval(Rational v) : lo_(v), hi_(std::move(v)) {}
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
  bool is_degenerate() const { return lo_ == hi_; }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return contains(Rational(0)); }
  // Strict containment on both sides; used against the open two-sided
  // bounds quoted for every constant.
  bool strictly_inside(const Interval& outer) const {
    return outer.lo_ < lo_ && hi_ < outer.hi_;
  }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  static Interval hull(const Interval& a, const Interval& b) {
    return Interval(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
  }

  Interval operator-() const { return Interval(-hi_, -lo_); }
  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Interval operator*(const Interval& a, const Interval& b);
  // Throws DomainError if b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  // Exact image hull of x^e. Negative e requires an interval excluding zero.
  Interval pow(int e) const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

  std::string str() const { return "[" + lo_.str() + "," + hi_.str() + "]"; }

 private:
  Rational lo_;
  Rational hi_;
};

// Decimal rendering of an interval, rounded outward on the 10^-digits
// grid so the printed interval contains the exact one.
struct DecimalBounds {
  std::string lo;
  std::string hi;
  Rational lo_value;
  Rational hi_value;
  std::string text() const { return lo + " .. " + hi; }
};

DecimalBounds outward_round(const Interval& x, unsigned digits);

// Endpoints snapped outward to the 10^-digits grid (still exact
// rationals); used to keep certificate payloads small between stages.
Interval widen_to_grid(const Interval& x, unsigned digits);

}  // namespace pgc
