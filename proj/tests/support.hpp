#pragma once

// Shared helpers for the unit and acceptance suites: deterministic
// random rational generators and the property runners used by both.

#include <random>
#include <vector>

#include "pgc/interval.hpp"

namespace pgc::testsupport {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine_);
  }

  Rational rational(long long max_abs_num = 1000000, long long max_den = 1000000) {
    return Rational(Int(integer(-max_abs_num, max_abs_num)), Int(integer(1, max_den)));
  }

  // Uniform grid point strictly inside [lo, hi].
  Rational point_in(const Interval& x, long long grid = 1 << 20) {
    long long k = integer(1, grid - 1);
    return x.lo() + x.width() * Rational(Int(k), Int(grid));
  }

  Interval interval(long long max_abs_num = 1000, long long max_den = 1000) {
    Rational a = rational(max_abs_num, max_den);
    Rational b = rational(max_abs_num, max_den);
    return a <= b ? Interval(a, b) : Interval(b, a);
  }

  // Returns (inner, outer) with inner contained in outer.
  std::pair<Interval, Interval> nested_intervals() {
    Interval outer = interval();
    Rational a = point_in(outer);
    Rational b = point_in(outer);
    if (b < a) std::swap(a, b);
    return {Interval(a, b), outer};
  }

  // Sign-definite interval bounded away from zero (for divisors).
  Interval nonzero_interval() {
    Interval x = interval();
    if (integer(0, 1)) {
      Rational offset = Rational(1) - x.lo();
      return Interval(x.lo() + offset, x.hi() + offset);
    }
    Rational offset = Rational(-1) - x.hi();
    return Interval(x.lo() + offset, x.hi() + offset);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pgc::testsupport
