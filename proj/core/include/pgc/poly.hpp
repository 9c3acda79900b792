#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pgc/interval.hpp"
#include "pgc/rational.hpp"

namespace pgc {

// Dense univariate polynomial with exact rational coefficients,
// ascending order, no trailing zero coefficients (zero poly is empty).
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> ascending);
  explicit Poly(std::vector<Rational> ascending);

  static Poly constant(Rational c) { return Poly({std::move(c)}); }
  // a*t + b
  static Poly affine(Rational a, Rational b) { return Poly({std::move(b), std::move(a)}); }
  // c * t^k
  static Poly monomial(Rational c, unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Exact Horner evaluation.
  Rational eval(const Rational& t) const;
  // Interval Horner: a (possibly loose) enclosure of the range on x.
  Interval eval_interval(const Interval& x) const;

  Poly derivative() const;
  Poly pow(unsigned e) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Canonical text: "[]" for zero, "[c0,c1,...]" otherwise.
  std::string str() const;
  static Poly from_str(std::string_view s);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace pgc
