#include "pgc/poly.hpp"

#include <algorithm>

namespace pgc {

Poly::Poly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }
Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::monomial(Rational c, unsigned k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Interval Poly::eval_interval(const Interval& x) const {
  Interval acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Interval(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
  return Poly(std::move(d));
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    if (e >>= 1u) base = base * base;
  }
  return result;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& c) const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
  return Poly(std::move(v));
}

std::string Poly::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].str();
  }
  out += ']';
  return out;
}

Poly Poly::from_str(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("malformed polynomial '" + std::string(s) + "'", 0);
  s = s.substr(1, s.size() - 2);
  std::vector<Rational> v;
  while (!s.empty()) {
    std::size_t comma = s.find(',');
    std::string_view tok = s.substr(0, comma);
    v.push_back(Rational::from_str(tok));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  Poly p(v);
  if (p.coeffs().size() != v.size())
    throw ParseError("non-canonical polynomial (trailing zero coefficients)", 0);
  return p;
}

}  // namespace pgc
