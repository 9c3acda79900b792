#include "pgc/transcendental.hpp"

#include "pgc/errors.hpp"

namespace pgc {

using cert::make_node;
using cert::NodePtr;

cert::NodePtr exp_point(const Rational& x, int degree) {
  if (degree < 1) throw UsageError("exp degree must be >= 1");
  if (x <= Rational(-1) || x >= Rational(1))
    throw DomainError("exp argument " + x.str() +
                      " outside (-1,1); reduce the argument first");
  cert::ExpPointData d;
  d.point = x;
  d.degree = degree;

  Rational term(1);
  Rational sum(1);
  for (int i = 1; i < degree; ++i) {
    term = term * x / Rational(i);
    sum += term;
  }
  d.partial = sum;
  Rational t_k = term * x / Rational(degree);  // x^k / k!

  if (x.is_zero()) {
    d.rem_lo = Rational(0);
    d.rem_hi = Rational(0);
  } else if (x.sign() > 0) {
    d.rem_lo = t_k;
    d.rem_hi = Rational(3) * t_k;
  } else {
    Rational low_factor = Rational(1) + x;  // exp(xi) > 1+x for xi in (x,0)
    if (degree % 2 == 0) {
      d.rem_lo = low_factor * t_k;
      d.rem_hi = t_k;
    } else {
      d.rem_lo = t_k;
      d.rem_hi = low_factor * t_k;
    }
  }
  Interval result(d.partial + d.rem_lo, d.partial + d.rem_hi);
  return make_node(d, result);
}

cert::NodePtr log_point(const Rational& x, const Rational& width_budget) {
  if (x <= Rational(0)) throw DomainError("log argument " + x.str() + " is not positive");
  if (width_budget <= Rational(0)) throw UsageError("width budget must be positive");
  cert::LogPointData d;
  d.x = x;
  d.u = (x - Rational(1)) / (x + Rational(1));

  if (d.u.is_zero()) {
    d.terms = 1;
    d.partial = Rational(0);
    d.tail_lo = Rational(0);
    d.tail_hi = Rational(0);
    return make_node(d, Interval(Rational(0)));
  }

  const Rational u2 = d.u * d.u;
  const Rational au = d.u.abs();
  const Rational one_minus_u2 = Rational(1) - u2;
  int n = 1;
  Rational upow = d.u;                 // u^n
  Rational acc = d.u;                  // sum of u^i/i, i odd <= n
  Rational abs_tail = Rational(2) * au * u2 / (Rational(n + 2) * one_minus_u2);
  while (abs_tail > width_budget) {
    n += 2;
    upow = upow * u2;
    acc += upow / Rational(n);
    abs_tail = Rational(2) * upow.abs() * u2 / (Rational(n + 2) * one_minus_u2);
  }
  d.terms = n;
  d.partial = Rational(2) * acc;
  if (d.u.sign() > 0) {
    d.tail_lo = Rational(0);
    d.tail_hi = abs_tail;
  } else {
    d.tail_lo = -abs_tail;
    d.tail_hi = Rational(0);
  }
  Interval result(d.partial + d.tail_lo, d.partial + d.tail_hi);
  return make_node(d, result);
}

cert::NodePtr sqrt_point(const Rational& x, const Rational& width_budget) {
  if (x < Rational(0)) throw DomainError("sqrt argument " + x.str() + " is negative");
  if (width_budget <= Rational(0)) throw UsageError("width budget must be positive");
  Rational lo(0);
  Rational hi = x.is_zero() ? Rational(0) : Rational(1);
  while (hi * hi < x) {
    lo = hi;
    hi = hi * Rational(2);
  }
  while (hi - lo > width_budget) {
    Rational mid = (lo + hi) / Rational(2);
    if (mid * mid <= x)
      lo = mid;
    else
      hi = mid;
  }
  cert::SqrtPointData d;
  d.radicand = x;
  d.sq_lo = lo * lo;
  d.sq_hi = hi * hi;
  return make_node(d, Interval(lo, hi));
}

namespace {

Enclosure wrap_monotone(cert::Payload payload, NodePtr point_lo, NodePtr point_hi,
                        NodePtr input) {
  std::vector<NodePtr> children;
  if (input) children.push_back(std::move(input));
  Interval result = point_hi
                        ? Interval(point_lo->result.lo(), point_hi->result.hi())
                        : point_lo->result;
  children.push_back(std::move(point_lo));
  if (point_hi) children.push_back(std::move(point_hi));
  return {result, make_node(std::move(payload), result, std::move(children))};
}

}  // namespace

Enclosure exp_enclosure(const Interval& x, int degree, NodePtr input) {
  NodePtr lo = exp_point(x.lo(), degree);
  NodePtr hi = x.is_degenerate() ? nullptr : exp_point(x.hi(), degree);
  return wrap_monotone(cert::ExpData{}, std::move(lo), std::move(hi), std::move(input));
}

Enclosure log_enclosure(const Rational& x, const Rational& width_budget) {
  return log_enclosure_over(Interval(x), width_budget);
}

Enclosure log_enclosure_over(const Interval& x, const Rational& width_budget, NodePtr input) {
  NodePtr lo = log_point(x.lo(), width_budget);
  NodePtr hi = x.is_degenerate() ? nullptr : log_point(x.hi(), width_budget);
  return wrap_monotone(cert::LogData{}, std::move(lo), std::move(hi), std::move(input));
}

Enclosure sqrt_enclosure(const Rational& x, const Rational& width_budget) {
  return sqrt_enclosure_over(Interval(x), width_budget);
}

Enclosure sqrt_enclosure_over(const Interval& x, const Rational& width_budget, NodePtr input) {
  NodePtr lo = sqrt_point(x.lo(), width_budget);
  NodePtr hi = x.is_degenerate() ? nullptr : sqrt_point(x.hi(), width_budget);
  return wrap_monotone(cert::SqrtData{}, std::move(lo), std::move(hi), std::move(input));
}

}  // namespace pgc
