#pragma once

#include <utility>

#include "pgc/certificate.hpp"
#include "pgc/interval.hpp"

namespace pgc {

// Rigorous enclosures of exp, log and sqrt at rational points and over
// rational intervals. Every enclosure comes with a replayable evidence
// node; all arithmetic is exact.

using Enclosure = std::pair<Interval, cert::NodePtr>;

// Degree-k Taylor enclosure of exp at a rational point in (-1, 1).
// The partial sum runs through x^(k-1); the remainder exp(xi)*x^k/k! is
// bracketed by exp(xi) in (1, 3) for x > 0 and in (1+x, 1) for x < 0.
cert::NodePtr exp_point(const Rational& x, int degree);

// Series enclosure of log(x), x > 0, via u = (x-1)/(x+1) and
// log x = 2*sum(u^i/i, i odd), tail below 2|u|^(n+2)/((n+2)(1-u^2)).
// The number of terms grows until the tail bound meets width_budget.
cert::NodePtr log_point(const Rational& x, const Rational& width_budget);

// Bisection bracket [lo, hi] with lo^2 <= x <= hi^2, hi - lo <= width_budget.
cert::NodePtr sqrt_point(const Rational& x, const Rational& width_budget);

// Interval enclosures: a point enclosure per endpoint plus monotonicity.
// `input` is the evidence subtree for the argument interval; it may be
// null for a standalone enclosure, in which case the node certifies the
// function over exactly the hull of its stored points.
Enclosure exp_enclosure(const Interval& x, int degree, cert::NodePtr input = nullptr);
Enclosure log_enclosure(const Rational& x, const Rational& width_budget);
Enclosure log_enclosure_over(const Interval& x, const Rational& width_budget,
                             cert::NodePtr input = nullptr);
Enclosure sqrt_enclosure(const Rational& x, const Rational& width_budget);
Enclosure sqrt_enclosure_over(const Interval& x, const Rational& width_budget,
                              cert::NodePtr input = nullptr);

}  // namespace pgc
