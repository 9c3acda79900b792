#pragma once

#include "pgc/expr.hpp"
#include "pgc/transcendental.hpp"

namespace pgc {

struct EvalConfig {
  Rational budget = Rational(Int(1), pow10(13));
  int exp_degree_pos = 12;
  int exp_degree_neg = 6;
};

// Interval evaluation of an expression tree with a full evidence trace.
// Degenerate arguments give degenerate (exact) results on rational
// expressions. Throws PoleError when a denominator enclosure contains
// zero, naming the vanishing factor.
Enclosure eval_expr(const ExprPtr& e, const Interval& t, const EvalConfig& cfg);

// Same, wrapped in an evaluation node tagged with the function name.
Enclosure eval(FunctionId fn, const Interval& t, const EvalConfig& cfg = {});

// Exact value of a polynomial function id (UsageError otherwise).
Rational exact_poly_at(FunctionId fn, const Rational& t);

// Enclosures of Y at the two reference bracket endpoints. The first
// stays strictly below 0.9999999996, the second strictly above
// 1.00000000009; a violation throws.
std::pair<Enclosure, Enclosure> eval_Y_certificate_points(const EvalConfig& cfg = {});

}  // namespace pgc
