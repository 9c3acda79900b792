#include "pgc/eval.hpp"

#include <optional>

#include "pgc/decimal.hpp"
#include "pgc/gn.hpp"

namespace pgc {

using cert::make_node;
using cert::NodePtr;

namespace {

// Best-effort enclosure for pole diagnosis only; nullopt where no
// cheap enclosure exists.
std::optional<Interval> rough_value(const ExprPtr& e, const Interval& t) {
  switch (e->kind) {
    case Expr::Kind::Const:
      return Interval(e->value);
    case Expr::Kind::Var:
      return t;
    case Expr::Kind::Poly:
      return e->poly.eval_interval(t);
    case Expr::Kind::Add: {
      auto a = rough_value(e->a, t), b = rough_value(e->b, t);
      if (a && b) return *a + *b;
      return std::nullopt;
    }
    case Expr::Kind::Sub: {
      auto a = rough_value(e->a, t), b = rough_value(e->b, t);
      if (a && b) return *a - *b;
      return std::nullopt;
    }
    case Expr::Kind::Mul: {
      auto a = rough_value(e->a, t), b = rough_value(e->b, t);
      if (a && b) return *a * *b;
      return std::nullopt;
    }
    case Expr::Kind::Neg: {
      auto a = rough_value(e->a, t);
      if (a) return -*a;
      return std::nullopt;
    }
    case Expr::Kind::Pow: {
      auto a = rough_value(e->a, t);
      if (!a) return std::nullopt;
      try {
        return a->pow(e->exponent);
      } catch (const DomainError&) {
        return std::nullopt;
      }
    }
    default:
      return std::nullopt;
  }
}

// Renders the deepest factor of `e` whose enclosure contains zero.
std::string vanishing_factor(const ExprPtr& e, const Interval& t) {
  if (e->kind == Expr::Kind::Mul || e->kind == Expr::Kind::Neg ||
      e->kind == Expr::Kind::Pow) {
    for (const ExprPtr& child : {e->a, e->b}) {
      if (!child) continue;
      auto v = rough_value(child, t);
      if (v && v->contains_zero()) return vanishing_factor(child, t);
    }
  }
  return e->str();
}

}  // namespace

Enclosure eval_expr(const ExprPtr& e, const Interval& t, const EvalConfig& cfg) {
  switch (e->kind) {
    case Expr::Kind::Const:
      return {Interval(e->value), make_node(cert::ConstData{e->value})};
    case Expr::Kind::Var:
      return {t, make_node(cert::VarData{})};
    case Expr::Kind::Poly: {
      Interval v = e->poly.eval_interval(t);
      return {v, make_node(cert::PolyEvalData{e->poly}, v)};
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      auto [va, na] = eval_expr(e->a, t, cfg);
      auto [vb, nb] = eval_expr(e->b, t, cfg);
      char op;
      Interval v;
      switch (e->kind) {
        case Expr::Kind::Add: op = '+'; v = va + vb; break;
        case Expr::Kind::Sub: op = '-'; v = va - vb; break;
        case Expr::Kind::Mul: op = '*'; v = va * vb; break;
        default:
          op = '/';
          if (vb.contains_zero())
            throw PoleError("denominator vanishes: " + vanishing_factor(e->b, t) +
                            " contains zero on " + t.str());
          v = va / vb;
          break;
      }
      return {v, make_node(cert::ArithData{op, 0}, v, {na, nb})};
    }
    case Expr::Kind::Neg: {
      auto [va, na] = eval_expr(e->a, t, cfg);
      Interval v = -va;
      return {v, make_node(cert::ArithData{'n', 0}, v, {na})};
    }
    case Expr::Kind::Pow: {
      auto [va, na] = eval_expr(e->a, t, cfg);
      if (e->exponent < 0 && va.contains_zero())
        throw PoleError("denominator vanishes: " + vanishing_factor(e->a, t) +
                        " contains zero on " + t.str());
      Interval v = va.pow(e->exponent);
      return {v, make_node(cert::ArithData{'^', e->exponent}, v, {na})};
    }
    case Expr::Kind::Exp: {
      auto [va, na] = eval_expr(e->a, t, cfg);
      int degree = va.hi().sign() > 0 ? cfg.exp_degree_pos : cfg.exp_degree_neg;
      return exp_enclosure(va, degree, na);
    }
    case Expr::Kind::Log: {
      auto [va, na] = eval_expr(e->a, t, cfg);
      if (va.lo() <= Rational(0))
        throw PoleError("log argument not positive: " + e->a->str() + " on " + t.str());
      return log_enclosure_over(va, cfg.budget, na);
    }
    case Expr::Kind::Sqrt: {
      auto [va, na] = eval_expr(e->a, t, cfg);
      return sqrt_enclosure_over(va, cfg.budget, na);
    }
  }
  throw Error("unreachable expr kind");
}

Enclosure eval(FunctionId fn, const Interval& t, const EvalConfig& cfg) {
  auto [v, node] = eval_expr(function_expr(fn), t, cfg);
  return {v, make_node(cert::EvalData{function_name(fn), t}, v, {node})};
}

Rational exact_poly_at(FunctionId fn, const Rational& t) {
  const ExprPtr& e = function_expr(fn);
  if (e->kind != Expr::Kind::Poly)
    throw UsageError(std::string(function_name(fn)) + " is not a polynomial function");
  return e->poly.eval(t);
}

std::pair<Enclosure, Enclosure> eval_Y_certificate_points(const EvalConfig& cfg) {
  Enclosure below = eval(FunctionId::Y, Interval(gn::t_minus()), cfg);
  Enclosure above = eval(FunctionId::Y, Interval(gn::t_plus()), cfg);
  if (!(below.first.hi() < parse_decimal("0.9999999996")))
    throw PrecisionError("Y enclosure at left bracket endpoint too high");
  if (!(above.first.lo() > parse_decimal("1.00000000009")))
    throw PrecisionError("Y enclosure at right bracket endpoint too low");
  return {std::move(below), std::move(above)};
}

}  // namespace pgc
