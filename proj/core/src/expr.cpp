#include "pgc/expr.hpp"

#include <array>

#include "pgc/errors.hpp"

namespace pgc {

namespace {

constexpr std::array<const char*, 23> kNames = {
    "h1", "h2", "Y", "dY_num_poly", "xi",
    "B0", "B0_summand_1", "B0_summand_2", "B0_summand_3", "B0_summand_4",
    "B0_summand_5", "B0_summand_6", "B0_summand_7",
    "B2", "B2_summand_1", "B2_summand_2", "B2_summand_3", "B2_summand_4",
    "A", "A_summand_1", "A_summand_2", "A_summand_3",
    "r"};

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

const char* function_name(FunctionId fn) { return kNames[static_cast<int>(fn)]; }

FunctionId function_id(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (name == kNames[i]) return static_cast<FunctionId>(i);
  throw UsageError("unknown function '" + std::string(name) + "'");
}

ExprPtr expr_const(Rational v) {
  Expr e;
  e.kind = Expr::Kind::Const;
  e.value = std::move(v);
  return make(std::move(e));
}

ExprPtr expr_var() {
  Expr e;
  e.kind = Expr::Kind::Var;
  return make(std::move(e));
}

namespace {
ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = k;
  e.a = std::move(a);
  e.b = std::move(b);
  return make(std::move(e));
}
ExprPtr unary(Expr::Kind k, ExprPtr a) {
  Expr e;
  e.kind = k;
  e.a = std::move(a);
  return make(std::move(e));
}
}  // namespace

ExprPtr expr_add(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::Add, std::move(a), std::move(b)); }
ExprPtr expr_sub(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::Sub, std::move(a), std::move(b)); }
ExprPtr expr_mul(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::Mul, std::move(a), std::move(b)); }
ExprPtr expr_div(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::Div, std::move(a), std::move(b)); }
ExprPtr expr_neg(ExprPtr a) { return unary(Expr::Kind::Neg, std::move(a)); }

ExprPtr expr_pow(ExprPtr a, int e) {
  Expr ex;
  ex.kind = Expr::Kind::Pow;
  ex.a = std::move(a);
  ex.exponent = e;
  return make(std::move(ex));
}

ExprPtr expr_poly(Poly p) {
  Expr e;
  e.kind = Expr::Kind::Poly;
  e.poly = std::move(p);
  return make(std::move(e));
}

ExprPtr expr_exp(ExprPtr a) { return unary(Expr::Kind::Exp, std::move(a)); }
ExprPtr expr_log(ExprPtr a) { return unary(Expr::Kind::Log, std::move(a)); }
ExprPtr expr_sqrt(ExprPtr a) { return unary(Expr::Kind::Sqrt, std::move(a)); }

std::string Expr::str() const {
  switch (kind) {
    case Kind::Const:
      return value.str();
    case Kind::Var:
      return "t";
    case Kind::Add:
      return "(" + a->str() + " + " + b->str() + ")";
    case Kind::Sub:
      return "(" + a->str() + " - " + b->str() + ")";
    case Kind::Mul:
      return a->str() + "*" + b->str();
    case Kind::Div:
      return a->str() + " / " + b->str();
    case Kind::Neg:
      return "-" + a->str();
    case Kind::Pow:
      return a->str() + "^" + std::to_string(exponent);
    case Kind::Poly: {
      // Render ascending polynomial as a readable sum.
      std::string out = "(";
      bool first = true;
      for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
        const Rational& c = poly.coeffs()[i];
        if (c.is_zero()) continue;
        if (!first) out += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) out += "-";
        Rational mag = c.abs();
        if (i == 0 || mag != Rational(1)) out += mag.str();
        if (i >= 1) {
          if (mag != Rational(1)) out += "*";
          out += "t";
          if (i > 1) out += "^" + std::to_string(i);
        }
        first = false;
      }
      if (first) out += "0";
      return out + ")";
    }
    case Kind::Exp:
      return "exp(" + a->str() + ")";
    case Kind::Log:
      return "log(" + a->str() + ")";
    case Kind::Sqrt:
      return "sqrt(" + a->str() + ")";
  }
  throw Error("unreachable expr kind");
}

namespace {

// Shorthands for the transcription below.
ExprPtr P(std::initializer_list<long long> ascending) {
  std::vector<Rational> v;
  for (long long c : ascending) v.emplace_back(c);
  return expr_poly(Poly(std::move(v)));
}
ExprPtr C(long long n, long long d = 1) { return expr_const(Rational(Int(n), Int(d))); }
ExprPtr tpow(int e) { return expr_pow(expr_var(), e); }

using ExprTable = std::array<ExprPtr, kNames.size()>;

ExprPtr build(FunctionId fn, const ExprTable& t) {
  auto dep = [&](FunctionId id) { return t[static_cast<int>(id)]; };
  using enum FunctionId;
  switch (fn) {
    case h1:
      // (2t+1) / ((3t+1)(-t+1))
      return expr_div(P({1, 2}), expr_mul(P({1, 3}), P({1, -1})));
    case h2:
      // -( t^2 (-t+1)(5t^2+36t+18) ) / ( 2(t+3)(2t+1)(3t+1)^2 )
      return expr_neg(expr_div(
          expr_mul(expr_mul(tpow(2), P({1, -1})), P({18, 36, 5})),
          expr_mul(expr_mul(expr_mul(C(2), P({3, 1})), P({1, 2})), expr_pow(P({1, 3}), 2))));
    case Y:
      return expr_add(C(-1), expr_mul(dep(h1), expr_exp(dep(h2))));
    case dY_num_poly:
      return P({144, 736, 1256, 799, 141, 1, -5});
    case xi:
      // (3t+1)(-t+1)^3 / (16 t^3)
      return expr_div(expr_mul(P({1, 3}), expr_pow(P({1, -1}), 3)),
                      expr_mul(C(16), tpow(3)));
    case B0_summand_1:
      return expr_div(
          expr_mul(expr_mul(expr_pow(P({-1, 3}), 2), expr_pow(P({1, 1}), 6)), expr_log(P({1, 1}))),
          expr_mul(C(512), tpow(6)));
    case B0_summand_2:
      return expr_div(expr_mul(P({-1, 0, 6, -16, 3}), expr_log(P({1, 3}))),
                      expr_mul(C(32), tpow(3)));
    case B0_summand_3:
      return expr_div(
          expr_mul(expr_mul(expr_pow(P({1, 3}), 2), expr_pow(P({1, -1}), 6)), expr_log(P({1, 2}))),
          expr_mul(C(1024), tpow(6)));
    case B0_summand_4:
      return expr_mul(C(1, 4), expr_log(P({3, 1})));
    case B0_summand_5:
      return expr_mul(C(1, 2), expr_log(expr_var()));
    case B0_summand_6:
      return expr_mul(C(3, 8), expr_log(C(16)));
    case B0_summand_7:
      return expr_div(
          expr_mul(P({6, -172, 205, 1436, 972, 920, 217}), expr_pow(P({1, -1}), 2)),
          expr_mul(expr_mul(expr_mul(C(2048), tpow(4)), P({1, 3})), P({3, 1})));
    case B0: {
      ExprPtr s = expr_sub(dep(B0_summand_1), dep(B0_summand_2));
      s = expr_sub(s, dep(B0_summand_3));
      s = expr_add(s, dep(B0_summand_4));
      s = expr_sub(s, dep(B0_summand_5));
      s = expr_sub(s, dep(B0_summand_6));
      return expr_sub(s, dep(B0_summand_7));
    }
    case B2_summand_1:
      return expr_div(
          expr_mul(expr_mul(expr_mul(expr_mul(expr_pow(P({1, -1}), 3), P({-1, 3})), P({1, 3})),
                            expr_pow(P({1, 1}), 3)),
                   expr_log(P({1, 1}))),
          expr_mul(C(256), tpow(6)));
    case B2_summand_2:
      return expr_div(expr_mul(expr_mul(expr_pow(P({1, -1}), 3), P({1, 3})), expr_log(P({1, 3}))),
                      expr_mul(C(32), tpow(3)));
    case B2_summand_3:
      return expr_div(
          expr_mul(expr_mul(expr_pow(P({1, 3}), 2), expr_pow(P({1, -1}), 6)), expr_log(P({1, 2}))),
          expr_mul(C(512), tpow(6)));
    case B2_summand_4:
      return expr_div(
          expr_mul(expr_pow(P({-1, 1}), 4), P({6, -160, -217, 698, 185})),
          expr_mul(expr_mul(expr_mul(C(1024), tpow(4)), P({1, 3})), P({3, 1})));
    case B2: {
      ExprPtr s = expr_sub(dep(B2_summand_1), dep(B2_summand_2));
      s = expr_add(s, dep(B2_summand_3));
      return expr_add(s, dep(B2_summand_4));
    }
    case A_summand_1:
      return expr_div(expr_mul(expr_mul(P({-1, 3}), expr_pow(P({1, 1}), 3)), expr_log(P({1, 1}))),
                      expr_mul(C(16), tpow(3)));
    case A_summand_2:
      return expr_div(expr_mul(expr_mul(P({1, 3}), expr_pow(P({1, -1}), 3)), expr_log(P({1, 2}))),
                      expr_mul(C(32), tpow(3)));
    case A_summand_3:
      return expr_div(
          expr_mul(P({1, -1}), P({6, -160, -217, 698, 185})),
          expr_mul(expr_mul(expr_mul(C(64), expr_var()), expr_pow(P({1, 3}), 2)), P({3, 1})));
    case A:
      return expr_add(expr_add(dep(A_summand_1), dep(A_summand_2)),
                      dep(A_summand_3));
    case r:
      // (1/16)(3t+1)^(1/2) (t^-1 - 1)^3 exp(A(t))
      return expr_mul(
          expr_mul(expr_mul(C(1, 16), expr_sqrt(P({1, 3}))),
                   expr_pow(expr_sub(expr_div(C(1), expr_var()), C(1)), 3)),
          expr_exp(dep(A)));
  }
  throw Error("unreachable function id");
}

}  // namespace

const ExprPtr& function_expr(FunctionId fn) {
  static const auto* table = [] {
    auto* t = new ExprTable();
    // Build in dependency order: summands precede their sums.
    using enum FunctionId;
    for (FunctionId id :
         {h1, h2, dY_num_poly, xi, B0_summand_1, B0_summand_2, B0_summand_3, B0_summand_4,
          B0_summand_5, B0_summand_6, B0_summand_7, B2_summand_1, B2_summand_2, B2_summand_3,
          B2_summand_4, A_summand_1, A_summand_2, A_summand_3})
      (*t)[static_cast<int>(id)] = build(id, *t);
    for (FunctionId id : {Y, B0, B2, A, r}) (*t)[static_cast<int>(id)] = build(id, *t);
    return t;
  }();
  return (*table)[static_cast<int>(fn)];
}

bool is_polynomial_function(FunctionId fn) {
  return function_expr(fn)->kind == Expr::Kind::Poly;
}

}  // namespace pgc
