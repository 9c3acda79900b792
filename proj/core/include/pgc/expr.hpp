#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "pgc/interval.hpp"
#include "pgc/poly.hpp"

namespace pgc {

// Identifiers for the closed-form functions the library evaluates.
enum class FunctionId {
  h1,
  h2,
  Y,
  dY_num_poly,
  xi,
  B0,
  B0_summand_1,
  B0_summand_2,
  B0_summand_3,
  B0_summand_4,
  B0_summand_5,
  B0_summand_6,
  B0_summand_7,
  B2,
  B2_summand_1,
  B2_summand_2,
  B2_summand_3,
  B2_summand_4,
  A,
  A_summand_1,
  A_summand_2,
  A_summand_3,
  r,
};

const char* function_name(FunctionId fn);
FunctionId function_id(std::string_view name);  // throws UsageError

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Expression tree in one variable t. Polynomials appearing in factored
// products keep their factorization (each factor is its own node);
// expanded polynomials are single Poly leaves.
struct Expr {
  enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Poly, Exp, Log, Sqrt };
  Kind kind = Kind::Var;
  Rational value;     // Const
  class Poly poly;    // Poly
  int exponent = 0;   // Pow
  ExprPtr a, b;

  std::string str() const;  // infix rendering, for diagnostics
};

ExprPtr expr_const(Rational v);
ExprPtr expr_var();
ExprPtr expr_add(ExprPtr a, ExprPtr b);
ExprPtr expr_sub(ExprPtr a, ExprPtr b);
ExprPtr expr_mul(ExprPtr a, ExprPtr b);
ExprPtr expr_div(ExprPtr a, ExprPtr b);
ExprPtr expr_neg(ExprPtr a);
ExprPtr expr_pow(ExprPtr a, int e);
ExprPtr expr_poly(Poly p);
ExprPtr expr_exp(ExprPtr a);
ExprPtr expr_log(ExprPtr a);
ExprPtr expr_sqrt(ExprPtr a);

// The defining expression for each FunctionId.
const ExprPtr& function_expr(FunctionId fn);

// True for ids whose expression is a bare polynomial.
bool is_polynomial_function(FunctionId fn);

}  // namespace pgc
