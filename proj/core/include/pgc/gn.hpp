#pragma once

#include <vector>

#include "pgc/certificate.hpp"
#include "pgc/expr.hpp"

// Transcribed data for the planar-graph constant computation: the
// reference bracket endpoints, the factored building blocks of every
// uniform bound, and the factored derivative forms used by the
// monotonicity certificates. Shared by the construction pipeline and
// the replay checker; contains no enclosure construction.
namespace pgc::gn {

// Endpoints of the reference bracket around t0.
const Rational& t_minus();  // 0.6263716632
const Rational& t_plus();   // 0.6263716634
const Interval& reference_bracket();

const Poly& dY_num();  // 144 + 736t + 1256t^2 + 799t^3 + 141t^4 + t^5 - 5t^6

// How a block's monotonicity gets certified.
struct MonotoneSpec {
  enum class Kind {
    DerivPolySign,  // sign of p' via interval Horner subdivision
    DerivFactored,  // p'q - pq' == coef * prod(base_i^exp_i), factor signs
    Rule,           // log/sqrt of affine: direction from the affine slope
    LogLinear,      // log-quotient: sign of log(w)*w*(p'q-pq') + a*p*q
  };
  Kind kind = Kind::Rule;
  Rational coef;
  std::vector<std::pair<Poly, int>> factors;
};

struct BlockPlan {
  cert::Block block;
  MonotoneSpec mono;
  MonotoneSpec inner_mono;  // PowerOdd only: spec for the inner quotient
};

// One summand of B0/B2/A: numerator block, optional log factor, optional
// denominator block, combined as (n*l)/d, n/d, n*l, or n alone.
struct SummandPlan {
  bool has_l = false;
  bool has_d = false;
  BlockPlan n, l, d;
  int sign = 1;  // sign in the aggregated sum
};

const std::vector<SummandPlan>& b0_plan();  // 7 summands, signs + - - + - - -
const std::vector<SummandPlan>& b2_plan();  // 4 summands, signs + - + +
const std::vector<SummandPlan>& a_plan();   // 3 summands, signs + + +

const BlockPlan& xi_plan();        // (3t+1)(-t+1)^3 / (16t^3), decreasing
const BlockPlan& rho_sqrt_plan();  // (1/16) sqrt(3t+1)
const BlockPlan& rho_cube_plan();  // ((1-t)/t)^3

// Factored form of Y's derivative: the transcribed factor list whose
// joint sign decides monotonicity of Y. The binding to Y is trusted
// transcription; factor signs are certified individually.
struct FactoredDerivative {
  Rational coef;
  std::vector<std::pair<Poly, int>> factors;  // (base, exponent), exponent may be negative
  bool exp_factor = true;                     // a strictly positive exp(...) factor
};
const FactoredDerivative& y_deriv_factored();

}  // namespace pgc::gn
