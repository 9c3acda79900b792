#include "pgc/gn.hpp"

namespace pgc::gn {

namespace {

Poly lin(long long b, long long a) { return Poly({Rational(b), Rational(a)}); }

Poly from_ll(std::initializer_list<long long> ascending) {
  std::vector<Rational> v;
  for (long long c : ascending) v.emplace_back(c);
  return Poly(std::move(v));
}

MonotoneSpec deriv_poly_sign() {
  MonotoneSpec m;
  m.kind = MonotoneSpec::Kind::DerivPolySign;
  return m;
}

MonotoneSpec deriv_factored(long long coef, std::vector<std::pair<Poly, int>> factors) {
  MonotoneSpec m;
  m.kind = MonotoneSpec::Kind::DerivFactored;
  m.coef = Rational(coef);
  m.factors = std::move(factors);
  return m;
}

MonotoneSpec rule() { return MonotoneSpec{}; }

MonotoneSpec log_linear() {
  MonotoneSpec m;
  m.kind = MonotoneSpec::Kind::LogLinear;
  return m;
}

BlockPlan log_quotient_block(Poly p, Poly q, long long a, long long b) {
  BlockPlan bl;
  bl.block = cert::Block::log_quotient(std::move(p), std::move(q), Rational(a), Rational(b));
  bl.mono = log_linear();
  return bl;
}

BlockPlan poly_block(Poly p, MonotoneSpec mono) {
  BlockPlan b;
  b.block = cert::Block::poly(std::move(p));
  b.mono = std::move(mono);
  return b;
}

BlockPlan log_block(Rational c, Rational a, Rational b) {
  BlockPlan bl;
  bl.block = cert::Block::log_affine(std::move(c), std::move(a), std::move(b));
  bl.mono = rule();
  return bl;
}

SummandPlan nld(BlockPlan n, BlockPlan l, BlockPlan d, int sign) {
  SummandPlan s;
  s.has_l = true;
  s.has_d = true;
  s.n = std::move(n);
  s.l = std::move(l);
  s.d = std::move(d);
  s.sign = sign;
  return s;
}

SummandPlan nd(BlockPlan n, BlockPlan d, int sign) {
  SummandPlan s;
  s.has_d = true;
  s.n = std::move(n);
  s.d = std::move(d);
  s.sign = sign;
  return s;
}

SummandPlan block_only(BlockPlan n, int sign) {
  SummandPlan s;
  s.n = std::move(n);
  s.sign = sign;
  return s;
}

const Poly& quartic() {  // 185t^4 + 698t^3 - 217t^2 - 160t + 6
  static const Poly p = from_ll({6, -160, -217, 698, 185});
  return p;
}

}  // namespace

const Rational& t_minus() {
  static const Rational v(Int(6263716632LL), pow10(10));
  return v;
}

const Rational& t_plus() {
  static const Rational v(Int(6263716634LL), pow10(10));
  return v;
}

const Interval& reference_bracket() {
  static const Interval i(t_minus(), t_plus());
  return i;
}

const Poly& dY_num() {
  static const Poly p = from_ll({144, 736, 1256, 799, 141, 1, -5});
  return p;
}

const std::vector<SummandPlan>& b0_plan() {
  static const auto* plan = [] {
    auto* v = new std::vector<SummandPlan>;
    // (3t-1)^2 (t+1)^6 log(t+1) / (512 t^6)
    v->push_back(nld(poly_block(lin(-1, 3).pow(2) * lin(1, 1).pow(6), deriv_poly_sign()),
                     log_block(1, 1, 1),
                     poly_block(Poly::monomial(Rational(512), 6), deriv_poly_sign()), 1));
    // (3t^4 - 16t^3 + 6t^2 - 1) log(3t+1) / (32 t^3): the numerator and
    // denominator move together, so this one is bounded as a single
    // joint block, not factor by factor.
    v->push_back(block_only(
        log_quotient_block(from_ll({-1, 0, 6, -16, 3}), Poly::monomial(Rational(32), 3), 3, 1),
        -1));
    // (3t+1)^2 (-t+1)^6 log(2t+1) / (1024 t^6)
    v->push_back(nld(
        poly_block(lin(1, 3).pow(2) * lin(1, -1).pow(6),
                   deriv_factored(24, {{lin(-1, 1), 5}, {lin(0, 1), 1}, {lin(1, 3), 1}})),
        log_block(1, 2, 1),
        poly_block(Poly::monomial(Rational(1024), 6), deriv_poly_sign()), -1));
    // (1/4) log(t+3), (1/2) log(t), (3/8) log(16)
    v->push_back(block_only(log_block(Rational(1, 4), 1, 3), 1));
    v->push_back(block_only(log_block(Rational(1, 2), 1, 0), -1));
    v->push_back(block_only(log_block(Rational(3, 8), 0, 16), -1));
    // (217t^6 + 920t^5 + 972t^4 + 1436t^3 + 205t^2 - 172t + 6)(-t+1)^2
    //   / (2048 t^4 (3t+1)(t+3))
    v->push_back(
        nd(poly_block(from_ll({6, -172, 205, 1436, 972, 920, 217}) * lin(1, -1).pow(2),
                      deriv_factored(2, {{lin(-1, 1), 1},
                                         {from_ll({92, -463, -1744, 1646, 616, 2569, 868}), 1}})),
           poly_block(Poly::monomial(Rational(2048), 4) * lin(1, 3) * lin(3, 1),
                      deriv_poly_sign()),
           -1));
    return v;
  }();
  return *plan;
}

const std::vector<SummandPlan>& b2_plan() {
  static const auto* plan = [] {
    auto* v = new std::vector<SummandPlan>;
    // (-t+1)^3 (3t-1)(3t+1)(t+1)^3 log(t+1) / (256 t^6)
    v->push_back(nld(
        poly_block(lin(1, -1).pow(3) * lin(-1, 3) * lin(1, 3) * lin(1, 1).pow(3),
                   deriv_factored(-24, {{lin(-1, 1), 2},
                                        {lin(0, 1), 1},
                                        {lin(1, 1), 2},
                                        {from_ll({-1, 0, 3}), 1}})),
        log_block(1, 1, 1),
        poly_block(Poly::monomial(Rational(256), 6), deriv_poly_sign()), 1));
    // (-t+1)^3 (3t+1) log(3t+1) / (32 t^3)
    v->push_back(nld(poly_block(lin(1, -1).pow(3) * lin(1, 3),
                                deriv_factored(-12, {{lin(-1, 1), 2}, {lin(0, 1), 1}})),
                     log_block(1, 3, 1),
                     poly_block(Poly::monomial(Rational(32), 3), deriv_poly_sign()), -1));
    // (3t+1)^2 (-t+1)^6 log(2t+1) / (512 t^6)
    v->push_back(nld(
        poly_block(lin(1, 3).pow(2) * lin(1, -1).pow(6),
                   deriv_factored(24, {{lin(-1, 1), 5}, {lin(0, 1), 1}, {lin(1, 3), 1}})),
        log_block(1, 2, 1),
        poly_block(Poly::monomial(Rational(512), 6), deriv_poly_sign()), 1));
    // (t-1)^4 (185t^4 + 698t^3 - 217t^2 - 160t + 6) / (1024 t^4 (3t+1)(t+3))
    v->push_back(
        nd(poly_block(lin(-1, 1).pow(4) * quartic(),
                      deriv_factored(2, {{lin(-1, 1), 3},
                                         {from_ll({92, -183, -1698, 2073, 740}), 1}})),
           poly_block(Poly::monomial(Rational(1024), 4) * lin(1, 3) * lin(3, 1),
                      deriv_poly_sign()),
           1));
    return v;
  }();
  return *plan;
}

const std::vector<SummandPlan>& a_plan() {
  static const auto* plan = [] {
    auto* v = new std::vector<SummandPlan>;
    // (3t-1)(t+1)^3 log(t+1) / (16 t^3)
    v->push_back(nld(poly_block(lin(-1, 3) * lin(1, 1).pow(3),
                                deriv_factored(12, {{lin(0, 1), 1}, {lin(1, 1), 2}})),
                     log_block(1, 1, 1),
                     poly_block(Poly::monomial(Rational(16), 3), deriv_poly_sign()), 1));
    // (3t+1)(-t+1)^3 log(2t+1) / (32 t^3)
    v->push_back(nld(poly_block(lin(1, 3) * lin(1, -1).pow(3),
                                deriv_factored(-12, {{lin(0, 1), 1}, {lin(-1, 1), 2}})),
                     log_block(1, 2, 1),
                     poly_block(Poly::monomial(Rational(32), 3), deriv_poly_sign()), 1));
    // (-t+1)(185t^4 + 698t^3 - 217t^2 - 160t + 6) / (64 t (3t+1)^2 (t+3))
    v->push_back(
        nd(poly_block(lin(1, -1) * quartic(),
                      deriv_factored(1, {{from_ll({-166, -114, 2745, -2052, -925}), 1}})),
           poly_block(Poly::monomial(Rational(64), 1) * lin(1, 3).pow(2) * lin(3, 1),
                      deriv_poly_sign()),
           1));
    return v;
  }();
  return *plan;
}

const BlockPlan& xi_plan() {
  static const auto* plan = [] {
    auto* b = new BlockPlan;
    b->block = cert::Block::quotient(lin(1, 3) * lin(1, -1).pow(3),
                                     Poly::monomial(Rational(16), 3));
    b->mono = deriv_factored(-48, {{lin(0, 1), 2}, {lin(-1, 1), 2}, {lin(1, 1), 2}});
    return b;
  }();
  return *plan;
}

const BlockPlan& rho_sqrt_plan() {
  static const auto* plan = [] {
    auto* b = new BlockPlan;
    b->block = cert::Block::sqrt_affine(Rational(1, 16), Rational(3), Rational(1));
    b->mono = rule();
    return b;
  }();
  return *plan;
}

const BlockPlan& rho_cube_plan() {
  static const auto* plan = [] {
    auto* b = new BlockPlan;
    b->block = cert::Block::power_odd(lin(1, -1), lin(0, 1), 3);
    b->inner_mono = deriv_factored(-1, {});
    return b;
  }();
  return *plan;
}

const FactoredDerivative& y_deriv_factored() {
  static const auto* fd = [] {
    auto* f = new FactoredDerivative;
    // 3 t^2 (144 + 736t + ... - 5t^6) exp(h2(t))
    //   / ( (2t+1)(3t+1)^4 (t^2+2t-3)^2 )
    f->coef = Rational(3);
    f->factors = {{lin(0, 1), 2},
                  {dY_num(), 1},
                  {lin(1, 2), -1},
                  {lin(1, 3), -4},
                  {from_ll({-3, 2, 1}), -2}};
    f->exp_factor = true;
    return f;
  }();
  return *fd;
}

}  // namespace pgc::gn
