#include "pgc/bounds.hpp"

namespace pgc {

using cert::make_node;
using cert::NodePtr;

namespace {

int interval_sign(const Interval& v) {
  if (v.lo().sign() > 0) return 1;
  if (v.hi().sign() < 0) return -1;
  return 0;
}

void poly_sign_rec(const Poly& p, const Rational& lo, const Rational& hi, int depth,
                   int max_depth, int& sign, std::vector<NodePtr>& pieces) {
  Interval piece(lo, hi);
  Interval horner = p.eval_interval(piece);
  int s = interval_sign(horner);
  if (s == 0) {
    if (depth >= max_depth)
      throw IndeterminateSignError("sign of " + p.str() + " on " + piece.str() +
                                   " not determined within depth " +
                                   std::to_string(max_depth));
    Rational mid = piece.midpoint();
    poly_sign_rec(p, lo, mid, depth + 1, max_depth, sign, pieces);
    poly_sign_rec(p, mid, hi, depth + 1, max_depth, sign, pieces);
    return;
  }
  if (sign == 0) sign = s;
  if (sign != s)
    throw IndeterminateSignError("mixed signs of " + p.str() + " on " + piece.str());
  pieces.push_back(make_node(cert::PieceData{piece, horner}));
}

NodePtr factor_node(const Poly& base, int exponent, const Interval& domain,
                    int max_depth, int& sign_out) {
  NodePtr ps = poly_sign(base, domain, max_depth);
  int base_sign = ps->as<cert::PolySignData>()->sign;
  int sign = exponent % 2 == 0 ? 1 : base_sign;
  sign_out = sign;
  return make_node(cert::FactorData{base, exponent, sign}, {ps});
}

// Builds the DerivFactored node for block p/q with the transcription
// guard: p'q - pq' must expand to coef * prod(base^exp).
NodePtr deriv_factored_node(const Poly& p, const Poly& q, const gn::MonotoneSpec& spec,
                            const Interval& domain, int max_depth) {
  Poly cross = p.derivative() * q - p * q.derivative();
  Poly factored = Poly::constant(spec.coef);
  for (const auto& [base, exp] : spec.factors) {
    if (exp < 1) throw UsageError("factored derivative exponent must be >= 1");
    factored = factored * base.pow(static_cast<unsigned>(exp));
  }
  if (cross != factored)
    throw Error("transcribed derivative factorization does not match: got " +
                factored.str() + ", expected " + cross.str());
  int sign = spec.coef.sign();
  std::vector<NodePtr> children;
  for (const auto& [base, exp] : spec.factors) {
    int fs = 0;
    children.push_back(factor_node(base, exp, domain, max_depth, fs));
    sign *= fs;
  }
  return make_node(cert::DerivFactoredData{p, q, spec.coef, sign}, std::move(children));
}

int rule_direction(const cert::Block& block) {
  if (block.a.is_zero()) return 0;
  return block.a.sign() * block.c.sign();
}

struct EndpointValue {
  Interval value;
  NodePtr point;  // transcendental evidence, when one is needed
};

EndpointValue block_value_at(const cert::Block& block, const Rational& e,
                             const BoundConfig& cfg) {
  using Kind = cert::Block::Kind;
  switch (block.kind) {
    case Kind::Poly:
      return {Interval(block.p.eval(e)), nullptr};
    case Kind::Quotient: {
      Rational qe = block.q.eval(e);
      if (qe.is_zero())
        throw PoleError("block denominator " + block.q.str() + " vanishes at " + e.str());
      return {Interval(block.p.eval(e) / qe), nullptr};
    }
    case Kind::PowerOdd: {
      Rational qe = block.q.eval(e);
      if (qe.is_zero())
        throw PoleError("block denominator " + block.q.str() + " vanishes at " + e.str());
      return {Interval((block.p.eval(e) / qe).pow(block.exponent)), nullptr};
    }
    case Kind::LogAffine: {
      NodePtr pt = log_point(block.a * e + block.b, cfg.budget);
      return {Interval(block.c) * pt->result, pt};
    }
    case Kind::SqrtAffine: {
      NodePtr pt = sqrt_point(block.a * e + block.b, cfg.budget);
      return {Interval(block.c) * pt->result, pt};
    }
    case Kind::LogQuotient: {
      Rational qe = block.q.eval(e);
      if (qe.is_zero())
        throw PoleError("block denominator " + block.q.str() + " vanishes at " + e.str());
      NodePtr pt = log_point(block.a * e + block.b, cfg.budget);
      return {Interval(block.p.eval(e)) * pt->result / Interval(qe), pt};
    }
  }
  throw Error("unreachable block kind");
}

}  // namespace

NodePtr poly_sign(const Poly& p, const Interval& x, int max_depth) {
  if (max_depth < 0) throw UsageError("poly_sign max_depth must be >= 0");
  int sign = 0;
  std::vector<NodePtr> pieces;
  poly_sign_rec(p, x.lo(), x.hi(), 0, max_depth, sign, pieces);
  return make_node(cert::PolySignData{p, x, sign}, std::move(pieces));
}

NodePtr certify_monotone(const gn::BlockPlan& plan, const Interval& domain,
                         const BoundConfig& cfg) {
  using Kind = cert::Block::Kind;
  const int max_depth = cfg.poly_max_depth;
  const cert::Block& block = plan.block;
  cert::MonotoneData data;
  data.has_block = true;
  data.block = block;
  std::vector<NodePtr> children;

  switch (block.kind) {
    case Kind::Poly: {
      if (plan.mono.kind == gn::MonotoneSpec::Kind::DerivPolySign) {
        Poly d = block.p.derivative();
        if (d.is_zero()) {
          data.direction = 0;
          break;
        }
        NodePtr ps = poly_sign(d, domain, max_depth);
        data.direction = ps->as<cert::PolySignData>()->sign;
        children.push_back(ps);
      } else {
        NodePtr df = deriv_factored_node(block.p, Poly::constant(Rational(1)), plan.mono,
                                         domain, max_depth);
        data.direction = df->as<cert::DerivFactoredData>()->sign;
        children.push_back(df);
      }
      break;
    }
    case Kind::Quotient: {
      if (interval_sign(block.q.eval_interval(domain)) == 0)
        throw PoleError("block denominator " + block.q.str() +
                        " not sign-definite on " + domain.str());
      NodePtr df = deriv_factored_node(block.p, block.q, plan.mono, domain, max_depth);
      data.direction = df->as<cert::DerivFactoredData>()->sign;
      children.push_back(df);
      break;
    }
    case Kind::PowerOdd: {
      if (block.exponent < 1 || block.exponent % 2 == 0)
        throw UsageError("power block exponent must be odd and positive");
      gn::BlockPlan inner;
      inner.block = cert::Block::quotient(block.p, block.q);
      inner.mono = plan.inner_mono;
      NodePtr m = certify_monotone(inner, domain, cfg);
      data.direction = m->as<cert::MonotoneData>()->direction;
      children.push_back(m);
      break;
    }
    case Kind::LogQuotient: {
      if (interval_sign(block.q.eval_interval(domain)) == 0)
        throw PoleError("block denominator " + block.q.str() +
                        " not sign-definite on " + domain.str());
      // Derivative numerator of p*log(w)/q with w = at+b:
      //   log(w) * w * (p'q - pq') + a*p*q, valid where w > 0.
      NodePtr lp_lo = log_point(block.a * domain.lo() + block.b, cfg.budget);
      NodePtr lp_hi = log_point(block.a * domain.hi() + block.b, cfg.budget);
      Interval log_range = Interval::hull(lp_lo->result, lp_hi->result);
      Poly w = Poly::affine(block.a, block.b);
      Poly cross_w = (block.p.derivative() * block.q - block.p * block.q.derivative()) * w;
      Poly rest = (block.p * block.q).scaled(block.a);
      Interval numerator = log_range * cross_w.eval_interval(domain) +
                           rest.eval_interval(domain);
      int sign = interval_sign(numerator);
      if (sign == 0)
        throw IndeterminateSignError("log-quotient derivative sign on " + domain.str() +
                                     " not determined; tighten the budget");
      children.push_back(make_node(cert::LogLinearSignData{sign}, {lp_lo, lp_hi}));
      data.direction = sign;
      break;
    }
    case Kind::LogAffine:
    case Kind::SqrtAffine:
      data.direction = rule_direction(block);
      break;
  }
  return make_node(std::move(data), std::move(children));
}

NodePtr certify_monotone_y(const Interval& domain, int max_depth) {
  const gn::FactoredDerivative& fd = gn::y_deriv_factored();
  int sign = fd.coef.sign();
  std::vector<NodePtr> factors;
  for (const auto& [base, exp] : fd.factors) {
    int fs = 0;
    factors.push_back(factor_node(base, exp, domain, max_depth, fs));
    sign *= fs;
  }
  NodePtr fsn = make_node(cert::FactoredSignData{fd.coef, fd.exp_factor, sign},
                          std::move(factors));
  cert::MonotoneData data;
  data.fn = "Y";
  data.direction = sign;
  return make_node(std::move(data), {fsn});
}

Enclosure monotone_uniform_bound(const gn::BlockPlan& plan, const Interval& domain,
                                 const BoundConfig& cfg) {
  NodePtr mono = certify_monotone(plan, domain, cfg);
  int direction = mono->as<cert::MonotoneData>()->direction;

  bool affine_const = (plan.block.kind == cert::Block::Kind::LogAffine ||
                       plan.block.kind == cert::Block::Kind::SqrtAffine) &&
                      plan.block.a.is_zero();
  bool single = domain.is_degenerate() || affine_const;

  std::vector<NodePtr> children{mono};
  Interval result;
  if (single) {
    EndpointValue v = block_value_at(plan.block, domain.lo(), cfg);
    if (v.point) children.push_back(v.point);
    result = v.value;
  } else {
    EndpointValue va = block_value_at(plan.block, domain.lo(), cfg);
    EndpointValue vb = block_value_at(plan.block, domain.hi(), cfg);
    if (va.point) children.push_back(va.point);
    if (vb.point) children.push_back(vb.point);
    if (direction > 0)
      result = Interval(va.value.lo(), vb.value.hi());
    else if (direction < 0)
      result = Interval(vb.value.lo(), va.value.hi());
    else
      result = Interval::hull(va.value, vb.value);
  }
  return {result, make_node(cert::EndpointBoundData{domain}, result, std::move(children))};
}

Enclosure summand_uniform_bound(const gn::SummandPlan& plan, const Interval& domain,
                                const BoundConfig& cfg) {
  Enclosure n = monotone_uniform_bound(plan.n, domain, cfg);
  Enclosure top = n;
  if (plan.has_l) {
    Enclosure l = monotone_uniform_bound(plan.l, domain, cfg);
    Interval v = top.first * l.first;
    top = {v, make_node(cert::ArithData{'*', 0}, v, {top.second, l.second})};
  }
  if (plan.has_d) {
    Enclosure d = monotone_uniform_bound(plan.d, domain, cfg);
    Interval v = top.first / d.first;
    top = {v, make_node(cert::ArithData{'/', 0}, v, {top.second, d.second})};
  }
  return top;
}

Interval aggregate_signed_sum(const std::vector<std::pair<Interval, int>>& parts) {
  if (parts.empty()) throw UsageError("aggregate of empty summand list");
  Interval acc;
  bool first = true;
  for (const auto& [iv, sign] : parts) {
    Interval term = sign >= 0 ? iv : -iv;
    acc = first ? term : acc + term;
    first = false;
  }
  return acc;
}

Enclosure aggregate_signed_sum(const std::vector<Enclosure>& parts,
                               const std::vector<int>& signs) {
  if (parts.size() != signs.size() || parts.empty())
    throw UsageError("aggregate arity mismatch");
  std::vector<std::pair<Interval, int>> ivs;
  std::vector<NodePtr> children;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ivs.emplace_back(parts[i].first, signs[i]);
    children.push_back(parts[i].second);
  }
  Interval v = aggregate_signed_sum(ivs);
  return {v, make_node(cert::AggSumData{signs}, v, std::move(children))};
}

RootBracket bracket_root_y(const Rational& target, const Interval& seed,
                           const Rational& width_goal, const BoundConfig& cfg) {
  if (width_goal <= Rational(0)) throw UsageError("width goal must be positive");
  NodePtr mono = certify_monotone_y(seed, cfg.poly_max_depth);
  if (mono->as<cert::MonotoneData>()->direction <= 0)
    throw Error("expected Y increasing on seed bracket");

  int degree = cfg.exp_degree_neg;
  auto eval_at = [&](const Rational& point) {
    EvalConfig ec{cfg.budget, cfg.exp_degree_pos, degree};
    return eval(FunctionId::Y, Interval(point), ec);
  };
  Enclosure left = eval_at(seed.lo());
  while (left.first.width() * Rational(4) > width_goal && degree < 64) {
    ++degree;
    left = eval_at(seed.lo());
  }
  Enclosure right = eval_at(seed.hi());

  auto check_left = [&](const Enclosure& e) {
    if (e.first.hi() < target) return;
    if (e.first.contains(target))
      throw PrecisionError(
          "Y enclosure at left endpoint straddles the target; "
          "increase the exp degree or tighten budgets");
    throw NoSignChangeError("Y already above target at seed left endpoint " +
                            e.first.str());
  };
  auto check_right = [&](const Enclosure& e) {
    if (e.first.lo() > target) return;
    if (e.first.contains(target))
      throw PrecisionError(
          "Y enclosure at right endpoint straddles the target; "
          "increase the exp degree or tighten budgets");
    throw NoSignChangeError("Y still below target at seed right endpoint " +
                            e.first.str());
  };
  check_left(left);
  check_right(right);

  Rational lo = seed.lo();
  Rational hi = seed.hi();
  while (hi - lo > width_goal) {
    Rational mid = (lo + hi) / Rational(2);
    Enclosure middle = eval_at(mid);
    if (middle.first.hi() < target) {
      lo = mid;
      left = std::move(middle);
    } else if (middle.first.lo() > target) {
      hi = mid;
      right = std::move(middle);
    } else {
      throw PrecisionError(
          "Y enclosure at bisection midpoint straddles the target; "
          "increase the exp degree or tighten budgets");
    }
  }

  Interval bracket(lo, hi);
  NodePtr node = make_node(cert::RootBracketData{"Y", target, bracket},
                           {mono, left.second, right.second});
  return {bracket, node};
}

}  // namespace pgc
