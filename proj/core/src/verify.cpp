#include "pgc/verify.hpp"

#include <map>
#include <optional>

#include "pgc/decimal.hpp"
#include "pgc/gn.hpp"

namespace pgc {

namespace {

using cert::Node;
using cert::NodePtr;

struct Reject {
  std::string path;
  std::string reason;
};

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw Reject{path, reason};
}

std::string child_path(const std::string& path, const Node& child, std::size_t index) {
  return path + "/" + child.kind_name() + "[" + std::to_string(index) + "]";
}

int interval_sign(const Interval& v) {
  if (v.lo().sign() > 0) return 1;
  if (v.hi().sign() < 0) return -1;
  return 0;
}

class Checker {
 public:
  explicit Checker(const cert::BoundCertificate& certificate) : cert_(certificate) {}

  void run() {
    check_meta();
    for (const cert::Field& field : cert_.fields) check_field(field);
    check_containment_chain();
  }

 private:
  // --- meta ----------------------------------------------------------

  void check_meta() {
    if (cert_.digest != cert::compute_digest(cert_))
      fail("meta/digest", "digest mismatch");
    auto it = cert_.config.find("widen_digits");
    if (it == cert_.config.end()) fail("meta/config", "missing widen_digits");
    try {
      widen_digits_ = static_cast<unsigned>(std::stoul(it->second));
    } catch (...) {
      fail("meta/config", "malformed widen_digits");
    }
  }

  // --- generic value replay -------------------------------------------

  Interval value_of(const NodePtr& node, const std::string& path,
                    const Interval* argument) {
    const Node& n = *node;
    if (const auto* d = n.as<cert::ConstData>()) {
      require_children(n, 0, path);
      return Interval(d->value);
    }
    if (n.as<cert::VarData>()) {
      require_children(n, 0, path);
      if (!argument) fail(path, "variable outside an evaluation context");
      return *argument;
    }
    if (const auto* d = n.as<cert::ArithData>()) {
      Interval v = replay_arith(n, *d, path, argument);
      if (v != n.result) fail(path, "arithmetic replay mismatch");
      return v;
    }
    if (const auto* d = n.as<cert::PolyEvalData>()) {
      require_children(n, 0, path);
      if (!argument) fail(path, "polynomial outside an evaluation context");
      if (d->poly.eval_interval(*argument) != n.result)
        fail(path, "polynomial replay mismatch");
      return n.result;
    }
    if (n.as<cert::WidenData>()) {
      require_children(n, 1, path);
      Interval inner = value_of(n.children[0], child_path(path, *n.children[0], 0), argument);
      if (widen_to_grid(inner, widen_digits_) != n.result)
        fail(path, "outward rounding replay mismatch");
      return n.result;
    }
    if (const auto* d = n.as<cert::FieldRefData>()) {
      require_children(n, 0, path);
      auto it = verified_.find(d->name);
      if (it == verified_.end())
        fail(path, "reference to unknown or not yet verified field '" + d->name + "'");
      return it->second;
    }
    if (const auto* d = n.as<cert::EvalData>()) {
      require_children(n, 1, path);
      Interval v = value_of(n.children[0], child_path(path, *n.children[0], 0), &d->argument);
      if (v != n.result) fail(path, "evaluation result mismatch");
      return v;
    }
    if (n.as<cert::ExpData>()) return replay_wrapper(n, path, argument, Wrapper::Exp);
    if (n.as<cert::LogData>()) return replay_wrapper(n, path, argument, Wrapper::Log);
    if (n.as<cert::SqrtData>()) return replay_wrapper(n, path, argument, Wrapper::Sqrt);
    if (const auto* d = n.as<cert::ExpPointData>()) {
      require_children(n, 0, path);
      check_exp_point(*d, n.result, path);
      return n.result;
    }
    if (const auto* d = n.as<cert::LogPointData>()) {
      require_children(n, 0, path);
      check_log_point(*d, n.result, path);
      return n.result;
    }
    if (const auto* d = n.as<cert::SqrtPointData>()) {
      require_children(n, 0, path);
      check_sqrt_point(*d, n.result, path);
      return n.result;
    }
    if (const auto* d = n.as<cert::EndpointBoundData>()) {
      return check_endpoint_bound(n, *d, path);
    }
    if (const auto* d = n.as<cert::AggSumData>()) {
      if (n.children.empty() || n.children.size() != d->signs.size())
        fail(path, "aggregation arity mismatch");
      Interval acc;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (d->signs[i] != 1 && d->signs[i] != -1) fail(path, "bad aggregation sign");
        Interval v = value_of(n.children[i], child_path(path, *n.children[i], i), argument);
        Interval term = d->signs[i] > 0 ? v : -v;
        acc = i == 0 ? term : acc + term;
      }
      if (acc != n.result) fail(path, "aggregated sum mismatch");
      return n.result;
    }
    fail(path, std::string("node kind '") + n.kind_name() + "' is not a value node");
  }

  void require_children(const Node& n, std::size_t count, const std::string& path) {
    if (n.children.size() != count)
      fail(path, "expected " + std::to_string(count) + " children, found " +
                     std::to_string(n.children.size()));
  }

  Interval replay_arith(const Node& n, const cert::ArithData& d, const std::string& path,
                        const Interval* argument) {
    auto child = [&](std::size_t i) {
      return value_of(n.children[i], child_path(path, *n.children[i], i), argument);
    };
    try {
      switch (d.op) {
        case '+': require_children(n, 2, path); return child(0) + child(1);
        case '-': require_children(n, 2, path); return child(0) - child(1);
        case '*': require_children(n, 2, path); return child(0) * child(1);
        case '/': require_children(n, 2, path); return child(0) / child(1);
        case 'n': require_children(n, 1, path); return -child(0);
        case '^': require_children(n, 1, path); return child(0).pow(d.exponent);
        default: fail(path, "unknown arithmetic op");
      }
    } catch (const DomainError& e) {
      fail(path, e.what());
    }
  }

  // --- transcendental points -------------------------------------------

  void check_exp_point(const cert::ExpPointData& d, const Interval& result,
                       const std::string& path) {
    if (d.degree < 1) fail(path, "exp degree below 1");
    if (d.point <= Rational(-1) || d.point >= Rational(1))
      fail(path, "exp point outside (-1,1)");
    Rational term(1), sum(1);
    for (int i = 1; i < d.degree; ++i) {
      term = term * d.point / Rational(i);
      sum += term;
    }
    if (sum != d.partial) fail(path, "exp partial sum mismatch");
    Rational t_k = term * d.point / Rational(d.degree);
    Rational lo, hi;
    if (d.point.is_zero()) {
      lo = Rational(0);
      hi = Rational(0);
    } else if (d.point.sign() > 0) {
      lo = t_k;
      hi = Rational(3) * t_k;
    } else if (d.degree % 2 == 0) {
      lo = (Rational(1) + d.point) * t_k;
      hi = t_k;
    } else {
      lo = t_k;
      hi = (Rational(1) + d.point) * t_k;
    }
    if (lo != d.rem_lo || hi != d.rem_hi) fail(path, "exp remainder bracket mismatch");
    if (Interval(d.partial + lo, d.partial + hi) != result)
      fail(path, "exp enclosure mismatch");
  }

  void check_log_point(const cert::LogPointData& d, const Interval& result,
                       const std::string& path) {
    if (d.x <= Rational(0)) fail(path, "log point not positive");
    if (d.u != (d.x - Rational(1)) / (d.x + Rational(1)))
      fail(path, "log series parameter mismatch");
    if (d.terms < 1 || d.terms % 2 == 0) fail(path, "log term count must be odd");
    Rational acc(0), upow(1);
    const Rational u2 = d.u * d.u;
    for (int i = 1; i <= d.terms; i += 2) {
      upow = i == 1 ? d.u : upow * u2;
      acc += upow / Rational(i);
    }
    if (Rational(2) * acc != d.partial) fail(path, "log partial sum mismatch");
    Rational tail_abs;
    if (d.u.is_zero())
      tail_abs = Rational(0);
    else
      tail_abs = Rational(2) * upow.abs() * u2 /
                 (Rational(d.terms + 2) * (Rational(1) - u2));
    Rational lo = d.u.sign() >= 0 ? Rational(0) : -tail_abs;
    Rational hi = d.u.sign() >= 0 ? tail_abs : Rational(0);
    if (lo != d.tail_lo || hi != d.tail_hi) fail(path, "log tail bracket mismatch");
    if (Interval(d.partial + lo, d.partial + hi) != result)
      fail(path, "log enclosure mismatch");
  }

  void check_sqrt_point(const cert::SqrtPointData& d, const Interval& result,
                        const std::string& path) {
    if (d.radicand < Rational(0)) fail(path, "sqrt radicand negative");
    if (result.lo() < Rational(0)) fail(path, "sqrt bracket extends below zero");
    if (result.lo() * result.lo() != d.sq_lo || result.hi() * result.hi() != d.sq_hi)
      fail(path, "sqrt endpoint squares mismatch");
    if (d.sq_lo > d.radicand || d.radicand > d.sq_hi)
      fail(path, "sqrt bracket does not enclose radicand");
  }

  // --- monotone wrappers ------------------------------------------------

  enum class Wrapper { Exp, Log, Sqrt };

  Interval replay_wrapper(const Node& n, const std::string& path, const Interval* argument,
                          Wrapper which) {
    auto is_point = [&](const NodePtr& c) {
      switch (which) {
        case Wrapper::Exp: return c->as<cert::ExpPointData>() != nullptr;
        case Wrapper::Log: return c->as<cert::LogPointData>() != nullptr;
        case Wrapper::Sqrt: return c->as<cert::SqrtPointData>() != nullptr;
      }
      return false;
    };
    if (n.children.empty()) fail(path, "empty enclosure node");
    std::size_t first_point = is_point(n.children[0]) ? 0 : 1;
    std::size_t points = n.children.size() - first_point;
    if (points < 1 || points > 2) fail(path, "expected one or two point children");
    for (std::size_t i = first_point; i < n.children.size(); ++i)
      if (!is_point(n.children[i]))
        fail(child_path(path, *n.children[i], i), "expected a point evidence node");

    auto point_input = [&](std::size_t i) -> Rational {
      const Node& c = *n.children[first_point + i];
      if (const auto* p = c.as<cert::ExpPointData>()) return p->point;
      if (const auto* p = c.as<cert::LogPointData>()) return p->x;
      return c.as<cert::SqrtPointData>()->radicand;
    };

    Interval input;
    if (first_point == 1) {
      input = value_of(n.children[0], child_path(path, *n.children[0], 0), argument);
    } else {
      input = Interval(point_input(0), point_input(points - 1));
    }
    // Domain preconditions of the wrapped function.
    switch (which) {
      case Wrapper::Exp:
        if (input.lo() <= Rational(-1) || input.hi() >= Rational(1))
          fail(path, "exp input outside (-1,1)");
        break;
      case Wrapper::Log:
        if (input.lo() <= Rational(0)) fail(path, "log input not positive");
        break;
      case Wrapper::Sqrt:
        if (input.lo() < Rational(0)) fail(path, "sqrt input negative");
        break;
    }
    if (points == 1) {
      if (!input.is_degenerate() || point_input(0) != input.lo())
        fail(path, "point evidence does not match input");
    } else {
      if (point_input(0) != input.lo() || point_input(1) != input.hi())
        fail(path, "point evidence does not match input endpoints");
    }
    std::vector<Interval> values;
    for (std::size_t i = 0; i < points; ++i) {
      std::size_t idx = first_point + i;
      values.push_back(value_of(n.children[idx], child_path(path, *n.children[idx], idx),
                                argument));
    }
    // exp, log and sqrt are increasing, so endpoint enclosures hull the range.
    Interval computed = points == 1 ? values[0] : Interval(values[0].lo(), values[1].hi());
    if (computed != n.result) fail(path, "enclosure hull mismatch");
    return n.result;
  }

  // --- polynomial sign and monotonicity ---------------------------------

  // Verifies a PolySign node and returns its sign. `required` is the
  // interval the caller needs covered.
  int check_poly_sign(const Node& n, const Interval& required, const std::string& path) {
    const auto* d = n.as<cert::PolySignData>();
    if (!d) fail(path, "expected polynomial sign evidence");
    if (d->sign != 1 && d->sign != -1) fail(path, "bad polynomial sign value");
    if (!d->domain.contains(required))
      fail(path, "sign evidence does not cover the required interval");
    if (n.children.empty()) fail(path, "sign evidence without pieces");
    Rational cursor = d->domain.lo();
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      const Node& c = *n.children[i];
      const auto* piece = c.as<cert::PieceData>();
      std::string piece_loc = child_path(path, c, i);
      if (!piece) fail(piece_loc, "expected a subdivision piece");
      if (piece->domain.lo() != cursor) fail(piece_loc, "pieces do not tile the domain");
      cursor = piece->domain.hi();
      if (d->poly.eval_interval(piece->domain) != piece->horner)
        fail(piece_loc, "interval Horner replay mismatch");
      if (interval_sign(piece->horner) != d->sign)
        fail(piece_loc, "piece enclosure does not have the claimed sign");
    }
    if (cursor != d->domain.hi()) fail(path, "pieces do not reach the domain end");
    return d->sign;
  }

  // Verifies a Factor node (base^exponent) and returns its sign.
  int check_factor(const Node& n, const Interval& required, const std::string& path) {
    const auto* d = n.as<cert::FactorData>();
    if (!d) fail(path, "expected a factor node");
    if (d->exponent == 0) fail(path, "factor exponent must be nonzero");
    if (n.children.size() != 1) fail(path, "factor needs exactly one sign child");
    const Node& ps = *n.children[0];
    const auto* psd = ps.as<cert::PolySignData>();
    if (!psd || psd->poly != d->base) fail(path, "factor base mismatch");
    int base_sign = check_poly_sign(ps, required, child_path(path, ps, 0));
    int expect = d->exponent % 2 == 0 ? 1 : base_sign;
    if (d->sign != expect) fail(path, "factor sign inconsistent with parity");
    return d->sign;
  }

  // Verifies a DerivFactored node: the polynomial identity
  // p'q - pq' == coef * prod(base^exp) plus individual factor signs.
  int check_deriv_factored(const Node& n, const Poly& p, const Poly& q,
                           const Interval& required, const std::string& path) {
    const auto* d = n.as<cert::DerivFactoredData>();
    if (!d) fail(path, "expected factored derivative evidence");
    if (d->numer != p || d->denom != q) fail(path, "derivative block mismatch");
    Poly factored = Poly::constant(d->coef);
    int sign = d->coef.sign();
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      const Node& c = *n.children[i];
      const auto* f = c.as<cert::FactorData>();
      std::string loc = child_path(path, c, i);
      if (!f) fail(loc, "expected a factor node");
      if (f->exponent < 1) fail(loc, "derivative factor exponent must be >= 1");
      factored = factored * f->base.pow(static_cast<unsigned>(f->exponent));
      sign *= check_factor(c, required, loc);
    }
    if (factored != p.derivative() * q - p * q.derivative())
      fail(path, "factored form does not expand to the derivative");
    if (sign == 0 || sign != d->sign) fail(path, "derivative sign mismatch");
    return sign;
  }

  // Verifies a Monotone node against `required` and returns its direction.
  int check_monotone(const Node& n, const Interval& required, const std::string& path) {
    const auto* d = n.as<cert::MonotoneData>();
    if (!d) fail(path, "expected a monotonicity certificate");
    if (d->has_block) {
      const cert::Block& block = d->block;
      using Kind = cert::Block::Kind;
      switch (block.kind) {
        case Kind::Poly: {
          if (n.children.empty()) {
            if (!block.p.derivative().is_zero() || d->direction != 0)
              fail(path, "missing sign evidence for a non-constant block");
            return 0;
          }
          if (n.children.size() != 1) fail(path, "expected one sign child");
          const Node& c = *n.children[0];
          int direction;
          if (const auto* psd = c.as<cert::PolySignData>()) {
            if (psd->poly != block.p.derivative())
              fail(child_path(path, c, 0), "sign evidence is not for the derivative");
            direction = check_poly_sign(c, required, child_path(path, c, 0));
          } else {
            direction = check_deriv_factored(c, block.p, Poly::constant(Rational(1)),
                                             required, child_path(path, c, 0));
          }
          if (direction != d->direction) fail(path, "direction mismatch");
          return direction;
        }
        case Kind::Quotient: {
          if (n.children.size() != 1) fail(path, "expected one sign child");
          if (interval_sign(block.q.eval_interval(required)) == 0)
            fail(path, "cannot confirm block denominator is sign-definite");
          int direction = check_deriv_factored(*n.children[0], block.p, block.q, required,
                                               child_path(path, *n.children[0], 0));
          if (direction != d->direction) fail(path, "direction mismatch");
          return direction;
        }
        case Kind::PowerOdd: {
          if (block.exponent < 1 || block.exponent % 2 == 0)
            fail(path, "power block exponent must be odd and positive");
          if (n.children.size() != 1) fail(path, "expected inner monotonicity child");
          const Node& inner = *n.children[0];
          const auto* inner_data = inner.as<cert::MonotoneData>();
          if (!inner_data || !inner_data->has_block ||
              !(inner_data->block == cert::Block::quotient(block.p, block.q)))
            fail(child_path(path, inner, 0), "inner block mismatch");
          int direction = check_monotone(inner, required, child_path(path, inner, 0));
          if (direction != d->direction) fail(path, "direction mismatch");
          return direction;
        }
        case Kind::LogQuotient: {
          if (n.children.size() != 1) fail(path, "expected one sign child");
          const Node& lls = *n.children[0];
          const auto* lls_data = lls.as<cert::LogLinearSignData>();
          std::string lls_path = child_path(path, lls, 0);
          if (!lls_data) fail(lls_path, "expected a log-linear sign node");
          if (lls.children.size() != 2) fail(lls_path, "expected two log points");
          const auto* lp_lo = lls.children[0]->as<cert::LogPointData>();
          const auto* lp_hi = lls.children[1]->as<cert::LogPointData>();
          if (!lp_lo || lp_lo->x != block.a * required.lo() + block.b)
            fail(child_path(lls_path, *lls.children[0], 0), "log point argument mismatch");
          if (!lp_hi || lp_hi->x != block.a * required.hi() + block.b)
            fail(child_path(lls_path, *lls.children[1], 1), "log point argument mismatch");
          value_of(lls.children[0], child_path(lls_path, *lls.children[0], 0), nullptr);
          value_of(lls.children[1], child_path(lls_path, *lls.children[1], 1), nullptr);
          if (interval_sign(block.q.eval_interval(required)) == 0)
            fail(path, "cannot confirm block denominator is sign-definite");
          Interval log_range =
              Interval::hull(lls.children[0]->result, lls.children[1]->result);
          Poly w = Poly::affine(block.a, block.b);
          Poly cross_w =
              (block.p.derivative() * block.q - block.p * block.q.derivative()) * w;
          Poly rest = (block.p * block.q).scaled(block.a);
          Interval numerator = log_range * cross_w.eval_interval(required) +
                               rest.eval_interval(required);
          int sign = interval_sign(numerator);
          if (sign == 0) fail(lls_path, "derivative numerator sign not determined");
          if (sign != lls_data->sign || sign != d->direction)
            fail(path, "direction mismatch");
          return sign;
        }
        case Kind::LogAffine:
        case Kind::SqrtAffine: {
          if (!n.children.empty()) fail(path, "affine rule takes no children");
          int direction = block.a.is_zero() ? 0 : block.a.sign() * block.c.sign();
          if (direction != d->direction) fail(path, "direction mismatch");
          return direction;
        }
      }
      fail(path, "unreachable block kind");
    }
    // Named-function monotonicity from the transcribed factored derivative.
    if (d->fn != "Y") fail(path, "unknown function in monotonicity certificate");
    if (n.children.size() != 1) fail(path, "expected factored sign child");
    const Node& fs = *n.children[0];
    const auto* fsd = fs.as<cert::FactoredSignData>();
    if (!fsd) fail(child_path(path, fs, 0), "expected factored sign evidence");
    const gn::FactoredDerivative& table = gn::y_deriv_factored();
    if (fsd->coef != table.coef || fsd->exp_factor != table.exp_factor ||
        fs.children.size() != table.factors.size())
      fail(child_path(path, fs, 0), "factored derivative differs from the transcribed form");
    int sign = fsd->coef.sign();
    for (std::size_t i = 0; i < fs.children.size(); ++i) {
      const Node& c = *fs.children[i];
      const auto* f = c.as<cert::FactorData>();
      std::string loc = child_path(child_path(path, fs, 0), c, i);
      if (!f || f->base != table.factors[i].first || f->exponent != table.factors[i].second)
        fail(loc, "factor differs from the transcribed form");
      sign *= check_factor(c, required, loc);
    }
    if (sign != fsd->sign || sign != d->direction) fail(path, "direction mismatch");
    return sign;
  }

  // --- endpoint bounds ---------------------------------------------------

  Interval check_endpoint_bound(const Node& n, const cert::EndpointBoundData& d,
                                const std::string& path) {
    if (n.children.empty()) fail(path, "endpoint bound without monotonicity child");
    const Node& mono = *n.children[0];
    const auto* mono_data = mono.as<cert::MonotoneData>();
    if (!mono_data || !mono_data->has_block)
      fail(child_path(path, mono, 0), "expected a block monotonicity certificate");
    const cert::Block& block = mono_data->block;
    int direction = check_monotone(mono, d.domain, child_path(path, mono, 0));
    endpoint_domains_.emplace_back(current_field_, d.domain);

    using Kind = cert::Block::Kind;
    bool affine_const =
        (block.kind == Kind::LogAffine || block.kind == Kind::SqrtAffine) && block.a.is_zero();
    bool single = d.domain.is_degenerate() || affine_const;

    std::size_t next_child = 1;
    auto value_at = [&](const Rational& endpoint) -> Interval {
      switch (block.kind) {
        case Kind::Poly:
          return Interval(block.p.eval(endpoint));
        case Kind::Quotient: {
          Rational qv = block.q.eval(endpoint);
          if (qv.is_zero()) fail(path, "block denominator vanishes at an endpoint");
          return Interval(block.p.eval(endpoint) / qv);
        }
        case Kind::PowerOdd: {
          Rational qv = block.q.eval(endpoint);
          if (qv.is_zero()) fail(path, "block denominator vanishes at an endpoint");
          return Interval((block.p.eval(endpoint) / qv).pow(block.exponent));
        }
        case Kind::LogAffine:
        case Kind::SqrtAffine: {
          if (next_child >= n.children.size())
            fail(path, "missing endpoint evidence child");
          const NodePtr& c = n.children[next_child];
          std::string loc = child_path(path, *c, next_child);
          ++next_child;
          Rational expected = block.a * endpoint + block.b;
          if (block.kind == Kind::LogAffine) {
            const auto* p = c->as<cert::LogPointData>();
            if (!p || p->x != expected) fail(loc, "endpoint log argument mismatch");
          } else {
            const auto* p = c->as<cert::SqrtPointData>();
            if (!p || p->radicand != expected)
              fail(loc, "endpoint sqrt radicand mismatch");
          }
          return Interval(block.c) * value_of(c, loc, nullptr);
        }
        case Kind::LogQuotient: {
          if (next_child >= n.children.size())
            fail(path, "missing endpoint evidence child");
          const NodePtr& c = n.children[next_child];
          std::string loc = child_path(path, *c, next_child);
          ++next_child;
          const auto* p = c->as<cert::LogPointData>();
          if (!p || p->x != block.a * endpoint + block.b)
            fail(loc, "endpoint log argument mismatch");
          Rational qv = block.q.eval(endpoint);
          if (qv.is_zero()) fail(path, "block denominator vanishes at an endpoint");
          return Interval(block.p.eval(endpoint)) * value_of(c, loc, nullptr) /
                 Interval(qv);
        }
      }
      fail(path, "unreachable block kind");
    };

    Interval computed;
    if (single) {
      computed = value_at(d.domain.lo());
    } else {
      Interval va = value_at(d.domain.lo());
      Interval vb = value_at(d.domain.hi());
      if (direction > 0)
        computed = Interval(va.lo(), vb.hi());
      else if (direction < 0)
        computed = Interval(vb.lo(), va.hi());
      else
        computed = Interval::hull(va, vb);
    }
    if (next_child != n.children.size()) fail(path, "unexpected extra children");
    if (computed != n.result) fail(path, "endpoint bound mismatch");
    return n.result;
  }

  // --- expression shape matching ----------------------------------------

  void match_expr(const ExprPtr& e, const NodePtr& node, const std::string& path) {
    const Node& n = *node;
    auto expect = [&](bool ok, const char* what) {
      if (!ok) fail(path, std::string("evidence does not match the defining expression: ") + what);
    };
    switch (e->kind) {
      case Expr::Kind::Const: {
        const auto* d = n.as<cert::ConstData>();
        expect(d && d->value == e->value, "constant");
        return;
      }
      case Expr::Kind::Var:
        expect(n.as<cert::VarData>() != nullptr, "variable");
        return;
      case Expr::Kind::Poly: {
        const auto* d = n.as<cert::PolyEvalData>();
        expect(d && d->poly == e->poly, "polynomial");
        return;
      }
      case Expr::Kind::Add:
      case Expr::Kind::Sub:
      case Expr::Kind::Mul:
      case Expr::Kind::Div: {
        const auto* d = n.as<cert::ArithData>();
        char op = e->kind == Expr::Kind::Add   ? '+'
                  : e->kind == Expr::Kind::Sub ? '-'
                  : e->kind == Expr::Kind::Mul ? '*'
                                               : '/';
        expect(d && d->op == op && n.children.size() == 2, "operator");
        match_expr(e->a, n.children[0], child_path(path, *n.children[0], 0));
        match_expr(e->b, n.children[1], child_path(path, *n.children[1], 1));
        return;
      }
      case Expr::Kind::Neg: {
        const auto* d = n.as<cert::ArithData>();
        expect(d && d->op == 'n' && n.children.size() == 1, "negation");
        match_expr(e->a, n.children[0], child_path(path, *n.children[0], 0));
        return;
      }
      case Expr::Kind::Pow: {
        const auto* d = n.as<cert::ArithData>();
        expect(d && d->op == '^' && d->exponent == e->exponent && n.children.size() == 1,
               "power");
        match_expr(e->a, n.children[0], child_path(path, *n.children[0], 0));
        return;
      }
      case Expr::Kind::Exp:
      case Expr::Kind::Log:
      case Expr::Kind::Sqrt: {
        bool tagged = e->kind == Expr::Kind::Exp   ? n.as<cert::ExpData>() != nullptr
                      : e->kind == Expr::Kind::Log ? n.as<cert::LogData>() != nullptr
                                                   : n.as<cert::SqrtData>() != nullptr;
        expect(tagged && !n.children.empty(), "enclosure wrapper");
        // The first child must be the argument subtree; point children follow.
        bool first_is_point = n.children[0]->as<cert::ExpPointData>() ||
                              n.children[0]->as<cert::LogPointData>() ||
                              n.children[0]->as<cert::SqrtPointData>();
        expect(!first_is_point, "enclosure wrapper without argument evidence");
        match_expr(e->a, n.children[0], child_path(path, *n.children[0], 0));
        return;
      }
    }
    fail(path, "unreachable expression kind");
  }

  // --- field templates ---------------------------------------------------

  void check_block_bound(const NodePtr& node, const cert::Block& expected,
                         const std::string& path) {
    const auto* d = node->as<cert::EndpointBoundData>();
    if (!d) fail(path, "expected an endpoint bound");
    const auto* mono =
        node->children.empty() ? nullptr : node->children[0]->as<cert::MonotoneData>();
    if (!mono || !mono->has_block || !(mono->block == expected))
      fail(path, "bound is not over the expected block");
  }

  void check_summand_shape(const NodePtr& node, const gn::SummandPlan& plan,
                           const std::string& path) {
    const NodePtr* n_part = &node;
    if (plan.has_d) {
      const auto* d = node->as<cert::ArithData>();
      if (!d || d->op != '/' || node->children.size() != 2)
        fail(path, "expected a numerator/denominator quotient");
      check_block_bound(node->children[1], plan.d.block,
                        child_path(path, *node->children[1], 1));
      n_part = &node->children[0];
    }
    if (plan.has_l) {
      const auto* d = (*n_part)->as<cert::ArithData>();
      if (!d || d->op != '*' || (*n_part)->children.size() != 2)
        fail(path, "expected a block product");
      check_block_bound((*n_part)->children[0], plan.n.block,
                        child_path(path, *(*n_part)->children[0], 0));
      check_block_bound((*n_part)->children[1], plan.l.block,
                        child_path(path, *(*n_part)->children[1], 1));
    } else {
      check_block_bound(*n_part, plan.n.block, path);
    }
  }

  void check_agg_template(const cert::Field& field, const std::vector<gn::SummandPlan>& plan,
                          const std::string& path) {
    const auto* d = field.evidence->as<cert::AggSumData>();
    if (!d) fail(path, "expected an aggregated sum");
    if (field.evidence->children.size() != plan.size())
      fail(path, "wrong number of summands");
    for (std::size_t i = 0; i < plan.size(); ++i) {
      if (d->signs.size() != plan.size() || d->signs[i] != plan[i].sign)
        fail(path, "summand signs differ from the definition");
      check_summand_shape(field.evidence->children[i], plan[i],
                          child_path(path, *field.evidence->children[i], i));
    }
  }

  void check_fieldref_chain(const NodePtr& node, const std::vector<std::string>& names,
                            const std::string& path) {
    if (node->children.size() != names.size()) fail(path, "wrong reference arity");
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto* r = node->children[i]->as<cert::FieldRefData>();
      if (!r || r->name != names[i])
        fail(child_path(path, *node->children[i], i), "unexpected reference");
    }
  }

  // Template for rho: (sqrt-block * cube-block) * exp(widen(A_at_t0)).
  void check_rho_template(const cert::Field& field, const std::string& path) {
    const Node& n = *field.evidence;
    const auto* top = n.as<cert::ArithData>();
    if (!top || top->op != '*' || n.children.size() != 2)
      fail(path, "expected a product");
    const Node& left = *n.children[0];
    const auto* left_op = left.as<cert::ArithData>();
    if (!left_op || left_op->op != '*' || left.children.size() != 2)
      fail(child_path(path, left, 0), "expected a block product");
    check_block_bound(left.children[0], gn::rho_sqrt_plan().block,
                      child_path(child_path(path, left, 0), *left.children[0], 0));
    check_block_bound(left.children[1], gn::rho_cube_plan().block,
                      child_path(child_path(path, left, 0), *left.children[1], 1));
    const Node& exp_node = *n.children[1];
    std::string exp_path = child_path(path, exp_node, 1);
    if (!exp_node.as<cert::ExpData>() || exp_node.children.empty())
      fail(exp_path, "expected an exp enclosure");
    const Node& widen = *exp_node.children[0];
    if (!widen.as<cert::WidenData>() || widen.children.size() != 1)
      fail(child_path(exp_path, widen, 0), "expected an outward rounding step");
    check_fieldref_chain(exp_node.children[0], {"A_at_t0"}, child_path(exp_path, widen, 0));
  }

  // Template for exp_neg_nu: exp(neg(widen(nu))).
  void check_exp_neg_nu_template(const cert::Field& field, const std::string& path) {
    const Node& n = *field.evidence;
    if (!n.as<cert::ExpData>() || n.children.empty())
      fail(path, "expected an exp enclosure");
    const Node& neg = *n.children[0];
    const auto* neg_op = neg.as<cert::ArithData>();
    std::string neg_path = child_path(path, neg, 0);
    if (!neg_op || neg_op->op != 'n' || neg.children.size() != 1)
      fail(neg_path, "expected a negation");
    const Node& widen = *neg.children[0];
    if (!widen.as<cert::WidenData>() || widen.children.size() != 1)
      fail(child_path(neg_path, widen, 0), "expected an outward rounding step");
    check_fieldref_chain(neg.children[0], {"nu"}, child_path(neg_path, widen, 0));
  }

  void check_root_bracket(const cert::Field& field, const std::string& path) {
    const Node& n = *field.evidence;
    const auto* d = n.as<cert::RootBracketData>();
    if (!d) fail(path, "expected a root bracket");
    if (d->fn != "Y" || d->target != Rational(1))
      fail(path, "root bracket is not for Y(t) = 1");
    if (n.children.size() != 3) fail(path, "root bracket needs three children");
    int direction = check_monotone(*n.children[0], d->bracket,
                                   child_path(path, *n.children[0], 0));
    auto check_eval = [&](const NodePtr& node, const Rational& at, std::size_t idx) {
      const auto* ev = node->as<cert::EvalData>();
      std::string loc = child_path(path, *node, idx);
      if (!ev || ev->fn != "Y") fail(loc, "expected an evaluation of Y");
      if (ev->argument != Interval(at)) fail(loc, "evaluation is not at a bracket endpoint");
      if (node->children.size() != 1) fail(loc, "evaluation needs one child");
      match_expr(function_expr(FunctionId::Y), node->children[0],
                 child_path(loc, *node->children[0], 0));
      return value_of(node, loc, nullptr);
    };
    Interval left = check_eval(n.children[1], d->bracket.lo(), 1);
    Interval right = check_eval(n.children[2], d->bracket.hi(), 2);
    bool straddles = direction > 0
                         ? left.hi() < d->target && d->target < right.lo()
                         : right.hi() < d->target && d->target < left.lo();
    if (!straddles) fail(path, "bracket evaluations do not straddle the target");
    if (field.claimed != d->bracket) fail(path, "claim differs from the bracket");
  }

  // --- fields -------------------------------------------------------------

  void check_field(const cert::Field& field) {
    current_field_ = field.name;
    const std::string path = field.name;
    if (verified_.count(field.name)) fail(path, "duplicate field");

    if (field.name == "t0") {
      check_root_bracket(field, path);
    } else if (field.name == "R1") {
      check_block_bound(field.evidence, gn::xi_plan().block, path);
      replay_claim(field, path);
    } else if (field.name == "B0_at_t0") {
      check_agg_template(field, gn::b0_plan(), path);
      replay_claim(field, path);
    } else if (field.name == "B2_at_t0") {
      check_agg_template(field, gn::b2_plan(), path);
      replay_claim(field, path);
    } else if (field.name == "A_at_t0") {
      check_agg_template(field, gn::a_plan(), path);
      replay_claim(field, path);
    } else if (field.name == "nu") {
      if (!field.evidence->as<cert::AggSumData>())
        fail(path, "expected an aggregated sum");
      check_fieldref_chain(field.evidence, {"R1", "B0_at_t0", "B2_at_t0"}, path);
      replay_claim(field, path);
    } else if (field.name == "rho") {
      check_rho_template(field, path);
      replay_claim(field, path);
    } else if (field.name == "exp_neg_nu") {
      check_exp_neg_nu_template(field, path);
      replay_claim(field, path);
    } else {
      fail(path, "unknown field name");
    }
    verified_.emplace(field.name, field.claimed);
  }

  void replay_claim(const cert::Field& field, const std::string& path) {
    Interval value = value_of(field.evidence, path, nullptr);
    if (value != field.claimed) fail(path, "claim differs from the replayed enclosure");
  }

  // Every uniform bound must cover the t0 bracket for the composition
  // "t0 in bracket, bound uniform on bracket => value at t0 in bound".
  void check_containment_chain() {
    auto t0 = verified_.find("t0");
    if (t0 == verified_.end()) {
      if (!endpoint_domains_.empty())
        fail(endpoint_domains_.front().first, "uniform bound without a t0 bracket");
      return;
    }
    for (const auto& [field, domain] : endpoint_domains_)
      if (!domain.contains(t0->second))
        fail(field, "uniform bound does not cover the t0 bracket");
  }

  const cert::BoundCertificate& cert_;
  unsigned widen_digits_ = 0;
  std::map<std::string, Interval> verified_;
  std::string current_field_;
  std::vector<std::pair<std::string, Interval>> endpoint_domains_;
};

}  // namespace

VerifyResult verify(const cert::BoundCertificate& certificate) {
  try {
    Checker checker(certificate);
    checker.run();
    return {true, "", ""};
  } catch (const Reject& r) {
    return {false, r.path, r.reason};
  } catch (const Error& e) {
    return {false, "meta", e.what()};
  }
}

VerifyResult verify_text(std::string_view text) {
  try {
    cert::BoundCertificate certificate = cert::deserialize(text);
    return verify(certificate);
  } catch (const ParseError& e) {
    return {false, "meta/parse", e.what()};
  }
}

}  // namespace pgc
