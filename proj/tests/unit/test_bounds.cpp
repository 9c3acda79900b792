#include <doctest.h>

#include "pgc/bounds.hpp"
#include "pgc/decimal.hpp"
#include "support.hpp"

using namespace pgc;
using testsupport::Rng;

namespace {

const BoundConfig kConfig;

Interval reference_window(const char* lo, const char* hi) {
  return Interval(parse_decimal(lo), parse_decimal(hi));
}

}  // namespace

TEST_CASE("poly_sign certifies the derivative numerator on (0,1)") {
  cert::NodePtr node = poly_sign(gn::dY_num(), Interval(Rational(0), Rational(1)), 0);
  const auto* data = node->as<cert::PolySignData>();
  REQUIRE(data != nullptr);
  CHECK(data->sign == 1);
  CHECK(node->children.size() == 1);  // one Horner piece suffices
}

TEST_CASE("poly_sign certifies the sextic comparison on the bracket") {
  Poly sextic({Rational(92), Rational(-463), Rational(-1744), Rational(1646), Rational(616),
               Rational(2569), Rational(868)});
  cert::NodePtr node = poly_sign(sextic, gn::reference_bracket(), 60);
  CHECK(node->as<cert::PolySignData>()->sign == -1);
}

TEST_CASE("poly_sign is indeterminate through a zero") {
  Poly t({Rational(0), Rational(1)});
  CHECK_THROWS_AS(poly_sign(t, Interval(Rational(-1), Rational(1)), 0),
                  IndeterminateSignError);
  CHECK_THROWS_AS(poly_sign(t, Interval(Rational(-1), Rational(1)), 12),
                  IndeterminateSignError);
}

TEST_CASE("poly_sign spot check at random interior points") {
  Rng rng(61);
  for (int i = 0; i < 20; ++i) {
    // Random polynomial shifted away from zero keeps one sign.
    std::vector<Rational> coeffs;
    for (int k = static_cast<int>(rng.integer(0, 4)); k >= 0; --k)
      coeffs.push_back(rng.rational(20, 10));
    Poly base(coeffs);
    Interval domain = rng.interval(10, 10);
    Rational lift = base.eval_interval(domain).lo().abs() + Rational(1);
    Poly shifted = base + Poly::constant(lift);
    cert::NodePtr node = poly_sign(shifted, domain, 20);
    CHECK(node->as<cert::PolySignData>()->sign == 1);
    for (int s = 0; s < 100; ++s)
      CHECK(shifted.eval(rng.point_in(domain)).sign() == 1);
  }
}

TEST_CASE("transcribed derivative factorizations expand correctly") {
  // The construction guard throws if a factored form does not match;
  // certifying every block exercises all transcriptions.
  const Interval& bracket = gn::reference_bracket();
  for (const auto& plan : gn::b0_plan()) {
    CHECK(certify_monotone(plan.n, bracket, kConfig) != nullptr);
    if (plan.has_d) CHECK(certify_monotone(plan.d, bracket, kConfig) != nullptr);
  }
  for (const auto& plan : gn::b2_plan()) CHECK(certify_monotone(plan.n, bracket, kConfig) != nullptr);
  for (const auto& plan : gn::a_plan()) CHECK(certify_monotone(plan.n, bracket, kConfig) != nullptr);
  CHECK(certify_monotone(gn::xi_plan(), bracket, kConfig) != nullptr);
  CHECK(certify_monotone(gn::rho_cube_plan(), bracket, kConfig) != nullptr);
}

TEST_CASE("block directions match the quoted monotonicities") {
  const Interval& bracket = gn::reference_bracket();
  auto direction = [&](const gn::BlockPlan& plan) {
    return certify_monotone(plan, bracket, kConfig)->as<cert::MonotoneData>()->direction;
  };
  CHECK(direction(gn::b0_plan()[0].n) == 1);   // (3t-1)^2 (t+1)^6
  CHECK(direction(gn::b0_plan()[1].n) == -1);  // 3t^4 - 16t^3 + 6t^2 - 1
  CHECK(direction(gn::b0_plan()[2].n) == -1);  // (3t+1)^2 (-t+1)^6
  CHECK(direction(gn::b0_plan()[6].n) == 1);   // septic times (1-t)^2
  CHECK(direction(gn::b2_plan()[0].n) == -1);
  CHECK(direction(gn::b2_plan()[3].n) == 1);
  CHECK(direction(gn::a_plan()[0].n) == 1);
  CHECK(direction(gn::a_plan()[1].n) == -1);
  CHECK(direction(gn::a_plan()[2].n) == 1);
  CHECK(direction(gn::xi_plan()) == -1);
  CHECK(direction(gn::rho_sqrt_plan()) == 1);
  CHECK(direction(gn::rho_cube_plan()) == -1);
}

TEST_CASE("uniform bounds for every B0 summand sit inside the quoted windows") {
  const Interval& bracket = gn::reference_bracket();
  const auto& plan = gn::b0_plan();
  const Interval windows[7] = {
      reference_window("0.22495616614", "0.22495616711"),
      reference_window("-0.28456395530", "-0.28456395528"),
      reference_window("0.00029614190", "0.00029614191"),
      reference_window("0.32205815164", "0.32205815166"),
      reference_window("-0.23390568644", "-0.23390568627"),
      reference_window("1.03972077083", "1.03972077084"),
      reference_window("0.02472734758", "0.02472734763"),
  };
  for (int i = 0; i < 7; ++i) {
    Interval bound = summand_uniform_bound(plan[i], bracket, kConfig).first;
    CAPTURE(i);
    CHECK(bound.strictly_inside(windows[i]));
  }
}

TEST_CASE("uniform bounds for every B2 summand sit inside the quoted windows") {
  const Interval& bracket = gn::reference_bracket();
  const auto& plan = gn::b2_plan();
  const Interval windows[4] = {
      reference_window("0.01786492701", "0.01786492706"),
      reference_window("0.02019321732", "0.02019321738"),
      reference_window("0.00059228380", "0.00059228381"),
      reference_window("0.000244575293", "0.000244575295"),
  };
  for (int i = 0; i < 4; ++i) {
    Interval bound = summand_uniform_bound(plan[i], bracket, kConfig).first;
    CAPTURE(i);
    CHECK(bound.strictly_inside(windows[i]));
  }
}

TEST_CASE("uniform bounds for every A summand sit inside the quoted windows") {
  const Interval& bracket = gn::reference_bracket();
  const auto& plan = gn::a_plan();
  const Interval windows[3] = {
      reference_window("0.46777725975", "0.46777726082"),
      reference_window("0.01550842571", "0.01550842576"),
      reference_window("0.00640398701", "0.00640398706"),
  };
  for (int i = 0; i < 3; ++i) {
    Interval bound = summand_uniform_bound(plan[i], bracket, kConfig).first;
    CAPTURE(i);
    CHECK(bound.strictly_inside(windows[i]));
  }
}

TEST_CASE("aggregation reproduces the quoted B0 and B2 windows") {
  const Interval& bracket = gn::reference_bracket();
  auto aggregate = [&](const std::vector<gn::SummandPlan>& plan) {
    std::vector<std::pair<Interval, int>> parts;
    for (const auto& summand : plan)
      parts.emplace_back(summand_uniform_bound(summand, bracket, kConfig).first,
                         summand.sign);
    return aggregate_signed_sum(parts);
  };
  CHECK(aggregate(gn::b0_plan())
            .strictly_inside(reference_window("0.00073969896", "0.00073970019")));
  CHECK(aggregate(gn::b2_plan())
            .strictly_inside(reference_window("-0.001491431277", "-0.001491431155")));
  CHECK(aggregate(gn::a_plan())
            .strictly_inside(reference_window("0.48968967248", "0.48968967363")));

  CHECK(aggregate_signed_sum({{Interval(Rational(1), Rational(2)), -1}}) ==
        Interval(Rational(-2), Rational(-1)));
}

TEST_CASE("constant blocks give degenerate bounds") {
  gn::BlockPlan constant;
  constant.block = cert::Block::poly(Poly::constant(Rational(Int(5), Int(7))));
  gn::MonotoneSpec spec;
  spec.kind = gn::MonotoneSpec::Kind::DerivPolySign;
  constant.mono = spec;
  Interval bound = monotone_uniform_bound(constant, gn::reference_bracket(), kConfig).first;
  CHECK(bound == Interval(Rational(Int(5), Int(7))));
}

TEST_CASE("xi uniform bound over the bracket") {
  Interval bound = monotone_uniform_bound(gn::xi_plan(), gn::reference_bracket(), kConfig).first;
  // Endpoint orientation: decreasing, so the low end comes from t_plus.
  CHECK(bound.strictly_inside(reference_window("0.03819109762", "0.03819109772")));
}

TEST_CASE("root bracketing accepts the reference bracket as its own goal") {
  RootBracket rb = bracket_root_y(Rational(1), gn::reference_bracket(),
                                  parse_decimal("2e-10"), kConfig);
  CHECK(rb.bracket == gn::reference_bracket());
  const auto* data = rb.node->as<cert::RootBracketData>();
  REQUIRE(data != nullptr);
  CHECK(data->target == Rational(1));
}

TEST_CASE("root bracketing refines to a nested narrower bracket") {
  Rational goal(Int(1), pow10(12));
  RootBracket rb = bracket_root_y(Rational(1), gn::reference_bracket(), goal, kConfig);
  CHECK(rb.bracket.width() <= goal);
  CHECK(gn::reference_bracket().contains(rb.bracket));

  // Oracle: replaying the bisection at a tighter goal nests again.
  Rational tighter_goal(Int(1), pow10(13));
  RootBracket tighter = bracket_root_y(Rational(1), gn::reference_bracket(), tighter_goal,
                                       kConfig);
  CHECK(rb.bracket.contains(tighter.bracket));
}

TEST_CASE("root bracketing detects a seed without a sign change") {
  Interval seed(Rational(Int(1), Int(10)), Rational(Int(2), Int(10)));
  CHECK_THROWS_AS(bracket_root_y(Rational(1), seed, parse_decimal("1e-3"), kConfig),
                  NoSignChangeError);
}

TEST_CASE("endpoint bounds and naive interval evaluation both contain interior values") {
  Rng rng(71);
  const Interval& bracket = gn::reference_bracket();
  const FunctionId ids[7] = {FunctionId::B0_summand_1, FunctionId::B0_summand_2,
                             FunctionId::B0_summand_3, FunctionId::B0_summand_4,
                             FunctionId::B0_summand_5, FunctionId::B0_summand_6,
                             FunctionId::B0_summand_7};
  for (int i = 0; i < 7; ++i) {
    Interval uniform = summand_uniform_bound(gn::b0_plan()[i], bracket, kConfig).first;
    Interval naive = eval(ids[i], bracket).first;
    for (int s = 0; s < 50; ++s) {
      Rational point = rng.point_in(bracket);
      Interval value = eval(ids[i], Interval(point)).first;
      CAPTURE(i);
      CHECK(uniform.contains(value));
      CHECK(naive.contains(value));
    }
  }
}
