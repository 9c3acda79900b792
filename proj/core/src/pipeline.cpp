#include "pgc/pipeline.hpp"

#include "pgc/decimal.hpp"

namespace pgc {

using cert::make_node;
using cert::NodePtr;

void Config::validate() const {
  Rational floor(Int(1), pow10(30));
  if (t0_width < floor)
    throw UsageError("t0 width goal " + t0_width.str() + " below sanity floor 10^-30");
  if (budget < floor)
    throw UsageError("width budget " + budget.str() + " below sanity floor 10^-30");
  if (budget > Rational(1)) throw UsageError("width budget must be at most 1");
  if (exp_degree_pos < 1 || exp_degree_neg < 1)
    throw UsageError("exp degrees must be >= 1");
  if (poly_max_depth < 0) throw UsageError("poly_max_depth must be >= 0");
}

unsigned Config::widen_digits() const {
  // Enough grid digits that outward snapping is negligible against the
  // configured budget.
  std::size_t den_digits = budget.den().str().size();
  std::size_t num_digits = budget.num().str().size();
  std::size_t budget_digits = den_digits > num_digits ? den_digits - num_digits : 1;
  return std::max<unsigned>(25, static_cast<unsigned>(budget_digits) + 12);
}

std::map<std::string, std::string> Config::echo() const {
  return {{"budget", budget.str()},
          {"exp_degree_neg", std::to_string(exp_degree_neg)},
          {"exp_degree_pos", std::to_string(exp_degree_pos)},
          {"poly_max_depth", std::to_string(poly_max_depth)},
          {"t0_width", t0_width.str()},
          {"widen_digits", std::to_string(widen_digits())}};
}

Constant constant_from_name(std::string_view name) {
  if (name == "t0") return Constant::t0;
  if (name == "nu") return Constant::nu;
  if (name == "rho") return Constant::rho;
  if (name == "exp-neg-nu") return Constant::exp_neg_nu;
  if (name == "all") return Constant::all;
  throw UsageError("unknown constant '" + std::string(name) +
                   "' (expected t0|nu|rho|exp-neg-nu|all)");
}

const char* constant_name(Constant c) {
  switch (c) {
    case Constant::t0: return "t0";
    case Constant::nu: return "nu";
    case Constant::rho: return "rho";
    case Constant::exp_neg_nu: return "exp-neg-nu";
    case Constant::all: return "all";
  }
  throw Error("unreachable constant");
}

namespace {

NodePtr field_ref(const std::string& name) {
  return make_node(cert::FieldRefData{name});
}

}  // namespace

ConstantReport compute(Constant which, const Config& cfg) {
  cfg.validate();
  const BoundConfig bc = cfg.bound_config();
  const unsigned grid = cfg.widen_digits();

  ConstantReport report;
  report.certificate.config = cfg.echo();
  auto add_field = [&](const std::string& name, const Interval& claimed, NodePtr evidence) {
    report.certificate.fields.push_back({name, claimed, std::move(evidence)});
  };

  const bool need_nu = which == Constant::nu || which == Constant::exp_neg_nu ||
                       which == Constant::all;
  const bool need_rho = which == Constant::rho || which == Constant::all;
  const bool need_exp_neg_nu = which == Constant::exp_neg_nu || which == Constant::all;

  // t0 bracket; every uniform bound below is taken over it.
  RootBracket rb = bracket_root_y(Rational(1), gn::reference_bracket(), cfg.t0_width, bc);
  report.t0 = rb.bracket;
  add_field("t0", rb.bracket, rb.node);
  const Interval& bracket = rb.bracket;

  if (need_nu) {
    Enclosure r1 = monotone_uniform_bound(gn::xi_plan(), bracket, bc);
    report.R1 = r1.first;
    add_field("R1", r1.first, r1.second);

    auto uniform_sum = [&](const std::vector<gn::SummandPlan>& plan) {
      std::vector<Enclosure> parts;
      std::vector<int> signs;
      for (const gn::SummandPlan& summand : plan) {
        parts.push_back(summand_uniform_bound(summand, bracket, bc));
        signs.push_back(summand.sign);
      }
      return aggregate_signed_sum(parts, signs);
    };
    Enclosure b0 = uniform_sum(gn::b0_plan());
    report.B0_at_t0 = b0.first;
    add_field("B0_at_t0", b0.first, b0.second);

    Enclosure b2 = uniform_sum(gn::b2_plan());
    report.B2_at_t0 = b2.first;
    add_field("B2_at_t0", b2.first, b2.second);

    Interval nu = r1.first + b0.first + b2.first;
    NodePtr nu_node =
        make_node(cert::AggSumData{{1, 1, 1}}, nu,
                  {field_ref("R1"), field_ref("B0_at_t0"), field_ref("B2_at_t0")});
    report.nu = nu;
    add_field("nu", nu, nu_node);
  }

  if (need_rho) {
    std::vector<Enclosure> parts;
    std::vector<int> signs;
    for (const gn::SummandPlan& summand : gn::a_plan()) {
      parts.push_back(summand_uniform_bound(summand, bracket, bc));
      signs.push_back(summand.sign);
    }
    Enclosure a = aggregate_signed_sum(parts, signs);
    report.A_at_t0 = a.first;
    add_field("A_at_t0", a.first, a.second);

    Interval a_snapped = widen_to_grid(a.first, grid);
    NodePtr widen = make_node(cert::WidenData{}, a_snapped, {field_ref("A_at_t0")});
    Enclosure exp_a = exp_enclosure(a_snapped, cfg.exp_degree_pos, widen);

    Enclosure sq = monotone_uniform_bound(gn::rho_sqrt_plan(), bracket, bc);
    Enclosure cube = monotone_uniform_bound(gn::rho_cube_plan(), bracket, bc);
    Interval prod = sq.first * cube.first;
    NodePtr prod_node = make_node(cert::ArithData{'*', 0}, prod, {sq.second, cube.second});
    Interval rho = prod * exp_a.first;
    NodePtr rho_node = make_node(cert::ArithData{'*', 0}, rho, {prod_node, exp_a.second});
    report.rho = rho;
    add_field("rho", rho, rho_node);
  }

  if (need_exp_neg_nu) {
    Interval nu_snapped = widen_to_grid(*report.nu, grid);
    NodePtr widen = make_node(cert::WidenData{}, nu_snapped, {field_ref("nu")});
    Interval negated = -nu_snapped;
    NodePtr neg = make_node(cert::ArithData{'n', 0}, negated, {widen});
    Enclosure value = exp_enclosure(negated, cfg.exp_degree_neg, neg);
    report.exp_neg_nu = value.first;
    add_field("exp_neg_nu", value.first, value.second);
  }

  cert::seal(report.certificate);
  return report;
}

ConstantReport compute_all(const Config& cfg) { return compute(Constant::all, cfg); }

Interval compute_t0(const Rational& width_goal, const Config& cfg) {
  Config local = cfg;
  local.t0_width = width_goal;
  return *compute(Constant::t0, local).t0;
}

Interval compute_nu(const Config& cfg) { return *compute(Constant::nu, cfg).nu; }
Interval compute_rho(const Config& cfg) { return *compute(Constant::rho, cfg).rho; }
Interval compute_exp_neg_nu(const Config& cfg) {
  return *compute(Constant::exp_neg_nu, cfg).exp_neg_nu;
}

}  // namespace pgc
