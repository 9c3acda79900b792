// Acceptance suite: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "pgc/bounds.hpp"
#include "pgc/decimal.hpp"
#include "pgc/eval.hpp"
#include "pgc/pipeline.hpp"
#include "pgc/verify.hpp"
#include "support.hpp"

using namespace pgc;
using testsupport::Rng;

namespace {

struct Criterion {
  std::string name;
  std::function<void()> run;
};

void require(bool condition, const std::string& what) {
  if (!condition) throw Error("failed: " + what);
}

Interval window(const char* lo, const char* hi) {
  return Interval(parse_decimal(lo), parse_decimal(hi));
}

Interval centered(const char* center) {
  Rational c = parse_decimal(center);
  Rational r = parse_decimal("1e-10");
  return Interval(c - r, c + r);
}

const ConstantReport& report() {
  static const ConstantReport r = compute_all();
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string run_command(const std::string& command) {
  int rc = std::system(command.c_str());
  if (rc != 0) throw Error("command failed (" + std::to_string(rc) + "): " + command);
  return command;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "readable file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// --- criteria ----------------------------------------------------------

void criterion_t0_bracket() {
  auto start = std::chrono::steady_clock::now();
  Interval t0 = compute_t0(parse_decimal("2e-10"));
  double elapsed = seconds_since(start);
  require(window("0.6263716632", "0.6263716634").contains(t0), "t0 inside the bracket");
  require(elapsed < 5.0, "t0 computed in under 5 s");
}

void criterion_y_certificate() {
  auto [below, above] = eval_Y_certificate_points();
  require(below.first.hi() < parse_decimal("0.9999999996"),
          "Y(t-) upper bound below 0.9999999996");
  require(above.first.lo() > parse_decimal("1.00000000009"),
          "Y(t+) lower bound above 1.00000000009");
}

void criterion_h1_h2_pointwise() {
  auto start = std::chrono::steady_clock::now();
  require(centered("2.0941746325").contains(eval(FunctionId::h1, Interval(gn::t_minus())).first),
          "h1 at t-");
  require(centered("2.0941746335").contains(eval(FunctionId::h1, Interval(gn::t_plus())).first),
          "h1 at t+");
  require(centered("-0.0460123254").contains(eval(FunctionId::h2, Interval(gn::t_minus())).first),
          "h2 at t-");
  require(centered("-0.0460123253").contains(eval(FunctionId::h2, Interval(gn::t_plus())).first),
          "h2 at t+");
  require(seconds_since(start) < 1.0, "pointwise evaluations in under 1 s");
}

void criterion_xi_r1() {
  Interval at_minus = eval(FunctionId::xi, Interval(gn::t_minus())).first;
  Interval at_plus = eval(FunctionId::xi, Interval(gn::t_plus())).first;
  require(at_minus.strictly_inside(window("0.03819109771", "0.03819109772")), "xi at t-");
  require(at_plus.strictly_inside(window("0.03819109762", "0.03819109763")), "xi at t+");
  require(report().R1->strictly_inside(window("0.0381910976", "0.0381910977")),
          "R(1) enclosure");
}

void criterion_b0() {
  const Interval& bracket = gn::reference_bracket();
  const BoundConfig cfg;
  const Interval windows[7] = {
      window("0.22495616614", "0.22495616711"),
      window("-0.28456395530", "-0.28456395528"),
      window("0.00029614190", "0.00029614191"),
      window("0.32205815164", "0.32205815166"),
      window("-0.23390568644", "-0.23390568627"),
      window("1.03972077083", "1.03972077084"),
      window("0.02472734758", "0.02472734763"),
  };
  const auto& plan = gn::b0_plan();
  for (int i = 0; i < 7; ++i)
    require(summand_uniform_bound(plan[i], bracket, cfg)
                .first.strictly_inside(windows[i]),
            "B0 summand " + std::to_string(i + 1));
  require(report().B0_at_t0->strictly_inside(window("0.00073969896", "0.00073970019")),
          "B0 aggregate");
  require(eval(FunctionId::B0, Interval(gn::t_minus()))
              .first.strictly_inside(window("0.00073969957", "0.00073969958")),
          "B0 pointwise at t-");
  require(eval(FunctionId::B0, Interval(gn::t_plus()))
              .first.strictly_inside(window("0.00073969956", "0.00073969957")),
          "B0 pointwise at t+");
}

void criterion_b2() {
  const Interval& bracket = gn::reference_bracket();
  const BoundConfig cfg;
  const Interval windows[4] = {
      window("0.01786492701", "0.01786492706"),
      window("0.02019321732", "0.02019321738"),
      window("0.00059228380", "0.00059228381"),
      window("0.000244575293", "0.000244575295"),
  };
  const auto& plan = gn::b2_plan();
  for (int i = 0; i < 4; ++i)
    require(summand_uniform_bound(plan[i], bracket, cfg)
                .first.strictly_inside(windows[i]),
            "B2 summand " + std::to_string(i + 1));
  require(report().B2_at_t0->strictly_inside(window("-0.001491431277", "-0.001491431155")),
          "B2 aggregate");
  require(centered("-0.0014914312").contains(eval(FunctionId::B2, Interval(gn::t_minus())).first),
          "B2 pointwise at t-");
  require(centered("-0.0014914312").contains(eval(FunctionId::B2, Interval(gn::t_plus())).first),
          "B2 pointwise at t+");
}

void criterion_a_and_r() {
  require(report().A_at_t0->strictly_inside(window("0.48968967248", "0.48968967363")),
          "A uniform bound");
  auto [exp_a, node] = exp_enclosure(*report().A_at_t0, 12);
  require(exp_a.strictly_inside(window("1.63180974590", "1.63180974778")),
          "exp(A) enclosure");
  require(report().rho->strictly_inside(window("0.03672841251", "0.03672841266")),
          "r uniform bound");
}

void criterion_nu() {
  require(report().nu->strictly_inside(window("0.037439365283", "0.037439366735")),
          "nu enclosure");
  require(*report().nu == *report().R1 + *report().B0_at_t0 + *report().B2_at_t0,
          "nu equals the exact sum of its components");
}

void criterion_exp_neg_nu() {
  require(report().exp_neg_nu->strictly_inside(window("0.96325282112", "0.96325282254")),
          "exp(-nu) enclosure");
  auto [exp_nu, node] = exp_enclosure(*report().nu, 6);
  require((*report().exp_neg_nu * exp_nu).contains(Rational(1)),
          "exp(-nu) * exp(nu) contains 1");
}

void criterion_exact_forty_digit() {
  const Rational tm = gn::t_minus();
  const Rational tp = gn::t_plus();
  Poly p2({Rational(-1), Rational(0), Rational(6), Rational(-16), Rational(3)});
  require(to_decimal_string(p2.eval(tp), 40) ==
              "-2.1161809442159711262496568523624448554192",
          "quartic at t+");
  require(to_decimal_string(p2.eval(tm), 40) ==
              "-2.1161809425425888723475949656101944348672",
          "quartic at t-");
  Poly cube = Poly::monomial(Rational(32), 3);
  require(to_decimal_string(cube.eval(tm), 30) == "7.864050340179393384432870014976",
          "32t^3 at t-");
  require(to_decimal_string(cube.eval(tp), 30) == "7.864050347712349427668874499328",
          "32t^3 at t+");
  Poly quartic({Rational(92), Rational(0), Rational(0), Rational(2073), Rational(740)});
  require(to_decimal_string(quartic.eval(tp), 40) ==
              "715.3525597141428299499534408273089356632640",
          "740t^4+2073t^3+92 at t+");
  Poly quadratic({Rational(0), Rational(183), Rational(1698)});
  require(to_decimal_string(quadratic.eval(tm), 20) == "780.82181422656832973952",
          "1698t^2+183t at t-");
  Poly three_t_sq({Rational(-1), Rational(0), Rational(3)});
  require(to_decimal_string(three_t_sq.eval(tm), 20) == "0.17702438137980270272",
          "3t^2-1 at t-");
}

void property_inclusion_monotonicity() {
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    auto [x, xo] = rng.nested_intervals();
    auto [y, yo] = rng.nested_intervals();
    require((xo + yo).contains(x + y), "inclusion monotonicity of add");
    require((xo - yo).contains(x - y), "inclusion monotonicity of sub");
    require((xo * yo).contains(x * y), "inclusion monotonicity of mul");
    require((-xo).contains(-x), "inclusion monotonicity of neg");
    int e = static_cast<int>(rng.integer(0, 5));
    require(xo.pow(e).contains(x.pow(e)), "inclusion monotonicity of pow");
    Interval divisor_outer = rng.nonzero_interval();
    Rational a = rng.point_in(divisor_outer);
    Rational b = rng.point_in(divisor_outer);
    Interval divisor_inner = a <= b ? Interval(a, b) : Interval(b, a);
    require((xo / divisor_outer).contains(x / divisor_inner),
            "inclusion monotonicity of div");
  }
}

void property_extension_soundness() {
  Rng rng(103);
  EvalConfig cfg;
  cfg.budget = Rational(Int(1), pow10(6));
  const Interval wide(Rational(Int(1), Int(10)), Rational(Int(9), Int(10)));
  const Interval narrow(Rational(Int(3), Int(5)), Rational(Int(13), Int(20)));

  for (int id = 0; id <= static_cast<int>(FunctionId::r); ++id) {
    FunctionId fn = static_cast<FunctionId>(id);
    const Interval& domain = is_polynomial_function(fn) || fn == FunctionId::h1 ||
                                     fn == FunctionId::h2 || fn == FunctionId::xi
                                 ? wide
                                 : narrow;
    Interval over_domain = eval(fn, domain, cfg).first;
    for (int i = 0; i < 500; ++i) {
      Rational point = rng.point_in(domain);
      require(over_domain.contains(eval(fn, Interval(point), cfg).first),
              std::string("extension soundness of ") + function_name(fn));
    }
  }
}

void property_taylor_nesting() {
  Rng rng(107);
  for (int i = 0; i < 1000; ++i) {
    Rational pos = Rational(Int(rng.integer(1, 4899)), Int(10000));
    auto [wide, n1] = exp_enclosure(Interval(pos), 12);
    auto [narrow, n2] = exp_enclosure(Interval(pos), 20);
    require(wide.contains(narrow), "positive-window nesting");
    require(narrow.width() < Rational(Int(1), pow10(20)), "degree-20 width");

    Rational neg = Rational(Int(-rng.integer(1, 499)), Int(10000));
    auto [wide_n, n3] = exp_enclosure(Interval(neg), 6);
    auto [narrow_n, n4] = exp_enclosure(Interval(neg), 14);
    require(wide_n.contains(narrow_n), "negative-window nesting");
    require(narrow_n.width() < Rational(Int(1), pow10(20)), "degree-14 width");
  }
}

void property_tamper_rejection() {
  const std::string text = cert::serialize(report().certificate);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  struct Target {
    std::size_t line, column;
  };
  std::vector<Target> targets;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.rfind("pgc-certificate", 0) == 0 || line.rfind("config ", 0) == 0 ||
        line.rfind("digest ", 0) == 0)
      continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    for (std::size_t col = eq; col < line.size(); ++col)
      if (line[col] >= '0' && line[col] <= '9') targets.push_back({i, col});
  }
  require(targets.size() > 1000, "enough mutation targets");

  Rng rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    Target target = targets[static_cast<std::size_t>(
        rng.integer(0, static_cast<long long>(targets.size()) - 1))];
    std::vector<std::string> mutated = lines;
    char& c = mutated[target.line][target.column];
    c = c == '9' ? '1' : c + 1;
    std::string joined;
    for (const std::string& line : mutated) {
      joined += line;
      joined += '\n';
    }
    bool rejected;
    try {
      cert::BoundCertificate parsed = cert::deserialize(joined);
      cert::seal(parsed);
      rejected = !verify(parsed).accepted;
    } catch (const ParseError&) {
      rejected = true;
    }
    require(rejected, "mutation rejected (trial " + std::to_string(trial) + ")");
  }
}

void criterion_properties() {
  property_inclusion_monotonicity();
  property_extension_soundness();
  property_taylor_nesting();
  property_tamper_rejection();
}

void criterion_determinism() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 ("pgc-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::path first = dir / "first.cert";
  fs::path second = dir / "second.cert";

  std::string cli = PGC_CLI_PATH;
  std::string replay = PGC_REPLAY_PATH;
  run_command(cli + " compute --constant all --cert-out " + first.string() +
              " > " + (dir / "first.out").string());
  run_command(cli + " compute --constant all --cert-out " + second.string() +
              " > " + (dir / "second.out").string());
  require(slurp(first) == slurp(second), "byte-identical certificates");
  require(slurp(dir / "first.out") == slurp(dir / "second.out"), "byte-identical output");

  run_command(replay + " " + first.string() + " > " + (dir / "replay.out").string());
  require(slurp(dir / "replay.out") == "accepted\n", "standalone replay accepts");

  run_command(cli + " verify " + first.string() + " > " + (dir / "verify.out").string());
  fs::remove_all(dir);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"t0 bracket inside the reference bracket", criterion_t0_bracket},
      {"Y certificate point inequalities", criterion_y_certificate},
      {"h1/h2 pointwise windows", criterion_h1_h2_pointwise},
      {"xi pointwise and R(1) windows", criterion_xi_r1},
      {"B0 summand, aggregate and pointwise windows", criterion_b0},
      {"B2 summand, aggregate and pointwise windows", criterion_b2},
      {"A, exp(A) and r windows", criterion_a_and_r},
      {"nu window and exact component identity", criterion_nu},
      {"exp(-nu) window and product consistency", criterion_exp_neg_nu},
      {"exact forty-digit decimal regressions", criterion_exact_forty_digit},
      {"property suites", criterion_properties},
      {"byte-identical certificates across runs", criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string(" (") + e.what() + ")";
      ++failures;
    }
    std::printf("criterion %02zu [%s]: %s%s (%.2fs)\n", i + 1, criteria[i].name.c_str(),
                verdict.c_str(), detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
