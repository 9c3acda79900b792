// Command-line interface: compute rigorous enclosures of the
// planar-graph constants, write and verify their certificates.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pgc/pipeline.hpp"
#include "pgc/verify.hpp"

namespace {

pgc::Rational parse_rational_flag(const std::string& text) {
  if (text.find('/') != std::string::npos) return pgc::Rational::from_str(text);
  return pgc::parse_decimal(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pgc::Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_constant(const std::string& name, const pgc::Interval& value, unsigned digits) {
  std::cout << name << " = " << pgc::outward_round(value, digits).text() << "\n";
}

int run_compute(const std::string& constant_name, const std::string& budget_flag,
                const std::string& t0_width_flag, const std::string& cert_out,
                unsigned digits) {
  pgc::Constant which = pgc::constant_from_name(constant_name);
  pgc::Config config;
  if (!budget_flag.empty()) config.budget = parse_rational_flag(budget_flag);
  if (!t0_width_flag.empty()) config.t0_width = parse_rational_flag(t0_width_flag);

  pgc::ConstantReport report = pgc::compute(which, config);

  if (which == pgc::Constant::t0 || which == pgc::Constant::all)
    print_constant("t0", *report.t0, digits);
  if (which == pgc::Constant::nu || which == pgc::Constant::all)
    print_constant("nu", *report.nu, digits);
  if (which == pgc::Constant::rho || which == pgc::Constant::all)
    print_constant("rho", *report.rho, digits);
  if (which == pgc::Constant::exp_neg_nu || which == pgc::Constant::all)
    print_constant("exp-neg-nu", *report.exp_neg_nu, digits);

  if (!cert_out.empty()) {
    std::ofstream out(cert_out, std::ios::binary);
    if (!out) throw pgc::Error("cannot write '" + cert_out + "'");
    out << pgc::cert::serialize(report.certificate);
  }
  return 0;
}

int run_verify(const std::string& path) {
  pgc::VerifyResult result = pgc::verify_text(read_file(path));
  if (result.accepted) {
    std::cout << "accepted\n";
    return 0;
  }
  std::cout << "rejected at " << result.path << ": " << result.reason << "\n";
  return 1;
}

int run_show(const std::string& path, unsigned digits) {
  pgc::cert::BoundCertificate certificate = pgc::cert::deserialize(read_file(path));
  for (const pgc::cert::Field& field : certificate.fields)
    print_constant(field.name, field.claimed, digits);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigorous rational-interval enclosures of the planar-graph constants"};
  app.require_subcommand(1);

  std::string constant = "all";
  std::string budget_flag;
  std::string t0_width_flag;
  std::string cert_out;
  unsigned digits = 11;
  std::string path;

  CLI::App* compute = app.add_subcommand("compute", "Compute constants and certificates");
  compute->add_option("--constant", constant, "t0|nu|rho|exp-neg-nu|all");
  compute->add_option("--budget", budget_flag, "transcendental width budget (rational)");
  compute->add_option("--t0-width", t0_width_flag, "t0 bracket width goal (rational)");
  compute->add_option("--cert-out", cert_out, "write the certificate to this file");
  compute->add_option("--digits", digits, "outward-rounded decimal digits");

  CLI::App* verify = app.add_subcommand("verify", "Replay a certificate file");
  verify->add_option("path", path, "certificate file")->required();

  CLI::App* show = app.add_subcommand("show", "Render the enclosures of a certificate");
  show->add_option("path", path, "certificate file")->required();
  show->add_option("--digits", digits, "outward-rounded decimal digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return run_compute(constant, budget_flag, t0_width_flag, cert_out, digits);
    if (verify->parsed()) return run_verify(path);
    if (show->parsed()) return run_show(path, digits);
  } catch (const pgc::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << app.help() << "\n";
    return 2;
  } catch (const pgc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pgc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
