#pragma once

#include <map>
#include <optional>
#include <string>

#include "pgc/bounds.hpp"
#include "pgc/certificate.hpp"

namespace pgc {

struct Config {
  Rational budget = Rational(Int(1), pow10(13));  // log/sqrt width budget
  int exp_degree_pos = 12;
  int exp_degree_neg = 6;
  int poly_max_depth = 60;
  // One bisection inside the reference bracket; the tighter bracket is
  // what places R(1) inside its quoted window.
  Rational t0_width = Rational(Int(1), pow10(10));

  void validate() const;  // sanity floors: widths >= 1e-30, degrees >= 1
  unsigned widen_digits() const;
  std::map<std::string, std::string> echo() const;
  BoundConfig bound_config() const {
    return {budget, exp_degree_pos, exp_degree_neg, poly_max_depth};
  }
  EvalConfig eval_config() const { return {budget, exp_degree_pos, exp_degree_neg}; }
};

enum class Constant { t0, nu, rho, exp_neg_nu, all };
Constant constant_from_name(std::string_view name);  // throws UsageError
const char* constant_name(Constant c);

// Final enclosures plus the replayable certificate that justifies them.
// Only the fields needed for the requested constant are populated.
struct ConstantReport {
  std::optional<Interval> t0;
  std::optional<Interval> R1;
  std::optional<Interval> B0_at_t0;
  std::optional<Interval> B2_at_t0;
  std::optional<Interval> nu;
  std::optional<Interval> A_at_t0;
  std::optional<Interval> rho;
  std::optional<Interval> exp_neg_nu;
  cert::BoundCertificate certificate;
};

ConstantReport compute(Constant which, const Config& cfg = {});
ConstantReport compute_all(const Config& cfg = {});

Interval compute_t0(const Rational& width_goal, const Config& cfg = {});
Interval compute_nu(const Config& cfg = {});
Interval compute_rho(const Config& cfg = {});
Interval compute_exp_neg_nu(const Config& cfg = {});

}  // namespace pgc
