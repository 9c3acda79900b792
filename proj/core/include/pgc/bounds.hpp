#pragma once

#include <vector>

#include "pgc/eval.hpp"
#include "pgc/gn.hpp"

namespace pgc {

struct BoundConfig {
  Rational budget = Rational(Int(1), pow10(13));
  int exp_degree_pos = 12;
  int exp_degree_neg = 6;
  int poly_max_depth = 60;

  EvalConfig eval_config() const { return {budget, exp_degree_pos, exp_degree_neg}; }
};

// Sign of p on x, certified by interval-Horner enclosures over a
// bisection of x. Throws IndeterminateSignError when the sign cannot be
// decided within max_depth bisections (in particular when p changes
// sign on x).
cert::NodePtr poly_sign(const Poly& p, const Interval& x, int max_depth);

// Direction certificate for a block on `domain`.
cert::NodePtr certify_monotone(const gn::BlockPlan& plan, const Interval& domain,
                               const BoundConfig& cfg);

// Direction certificate for Y from its transcribed factored derivative.
cert::NodePtr certify_monotone_y(const Interval& domain, int max_depth);

// Uniform bound of a single monotone block over `domain` from its
// favorable endpoint evaluations.
Enclosure monotone_uniform_bound(const gn::BlockPlan& plan, const Interval& domain,
                                 const BoundConfig& cfg);

// Uniform bound of one summand, combining its block bounds exactly.
Enclosure summand_uniform_bound(const gn::SummandPlan& plan, const Interval& domain,
                                const BoundConfig& cfg);

// Exact signed interval sum (subtrahends negated endpoint-exactly).
Interval aggregate_signed_sum(const std::vector<std::pair<Interval, int>>& parts);
Enclosure aggregate_signed_sum(const std::vector<Enclosure>& parts,
                               const std::vector<int>& signs);

// Rigorous bracket for Y(t) = target inside a seed bracket on which Y
// is certified monotone. The result bracket has width <= width_goal and
// strict enclosure evaluations on both sides of the target.
struct RootBracket {
  Interval bracket;
  cert::NodePtr node;
};
RootBracket bracket_root_y(const Rational& target, const Interval& seed,
                           const Rational& width_goal, const BoundConfig& cfg);

}  // namespace pgc
