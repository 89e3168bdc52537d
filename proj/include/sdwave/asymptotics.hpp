#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sdwave/quadrature.hpp"

namespace sdwave {

struct LadderEntry {
  double t = 0.0;
  double value = 0.0;
  bool ok = false;
  std::string error;
};

struct NormLadder {
  std::vector<LadderEntry> entries;
  DerivativeIndex idx;
  std::string meta;

  int valid_count() const;
};

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
};

// Empirical constants of a pointwise bound: lhs <= C_hat * model * e^{-c_hat ...}.
struct BoundFit {
  double C_hat = 0.0;
  double c_hat = 0.0;
  double max_violation = 0.0;
};

std::vector<double> log_spaced_times(double t_min, double t_max, int points);

// Evaluates eval(t) at each time; entries that raise are marked failed.
// Throws the last failure if fewer than 80% of the entries succeed.
NormLadder norm_ladder(const std::function<double(double)>& eval,
                       const std::vector<double>& times, const DerivativeIndex& idx,
                       const std::string& meta);

// Least squares on (log t, log value) over valid entries.
DecayFit decay_fit(const NormLadder& ladder);

// max_i | value_i t_i^exponent / median - 1 | over valid entries.
double scaling_constancy_check(const NormLadder& ladder, double exponent);

// (min, max) of value_i t_i^exponent over valid entries with t in [t_lo, t_hi].
std::pair<double, double> two_sided_check(const NormLadder& ladder, double exponent,
                                          double t_lo, double t_hi);

// Profile comparisons behind Theorems 1.2 / 1.3-style approximation claims.
enum class ProfileProblem { MomentG, MomentH };
enum class ResidualRoute { Direct, Factored };

// || |xi|^k ( dt^ell u_hat - m * profile ) ||_2 at time t. For ell = 1 and
// sigma > 1/2 the comparison profile is the hybrid kernel unless
// naive_dt_profile asks for the plain time derivative of G / H.
double profile_residual_norm(const ModelParams& p, const DerivativeIndex& idx,
                             const RadialDatum* u0, const RadialDatum* u1,
                             ProfileProblem prob, double t, const QuadratureConfig& cfg,
                             ResidualRoute route = ResidualRoute::Direct,
                             bool naive_dt_profile = false);

// Pointwise multiplier bounds fitted on a (t, r) grid.
enum class LemmaCheck {
  L31_J1, L31_J2, L31_J3, L31_J4,
  L33_K1, L33_K2, L33_K3,
  L41_J1, L41_J2,
  L43_K1, L43_K3,
  L44_K1, L44_K3,
  L45_12, L45_3,
};

const char* lemma_check_name(LemmaCheck c);

struct BoundFitOptions {
  std::vector<double> t_grid = {1.0, 10.0, 100.0};
  int r_points = 40;
  double c_min = 1e-3;
  double c_max = 3.0;
  int c_points = 48;
  double growth_budget = 1.25;  // allowed M(c, t_max) / M(c, t_min)
  double r_lo_factor = 1e-3;    // band grid starts at rho * this
};

BoundFit pointwise_bound_fit(LemmaCheck check, const ModelParams& p, int ell,
                             const BoundFitOptions& opt);

// Test hook: fit an arbitrary row lhs(t,r) <= C e^{-c s(t) r^alpha} poly(t,r).
BoundFit pointwise_bound_fit_custom(const std::function<double(double, double)>& lhs,
                                    const std::function<double(double, double)>& poly,
                                    double alpha, bool shift_t_by_one, double r_lo,
                                    double r_hi, const BoundFitOptions& opt);

}  // namespace sdwave
