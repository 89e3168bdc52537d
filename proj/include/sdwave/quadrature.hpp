#pragma once

#include <functional>

#include "sdwave/initial_data.hpp"
#include "sdwave/symbols.hpp"

namespace sdwave {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_panels = 200000;
  int panels_per_period = 8;  // GL15 panels per 2 pi / t oscillation period
};

// omega_{n-1} = 2 pi^{n/2} / Gamma(n/2).
double surface_area_coeff(int n);

// Generic radial Plancherel integrand:
//   norm = sqrt( omega_{n-1} Int_0^inf r^{n-1+2k} amp2(r) dr ).
// amp2 is |multiplier * datum_hat|^2 at fixed t. singular_order s describes
// amp ~ r^{-s} near 0; log_amp_bound must bound ln|amp| for r >= 1 and decay.
struct RadialProfile {
  int n = 2;
  double k = 0.0;
  std::function<double(double)> amp2;
  double singular_order = 0.0;
  double osc_freq = 0.0;  // 0 = smooth; else sized for sin/cos(freq * r)
  std::function<double(double)> log_amp_bound;
};

double radial_l2_norm(const RadialProfile& prof, const QuadratureConfig& cfg);

// Plancherel Sobolev seminorm of one multiplier family against a datum
// (datum = nullptr takes the kernel-only norm).
struct NormQuery {
  SymbolSpec symbol;
  ModelParams params;
  DerivativeIndex idx;
  const RadialDatum* datum = nullptr;
  double t = 0.0;
};

double sobolev_seminorm(const NormQuery& q, const QuadratureConfig& cfg);

// Seminorm of the full solution multiplier for data (u0, u1); either may be null.
double solution_seminorm(const ModelParams& p, const RadialDatum* u0,
                         const RadialDatum* u1, const DerivativeIndex& idx,
                         double t, const QuadratureConfig& cfg);

// || e^{-C0 s r^alpha} r^beta chi_band ||_{L^p(R^n)} with band Low or Mid+High
// around a standalone band radius rho.
enum class LpBand { Low, MidHigh };

double lp_band_norm(double C0, double s, double alpha, double beta, LpBand band,
                    double p, int n, double rho, const QuadratureConfig& cfg);

// Radius beyond which the analytic tail bound of the |multiplier * datum|^2
// integrand stays below eps times its bulk scale.
double tail_cutoff_radius(const SymbolSpec& spec, const ModelParams& p, double t,
                          const RadialDatum* datum, double eps);

namespace detail {
// One 15-point Gauss-Legendre panel; exposed for exactness spot-checks.
double gl15_panel(const std::function<double(double)>& f, double a, double b);
}  // namespace detail

}  // namespace sdwave
