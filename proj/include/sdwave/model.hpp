#pragma once

#include "sdwave/error.hpp"

namespace sdwave {

// The five asymptotic patterns of the damped wave model, split by (sigma, nu).
enum class Regime { SubHalf, HalfUnderdamped, HalfCritical, HalfOverdamped, SuperHalf };

const char* regime_name(Regime r);

// Problem instance: space dimension n, fractional order sigma in (0,1],
// damping strength nu > 0.
struct ModelParams {
  int n = 2;
  double sigma = 0.5;
  double nu = 1.0;

  ModelParams() = default;
  ModelParams(int n_, double sigma_, double nu_) : n(n_), sigma(sigma_), nu(nu_) {
    validate();
  }
  void validate() const;
};

// Derivative multi-index: |xi|^k spatial weight, ell in {0,1} time derivatives.
struct DerivativeIndex {
  double k = 0.0;
  int ell = 0;

  DerivativeIndex() = default;
  DerivativeIndex(double k_, int ell_) : k(k_), ell(ell_) {
    if (k < 0.0 || (ell != 0 && ell != 1))
      fail(ErrorCode::InvalidArgument, "DerivativeIndex: need k >= 0, ell in {0,1}");
  }
};

struct DecayExponents {
  double gamma = 0.0;
  double gamma_tilde = 0.0;
};

Regime classify_regime(const ModelParams& p);

// gamma_{sigma,k} and gammatilde_{sigma,k}; both continuous across sigma = 1/2.
DecayExponents decay_exponents(const ModelParams& p, const DerivativeIndex& idx);

// Rate contributed by one time derivative: 1 for sigma <= 1/2, 1/(2 sigma) above.
double ell_rate_weight(const ModelParams& p);

// Strict upper bound for the low-band radius rho.
double rho_max(const ModelParams& p);

// Dimension admissibility: sigma < 1/2 needs n >= 2; sigma > 1/2 needs n >= 3
// unless the regularity budget satisfies k + ell > 3 - n.
bool dimension_admissible(const ModelParams& p, const DerivativeIndex& idx);

// Smooth radial partition of unity chi_L + chi_M + chi_H = 1.
// chi_L is 1 on [0, rho/2] and 0 beyond rho; chi_H is 0 below 2 and 1 beyond 4.
class CutoffBands {
 public:
  explicit CutoffBands(const ModelParams& p) : rho_(rho_max(p) / 2.0) {}
  explicit CutoffBands(double rho) : rho_(rho) {
    if (!(rho > 0.0)) fail(ErrorCode::InvalidArgument, "CutoffBands: rho must be > 0");
  }

  double rho() const { return rho_; }
  double low(double r) const;
  double high(double r) const;
  double mid(double r) const { return 1.0 - low(r) - high(r); }
  void eval(double r, double& lo, double& mi, double& hi) const;

 private:
  double rho_;
};

}  // namespace sdwave
