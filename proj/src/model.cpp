#include "sdwave/model.hpp"

#include <cmath>

namespace sdwave {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::SubHalf: return "SubHalf";
    case Regime::HalfUnderdamped: return "HalfUnderdamped";
    case Regime::HalfCritical: return "HalfCritical";
    case Regime::HalfOverdamped: return "HalfOverdamped";
    case Regime::SuperHalf: return "SuperHalf";
  }
  return "?";
}

void ModelParams::validate() const {
  if (n < 1) fail(ErrorCode::InvalidArgument, "ModelParams: n must be >= 1");
  if (!(sigma > 0.0) || !(sigma <= 1.0))
    fail(ErrorCode::InvalidArgument, "ModelParams: sigma must lie in (0, 1]");
  if (!(nu > 0.0)) fail(ErrorCode::InvalidArgument, "ModelParams: nu must be > 0");
  if (!std::isfinite(sigma) || !std::isfinite(nu))
    fail(ErrorCode::InvalidArgument, "ModelParams: non-finite parameter");
}

Regime classify_regime(const ModelParams& p) {
  p.validate();
  if (p.sigma < 0.5) return Regime::SubHalf;
  if (p.sigma > 0.5) return Regime::SuperHalf;
  // Exact comparison on the input floats; near-critical callers are served by
  // the series-stabilized symbol evaluators, not by fuzzy classification.
  if (p.nu < 2.0) return Regime::HalfUnderdamped;
  if (p.nu > 2.0) return Regime::HalfOverdamped;
  return Regime::HalfCritical;
}

DecayExponents decay_exponents(const ModelParams& p, const DerivativeIndex& idx) {
  p.validate();
  const double n = static_cast<double>(p.n);
  const double s = p.sigma;
  const double k = idx.k;
  DecayExponents e;
  if (s < 0.5) {
    e.gamma = n / (4.0 * (1.0 - s)) - s / (1.0 - s) + k / (2.0 * (1.0 - s));
    e.gamma_tilde = n / (4.0 * (1.0 - s)) + k / (2.0 * (1.0 - s));
  } else if (s > 0.5) {
    e.gamma = n / (4.0 * s) - 1.0 / (2.0 * s) + k / (2.0 * s);
    e.gamma_tilde = n / (4.0 * s) + k / (2.0 * s);
  } else {
    e.gamma = n / 2.0 - 1.0 + k;
    e.gamma_tilde = n / 2.0 + k;
  }
  return e;
}

double ell_rate_weight(const ModelParams& p) {
  p.validate();
  return p.sigma > 0.5 ? 1.0 / (2.0 * p.sigma) : 1.0;
}

double rho_max(const ModelParams& p) {
  p.validate();
  const double s = p.sigma;
  if (s < 0.5) return 0.5 * std::pow(p.nu / 2.0, 1.0 / (1.0 - 2.0 * s));
  if (s > 0.5) return 0.5 * std::pow(2.0 / p.nu, 1.0 / (2.0 * s - 1.0));
  return 0.5;
}

bool dimension_admissible(const ModelParams& p, const DerivativeIndex& idx) {
  p.validate();
  if (p.sigma < 0.5) return p.n >= 2;
  if (p.sigma > 0.5) return p.n >= 3 || idx.k + idx.ell > 3.0 - p.n;
  return true;
}

namespace {

// C^inf step: 0 for x <= 0, 1 for x >= 1, exp(-1/x) mollifier blend between.
double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x);
  const double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

}  // namespace

double CutoffBands::low(double r) const {
  if (r < 0.0) fail(ErrorCode::InvalidArgument, "CutoffBands: r must be >= 0");
  return 1.0 - smooth_step((r - rho_ / 2.0) / (rho_ / 2.0));
}

double CutoffBands::high(double r) const {
  if (r < 0.0) fail(ErrorCode::InvalidArgument, "CutoffBands: r must be >= 0");
  return smooth_step((r - 2.0) / 2.0);
}

void CutoffBands::eval(double r, double& lo, double& mi, double& hi) const {
  lo = low(r);
  hi = high(r);
  mi = 1.0 - lo - hi;
}

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::SingularAtZero: return "SingularAtZero";
    case ErrorCode::OutOfRealBranch: return "OutOfRealBranch";
    case ErrorCode::NonIntegrableSingularity: return "NonIntegrableSingularity";
    case ErrorCode::TolNotMet: return "TolNotMet";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::BandViolation: return "BandViolation";
    case ErrorCode::NoDecayBound: return "NoDecayBound";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "?";
}

}  // namespace sdwave
