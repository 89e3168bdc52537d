#include "sdwave.h"

#include <cstring>
#include <string>

#include "sdwave/freq_oracle.hpp"
#include "sdwave/verify.hpp"

using namespace sdwave;

struct sdw_model {
  ModelParams params;
};

struct sdw_datum {
  RadialDatum datum;
};

namespace {

thread_local std::string g_last_error;

sdw_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return SDW_ERR_INVALID_ARGUMENT;
    case ErrorCode::RegimeMismatch: return SDW_ERR_REGIME_MISMATCH;
    case ErrorCode::SingularAtZero: return SDW_ERR_SINGULAR_AT_ZERO;
    case ErrorCode::OutOfRealBranch: return SDW_ERR_OUT_OF_REAL_BRANCH;
    case ErrorCode::NonIntegrableSingularity: return SDW_ERR_NON_INTEGRABLE;
    case ErrorCode::TolNotMet: return SDW_ERR_TOL_NOT_MET;
    case ErrorCode::StepUnderflow: return SDW_ERR_STEP_UNDERFLOW;
    case ErrorCode::InsufficientPoints: return SDW_ERR_INSUFFICIENT_POINTS;
    case ErrorCode::BandViolation: return SDW_ERR_BAND_VIOLATION;
    case ErrorCode::NoDecayBound: return SDW_ERR_NO_DECAY_BOUND;
    case ErrorCode::ConfigError: return SDW_ERR_CONFIG;
    case ErrorCode::IoError: return SDW_ERR_IO;
  }
  return SDW_ERR_INTERNAL;
}

template <typename Fn>
sdw_status guarded(Fn&& fn) {
  try {
    fn();
    return SDW_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SDW_ERR_INTERNAL;
  }
}

sdw_status require(bool ok, const char* msg) {
  if (ok) return SDW_OK;
  g_last_error = msg;
  return SDW_ERR_INVALID_ARGUMENT;
}

SymbolFamily to_family(sdw_family f) {
  return static_cast<SymbolFamily>(static_cast<int>(f));
}

Band to_band(sdw_band b) { return static_cast<Band>(static_cast<int>(b)); }

}  // namespace

extern "C" {

const char* sdw_version(void) { return "1.0.0"; }

const char* sdw_status_name(sdw_status s) {
  switch (s) {
    case SDW_OK: return "OK";
    case SDW_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SDW_ERR_REGIME_MISMATCH: return "RegimeMismatch";
    case SDW_ERR_SINGULAR_AT_ZERO: return "SingularAtZero";
    case SDW_ERR_OUT_OF_REAL_BRANCH: return "OutOfRealBranch";
    case SDW_ERR_NON_INTEGRABLE: return "NonIntegrableSingularity";
    case SDW_ERR_TOL_NOT_MET: return "TolNotMet";
    case SDW_ERR_STEP_UNDERFLOW: return "StepUnderflow";
    case SDW_ERR_INSUFFICIENT_POINTS: return "InsufficientPoints";
    case SDW_ERR_BAND_VIOLATION: return "BandViolation";
    case SDW_ERR_NO_DECAY_BOUND: return "NoDecayBound";
    case SDW_ERR_CONFIG: return "ConfigError";
    case SDW_ERR_IO: return "IoError";
    case SDW_ERR_INTERNAL: return "InternalError";
  }
  return "?";
}

const char* sdw_last_error(void) { return g_last_error.c_str(); }

sdw_status sdw_model_create(int n, double sigma, double nu, sdw_model** out) {
  if (const auto st = require(out != nullptr, "out must not be NULL")) return st;
  *out = nullptr;
  return guarded([&] { *out = new sdw_model{ModelParams(n, sigma, nu)}; });
}

void sdw_model_free(sdw_model* m) { delete m; }

sdw_status sdw_model_regime(const sdw_model* m, sdw_regime* out) {
  if (const auto st = require(m && out, "NULL argument")) return st;
  return guarded([&] {
    *out = static_cast<sdw_regime>(static_cast<int>(classify_regime(m->params)));
  });
}

const char* sdw_regime_name(sdw_regime r) {
  return regime_name(static_cast<Regime>(static_cast<int>(r)));
}

sdw_status sdw_model_exponents(const sdw_model* m, double k, double* gamma,
                               double* gamma_tilde) {
  if (const auto st = require(m && gamma && gamma_tilde, "NULL argument")) return st;
  return guarded([&] {
    const DecayExponents e = decay_exponents(m->params, DerivativeIndex(k, 0));
    *gamma = e.gamma;
    *gamma_tilde = e.gamma_tilde;
  });
}

sdw_status sdw_model_ell_weight(const sdw_model* m, double* weight) {
  if (const auto st = require(m && weight, "NULL argument")) return st;
  return guarded([&] { *weight = ell_rate_weight(m->params); });
}

sdw_status sdw_model_rho_max(const sdw_model* m, double* out) {
  if (const auto st = require(m && out, "NULL argument")) return st;
  return guarded([&] { *out = rho_max(m->params); });
}

sdw_status sdw_model_admissible(const sdw_model* m, double k, int ell, int* out) {
  if (const auto st = require(m && out, "NULL argument")) return st;
  return guarded([&] {
    *out = dimension_admissible(m->params, DerivativeIndex(k, ell)) ? 1 : 0;
  });
}

sdw_status sdw_model_cutoffs(const sdw_model* m, double r, double* lo, double* mid,
                             double* hi) {
  if (const auto st = require(m && lo && mid && hi, "NULL argument")) return st;
  return guarded([&] { CutoffBands(m->params).eval(r, *lo, *mid, *hi); });
}

sdw_status sdw_char_roots(const sdw_model* m, double r, double* plus_re,
                          double* plus_im, double* minus_re, double* minus_im) {
  if (const auto st =
          require(m && plus_re && plus_im && minus_re && minus_im, "NULL argument"))
    return st;
  return guarded([&] {
    const CharRoots roots = lambda_pm(m->params, r);
    *plus_re = roots.plus.real();
    *plus_im = roots.plus.imag();
    *minus_re = roots.minus.real();
    *minus_im = roots.minus.imag();
  });
}

sdw_status sdw_phi_sigma(const sdw_model* m, double r, double* out) {
  if (const auto st = require(m && out, "NULL argument")) return st;
  return guarded([&] { *out = phi_sigma(m->params, r); });
}

sdw_status sdw_symbol_eval(const sdw_model* m, sdw_family family, sdw_band band,
                           int ell, double t, double r, double* re, double* im) {
  if (const auto st = require(m && re && im, "NULL argument")) return st;
  return guarded([&] {
    const Complex v =
        eval_symbol(SymbolSpec{to_family(family), to_band(band), ell}, m->params, t, r);
    *re = v.real();
    *im = v.imag();
  });
}

sdw_status sdw_solution_hat(const sdw_model* m, double t, double r, double u0_re,
                            double u0_im, double u1_re, double u1_im, int ell,
                            double* re, double* im) {
  if (const auto st = require(m && re && im, "NULL argument")) return st;
  return guarded([&] {
    const Complex v = solution_hat(m->params, t, r, Complex(u0_re, u0_im),
                                   Complex(u1_re, u1_im), ell);
    *re = v.real();
    *im = v.imag();
  });
}

sdw_status sdw_integrate_mode(const sdw_model* m, double r, double t_end,
                              double state[4], double h_override) {
  if (const auto st = require(m && state, "NULL argument")) return st;
  return guarded([&] {
    const ModeState end = integrate_mode(
        m->params, r, t_end,
        ModeState{Complex(state[0], state[1]), Complex(state[2], state[3]), 0.0},
        h_override);
    state[0] = end.v.real();
    state[1] = end.v.imag();
    state[2] = end.w.real();
    state[3] = end.w.imag();
  });
}

sdw_status sdw_ode_residual(const sdw_model* m, double r, double t, double u0_re,
                            double u0_im, double u1_re, double u1_im, double h,
                            double* out) {
  if (const auto st = require(m && out, "NULL argument")) return st;
  return guarded([&] {
    *out = ode_residual(m->params, r, t, Complex(u0_re, u0_im),
                        Complex(u1_re, u1_im), h);
  });
}

sdw_status sdw_datum_create(const char* id, sdw_datum** out) {
  if (const auto st = require(id && out, "NULL argument")) return st;
  *out = nullptr;
  return guarded([&] { *out = new sdw_datum{RadialDatum::parse(id)}; });
}

void sdw_datum_free(sdw_datum* d) { delete d; }

sdw_status sdw_datum_fourier(const sdw_datum* d, int n, double r, double* out) {
  if (const auto st = require(d && out, "NULL argument")) return st;
  return guarded([&] { *out = d->datum.fourier(n, r); });
}

sdw_status sdw_datum_moment(const sdw_datum* d, int n, double* out) {
  if (const auto st = require(d && out, "NULL argument")) return st;
  return guarded([&] { *out = d->datum.moment(n); });
}

sdw_status sdw_seminorm(const sdw_model* m, sdw_family family, sdw_band band,
                        int ell, double k, const sdw_datum* datum, double t,
                        double* out) {
  if (const auto st = require(m && out, "NULL argument")) return st;
  return guarded([&] {
    NormQuery q;
    q.symbol = SymbolSpec{to_family(family), to_band(band), ell};
    q.params = m->params;
    q.idx = DerivativeIndex(k, ell);
    q.datum = datum ? &datum->datum : nullptr;
    q.t = t;
    *out = sobolev_seminorm(q, QuadratureConfig{});
  });
}

sdw_status sdw_solution_seminorm(const sdw_model* m, const sdw_datum* u0,
                                 const sdw_datum* u1, double k, int ell, double t,
                                 double* out) {
  if (const auto st = require(m && out, "NULL argument")) return st;
  return guarded([&] {
    *out = solution_seminorm(m->params, u0 ? &u0->datum : nullptr,
                             u1 ? &u1->datum : nullptr, DerivativeIndex(k, ell), t,
                             QuadratureConfig{});
  });
}

sdw_status sdw_lp_band_norm(int n, double C0, double s, double alpha, double beta,
                            int midhigh_band, double p, double rho, double* out) {
  if (const auto st = require(out != nullptr, "NULL argument")) return st;
  return guarded([&] {
    *out = lp_band_norm(C0, s, alpha, beta,
                        midhigh_band ? LpBand::MidHigh : LpBand::Low, p, n, rho,
                        QuadratureConfig{});
  });
}

sdw_status sdw_profile_residual(const sdw_model* m, const sdw_datum* u0,
                                const sdw_datum* u1, int problem, double k, int ell,
                                double t, int naive_dt_profile, double* out) {
  if (const auto st = require(m && out, "NULL argument")) return st;
  return guarded([&] {
    *out = profile_residual_norm(
        m->params, DerivativeIndex(k, ell), u0 ? &u0->datum : nullptr,
        u1 ? &u1->datum : nullptr,
        problem == 0 ? ProfileProblem::MomentG : ProfileProblem::MomentH, t,
        QuadratureConfig{}, ResidualRoute::Direct, naive_dt_profile != 0);
  });
}

const char* sdw_default_config(void) {
  thread_local std::string cached;
  if (cached.empty()) cached = default_config_json();
  return cached.c_str();
}

sdw_status sdw_verify_run(const char* config_json, const char* out_dir, int* n_pass,
                          int* n_fail, int* n_skip) {
  if (const auto st = require(out_dir != nullptr, "out_dir must not be NULL"))
    return st;
  return guarded([&] {
    const auto suites = run_suites(config_json ? config_json : "");
    write_outputs(suites, out_dir);
    int pass = 0, failc = 0, skip = 0;
    for (const auto& s : suites) {
      pass += s.passed();
      failc += s.failed();
      skip += s.skipped();
    }
    if (n_pass) *n_pass = pass;
    if (n_fail) *n_fail = failc;
    if (n_skip) *n_skip = skip;
  });
}

}  // extern "C"
