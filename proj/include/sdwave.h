/* sdwave: spectral solution operators and decay verification for the
 * structurally damped wave equation  u_tt - Lap u + nu (-Lap)^sigma u_t = 0.
 *
 * C API over the C++ core. All functions return sdw_status; outputs go
 * through pointers. Handles are opaque and must be released with the
 * matching *_free call. The last failure message of the calling thread is
 * available via sdw_last_error().
 */
#ifndef SDWAVE_H
#define SDWAVE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdw_status {
  SDW_OK = 0,
  SDW_ERR_INVALID_ARGUMENT = 1,
  SDW_ERR_REGIME_MISMATCH = 2,
  SDW_ERR_SINGULAR_AT_ZERO = 3,
  SDW_ERR_OUT_OF_REAL_BRANCH = 4,
  SDW_ERR_NON_INTEGRABLE = 5,
  SDW_ERR_TOL_NOT_MET = 6,
  SDW_ERR_STEP_UNDERFLOW = 7,
  SDW_ERR_INSUFFICIENT_POINTS = 8,
  SDW_ERR_BAND_VIOLATION = 9,
  SDW_ERR_NO_DECAY_BOUND = 10,
  SDW_ERR_CONFIG = 11,
  SDW_ERR_IO = 12,
  SDW_ERR_INTERNAL = 13
} sdw_status;

typedef enum sdw_regime {
  SDW_REGIME_SUB_HALF = 0,
  SDW_REGIME_HALF_UNDERDAMPED = 1,
  SDW_REGIME_HALF_CRITICAL = 2,
  SDW_REGIME_HALF_OVERDAMPED = 3,
  SDW_REGIME_SUPER_HALF = 4
} sdw_regime;

/* Matches the core multiplier families. */
typedef enum sdw_family {
  SDW_FAM_J1 = 0, SDW_FAM_J2, SDW_FAM_J3, SDW_FAM_J4,
  SDW_FAM_K1, SDW_FAM_K2, SDW_FAM_K3,
  SDW_FAM_JT1, SDW_FAM_JT2, SDW_FAM_JT3,
  SDW_FAM_KT1, SDW_FAM_KT2, SDW_FAM_KT3,
  SDW_FAM_E1, SDW_FAM_E2, SDW_FAM_E3,
  SDW_FAM_PROFILE_G, SDW_FAM_PROFILE_H,
  SDW_FAM_PROFILE_COS_HYBRID, SDW_FAM_PROFILE_SIN_HYBRID
} sdw_family;

typedef enum sdw_band {
  SDW_BAND_LOW = 0, SDW_BAND_MID, SDW_BAND_HIGH, SDW_BAND_FULL
} sdw_band;

typedef struct sdw_model sdw_model;
typedef struct sdw_datum sdw_datum;

const char* sdw_version(void);
const char* sdw_status_name(sdw_status s);
/* thread-local message of the last failing call */
const char* sdw_last_error(void);

/* ----------------------------------------------------------- model ----- */
sdw_status sdw_model_create(int n, double sigma, double nu, sdw_model** out);
void sdw_model_free(sdw_model* m);
sdw_status sdw_model_regime(const sdw_model* m, sdw_regime* out);
const char* sdw_regime_name(sdw_regime r);
sdw_status sdw_model_exponents(const sdw_model* m, double k,
                               double* gamma, double* gamma_tilde);
sdw_status sdw_model_ell_weight(const sdw_model* m, double* weight);
sdw_status sdw_model_rho_max(const sdw_model* m, double* out);
sdw_status sdw_model_admissible(const sdw_model* m, double k, int ell, int* out);
sdw_status sdw_model_cutoffs(const sdw_model* m, double r,
                             double* lo, double* mid, double* hi);

/* --------------------------------------------------------- symbols ----- */
sdw_status sdw_char_roots(const sdw_model* m, double r,
                          double* plus_re, double* plus_im,
                          double* minus_re, double* minus_im);
sdw_status sdw_phi_sigma(const sdw_model* m, double r, double* out);
sdw_status sdw_symbol_eval(const sdw_model* m, sdw_family family, sdw_band band,
                           int ell, double t, double r, double* re, double* im);
sdw_status sdw_solution_hat(const sdw_model* m, double t, double r,
                            double u0_re, double u0_im, double u1_re, double u1_im,
                            int ell, double* re, double* im);

/* ---------------------------------------------------------- oracle ----- */
/* h_override = 0 selects the built-in step rule. state = {v_re, v_im,
 * w_re, w_im} on input and output. */
sdw_status sdw_integrate_mode(const sdw_model* m, double r, double t_end,
                              double state[4], double h_override);
sdw_status sdw_ode_residual(const sdw_model* m, double r, double t,
                            double u0_re, double u0_im, double u1_re, double u1_im,
                            double h, double* out);

/* ------------------------------------------------------------ data ----- */
/* ids: "gaussian:a", "gdiff:a:b", "bump:s" */
sdw_status sdw_datum_create(const char* id, sdw_datum** out);
void sdw_datum_free(sdw_datum* d);
sdw_status sdw_datum_fourier(const sdw_datum* d, int n, double r, double* out);
sdw_status sdw_datum_moment(const sdw_datum* d, int n, double* out);

/* ------------------------------------------------------- quadrature ----- */
/* datum may be NULL (kernel-only norm). */
sdw_status sdw_seminorm(const sdw_model* m, sdw_family family, sdw_band band,
                        int ell, double k, const sdw_datum* datum, double t,
                        double* out);
/* Solution seminorm || |xi|^k dt^ell u_hat ||_2; u0/u1 may be NULL. */
sdw_status sdw_solution_seminorm(const sdw_model* m, const sdw_datum* u0,
                                 const sdw_datum* u1, double k, int ell, double t,
                                 double* out);
/* || e^{-C0 s r^alpha} r^beta chi_band ||_{L^p}, band 0 = low, 1 = mid+high. */
sdw_status sdw_lp_band_norm(int n, double C0, double s, double alpha, double beta,
                            int midhigh_band, double p, double rho, double* out);
/* Residual against the moment-weighted profile; problem 0 compares with the
 * u1-moment profile (G), problem 1 with the u0-moment profile (H). */
sdw_status sdw_profile_residual(const sdw_model* m, const sdw_datum* u0,
                                const sdw_datum* u1, int problem, double k, int ell,
                                double t, int naive_dt_profile, double* out);

/* ---------------------------------------------------------- verify ----- */
/* Default experiment configuration as a JSON document (static storage). */
const char* sdw_default_config(void);
/* Runs the configured suites and writes <suite>.csv / <suite>.json into
 * out_dir. config_json = NULL or "" selects the defaults. Returns SDW_OK even
 * when checks fail; inspect *n_fail. */
sdw_status sdw_verify_run(const char* config_json, const char* out_dir,
                          int* n_pass, int* n_fail, int* n_skip);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SDWAVE_H */
