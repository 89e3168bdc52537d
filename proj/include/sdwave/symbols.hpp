#pragma once

#include <complex>

#include "sdwave/model.hpp"

namespace sdwave {

using Complex = std::complex<double>;

// Fourier-multiplier families of the solution formulas and profile kernels.
// J* are the SubHalf operators; K* the SuperHalf ones; Jt*/Kt*/E* the three
// sigma = 1/2 cases (overdamped / underdamped / critical). ProfileG/ProfileH
// are the regime profile kernels; the hybrids are the SuperHalf d/dt-profiles.
enum class SymbolFamily {
  J1, J2, J3, J4,
  K1, K2, K3,
  Jt1, Jt2, Jt3,
  Kt1, Kt2, Kt3,
  E1, E2, E3,
  ProfileG, ProfileH,
  ProfileCosHybrid, ProfileSinHybrid,
};

enum class Band { Low, Mid, High, Full };

struct SymbolSpec {
  SymbolFamily family = SymbolFamily::ProfileG;
  Band band = Band::Full;
  int ell = 0;
};

const char* family_name(SymbolFamily f);
const char* band_name(Band b);

struct CharRoots {
  Complex plus;   // root with the larger real part (+discriminant branch on ties)
  Complex minus;
};

// Roots of lambda^2 + nu r^{2 sigma} lambda + r^2 = 0, cancellation-free.
CharRoots lambda_pm(const ModelParams& p, double r);

// sqrt(1 - nu^2 r^{4 sigma - 2} / 4); OutOfRealBranch once the radicand goes
// negative (caller must switch to the exact-root forms).
double phi_sigma(const ModelParams& p, double r);

bool family_valid_for(SymbolFamily f, Regime reg);

// Exact multiplier value times the band cut-off. ell = 1 uses hand-written
// closed-form time derivatives throughout.
Complex eval_symbol(const SymbolSpec& spec, const ModelParams& p,
                    const CutoffBands& bands, double t, double r);
Complex eval_symbol(const SymbolSpec& spec, const ModelParams& p, double t, double r);

// Multiplier applied to u0_hat (ell = 0: C + aS, the H-propagator) and to
// u1_hat (S). ell = 1 gives their time derivatives (-r^2 S and C - aS).
Complex propagator_u0(const ModelParams& p, double t, double r, int ell);
Complex propagator_u1(const ModelParams& p, double t, double r, int ell);

// u_hat (ell = 0) or dt u_hat (ell = 1) for Cauchy data (u0_hat, u1_hat).
Complex solution_hat(const ModelParams& p, double t, double r,
                     Complex u0_hat, Complex u1_hat, int ell);

// Quadrature metadata: formal r -> 0 order s (multiplier ~ r^{-s} in the
// scaling regime that governs Eq. (1.6)-type integrability) and whether the
// multiplier oscillates like sin/cos(t r).
struct SymbolShape {
  double singular_order = 0.0;
  bool oscillatory = false;
};
SymbolShape symbol_shape(const SymbolSpec& spec, const ModelParams& p);
SymbolShape propagator_shape(const ModelParams& p, int which_datum, int ell);

// ln upper bound for |multiplier| at (t, r), valid for r >= 1 and decreasing
// (used for tail truncation). Returns +inf-free values only.
double symbol_tail_log(const SymbolSpec& spec, const ModelParams& p, double t, double r);
double propagator_tail_log(const ModelParams& p, int which_datum, int ell,
                           double t, double r);

}  // namespace sdwave
