#pragma once

#include "sdwave/symbols.hpp"

namespace sdwave {

// One Fourier mode: v = u_hat, w = dt u_hat.
struct ModeState {
  Complex v{0.0, 0.0};
  Complex w{0.0, 0.0};
  double t = 0.0;
};

// Default fixed step for the mode ODE at radius r.
double oracle_step(const ModelParams& p, double r);

// Classical RK4 on v' = w, w' = -r^2 v - nu r^{2 sigma} w, fixed step.
// h_override = 0 picks oracle_step(). StepUnderflow past 1e8 steps.
ModeState integrate_mode(const ModelParams& p, double r, double t_end,
                         const ModeState& init, double h_override = 0.0);

// |D2_t u + nu r^{2s} D_t u + r^2 u| with centered differences of solution_hat.
double ode_residual(const ModelParams& p, double r, double t,
                    Complex u0_hat, Complex u1_hat, double h = 1e-3);

}  // namespace sdwave
