#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sdwave/freq_oracle.hpp"

using namespace sdwave;

namespace {

double rel_err(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-9});
}

}  // namespace

TEST_CASE("zero-span integration returns the initial state") {
  const ModeState init{Complex(0.4, 0.1), Complex(-0.2, 0.9), 0.0};
  const ModeState out = integrate_mode(ModelParams(2, 0.5, 1.0), 1.0, 0.0, init);
  CHECK(out.v == init.v);
  CHECK(out.w == init.w);
}

TEST_CASE("closed form and RK4 agree in both directions") {
  struct Case {
    double sigma, nu, r, t;
    Complex u0, u1;
  };
  const Case cases[] = {
      {1.0, 2.0, 1.0, 3.0, Complex(1, 0), Complex(0, 0)},
      {0.75, 1.0, 0.4, 5.0, Complex(1, 0), Complex(0, 0)},
      {0.3, 2.0, 0.1, 50.0, Complex(0, 0), Complex(1, 0)},
      {0.5, 3.0, 2.0, 12.0, Complex(0.3, -0.5), Complex(0.8, 0.2)},
      {0.25, 3.0, 9.0, 4.0, Complex(-0.6, 0.1), Complex(0.2, 0.7)},
  };
  for (const auto& c : cases) {
    const ModelParams p(2, c.sigma, c.nu);
    const ModeState end = integrate_mode(p, c.r, c.t, ModeState{c.u0, c.u1, 0.0});
    CHECK(rel_err(solution_hat(p, c.t, c.r, c.u0, c.u1, 0), end.v) <= 1e-6);
    CHECK(rel_err(solution_hat(p, c.t, c.r, c.u0, c.u1, 1), end.w) <= 1e-6);
  }
}

TEST_CASE("mode energy is non-increasing") {
  const ModelParams p(2, 0.4, 1.5);
  const double r = 0.8;
  double prev = INFINITY;
  ModeState state{Complex(1.0, 0.0), Complex(0.0, 0.0), 0.0};
  for (double t : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    state = integrate_mode(p, r, t, state);
    const double energy =
        r * r * std::norm(state.v) + std::norm(state.w);
    CHECK(energy <= prev * (1.0 + 1e-12));
    prev = energy;
  }
}

TEST_CASE("RK4 self-convergence is fourth order") {
  const ModelParams p(3, 0.75, 1.0);
  const double r = 2.0, t = 3.0;
  const Complex u0(1.0, 0.0), u1(0.0, 0.0);
  const Complex exact = solution_hat(p, t, r, u0, u1, 0);
  const auto err = [&](double h) {
    const ModeState end = integrate_mode(p, r, t, ModeState{u0, u1, 0.0}, h);
    return std::abs(end.v - exact);
  };
  const double ratio = err(0.02) / err(0.01);
  CHECK(ratio >= 14.0);
  CHECK(ratio <= 18.0);
}

TEST_CASE("step underflow guard") {
  CHECK_THROWS_AS(
      integrate_mode(ModelParams(2, 0.5, 1.0), 1.0, 1e7,
                     ModeState{Complex(1, 0), Complex(0, 0), 0.0}, 1e-5),
      Error);
}

TEST_CASE("ODE residual of the closed form") {
  // |u| ~ 1 samples: moderate radii, times within the live window
  struct Case {
    double sigma, nu, r, t;
  };
  const Case cases[] = {{0.25, 2.0, 0.5, 2.0}, {0.5, 1.0, 0.8, 1.5},
                        {0.5, 2.0, 0.3, 3.0},  {0.5, 3.0, 0.6, 1.0},
                        {0.75, 1.0, 0.7, 2.0}, {1.0, 1.0, 0.9, 1.2}};
  for (const auto& c : cases) {
    const ModelParams p(2, c.sigma, c.nu);
    const double res = ode_residual(p, c.r, c.t, Complex(1, 0), Complex(0.5, 0));
    CHECK(res <= 1e-5);
  }
  // zero data give the zero solution
  CHECK(ode_residual(ModelParams(2, 0.5, 2.0), 1.0, 2.0, Complex(0, 0),
                     Complex(0, 0)) == 0.0);
}

TEST_CASE("residual shrinks like h^2 under refinement") {
  const ModelParams p(3, 0.75, 2.0);
  const double r = 1.5, t = 2.0;
  const double r1 = ode_residual(p, r, t, Complex(1, 0), Complex(0, 1), 1e-3);
  const double r2 = ode_residual(p, r, t, Complex(1, 0), Complex(0, 1), 5e-4);
  const double ratio = r1 / r2;
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);
}

TEST_CASE("residual preconditions") {
  CHECK_THROWS_AS(
      ode_residual(ModelParams(2, 0.5, 1.0), 1.0, 1e-3, Complex(1, 0), Complex(0, 0)),
      Error);
}
