#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "sdwave/symbols.hpp"

using namespace sdwave;

namespace {

struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double a, double b) {
    return a + (b - a) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }
};

const std::vector<ModelParams> kRegimeParams = {
    ModelParams(2, 0.25, 2.0), ModelParams(2, 0.5, 1.0), ModelParams(2, 0.5, 2.0),
    ModelParams(2, 0.5, 3.0), ModelParams(3, 0.75, 1.0), ModelParams(3, 1.0, 1.0)};

std::vector<SymbolFamily> families_for(Regime reg) {
  std::vector<SymbolFamily> out = {SymbolFamily::ProfileG, SymbolFamily::ProfileH};
  switch (reg) {
    case Regime::SubHalf:
      out.insert(out.end(), {SymbolFamily::J1, SymbolFamily::J2, SymbolFamily::J3,
                             SymbolFamily::J4});
      break;
    case Regime::SuperHalf:
      out.insert(out.end(), {SymbolFamily::K1, SymbolFamily::K2, SymbolFamily::K3,
                             SymbolFamily::ProfileCosHybrid,
                             SymbolFamily::ProfileSinHybrid});
      break;
    case Regime::HalfUnderdamped:
      out.insert(out.end(),
                 {SymbolFamily::Kt1, SymbolFamily::Kt2, SymbolFamily::Kt3});
      break;
    case Regime::HalfOverdamped:
      out.insert(out.end(),
                 {SymbolFamily::Jt1, SymbolFamily::Jt2, SymbolFamily::Jt3});
      break;
    case Regime::HalfCritical:
      out.insert(out.end(), {SymbolFamily::E1, SymbolFamily::E2, SymbolFamily::E3});
      break;
  }
  return out;
}

}  // namespace

TEST_CASE("characteristic roots satisfy Vieta identities") {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double sigma = rng.uniform(0.05, 1.0);
    const double nu = rng.uniform(0.2, 4.0);
    const double r = std::exp(rng.uniform(std::log(1e-4), std::log(20.0)));
    const ModelParams p(2, sigma, nu);
    const CharRoots l = lambda_pm(p, r);
    const Complex prod = l.plus * l.minus;
    const Complex sum = l.plus + l.minus;
    CHECK(std::abs(prod - r * r) <= 1e-12 * r * r);
    const double trace = nu * std::pow(r, 2.0 * sigma);
    CHECK(std::abs(sum + trace) <= 1e-12 * trace);
    CHECK(l.plus.real() <= 0.0);
    CHECK(l.minus.real() <= 0.0);
    CHECK(l.plus.real() >= l.minus.real());
  }
}

TEST_CASE("roots at the critical and underdamped points") {
  const CharRoots dbl = lambda_pm(ModelParams(2, 0.5, 2.0), 0.3);
  CHECK(dbl.plus.real() == doctest::Approx(-0.3).epsilon(1e-13));
  CHECK(dbl.minus.real() == doctest::Approx(-0.3).epsilon(1e-13));
  CHECK(dbl.plus.imag() == 0.0);

  const CharRoots osc = lambda_pm(ModelParams(2, 0.5, 1.0), 1.0);
  CHECK(osc.plus.real() == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(osc.plus.imag() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
  CHECK(osc.minus.imag() == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("phi_sigma branch and values") {
  CHECK(phi_sigma(ModelParams(3, 1.0, 2.0), 1e-9) == doctest::Approx(1.0));
  CHECK(phi_sigma(ModelParams(3, 0.75, 1.0), 1.0) ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
  try {
    phi_sigma(ModelParams(3, 1.0, 2.0), 1.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRealBranch);
  }
  CHECK_THROWS_AS(phi_sigma(ModelParams(2, 0.3, 1.0), 0.5), Error);
}

TEST_CASE("profile kernel point values") {
  const ModelParams half(2, 0.5, 2.0);
  CHECK(eval_symbol({SymbolFamily::ProfileG, Band::Full, 0}, half, 2.0, 1.0).real() ==
        doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(eval_symbol({SymbolFamily::ProfileH, Band::Full, 0}, half, 3.0, 1.0).real() ==
        doctest::Approx(4.0 * std::exp(-3.0)).epsilon(1e-14));

  const ModelParams sup(3, 0.75, 1.0);
  CHECK(eval_symbol({SymbolFamily::ProfileG, Band::Full, 0}, sup, 0.0, 0.5).real() ==
        0.0);

  const ModelParams sub(2, 0.25, 2.0);
  CHECK(eval_symbol({SymbolFamily::ProfileG, Band::Full, 0}, sub, 0.0, 0.5).real() ==
        doctest::Approx(1.0 / (2.0 * std::sqrt(0.5))).epsilon(1e-14));

  for (const auto& p : kRegimeParams)
    CHECK(eval_symbol({SymbolFamily::ProfileH, Band::Full, 0}, p, 0.0, 0.7).real() ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("series-stabilized continuity across nu = 2 at sigma = 1/2") {
  const double expect = std::exp(-1.0);  // t e^{-t r} at t = r = 1
  const Complex over = eval_symbol({SymbolFamily::Jt3, Band::Full, 0},
                                   ModelParams(2, 0.5, 2.0 + 1e-8), 1.0, 1.0);
  const Complex under = eval_symbol({SymbolFamily::Kt3, Band::Full, 0},
                                    ModelParams(2, 0.5, 2.0 - 1e-8), 1.0, 1.0);
  CHECK(std::abs(over - expect) <= 1e-6);
  CHECK(std::abs(under - expect) <= 1e-6);

  // all three family members approach the critical kernels, both ell
  const ModelParams crit(2, 0.5, 2.0);
  const ModelParams nearby[2] = {ModelParams(2, 0.5, 2.0 + 1e-8),
                                 ModelParams(2, 0.5, 2.0 - 1e-8)};
  const SymbolFamily fams[2][3] = {
      {SymbolFamily::Jt1, SymbolFamily::Jt2, SymbolFamily::Jt3},
      {SymbolFamily::Kt1, SymbolFamily::Kt2, SymbolFamily::Kt3}};
  const SymbolFamily efams[3] = {SymbolFamily::E1, SymbolFamily::E2, SymbolFamily::E3};
  for (int side = 0; side < 2; ++side) {
    for (int j = 0; j < 3; ++j) {
      for (int ell = 0; ell <= 1; ++ell) {
        for (double t : {1.0, 8.0}) {
          for (double r : {0.2, 1.0}) {
            const Complex v =
                eval_symbol({fams[side][j], Band::Full, ell}, nearby[side], t, r);
            const Complex e = eval_symbol({efams[j], Band::Full, ell}, crit, t, r);
            CHECK(std::abs(v - e) <= 1e-6 * std::max(1.0, std::abs(e)));
          }
        }
      }
    }
  }

  // the literal profile expressions are continuous across nu = 2 as well
  for (int side = 0; side < 2; ++side) {
    for (auto fam : {SymbolFamily::ProfileG, SymbolFamily::ProfileH}) {
      for (int ell = 0; ell <= 1; ++ell) {
        for (double t : {1.0, 8.0}) {
          for (double r : {0.2, 1.0}) {
            const Complex v = eval_symbol({fam, Band::Full, ell}, nearby[side], t, r);
            const Complex e = eval_symbol({fam, Band::Full, ell}, crit, t, r);
            CHECK(std::abs(v - e) <= 1e-6 * std::max(1.0, std::abs(e)));
          }
        }
      }
    }
  }
}

TEST_CASE("no overflow for the overdamped sigma = 1/2 kernels at large t r") {
  const ModelParams p(2, 0.5, 3.0);
  for (double t : {1e3, 1e4, 1e6}) {
    for (auto fam : {SymbolFamily::Jt1, SymbolFamily::Jt2, SymbolFamily::Jt3}) {
      const Complex v = eval_symbol({fam, Band::Full, 0}, p, t, 1.0);
      CHECK(std::isfinite(v.real()));
      CHECK(std::isfinite(v.imag()));
      CHECK(std::abs(v) <= t);  // decaying branch dominates
    }
  }
}

TEST_CASE("profiles at sigma = 1/2 coincide with the evolution kernels") {
  for (double nu : {1.0, 3.0}) {
    const ModelParams p(2, 0.5, nu);
    const bool over = nu > 2.0;
    for (double t : {0.5, 2.0, 20.0}) {
      for (double r : {0.01, 0.3, 1.0, 3.0}) {
        const Complex g = eval_symbol({SymbolFamily::ProfileG, Band::Full, 0}, p, t, r);
        const Complex s3 = eval_symbol(
            {over ? SymbolFamily::Jt3 : SymbolFamily::Kt3, Band::Full, 0}, p, t, r);
        CHECK(std::abs(g - s3) <= 1e-12 * std::max(1.0, std::abs(g)));
        const Complex h = eval_symbol({SymbolFamily::ProfileH, Band::Full, 0}, p, t, r);
        const Complex s1 = eval_symbol(
            {over ? SymbolFamily::Jt1 : SymbolFamily::Kt1, Band::Full, 0}, p, t, r);
        const Complex s2 = eval_symbol(
            {over ? SymbolFamily::Jt2 : SymbolFamily::Kt2, Band::Full, 0}, p, t, r);
        CHECK(std::abs(h - (s1 + s2)) <= 1e-12 * std::max(1.0, std::abs(h)));
      }
    }
  }
}

TEST_CASE("closed-form time derivatives match centered differences") {
  const double h = 1e-4;
  for (const auto& p : kRegimeParams) {
    for (auto fam : families_for(classify_regime(p))) {
      for (double t : {0.5, 3.0, 12.0}) {
        for (double r : {0.05, 0.4, 1.3}) {
          const SymbolSpec s0{fam, Band::Full, 0};
          const SymbolSpec s1{fam, Band::Full, 1};
          const Complex fd = (eval_symbol(s0, p, t + h, r) -
                              eval_symbol(s0, p, t - h, r)) /
                             (2.0 * h);
          const Complex cf = eval_symbol(s1, p, t, r);
          const double scale = std::max({std::abs(cf), std::abs(fd), 1e-6});
          CHECK(std::abs(cf - fd) <= 1e-6 * scale);
        }
      }
    }
  }
}

TEST_CASE("band cut-offs multiply the symbol") {
  const ModelParams p(2, 0.25, 2.0);
  const CutoffBands bands(p);
  const double r = 0.8 * bands.rho();
  const Complex full =
      eval_symbol({SymbolFamily::ProfileH, Band::Full, 0}, p, bands, 3.0, r);
  const Complex low =
      eval_symbol({SymbolFamily::ProfileH, Band::Low, 0}, p, bands, 3.0, r);
  const Complex mid =
      eval_symbol({SymbolFamily::ProfileH, Band::Mid, 0}, p, bands, 3.0, r);
  const Complex high =
      eval_symbol({SymbolFamily::ProfileH, Band::High, 0}, p, bands, 3.0, r);
  CHECK(std::abs(low + mid + high - full) <= 1e-12 * std::abs(full));
  CHECK(std::abs(high) == 0.0);
}

TEST_CASE("family / regime mismatches are rejected") {
  CHECK_THROWS_AS(
      eval_symbol({SymbolFamily::K1, Band::Full, 0}, ModelParams(2, 0.25, 2.0), 1.0, 1.0),
      Error);
  CHECK_THROWS_AS(
      eval_symbol({SymbolFamily::J1, Band::Full, 0}, ModelParams(3, 0.75, 1.0), 1.0, 1.0),
      Error);
  CHECK_THROWS_AS(
      eval_symbol({SymbolFamily::ProfileCosHybrid, Band::Full, 0},
                  ModelParams(2, 0.25, 2.0), 1.0, 1.0),
      Error);
  try {
    eval_symbol({SymbolFamily::E1, Band::Full, 0}, ModelParams(2, 0.5, 1.0), 1.0, 1.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RegimeMismatch);
  }
}

TEST_CASE("r = 0 limits and genuine singularities") {
  const ModelParams sub(2, 0.25, 2.0);
  CHECK(eval_symbol({SymbolFamily::J1, Band::Full, 0}, sub, 2.0, 0.0).real() == 1.0);
  CHECK_THROWS_AS(eval_symbol({SymbolFamily::J2, Band::Full, 0}, sub, 2.0, 0.0), Error);
  CHECK_THROWS_AS(eval_symbol({SymbolFamily::ProfileG, Band::Full, 0}, sub, 2.0, 0.0),
                  Error);
  try {
    eval_symbol({SymbolFamily::J4, Band::Full, 0}, sub, 2.0, 0.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularAtZero);
  }
  const ModelParams sup(3, 0.75, 1.0);
  CHECK(eval_symbol({SymbolFamily::K3, Band::Full, 0}, sup, 2.0, 0.0).real() == 2.0);
  CHECK(eval_symbol({SymbolFamily::ProfileG, Band::Full, 0}, sup, 2.0, 0.0).real() ==
        2.0);
  const ModelParams crit(2, 0.5, 2.0);
  CHECK(eval_symbol({SymbolFamily::E3, Band::Full, 0}, crit, 2.0, 0.0).real() == 2.0);
}

TEST_CASE("solution matches data at t = 0 exactly") {
  const Complex u0(0.3, -1.2), u1(-0.7, 0.4);
  for (const auto& p : kRegimeParams) {
    for (double r : {0.0, 0.3, 2.0, 9.0}) {
      CHECK(solution_hat(p, 0.0, r, u0, u1, 0) == u0);
      CHECK(solution_hat(p, 0.0, r, u0, u1, 1) == u1);
    }
  }
}

TEST_CASE("solution equals the per-regime operator sums") {
  const Complex u0(0.8, 0.1), u1(-0.4, 0.9);
  for (const auto& p : kRegimeParams) {
    const Regime reg = classify_regime(p);
    for (double t : {0.7, 6.0}) {
      for (double r : {0.07, 0.9, 2.4}) {
        Complex sum;
        switch (reg) {
          case Regime::SubHalf:
            sum = (eval_symbol({SymbolFamily::J1, Band::Full, 0}, p, t, r) +
                   eval_symbol({SymbolFamily::J3, Band::Full, 0}, p, t, r)) * u0 +
                  (eval_symbol({SymbolFamily::J2, Band::Full, 0}, p, t, r) +
                   eval_symbol({SymbolFamily::J4, Band::Full, 0}, p, t, r)) * u1;
            break;
          case Regime::SuperHalf:
            sum = (eval_symbol({SymbolFamily::K1, Band::Full, 0}, p, t, r) +
                   eval_symbol({SymbolFamily::K2, Band::Full, 0}, p, t, r)) * u0 +
                  eval_symbol({SymbolFamily::K3, Band::Full, 0}, p, t, r) * u1;
            break;
          case Regime::HalfUnderdamped:
            sum = (eval_symbol({SymbolFamily::Kt1, Band::Full, 0}, p, t, r) +
                   eval_symbol({SymbolFamily::Kt2, Band::Full, 0}, p, t, r)) * u0 +
                  eval_symbol({SymbolFamily::Kt3, Band::Full, 0}, p, t, r) * u1;
            break;
          case Regime::HalfOverdamped:
            sum = (eval_symbol({SymbolFamily::Jt1, Band::Full, 0}, p, t, r) +
                   eval_symbol({SymbolFamily::Jt2, Band::Full, 0}, p, t, r)) * u0 +
                  eval_symbol({SymbolFamily::Jt3, Band::Full, 0}, p, t, r) * u1;
            break;
          case Regime::HalfCritical:
            sum = (eval_symbol({SymbolFamily::E1, Band::Full, 0}, p, t, r) +
                   eval_symbol({SymbolFamily::E2, Band::Full, 0}, p, t, r)) * u0 +
                  eval_symbol({SymbolFamily::E3, Band::Full, 0}, p, t, r) * u1;
            break;
        }
        const Complex direct = solution_hat(p, t, r, u0, u1, 0);
        CHECK(std::abs(direct - sum) <= 1e-12 * std::max(1.0, std::abs(direct)));
      }
    }
  }
}

TEST_CASE("family validity matrix matches the classifier") {
  for (const auto& p : kRegimeParams) {
    const Regime reg = classify_regime(p);
    for (auto fam : families_for(reg)) CHECK(family_valid_for(fam, reg));
  }
  CHECK_FALSE(family_valid_for(SymbolFamily::J1, Regime::SuperHalf));
  CHECK_FALSE(family_valid_for(SymbolFamily::Kt1, Regime::HalfOverdamped));
  CHECK(family_valid_for(SymbolFamily::ProfileG, Regime::HalfCritical));
}
