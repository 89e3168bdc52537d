#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sdwave/initial_data.hpp"

using namespace sdwave;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("catalog parsing round-trips") {
  CHECK(RadialDatum::parse("gaussian").id() == "gaussian:1");
  CHECK(RadialDatum::parse("gaussian:2.5").id() == "gaussian:2.5");
  CHECK(RadialDatum::parse("gdiff:1:2").id() == "gdiff:1:2");
  CHECK(RadialDatum::parse("bump:0.5").id() == "bump:0.5");
  CHECK_THROWS_AS(RadialDatum::parse("fourierless"), Error);
  CHECK_THROWS_AS(RadialDatum::parse("gaussian:-1"), Error);
  CHECK_THROWS_AS(RadialDatum::parse("gdiff:1:1"), Error);
  CHECK_THROWS_AS(RadialDatum::parse("gdiff:1"), Error);
}

TEST_CASE("self-dual Gaussian") {
  const RadialDatum g = RadialDatum::parse("gaussian:1");
  for (int n = 1; n <= 4; ++n) CHECK(g.fourier(n, 0.0) == 1.0);
  // || u_hat ||_2^2 = 2 pi Int r e^{-r^2} dr = pi for n = 2
  const int N = 40000;
  const double R = 10.0, h = R / N;
  double acc = 0.0;
  for (int i = 0; i <= N; ++i) {
    const double r = i * h;
    const double gv = g.fourier(2, r);
    acc += r * gv * gv * (i == 0 || i == N ? 1.0 : (i % 2 ? 4.0 : 2.0));
  }
  CHECK(kTwoPi * acc * h / 3.0 == doctest::Approx(M_PI).epsilon(1e-10));
}

TEST_CASE("moments") {
  CHECK(RadialDatum::parse("gaussian:1").moment(2) ==
        doctest::Approx(kTwoPi).epsilon(1e-14));
  CHECK(RadialDatum::parse("gaussian:2").moment(1) ==
        doctest::Approx(2.0 * std::sqrt(kTwoPi)).epsilon(1e-14));
  CHECK(RadialDatum::parse("gdiff:1:2").moment(3) == 0.0);
  CHECK(RadialDatum::parse("gdiff:0.5:3").fourier(2, 0.0) == 0.0);
}

TEST_CASE("convention lock: moment = (2 pi)^{n/2} fourier(0)") {
  for (const char* id : {"gaussian:1", "gaussian:0.7", "bump:1", "bump:2.5"}) {
    const RadialDatum d = RadialDatum::parse(id);
    for (int n = 1; n <= 4; ++n) {
      const double lock = std::pow(kTwoPi, 0.5 * n) * d.fourier(n, 0.0);
      CHECK(std::fabs(d.moment(n) - lock) <= 1e-12 * std::fabs(d.moment(n)));
    }
  }
}

TEST_CASE("declared Gaussian-type decay holds on a log grid") {
  for (const char* id : {"gaussian:1", "gaussian:3", "gdiff:1:2", "bump:1", "bump:0.4"}) {
    const RadialDatum d = RadialDatum::parse(id);
    for (int n = 1; n <= 4; ++n) {
      const double B = d.fourier_bound(n);
      const double c = d.decay_c();
      CHECK(c > 0.0);
      for (int i = 0; i < 60; ++i) {
        const double r = std::pow(10.0, -2.0 + 4.0 * i / 59.0);
        CHECK(std::fabs(d.fourier(n, r)) <= B * std::exp(-c * r * r) * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("bad arguments") {
  const RadialDatum g = RadialDatum::parse("gaussian:1");
  CHECK_THROWS_AS(g.fourier(0, 1.0), Error);
  CHECK_THROWS_AS(g.fourier(2, -1.0), Error);
  CHECK_THROWS_AS(g.moment(0), Error);
}
