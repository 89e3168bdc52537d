#pragma once

#include <string>

#include "sdwave/error.hpp"

namespace sdwave {

// Radial initial data with closed-form Fourier transforms (convention
// f_hat(xi) = (2 pi)^{-n/2} Int e^{-i x xi} f dx), so every norm reduces to a
// 1-D radial quadrature. Addressable by string id from CLI configs:
//   "gaussian:a"   exp(-|x|^2 / (2 a^2))
//   "gdiff:a:b"    zero-mean difference of two Gaussians
//   "bump:s"       (1 + |x|^2/s^2) exp(-|x|^2 / (2 s^2))
struct RadialDatum {
  enum class Kind { Gaussian, GaussianDiff, BumpApprox };

  Kind kind = Kind::Gaussian;
  double a = 1.0;
  double b = 2.0;  // second width, GaussianDiff only

  static RadialDatum parse(const std::string& id);
  std::string id() const;

  double fourier(int n, double r) const;
  double moment(int n) const;

  // |fourier(r)| <= fourier_bound * exp(-decay_c * r^2), used for truncation.
  double fourier_bound(int n) const;
  double decay_c() const;
};

double datum_fourier(const RadialDatum& d, int n, double r);
double datum_moment(const RadialDatum& d, int n);

}  // namespace sdwave
