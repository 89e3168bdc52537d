#include "sdwave/initial_data.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace sdwave {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) out.push_back(item);
  return out;
}

double parse_pos(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size() || !(v > 0.0)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, std::string("datum: bad ") + what + " '" + s + "'");
  }
}

}  // namespace

RadialDatum RadialDatum::parse(const std::string& id) {
  const auto parts = split_colon(id);
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "datum: empty id");
  RadialDatum d;
  if (parts[0] == "gaussian") {
    d.kind = Kind::Gaussian;
    if (parts.size() > 2) fail(ErrorCode::InvalidArgument, "datum: gaussian:a");
    if (parts.size() == 2) d.a = parse_pos(parts[1], "width");
  } else if (parts[0] == "gdiff") {
    d.kind = Kind::GaussianDiff;
    if (parts.size() != 3) fail(ErrorCode::InvalidArgument, "datum: gdiff:a:b");
    d.a = parse_pos(parts[1], "width a");
    d.b = parse_pos(parts[2], "width b");
    if (d.a == d.b) fail(ErrorCode::InvalidArgument, "datum: gdiff needs a != b");
  } else if (parts[0] == "bump") {
    d.kind = Kind::BumpApprox;
    if (parts.size() > 2) fail(ErrorCode::InvalidArgument, "datum: bump:s");
    if (parts.size() == 2) d.a = parse_pos(parts[1], "scale");
  } else {
    fail(ErrorCode::InvalidArgument, "datum: unknown id '" + id + "'");
  }
  return d;
}

std::string RadialDatum::id() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Gaussian: os << "gaussian:" << a; break;
    case Kind::GaussianDiff: os << "gdiff:" << a << ":" << b; break;
    case Kind::BumpApprox: os << "bump:" << a; break;
  }
  return os.str();
}

double RadialDatum::fourier(int n, double r) const {
  if (n < 1) fail(ErrorCode::InvalidArgument, "datum: n must be >= 1");
  if (r < 0.0) fail(ErrorCode::InvalidArgument, "datum: r must be >= 0");
  const double an = std::pow(a, n);
  switch (kind) {
    case Kind::Gaussian:
      return an * std::exp(-0.5 * a * a * r * r);
    case Kind::GaussianDiff:
      // amplitude (a/b)^n on the second bump makes the moments cancel exactly
      return an * (std::exp(-0.5 * a * a * r * r) - std::exp(-0.5 * b * b * r * r));
    case Kind::BumpApprox: {
      const double x = a * a * r * r;
      return an * (1.0 + n - x) * std::exp(-0.5 * x);
    }
  }
  return 0.0;
}

double RadialDatum::moment(int n) const {
  if (n < 1) fail(ErrorCode::InvalidArgument, "datum: n must be >= 1");
  const double c = std::pow(kTwoPi, 0.5 * n);
  switch (kind) {
    case Kind::Gaussian: return c * std::pow(a, n);
    case Kind::GaussianDiff: return 0.0;
    case Kind::BumpApprox: return c * std::pow(a, n) * (1.0 + n);
  }
  return 0.0;
}

double RadialDatum::fourier_bound(int n) const {
  const double an = std::pow(a, n);
  switch (kind) {
    case Kind::Gaussian: return an;
    case Kind::GaussianDiff: return an;
    case Kind::BumpApprox:
      // |1+n-x| e^{-x/4} <= (1+n) + sup x e^{-x/4} = (1+n) + 4/e
      return an * (1.0 + n + 4.0 / std::exp(1.0));
  }
  return an;
}

double RadialDatum::decay_c() const {
  switch (kind) {
    case Kind::Gaussian: return 0.5 * a * a;
    case Kind::GaussianDiff: return 0.5 * std::min(a, b) * std::min(a, b);
    case Kind::BumpApprox: return 0.25 * a * a;
  }
  return 0.0;
}

double datum_fourier(const RadialDatum& d, int n, double r) { return d.fourier(n, r); }
double datum_moment(const RadialDatum& d, int n) { return d.moment(n); }

}  // namespace sdwave
