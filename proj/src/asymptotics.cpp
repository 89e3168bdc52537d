#include "sdwave/asymptotics.hpp"

#include <algorithm>
#include <cmath>

namespace sdwave {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

int NormLadder::valid_count() const {
  int c = 0;
  for (const auto& e : entries) c += e.ok ? 1 : 0;
  return c;
}

std::vector<double> log_spaced_times(double t_min, double t_max, int points) {
  if (!(t_min > 0.0) || !(t_max > t_min) || points < 2)
    fail(ErrorCode::InvalidArgument, "log_spaced_times: bad range");
  std::vector<double> out(points);
  const double a = std::log(t_min), b = std::log(t_max);
  for (int i = 0; i < points; ++i)
    out[i] = std::exp(a + (b - a) * i / (points - 1.0));
  return out;
}

NormLadder norm_ladder(const std::function<double(double)>& eval,
                       const std::vector<double>& times, const DerivativeIndex& idx,
                       const std::string& meta) {
  NormLadder ladder;
  ladder.idx = idx;
  ladder.meta = meta;
  std::string last_error;
  for (size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      fail(ErrorCode::InvalidArgument, "norm_ladder: times must increase");
  for (double t : times) {
    LadderEntry e;
    e.t = t;
    try {
      e.value = eval(t);
      e.ok = std::isfinite(e.value);
      if (!e.ok) e.error = "non-finite value";
    } catch (const Error& err) {
      e.error = err.what();
    }
    if (!e.ok && e.error.empty()) e.error = "failed";
    if (!e.ok) last_error = e.error;
    ladder.entries.push_back(e);
  }
  if (ladder.valid_count() * 5 < static_cast<int>(ladder.entries.size()) * 4)
    fail(ErrorCode::InsufficientPoints,
         "norm_ladder: more than 20% of entries failed (" + last_error + ")");
  return ladder;
}

DecayFit decay_fit(const NormLadder& ladder) {
  std::vector<double> xs, ys;
  double t_lo = 0.0, t_hi = 0.0;
  for (const auto& e : ladder.entries) {
    if (!e.ok || !(e.value > 0.0)) continue;
    xs.push_back(std::log(e.t));
    ys.push_back(std::log(e.value));
    if (t_lo == 0.0) t_lo = e.t;
    t_hi = e.t;
  }
  const int n = static_cast<int>(xs.size());
  if (n < 5 || std::log10(t_hi / t_lo) < 1.5)
    fail(ErrorCode::InsufficientPoints,
         "decay_fit: need >= 5 valid points spanning >= 1.5 decades");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  DecayFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += d * d;
  }
  fit.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
  fit.t_min = t_lo;
  fit.t_max = t_hi;
  return fit;
}

double scaling_constancy_check(const NormLadder& ladder, double exponent) {
  std::vector<double> scaled;
  for (const auto& e : ladder.entries)
    if (e.ok) scaled.push_back(e.value * std::pow(e.t, exponent));
  if (scaled.empty())
    fail(ErrorCode::InsufficientPoints, "scaling_constancy_check: empty ladder");
  const double med = median_of(scaled);
  if (med == 0.0) return 0.0;
  double dev = 0.0;
  for (double s : scaled) dev = std::max(dev, std::fabs(s / med - 1.0));
  return dev;
}

std::pair<double, double> two_sided_check(const NormLadder& ladder, double exponent,
                                          double t_lo, double t_hi) {
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (const auto& e : ladder.entries) {
    if (!e.ok || e.t < t_lo || e.t > t_hi) continue;
    const double s = e.value * std::pow(e.t, exponent);
    if (!any) {
      lo = hi = s;
      any = true;
    } else {
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  if (!any) fail(ErrorCode::InsufficientPoints, "two_sided_check: empty window");
  return {lo, hi};
}

namespace {

struct ProfileMult {
  SymbolSpec spec;
  double r_weight_pow = 0.0;  // extra r^p factor (gradient-shifted profiles)
  double sign = 1.0;
};

// Comparison multiplier for dt^ell u against the moment-weighted profile.
ProfileMult residual_profile(const ModelParams& p, ProfileProblem prob, int ell,
                             bool naive_dt) {
  const bool super = p.sigma > 0.5;
  ProfileMult m;
  if (prob == ProfileProblem::MomentG) {
    if (ell == 0) {
      m.spec = SymbolSpec{SymbolFamily::ProfileG, Band::Full, 0};
    } else if (!super || naive_dt) {
      m.spec = SymbolSpec{SymbolFamily::ProfileG, Band::Full, 1};
    } else {
      m.spec = SymbolSpec{SymbolFamily::ProfileCosHybrid, Band::Full, 0};
    }
  } else {
    if (ell == 0) {
      m.spec = SymbolSpec{SymbolFamily::ProfileH, Band::Full, 0};
    } else if (!super || naive_dt) {
      m.spec = SymbolSpec{SymbolFamily::ProfileH, Band::Full, 1};
    } else {
      // dt u ~ -m0 |xi| SinHybrid (the gradient-shifted hybrid)
      m.spec = SymbolSpec{SymbolFamily::ProfileSinHybrid, Band::Full, 0};
      m.r_weight_pow = 1.0;
      m.sign = -1.0;
    }
  }
  return m;
}

}  // namespace

double profile_residual_norm(const ModelParams& p, const DerivativeIndex& idx,
                             const RadialDatum* u0, const RadialDatum* u1,
                             ProfileProblem prob, double t, const QuadratureConfig& cfg,
                             ResidualRoute route, bool naive_dt_profile) {
  p.validate();
  const RadialDatum* rel = prob == ProfileProblem::MomentG ? u1 : u0;
  if (!rel)
    fail(ErrorCode::InvalidArgument,
         "profile_residual_norm: the moment-carrying datum is required");
  if (prob == ProfileProblem::MomentH && u1)
    fail(ErrorCode::InvalidArgument,
         "profile_residual_norm: the MomentH comparison assumes u1 == 0");

  const ProfileMult pm = residual_profile(p, prob, idx.ell, naive_dt_profile);
  const CutoffBands bands(p);

  double sing = symbol_shape(pm.spec, p).singular_order;
  if (u0) sing = std::max(sing, propagator_shape(p, 0, idx.ell).singular_order);
  if (u1) sing = std::max(sing, propagator_shape(p, 1, idx.ell).singular_order);
  if (!(p.n + 2.0 * idx.k - 2.0 * sing > 0.0))
    fail(ErrorCode::NonIntegrableSingularity,
         "profile_residual_norm: n + 2k does not dominate the kernel singularity");

  const double g0_at_zero = rel->fourier(p.n, 0.0);
  const double m_direct = rel->moment(p.n) / std::pow(kTwoPi, 0.5 * p.n);

  const auto profile_at = [&, pm](double r) {
    const Complex v = eval_symbol(pm.spec, p, bands, t, r);
    return pm.sign * std::pow(r, pm.r_weight_pow) * v;
  };
  const auto u_at = [&](double r) {
    const Complex g0 = u0 ? Complex(u0->fourier(p.n, r)) : Complex(0.0);
    const Complex g1 = u1 ? Complex(u1->fourier(p.n, r)) : Complex(0.0);
    return solution_hat(p, t, r, g0, g1, idx.ell);
  };

  RadialProfile prof;
  prof.n = p.n;
  prof.k = idx.k;
  prof.singular_order = sing;
  prof.osc_freq = 1.05 * std::max(t, 1.0);
  if (route == ResidualRoute::Direct) {
    prof.amp2 = [=](double r) {
      const double d = std::abs(u_at(r) - m_direct * profile_at(r));
      return d * d;
    };
  } else {
    prof.amp2 = [=](double r) {
      const double g = rel->fourier(p.n, r);
      const Complex pr = profile_at(r);
      const double d = std::abs((u_at(r) - pr * g) + pr * (g - g0_at_zero));
      return d * d;
    };
  }
  prof.log_amp_bound = [=, &p](double r) {
    double lg = symbol_tail_log(pm.spec, p, t, r) +
                pm.r_weight_pow * std::log(r) +
                std::log(std::max(std::fabs(m_direct) + std::fabs(g0_at_zero), 1e-300));
    if (u0)
      lg = std::max(lg, propagator_tail_log(p, 0, idx.ell, t, r) +
                            std::log(std::max(u0->fourier_bound(p.n), 1e-300)) -
                            u0->decay_c() * r * r);
    if (u1)
      lg = std::max(lg, propagator_tail_log(p, 1, idx.ell, t, r) +
                            std::log(std::max(u1->fourier_bound(p.n), 1e-300)) -
                            u1->decay_c() * r * r);
    return lg + std::log(3.0);
  };
  return radial_l2_norm(prof, cfg);
}

const char* lemma_check_name(LemmaCheck c) {
  switch (c) {
    case LemmaCheck::L31_J1: return "L3.1-J1";
    case LemmaCheck::L31_J2: return "L3.1-J2";
    case LemmaCheck::L31_J3: return "L3.1-J3";
    case LemmaCheck::L31_J4: return "L3.1-J4";
    case LemmaCheck::L33_K1: return "L3.3-K1";
    case LemmaCheck::L33_K2: return "L3.3-K2";
    case LemmaCheck::L33_K3: return "L3.3-K3";
    case LemmaCheck::L41_J1: return "L4.1-J1";
    case LemmaCheck::L41_J2: return "L4.1-J2";
    case LemmaCheck::L43_K1: return "L4.3-K1";
    case LemmaCheck::L43_K3: return "L4.3-K3";
    case LemmaCheck::L44_K1: return "L4.4-K1";
    case LemmaCheck::L44_K3: return "L4.4-K3";
    case LemmaCheck::L45_12: return "L4.5-12";
    case LemmaCheck::L45_3: return "L4.5-3";
  }
  return "?";
}

BoundFit pointwise_bound_fit_custom(const std::function<double(double, double)>& lhs,
                                    const std::function<double(double, double)>& poly,
                                    double alpha, bool shift_t_by_one, double r_lo,
                                    double r_hi, const BoundFitOptions& opt) {
  if (!(r_hi > r_lo) || !(r_lo > 0.0))
    fail(ErrorCode::InvalidArgument, "pointwise_bound_fit: bad r range");
  const int nt = static_cast<int>(opt.t_grid.size());
  const int nr = opt.r_points;
  std::vector<double> base(nt * nr), earg(nt * nr);
  for (int it = 0; it < nt; ++it) {
    const double t = opt.t_grid[it];
    const double s = shift_t_by_one ? 1.0 + t : t;
    for (int ir = 0; ir < nr; ++ir) {
      const double r =
          r_lo * std::pow(r_hi / r_lo, nr == 1 ? 0.0 : ir / (nr - 1.0));
      const double den = poly(t, r);
      base[it * nr + ir] = den > 0.0 ? lhs(t, r) / den : 0.0;
      earg[it * nr + ir] = s * std::pow(r, alpha);
    }
  }
  const auto ratio_max_at = [&](double c, int it) {
    double m = 0.0;
    for (int ir = 0; ir < nr; ++ir) {
      const int i = it * nr + ir;
      m = std::max(m, base[i] * std::exp(c * earg[i]));
    }
    return m;
  };
  BoundFit fit;
  fit.c_hat = 0.0;
  bool found = false;
  // Boundedness detector: a true envelope makes max_r ratio saturate in t
  // (growth per decade <= budget, or at least decelerating); an over-claimed
  // c inflates the top-radius ratios geometrically from decade to decade.
  for (int ic = 0; ic < opt.c_points; ++ic) {
    const double c =
        opt.c_min * std::pow(opt.c_max / opt.c_min, ic / (opt.c_points - 1.0));
    const double m_last = ratio_max_at(c, nt - 1);
    if (!std::isfinite(m_last)) break;
    const double m_mid = ratio_max_at(c, nt - 2);
    const double g_last = m_last / (m_mid + 1e-300);
    bool ok = m_last <= opt.growth_budget * m_mid + 1e-300;
    if (!ok && nt >= 3) {
      const double m_prev = ratio_max_at(c, nt - 3);
      const double g_prev = m_mid / (m_prev + 1e-300);
      ok = g_prev > 1.0 && g_last <= std::pow(g_prev, 0.9);
    }
    if (ok) {
      fit.c_hat = c;
      found = true;
    }
  }
  const double c_used = found ? fit.c_hat : 0.0;
  double sup = 0.0;
  for (int it = 0; it < nt; ++it) sup = std::max(sup, ratio_max_at(c_used, it));
  fit.C_hat = sup;
  // violation of lhs <= C_hat e^{-c s(t) r^alpha} poly; <= 0 up to roundoff
  double viol = -1e300;
  for (int i = 0; i < nt * nr; ++i)
    viol = std::max(viol, base[i] - fit.C_hat * std::exp(-c_used * earg[i]));
  fit.max_violation = std::min(viol, 0.0);
  return fit;
}

BoundFit pointwise_bound_fit(LemmaCheck check, const ModelParams& p, int ell,
                             const BoundFitOptions& opt) {
  p.validate();
  if (ell != 0 && ell != 1)
    fail(ErrorCode::InvalidArgument, "pointwise_bound_fit: ell must be 0 or 1");
  const Regime reg = classify_regime(p);
  const double s = p.sigma;
  const CutoffBands bands(p);
  const double rho = bands.rho();

  const auto need = [&](bool ok, const char* what) {
    if (!ok)
      fail(ErrorCode::BandViolation,
           std::string(lemma_check_name(check)) + " requires " + what);
  };
  const auto sym = [&, bands](SymbolFamily f, int l) {
    return [f, l, &p, bands](double t, double r) {
      return std::abs(eval_symbol(SymbolSpec{f, Band::Full, l}, p, bands, t, r));
    };
  };
  const auto symv = [&, bands](SymbolFamily f, int l) {
    return [f, l, &p, bands](double t, double r) {
      return eval_symbol(SymbolSpec{f, Band::Full, l}, p, bands, t, r);
    };
  };

  double r_lo = rho * opt.r_lo_factor, r_hi = rho;
  std::function<double(double, double)> lhs, poly;
  double alpha = 0.0;
  bool shift = true;

  switch (check) {
    case LemmaCheck::L31_J1:
    case LemmaCheck::L31_J2:
    case LemmaCheck::L31_J3:
    case LemmaCheck::L31_J4: {
      need(reg == Regime::SubHalf, "sigma < 1/2");
      const SymbolFamily fam =
          check == LemmaCheck::L31_J1   ? SymbolFamily::J1
          : check == LemmaCheck::L31_J2 ? SymbolFamily::J2
          : check == LemmaCheck::L31_J3 ? SymbolFamily::J3
                                        : SymbolFamily::J4;
      lhs = sym(fam, ell);
      double pw = 0.0;
      if (check == LemmaCheck::L31_J1) {
        alpha = 2.0 * (1.0 - s);
        pw = 2.0 * (1.0 - s) * ell;
      } else if (check == LemmaCheck::L31_J2) {
        alpha = 2.0 * (1.0 - s);
        pw = 2.0 * (1.0 - s) * ell - 2.0 * s;
      } else if (check == LemmaCheck::L31_J3) {
        alpha = 2.0 * s;
        pw = 2.0 * s * ell + 2.0 * (1.0 - 2.0 * s);
      } else {
        alpha = 2.0 * s;
        pw = 2.0 * s * ell - 2.0 * s;
      }
      poly = [pw](double, double r) { return std::pow(r, pw); };
      break;
    }
    case LemmaCheck::L33_K1:
    case LemmaCheck::L33_K2:
    case LemmaCheck::L33_K3: {
      need(reg == Regime::SuperHalf, "sigma > 1/2");
      alpha = 2.0 * s;
      const SymbolFamily fam = check == LemmaCheck::L33_K1   ? SymbolFamily::K1
                               : check == LemmaCheck::L33_K2 ? SymbolFamily::K2
                                                             : SymbolFamily::K3;
      lhs = sym(fam, ell);
      // K2 row carries 2 sigma - 1 + ell (the paper's ell + 1 at sigma = 1)
      const double pw = check == LemmaCheck::L33_K1   ? static_cast<double>(ell)
                        : check == LemmaCheck::L33_K2 ? 2.0 * s - 1.0 + ell
                                                      : ell - 1.0;
      poly = [pw](double, double r) { return std::pow(r, pw); };
      break;
    }
    case LemmaCheck::L41_J1:
    case LemmaCheck::L41_J2: {
      need(reg == Regime::SubHalf, "sigma < 1/2");
      need(ell == 0, "ell = 0");
      alpha = 2.0 * (1.0 - s);
      const bool first = check == LemmaCheck::L41_J1;
      const auto raw = symv(first ? SymbolFamily::J1 : SymbolFamily::J2, 0);
      const auto target =
          symv(first ? SymbolFamily::ProfileH : SymbolFamily::ProfileG, 0);
      lhs = [raw, target](double t, double r) { return std::abs(raw(t, r) - target(t, r)); };
      const double p1 = first ? 2.0 * (2.0 - 3.0 * s) : 2.0 * (2.0 - 3.0 * s) - 2.0 * s;
      const double p2 = first ? 2.0 * (1.0 - 2.0 * s) : 2.0 * (1.0 - 2.0 * s) - 2.0 * s;
      poly = [p1, p2](double t, double r) {
        return t * std::pow(r, p1) + std::pow(r, p2);
      };
      break;
    }
    case LemmaCheck::L43_K1:
    case LemmaCheck::L43_K3: {
      need(reg == Regime::SuperHalf, "sigma > 1/2");
      need(ell == 0, "ell = 0");
      alpha = 2.0 * s;
      if (check == LemmaCheck::L43_K1) {
        const auto raw = symv(SymbolFamily::K1, 0);
        const auto target = symv(SymbolFamily::ProfileCosHybrid, 0);
        lhs = [raw, target](double t, double r) { return std::abs(raw(t, r) - target(t, r)); };
        const double pw = 4.0 * s - 1.0;
        poly = [pw](double t, double r) { return t * std::pow(r, pw); };
      } else {
        const auto raw = symv(SymbolFamily::K3, 0);
        const auto target = symv(SymbolFamily::ProfileG, 0);
        lhs = [raw, target](double t, double r) { return std::abs(raw(t, r) - target(t, r)); };
        const double p1 = 4.0 * s - 2.0, p2 = 4.0 * s - 3.0;
        poly = [p1, p2](double t, double r) {
          return t * std::pow(r, p1) + std::pow(r, p2);
        };
      }
      break;
    }
    case LemmaCheck::L44_K1:
    case LemmaCheck::L44_K3: {
      need(reg == Regime::SuperHalf, "sigma > 1/2");
      alpha = 2.0 * s;
      if (check == LemmaCheck::L44_K1) {
        const auto raw = symv(SymbolFamily::K1, 1);
        const auto sin_part = symv(SymbolFamily::ProfileSinHybrid, 0);
        lhs = [raw, sin_part](double t, double r) {
          return std::abs(raw(t, r) + r * sin_part(t, r));
        };
        const double p1 = 4.0 * s, p2 = 2.0 * s;
        poly = [p1, p2](double t, double r) {
          return t * std::pow(r, p1) + std::pow(r, p2);
        };
      } else {
        const auto raw = symv(SymbolFamily::K3, 1);
        const auto target = symv(SymbolFamily::ProfileCosHybrid, 0);
        lhs = [raw, target](double t, double r) { return std::abs(raw(t, r) - target(t, r)); };
        const double p1 = 4.0 * s - 1.0, p2 = 2.0 * s - 1.0;
        poly = [p1, p2](double t, double r) {
          return t * std::pow(r, p1) + std::pow(r, p2);
        };
      }
      break;
    }
    case LemmaCheck::L45_12:
    case LemmaCheck::L45_3: {
      need(reg == Regime::HalfOverdamped || reg == Regime::HalfUnderdamped,
           "sigma = 1/2, nu != 2");
      alpha = 1.0;
      shift = false;  // these rows decay like e^{-c t |xi|}
      r_lo = 1e-3;
      r_hi = 4.0;
      const bool over = reg == Regime::HalfOverdamped;
      if (check == LemmaCheck::L45_12) {
        const auto f1 = sym(over ? SymbolFamily::Jt1 : SymbolFamily::Kt1, ell);
        const auto f2 = sym(over ? SymbolFamily::Jt2 : SymbolFamily::Kt2, ell);
        lhs = [f1, f2](double t, double r) { return f1(t, r) + f2(t, r); };
        poly = [ell](double, double r) { return std::pow(r, ell); };
      } else {
        lhs = sym(over ? SymbolFamily::Jt3 : SymbolFamily::Kt3, ell);
        poly = [ell](double t, double) { return std::pow(t, 1.0 - ell); };
      }
      break;
    }
  }
  return pointwise_bound_fit_custom(lhs, poly, alpha, shift, r_lo, r_hi, opt);
}

}  // namespace sdwave
