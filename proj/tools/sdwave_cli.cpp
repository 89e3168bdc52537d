// Command-line front end over the sdwave C API: classify model parameters,
// dump solution samples, and run the verification suites to CSV/JSON.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or
// configuration error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdwave.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;

struct ModelFlags {
  double sigma = 0.5;
  double nu = 1.0;
  int dim = 2;
};

void add_model_flags(CLI::App* cmd, ModelFlags& mf) {
  cmd->add_option("--sigma", mf.sigma, "fractional order in (0,1]")->required();
  cmd->add_option("--nu", mf.nu, "damping strength > 0")->required();
  cmd->add_option("--dim,-n,--n", mf.dim, "space dimension")->required();
}

int fail_with(sdw_status st, const char* what) {
  std::cerr << "error: " << what << ": " << sdw_status_name(st) << " ("
            << sdw_last_error() << ")\n";
  return st == SDW_ERR_INVALID_ARGUMENT || st == SDW_ERR_CONFIG ? kExitUsage
                                                                : kExitCheckFail;
}

sdw_model* make_model_or_null(const ModelFlags& mf) {
  sdw_model* m = nullptr;
  const sdw_status st = sdw_model_create(mf.dim, mf.sigma, mf.nu, &m);
  if (st != SDW_OK) {
    std::cerr << "error: invalid parameters: " << sdw_last_error() << "\n";
    return nullptr;
  }
  return m;
}

int cmd_classify(const ModelFlags& mf, double k, int ell) {
  sdw_model* m = make_model_or_null(mf);
  if (!m) return kExitUsage;
  sdw_regime reg;
  double gamma = 0, gamma_tilde = 0, rho = 0, weight = 0;
  sdw_status st = sdw_model_regime(m, &reg);
  if (st == SDW_OK) st = sdw_model_exponents(m, k, &gamma, &gamma_tilde);
  if (st == SDW_OK) st = sdw_model_rho_max(m, &rho);
  if (st == SDW_OK) st = sdw_model_ell_weight(m, &weight);
  int admissible = 0;
  if (st == SDW_OK) st = sdw_model_admissible(m, k, ell, &admissible);
  if (st != SDW_OK) {
    sdw_model_free(m);
    return fail_with(st, "classify");
  }
  std::printf("regime=%s sigma=%g nu=%g n=%d k=%g\n", sdw_regime_name(reg), mf.sigma,
              mf.nu, mf.dim, k);
  std::printf("gamma=%.12g gamma_tilde=%.12g ell_weight=%.12g rho<%.12g%s\n", gamma,
              gamma_tilde, weight, rho, admissible ? "" : " [dimension-inadmissible]");
  sdw_model_free(m);
  return kExitPass;
}

int cmd_evolve(const ModelFlags& mf, const std::string& u0_id,
               const std::string& u1_id, const std::string& t_list, double r_min,
               double r_max, int points, const std::string& out_path) {
  sdw_model* m = make_model_or_null(mf);
  if (!m) return kExitUsage;
  sdw_datum* u0 = nullptr;
  sdw_datum* u1 = nullptr;
  if (u0_id != "none" && sdw_datum_create(u0_id.c_str(), &u0) != SDW_OK) {
    std::cerr << "error: bad --u0: " << sdw_last_error() << "\n";
    sdw_model_free(m);
    return kExitUsage;
  }
  if (u1_id != "none" && sdw_datum_create(u1_id.c_str(), &u1) != SDW_OK) {
    std::cerr << "error: bad --u1: " << sdw_last_error() << "\n";
    sdw_datum_free(u0);
    sdw_model_free(m);
    return kExitUsage;
  }

  std::vector<double> times;
  std::stringstream ss(t_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      times.push_back(std::stod(item));
    } catch (const std::exception&) {
      std::cerr << "error: bad --t entry '" << item << "'\n";
      return kExitUsage;
    }
  }
  if (times.empty() || r_min <= 0 || r_max <= r_min || points < 2) {
    std::cerr << "error: need --t list, 0 < --rmin < --rmax, --points >= 2\n";
    return kExitUsage;
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return kExitUsage;
    }
    out = &file;
  }
  (*out) << "t,r,u_re,u_im,ut_re,ut_im\n";
  char line[256];
  for (double t : times) {
    for (int i = 0; i < points; ++i) {
      const double r =
          r_min * std::pow(r_max / r_min, static_cast<double>(i) / (points - 1));
      double g0 = 0, g1 = 0;
      if (u0) sdw_datum_fourier(u0, mf.dim, r, &g0);
      if (u1) sdw_datum_fourier(u1, mf.dim, r, &g1);
      double ure, uim, vre, vim;
      sdw_status st = sdw_solution_hat(m, t, r, g0, 0, g1, 0, 0, &ure, &uim);
      if (st == SDW_OK) st = sdw_solution_hat(m, t, r, g0, 0, g1, 0, 1, &vre, &vim);
      if (st != SDW_OK) {
        std::cerr << "error: " << sdw_last_error() << "\n";
        return kExitCheckFail;
      }
      std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", t, r,
                    ure, uim, vre, vim);
      (*out) << line;
    }
  }
  sdw_datum_free(u0);
  sdw_datum_free(u1);
  sdw_model_free(m);
  return kExitPass;
}

// Merge --config file with flag overrides (flags win), restrict suites.
int run_verify(const std::string& config_path, const std::vector<std::string>& suites,
               const std::string& out_dir, const ModelFlags* mf_override) {
  Json cfg;
  try {
    cfg = Json::parse(std::string(sdw_default_config()));
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) {
        std::cerr << "error: cannot read config " << config_path << "\n";
        return kExitUsage;
      }
      const Json user = Json::parse(f);
      cfg.merge_patch(user);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!suites.empty()) cfg["suites"] = suites;
  if (mf_override) {
    cfg["regimes"] = Json::array({Json{{"sigma", mf_override->sigma},
                                       {"nu", mf_override->nu},
                                       {"n", mf_override->dim}}});
  }
  int n_pass = 0, n_fail = 0, n_skip = 0;
  const std::string cfg_text = cfg.dump();
  const sdw_status st =
      sdw_verify_run(cfg_text.c_str(), out_dir.c_str(), &n_pass, &n_fail, &n_skip);
  if (st != SDW_OK) return fail_with(st, "verify");
  std::printf("verify: %d passed, %d failed, %d skipped (outputs in %s)\n", n_pass,
              n_fail, n_skip, out_dir.c_str());
  return n_fail == 0 ? kExitPass : kExitCheckFail;
}

int cmd_oracle_check(int tuples, const std::string& out_dir) {
  Json cfg = Json::parse(std::string(sdw_default_config()));
  cfg["suites"] = {"oracle"};
  cfg["oracle"]["tuples"] = tuples;
  int n_pass = 0, n_fail = 0, n_skip = 0;
  const std::string text = cfg.dump();
  const sdw_status st =
      sdw_verify_run(text.c_str(), out_dir.c_str(), &n_pass, &n_fail, &n_skip);
  if (st != SDW_OK) return fail_with(st, "oracle-check");
  std::printf("oracle-check: %d passed, %d failed (outputs in %s)\n", n_pass, n_fail,
              out_dir.c_str());
  return n_fail == 0 ? kExitPass : kExitCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral decay/profile verification for structurally damped waves"};
  app.require_subcommand(1);

  ModelFlags mf;
  double k = 0.0;
  int ell = 0;
  auto* classify = app.add_subcommand("classify", "regime, exponents, band radius");
  add_model_flags(classify, mf);
  classify->add_option("--k", k, "spatial derivative order");
  classify->add_option("--ell", ell, "time derivative order (0 or 1)");

  ModelFlags emf;
  std::string u0_id = "none", u1_id = "gaussian:1", t_list = "1,10,100";
  double r_min = 1e-3, r_max = 8.0;
  int points = 200;
  std::string evolve_out;
  auto* evolve = app.add_subcommand("evolve", "dump u_hat(t, r) samples as CSV");
  add_model_flags(evolve, emf);
  evolve->add_option("--u0", u0_id, "datum id or 'none'");
  evolve->add_option("--u1", u1_id, "datum id or 'none'");
  evolve->add_option("--t", t_list, "comma-separated times");
  evolve->add_option("--rmin", r_min, "smallest radius");
  evolve->add_option("--rmax", r_max, "largest radius");
  evolve->add_option("--points", points, "radial sample count");
  evolve->add_option("--out", evolve_out, "output file (default stdout)");

  std::string config_path, out_dir = "out";
  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--config", config_path, "experiment config (JSON)");
  verify->add_option("--suite", suites, "restrict to named suites");
  verify->add_option("--out", out_dir, "output directory");

  ModelFlags rmf;
  bool rates_has_model = false;
  std::string rates_config, rates_out = "out";
  auto* rates = app.add_subcommand("rates", "decay-rate fits for one regime or config");
  auto* rates_sigma = rates->add_option("--sigma", rmf.sigma, "fractional order");
  rates->add_option("--nu", rmf.nu, "damping strength")->needs(rates_sigma);
  rates->add_option("--dim", rmf.dim, "space dimension");
  rates->add_option("--config", rates_config, "experiment config (JSON)");
  rates->add_option("--out", rates_out, "output directory");

  int tuples = 50;
  std::string oracle_out = "out";
  auto* oracle = app.add_subcommand("oracle-check", "closed form vs RK4 oracle");
  oracle->add_option("--tuples", tuples, "number of random tuples");
  oracle->add_option("--out", oracle_out, "output directory");

  std::string lp_out = "out";
  auto* kernel_lp = app.add_subcommand("kernel-lp", "band-kernel L^p scaling checks");
  kernel_lp->add_option("--out", lp_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (classify->parsed()) return cmd_classify(mf, k, ell);
  if (evolve->parsed())
    return cmd_evolve(emf, u0_id, u1_id, t_list, r_min, r_max, points, evolve_out);
  if (verify->parsed()) return run_verify(config_path, suites, out_dir, nullptr);
  if (rates->parsed()) {
    rates_has_model = rates->count("--sigma") > 0;
    return run_verify(rates_config, {"rates"}, rates_out,
                      rates_has_model ? &rmf : nullptr);
  }
  if (oracle->parsed()) return cmd_oracle_check(tuples, oracle_out);
  if (kernel_lp->parsed()) return run_verify("", {"kernel-lp"}, lp_out, nullptr);
  return kExitUsage;
}
