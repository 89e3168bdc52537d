#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sdwave.h"

namespace {

struct Model {
  sdw_model* h = nullptr;
  Model(int n, double sigma, double nu) { sdw_model_create(n, sigma, nu, &h); }
  ~Model() { sdw_model_free(h); }
};

struct Datum {
  sdw_datum* h = nullptr;
  explicit Datum(const char* id) { sdw_datum_create(id, &h); }
  ~Datum() { sdw_datum_free(h); }
};

}  // namespace

TEST_CASE("model lifecycle and classification") {
  sdw_model* m = nullptr;
  REQUIRE(sdw_model_create(2, 0.5, 2.0, &m) == SDW_OK);
  sdw_regime reg;
  CHECK(sdw_model_regime(m, &reg) == SDW_OK);
  CHECK(reg == SDW_REGIME_HALF_CRITICAL);
  CHECK(std::string(sdw_regime_name(reg)) == "HalfCritical");

  double gamma, gamma_tilde, rho, weight;
  CHECK(sdw_model_exponents(m, 0.0, &gamma, &gamma_tilde) == SDW_OK);
  CHECK(gamma == doctest::Approx(0.0));
  CHECK(gamma_tilde == doctest::Approx(1.0));
  CHECK(sdw_model_rho_max(m, &rho) == SDW_OK);
  CHECK(rho == doctest::Approx(0.5));
  CHECK(sdw_model_ell_weight(m, &weight) == SDW_OK);
  CHECK(weight == 1.0);
  sdw_model_free(m);
}

TEST_CASE("invalid parameters surface as status codes with messages") {
  sdw_model* m = nullptr;
  CHECK(sdw_model_create(2, 0.0, 1.0, &m) == SDW_ERR_INVALID_ARGUMENT);
  CHECK(m == nullptr);
  CHECK(std::string(sdw_last_error()).find("sigma") != std::string::npos);
  CHECK(std::string(sdw_status_name(SDW_ERR_TOL_NOT_MET)) == "TolNotMet");
}

TEST_CASE("symbol and solution evaluation") {
  Model m(2, 0.5, 2.0);
  double re, im;
  REQUIRE(sdw_symbol_eval(m.h, SDW_FAM_PROFILE_G, SDW_BAND_FULL, 0, 2.0, 1.0, &re,
                          &im) == SDW_OK);
  CHECK(re == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(im == 0.0);

  CHECK(sdw_symbol_eval(m.h, SDW_FAM_K1, SDW_BAND_FULL, 0, 1.0, 1.0, &re, &im) ==
        SDW_ERR_REGIME_MISMATCH);

  REQUIRE(sdw_solution_hat(m.h, 0.0, 0.7, 0.25, -0.5, 1.5, 0.0, 0, &re, &im) == SDW_OK);
  CHECK(re == 0.25);
  CHECK(im == -0.5);
}

TEST_CASE("oracle round trip") {
  Model m(2, 0.75, 1.0);
  double state[4] = {1.0, 0.0, 0.0, 0.0};
  REQUIRE(sdw_integrate_mode(m.h, 0.4, 5.0, state, 0.0) == SDW_OK);
  double re, im;
  REQUIRE(sdw_solution_hat(m.h, 5.0, 0.4, 1.0, 0.0, 0.0, 0.0, 0, &re, &im) == SDW_OK);
  CHECK(std::fabs(re - state[0]) <= 1e-6 * std::max(std::fabs(re), 1e-9));
  double res;
  REQUIRE(sdw_ode_residual(m.h, 0.4, 5.0, 1.0, 0.0, 0.0, 0.0, 1e-3, &res) == SDW_OK);
  CHECK(res <= 1e-5);
}

TEST_CASE("datum catalog") {
  Datum g("gaussian:1");
  REQUIRE(g.h != nullptr);
  double v;
  CHECK(sdw_datum_fourier(g.h, 2, 0.0, &v) == SDW_OK);
  CHECK(v == 1.0);
  CHECK(sdw_datum_moment(g.h, 2, &v) == SDW_OK);
  CHECK(v == doctest::Approx(2.0 * M_PI));
  sdw_datum* bad = nullptr;
  CHECK(sdw_datum_create("nope", &bad) == SDW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("norms through the C surface") {
  Model m(2, 0.3, 2.0);
  Datum g("gaussian:1");
  double v;
  REQUIRE(sdw_seminorm(m.h, SDW_FAM_PROFILE_H, SDW_BAND_FULL, 0, 0.0, g.h, 0.0, &v) ==
          SDW_OK);
  CHECK(v == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-9));

  REQUIRE(sdw_solution_seminorm(m.h, nullptr, g.h, 0.0, 0, 10.0, &v) == SDW_OK);
  CHECK(v > 0.0);

  CHECK(sdw_solution_seminorm(m.h, nullptr, nullptr, 0.0, 0, 10.0, &v) ==
        SDW_ERR_INVALID_ARGUMENT);

  REQUIRE(sdw_lp_band_norm(2, 1.0, 100.0, 2.0, 0.0, 0, 2.0, 1.5, &v) == SDW_OK);
  CHECK(v == doctest::Approx(std::sqrt(M_PI / 200.0)).epsilon(1e-9));

  Model sup(3, 0.75, 1.0);
  REQUIRE(sdw_profile_residual(sup.h, nullptr, g.h, 0, 0.0, 0, 10.0, 0, &v) == SDW_OK);
  CHECK(v > 0.0);
}

TEST_CASE("verify runner writes suite artifacts") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sdwave_capi_verify";
  fs::remove_all(dir);
  const char* cfg = "{\"suites\": [\"kernel-lp\"]}";
  int pass = 0, failed = 0, skip = 0;
  REQUIRE(sdw_verify_run(cfg, dir.string().c_str(), &pass, &failed, &skip) == SDW_OK);
  CHECK(pass > 0);
  CHECK(failed == 0);
  CHECK(fs::exists(dir / "kernel-lp.csv"));
  CHECK(fs::exists(dir / "kernel-lp.json"));
  std::ifstream csv(dir / "kernel-lp.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "check_id,regime,sigma,nu,n,k,ell,t_or_window,value,expected,tolerance,verdict");
  int csv_rows = 0;
  for (std::string line; std::getline(csv, line);) ++csv_rows;

  // the JSON mirror holds the same records
  std::ifstream jf(dir / "kernel-lp.json");
  const auto mirror = nlohmann::json::parse(jf);
  CHECK(mirror.at("suite") == "kernel-lp");
  CHECK(static_cast<int>(mirror.at("records").size()) == csv_rows);
  for (const auto& rec : mirror.at("records"))
    CHECK(rec.at("verdict") == "PASS");
  fs::remove_all(dir);
}

TEST_CASE("default config is parseable JSON") {
  const std::string cfg = sdw_default_config();
  CHECK(cfg.find("\"suites\"") != std::string::npos);
  CHECK(cfg.find("oracle") != std::string::npos);
}
