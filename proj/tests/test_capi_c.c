/* Compile-as-C smoke test: the public header must work from plain C. */
#include <math.h>
#include <stdio.h>

#include "sdwave.h"

static int failures = 0;

static void check(int ok, const char* what) {
  if (!ok) {
    fprintf(stderr, "FAIL: %s (%s)\n", what, sdw_last_error());
    ++failures;
  }
}

int main(void) {
  sdw_model* m = NULL;
  check(sdw_model_create(3, 0.75, 1.0, &m) == SDW_OK, "model create");

  sdw_regime reg;
  check(sdw_model_regime(m, &reg) == SDW_OK && reg == SDW_REGIME_SUPER_HALF,
        "regime");

  double gamma, gamma_tilde;
  check(sdw_model_exponents(m, 0.0, &gamma, &gamma_tilde) == SDW_OK, "exponents");
  check(fabs(gamma - (1.0 - 2.0 / 3.0)) < 1e-12, "gamma value");

  double re, im;
  check(sdw_solution_hat(m, 0.0, 1.0, 1.0, 0.0, 2.0, 0.0, 1, &re, &im) == SDW_OK &&
            re == 2.0 && im == 0.0,
        "initial slice");

  double lo, mi, hi;
  check(sdw_model_cutoffs(m, 0.0, &lo, &mi, &hi) == SDW_OK && lo == 1.0,
        "cutoffs at 0");

  sdw_model* bad = NULL;
  check(sdw_model_create(2, -1.0, 1.0, &bad) == SDW_ERR_INVALID_ARGUMENT,
        "invalid sigma rejected");

  sdw_model_free(m);
  if (failures == 0) printf("C smoke test passed (version %s)\n", sdw_version());
  return failures == 0 ? 0 : 1;
}
