/* Compile-only check that discphase.h is consumable from plain C. */

#include "discphase.h"

int dp_header_probe(void) {
  dp_bench_config config;
  config.realizations = 0;
  return (int)sizeof(dp_golden_check) + (int)sizeof(config) +
         (int)DP_ALGORITHM_BRUTE_FORCE;
}
