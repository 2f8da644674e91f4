// Shared helpers for the test suites: deterministic random instances and a
// naive exhaustive reference solver kept independent of the library's
// incremental enumeration path.

#ifndef DISCPHASE_TESTS_SUPPORT_HPP
#define DISCPHASE_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "core/channel.hpp"
#include "core/phasecore.hpp"
#include "core/rng.hpp"

namespace testsupport {

inline discphase::ChannelInstance random_instance(std::uint64_t seed, int n) {
  discphase::ChannelModelConfig config;
  config.n_elements = n;
  config.direct_scale = 1.0;
  config.reflect_scale = discphase::default_reflect_scale(n);
  config.seed = seed;
  return discphase::generate(config);
}

struct NaiveBest {
  std::vector<int> indices;
  double g_abs = 0.0;
};

// Plain nested-odometer search evaluating every configuration from scratch
// with std::complex arithmetic. Same tie rule as the library oracle (first
// configuration in ascending lexicographic order, strict improvement), but
// no incremental state at all.
inline NaiveBest naive_best(const discphase::ChannelInstance& instance,
                            int k_count) {
  const std::size_t n = instance.size();
  std::vector<int> indices(n, 0);
  NaiveBest best;
  best.g_abs = -1.0;
  const double step = discphase::kTwoPi / k_count;
  while (true) {
    std::complex<double> g = instance.h0.value();
    for (std::size_t i = 0; i < n; ++i) {
      g += instance.h[i].value() *
           std::complex<double>(std::cos(step * indices[i]),
                                std::sin(step * indices[i]));
    }
    const double mag = std::abs(g);
    if (mag > best.g_abs) {
      best.g_abs = mag;
      best.indices = indices;
    }
    std::size_t pos = n;
    while (pos-- > 0) {
      if (++indices[pos] < k_count) break;
      indices[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

}  // namespace testsupport

#endif
