// Copyright 2026 the discphase authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/oracle.hpp"

#include <cmath>
#include <complex>

#include "core/errors.hpp"
#include "core/kahan.hpp"

namespace discphase {

namespace {

// Direct re-evaluation cadence during the enumeration walk.
constexpr std::uint64_t kResyncStride = 65536;

// rotated[n][k] = h_n * e^{j k w}
std::vector<std::vector<std::complex<double>>> rotated_table(
    const ChannelInstance& instance, const PhaseAlphabet& alphabet) {
  std::vector<std::vector<std::complex<double>>> table(instance.size());
  for (std::size_t n = 0; n < instance.size(); ++n) {
    table[n].resize(alphabet.size());
    for (int k = 0; k < alphabet.size(); ++k) {
      const double p = alphabet.phase(k);
      table[n][k] =
          instance.h[n].value() * std::complex<double>{std::cos(p), std::sin(p)};
    }
  }
  return table;
}

// Shared enumeration walk. Visits all K^N index vectors in ascending
// lexicographic order (last coordinate fastest) while maintaining the
// composite incrementally; calls visit(step, re, im) for every one.
template <typename Visit>
void walk_configurations(const ChannelInstance& instance,
                         const PhaseAlphabet& alphabet, std::uint64_t total,
                         Visit&& visit) {
  const auto rotated = rotated_table(instance, alphabet);
  const int k_count = alphabet.size();
  const std::size_t n = instance.size();

  std::vector<PhaseIndex> indices(n, 0);
  KahanSum re(instance.h0.re);
  KahanSum im(instance.h0.im);
  const auto resync = [&] {
    KahanSum fresh_re(instance.h0.re);
    KahanSum fresh_im(instance.h0.im);
    for (std::size_t i = 0; i < n; ++i) {
      fresh_re.add(rotated[i][indices[i]].real());
      fresh_im.add(rotated[i][indices[i]].imag());
    }
    re = fresh_re;
    im = fresh_im;
  };
  resync();
  visit(std::uint64_t{0}, re.get(), im.get());

  for (std::uint64_t step = 1; step < total; ++step) {
    // Lexicographic successor: bump the last coordinate, carry leftwards.
    // Carries amortize to O(1) coordinate changes per step.
    std::size_t pos = n - 1;
    while (true) {
      const PhaseIndex from = indices[pos];
      const PhaseIndex to = (from + 1 == k_count) ? 0 : from + 1;
      indices[pos] = to;
      const auto delta = rotated[pos][to] - rotated[pos][from];
      re.add(delta.real());
      im.add(delta.imag());
      if (to != 0) break;
      --pos;  // safe: step < total guarantees a non-carrying coordinate
    }
    if (step % kResyncStride == 0) resync();
    visit(step, re.get(), im.get());
  }
}

std::vector<PhaseIndex> decode_step(std::uint64_t step, std::size_t n,
                                    int k_count) {
  std::vector<PhaseIndex> indices(n);
  for (std::size_t i = n; i-- > 0;) {
    indices[i] = static_cast<PhaseIndex>(step % k_count);
    step /= k_count;
  }
  return indices;
}

}  // namespace

std::uint64_t configuration_count(const PhaseAlphabet& alphabet,
                                  std::size_t n_elements,
                                  std::uint64_t limit) {
  const auto k = static_cast<std::uint64_t>(alphabet.size());
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n_elements; ++i) {
    if (count > limit / k) {
      throw LimitError("K^N exceeds the configuration limit of " +
                       std::to_string(limit));
    }
    count *= k;
  }
  return count;
}

BeamformingSolution solve_brute_force(const ChannelInstance& instance,
                                      const PhaseAlphabet& alphabet,
                                      std::uint64_t limit) {
  validate(instance);
  const std::uint64_t total =
      configuration_count(alphabet, instance.size(), limit);

  double best_mag2 = -1.0;
  std::uint64_t best_step = 0;
  walk_configurations(instance, alphabet, total,
                      [&](std::uint64_t step, double re, double im) {
                        const double mag2 = re * re + im * im;
                        if (mag2 > best_mag2) {
                          best_mag2 = mag2;
                          best_step = step;
                        }
                      });

  BeamformingSolution solution;
  solution.indices = decode_step(best_step, instance.size(), alphabet.size());
  const Evaluation ev = evaluate(instance, solution.indices, alphabet);
  solution.g = ev.g;
  solution.g_abs = ev.g_abs;
  solution.boost = ev.boost;
  solution.mu_phase = ev.g.phase();
  solution.algorithm = Algorithm::brute_force;
  return solution;
}

std::vector<EnumeratedConfig> enumerate_boosts(const ChannelInstance& instance,
                                               const PhaseAlphabet& alphabet,
                                               std::uint64_t limit) {
  validate(instance);
  const std::uint64_t total =
      configuration_count(alphabet, instance.size(), limit);

  std::vector<EnumeratedConfig> table;
  table.reserve(total);
  walk_configurations(instance, alphabet, total,
                      [&](std::uint64_t step, double re, double im) {
                        table.push_back(
                            {decode_step(step, instance.size(),
                                         alphabet.size()),
                             std::hypot(re, im)});
                      });
  return table;
}

BeamformingSolution solve_with(Algorithm algorithm,
                               const ChannelInstance& instance,
                               const PhaseAlphabet& alphabet,
                               std::uint64_t brute_limit) {
  switch (algorithm) {
    case Algorithm::sweep_optimal:
      return solve_sweep(instance, alphabet);
    case Algorithm::lemma1_baseline:
      return solve_lemma1_baseline(instance, alphabet);
    case Algorithm::brute_force:
      return solve_brute_force(instance, alphabet, brute_limit);
  }
  throw InvalidArgumentError("unknown algorithm");
}

}  // namespace discphase
