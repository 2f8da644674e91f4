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

#ifndef DISCPHASE_CORE_ORACLE_HPP
#define DISCPHASE_CORE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "core/sweep.hpp"

namespace discphase {

// Caps K^N; the default keeps a worst-case enumeration under about a second.
inline constexpr std::uint64_t kDefaultBruteForceLimit = 10'000'000;

// K^N, or LimitError if it exceeds `limit` (overflow-safe).
std::uint64_t configuration_count(const PhaseAlphabet& alphabet,
                                  std::size_t n_elements, std::uint64_t limit);

// Ground truth by exhaustive enumeration, in ascending lexicographic order
// of the index vector (last element varies fastest). Returns the first
// configuration attaining the maximum magnitude, i.e. the lexicographically
// smallest optimum. Single-coordinate incremental updates keep the cost at
// O(K^N) complex additions. No pruning: the oracle stays trivially
// auditable.
BeamformingSolution solve_brute_force(
    const ChannelInstance& instance, const PhaseAlphabet& alphabet,
    std::uint64_t limit = kDefaultBruteForceLimit);

struct EnumeratedConfig {
  std::vector<PhaseIndex> indices;
  double g_abs;
};

// The full K^N table of configurations and magnitudes, same order.
std::vector<EnumeratedConfig> enumerate_boosts(
    const ChannelInstance& instance, const PhaseAlphabet& alphabet,
    std::uint64_t limit = kDefaultBruteForceLimit);

// Dispatch helper shared by the bench harness and the C API.
BeamformingSolution solve_with(Algorithm algorithm,
                               const ChannelInstance& instance,
                               const PhaseAlphabet& alphabet,
                               std::uint64_t brute_limit =
                                   kDefaultBruteForceLimit);

}  // namespace discphase

#endif
