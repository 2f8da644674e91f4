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

#ifndef DISCPHASE_CORE_SWEEP_HPP
#define DISCPHASE_CORE_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/channel.hpp"
#include "core/phasecore.hpp"

namespace discphase {

enum class Algorithm {
  sweep_optimal,
  lemma1_baseline,
  brute_force,
};

// Stable names used in CSV output and CLI display.
const char* algorithm_name(Algorithm algorithm);

// The candidate angles at which some element's optimal phase index changes
// as the composite phase reference rotates around the unit circle. Element n
// with phase alpha_n contributes one angle wrap_2pi(alpha_n + (k - 0.5)w)
// per k = 1..K; coincident angles (within 1e-12 rad) are merged and their
// membership sets unioned. Memberships live in one flat array (entries hold
// ranges into it) so building the schedule stays allocation-light at large
// N*K.
struct BreakpointSchedule {
  struct Crossing {
    int element;        // 0-based position into ChannelInstance::h
    PhaseIndex target;  // index that becomes optimal just above the angle
  };
  struct Entry {
    double lambda;  // in [0, 2*pi)
    std::uint32_t first;
    std::uint32_t last;  // crossings[first, last), sorted by element
  };

  std::vector<Entry> entries;  // strictly increasing lambda
  std::vector<Crossing> crossings;

  std::size_t size() const { return entries.size(); }  // L <= N*K
  double lambda(std::size_t l) const { return entries[l].lambda; }
  std::span<const Crossing> members(std::size_t l) const {
    return {crossings.data() + entries[l].first,
            crossings.data() + entries[l].last};
  }
};

BreakpointSchedule build_schedule(const ChannelInstance& instance,
                                  const PhaseAlphabet& alphabet);

// Element-wise quantize_lemma2 at a fixed phase reference.
std::vector<PhaseIndex> initial_assignment(const ChannelInstance& instance,
                                           const PhaseAlphabet& alphabet,
                                           double mu_phase);

struct BeamformingSolution {
  std::vector<PhaseIndex> indices;
  ComplexCoeff g;               // recomputed from indices, never trusted
                                // from incremental state
  double g_abs = 0.0;
  double mu_phase = 0.0;        // phase(g), in [0, 2*pi)
  std::optional<double> boost;  // |g|^2/|h0|^2; empty iff |h0| == 0
  Algorithm algorithm = Algorithm::sweep_optimal;
};

struct Evaluation {
  ComplexCoeff g;
  double g_abs = 0.0;
  std::optional<double> boost;
};

// Direct (non-incremental) evaluation of a phase configuration.
Evaluation evaluate(const ChannelInstance& instance,
                    std::span<const PhaseIndex> indices,
                    const PhaseAlphabet& alphabet);

struct SweepOptions {
  // Re-derive the incremental composite from the index vector every this
  // many crossings; bounds accumulated rounding over L = N*K updates.
  // 0 disables periodic resynchronization.
  int resync_interval = 4096;
  // Verification mode: after every crossing, check the incremental composite
  // against a direct evaluation (1e-9 relative) and throw on drift.
  bool verify_incremental = false;
};

// Visits the configuration for every one of the L+1 arcs of the unit circle
// exactly once (initial assignment at phase reference 0, then one crossing
// per breakpoint in ascending order) and returns the configuration with the
// largest composite magnitude. This is the global optimum of the discrete
// problem: the optimal phase reference lies on one of the arcs, and within
// an arc the per-element maximizer is constant.
//
// O(N*K log(N*K)) time from sorting; O(N*K) space. Boost is empty when
// |h0| = 0; the indices and magnitude are still valid.
BeamformingSolution solve_sweep(const ChannelInstance& instance,
                                const PhaseAlphabet& alphabet,
                                const SweepOptions& options = {});

// Reconstruction of the original flawed method: sweeps the same arcs but
// assigns every element with quantize_lemma1 at each arc's midpoint and
// keeps the best directly evaluated configuration. Not guaranteed optimal;
// O(N*L) evaluation cost by design. The underlying method description is
// ambiguous, so this is one documented interpretation of it.
BeamformingSolution solve_lemma1_baseline(const ChannelInstance& instance,
                                          const PhaseAlphabet& alphabet);

}  // namespace discphase

#endif
