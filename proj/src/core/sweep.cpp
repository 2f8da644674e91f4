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

#include "core/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "core/errors.hpp"
#include "core/kahan.hpp"

namespace discphase {

namespace {

constexpr double kBreakpointDedupEps = 1e-12;

std::vector<std::complex<double>> phasor_table(const PhaseAlphabet& alphabet) {
  std::vector<std::complex<double>> table(alphabet.size());
  for (int k = 0; k < alphabet.size(); ++k) {
    const double p = alphabet.phase(k);
    table[k] = {std::cos(p), std::sin(p)};
  }
  return table;
}

std::complex<double> direct_composite(
    const ChannelInstance& instance, std::span<const PhaseIndex> indices,
    std::span<const std::complex<double>> phasors) {
  KahanSum re(instance.h0.re);
  KahanSum im(instance.h0.im);
  for (std::size_t n = 0; n < instance.size(); ++n) {
    const auto term = instance.h[n].value() * phasors[indices[n]];
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.get(), im.get()};
}

BeamformingSolution finish_solution(const ChannelInstance& instance,
                                    const PhaseAlphabet& alphabet,
                                    std::vector<PhaseIndex> indices,
                                    Algorithm algorithm) {
  BeamformingSolution solution;
  solution.indices = std::move(indices);
  const Evaluation ev = evaluate(instance, solution.indices, alphabet);
  solution.g = ev.g;
  solution.g_abs = ev.g_abs;
  solution.boost = ev.boost;
  solution.mu_phase = ev.g.phase();
  solution.algorithm = algorithm;
  return solution;
}

}  // namespace

const char* algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::sweep_optimal:
      return "sweep_optimal";
    case Algorithm::lemma1_baseline:
      return "lemma1_baseline";
    case Algorithm::brute_force:
      return "brute_force";
  }
  return "unknown";
}

namespace {

// Shared implementation filling caller-owned storage; repeated solves reuse
// capacity instead of cycling multi-hundred-kilobyte allocations through
// the allocator on every call.
void build_schedule_into(const ChannelInstance& instance,
                         const PhaseAlphabet& alphabet,
                         BreakpointSchedule& schedule) {
  validate(instance);
  const int k_count = alphabet.size();
  const double step = alphabet.step();

  // Each element owns exactly one breakpoint per step-width period of the
  // circle: the k-th one sits at wrap(alpha + (k - 0.5)w), the lower edge of
  // the slice where index k mod K wins. Sorting the N within-period offsets
  // once and emitting the K periods in order costs O(N log N + N*K) instead
  // of sorting all N*K angles.
  struct Offset {
    double position;  // in [0, w)
    int element;
    int period;  // period index of the element's k=1 breakpoint
  };
  static thread_local std::vector<Offset> offsets;
  offsets.clear();
  offsets.reserve(instance.size());
  for (int n = 0; n < static_cast<int>(instance.size()); ++n) {
    const double first = wrap_2pi(instance.h[n].phase() + 0.5 * step);
    int period = std::min(static_cast<int>(first / step), k_count - 1);
    double position = first - period * step;
    if (position < 0.0) position = 0.0;
    if (position >= step) {
      position -= step;
      if (position < 0.0) position = 0.0;
      period = (period + 1) % k_count;
    }
    offsets.push_back({position, n, period});
  }
  std::sort(offsets.begin(), offsets.end(),
            [](const Offset& a, const Offset& b) {
              if (a.position != b.position) return a.position < b.position;
              return a.element < b.element;
            });

  schedule.entries.clear();
  schedule.crossings.clear();
  schedule.entries.reserve(instance.size() * k_count);
  schedule.crossings.reserve(instance.size() * k_count);
  for (int j = 0; j < k_count; ++j) {
    const double base = j * step;
    for (const Offset& offset : offsets) {
      double lambda = base + offset.position;
      // the top block can round up to 2*pi; keep the range contract
      if (lambda >= kTwoPi) lambda = std::nextafter(kTwoPi, 0.0);
      // the block's target: k = 1 + (j - period) steps past the element's
      // first breakpoint
      const PhaseIndex target =
          (1 + j - offset.period + k_count) % k_count;
      const auto index = static_cast<std::uint32_t>(schedule.crossings.size());
      if (schedule.entries.empty() ||
          lambda - schedule.entries.back().lambda > kBreakpointDedupEps) {
        schedule.entries.push_back({lambda, index, index});
      }
      schedule.crossings.push_back({offset.element, target});
      schedule.entries.back().last = index + 1;
    }
  }
  // merged entries can interleave elements; restore the by-element order
  for (const auto& entry : schedule.entries) {
    if (entry.last - entry.first > 1) {
      std::sort(schedule.crossings.begin() + entry.first,
                schedule.crossings.begin() + entry.last,
                [](const BreakpointSchedule::Crossing& a,
                   const BreakpointSchedule::Crossing& b) {
                  if (a.element != b.element) return a.element < b.element;
                  return a.target < b.target;
                });
    }
  }
}

// The solvers keep one schedule per thread and rebuild it in place.
BreakpointSchedule& scratch_schedule(const ChannelInstance& instance,
                                     const PhaseAlphabet& alphabet) {
  static thread_local BreakpointSchedule schedule;
  build_schedule_into(instance, alphabet, schedule);
  return schedule;
}

}  // namespace

BreakpointSchedule build_schedule(const ChannelInstance& instance,
                                  const PhaseAlphabet& alphabet) {
  BreakpointSchedule schedule;
  build_schedule_into(instance, alphabet, schedule);
  return schedule;
}

std::vector<PhaseIndex> initial_assignment(const ChannelInstance& instance,
                                           const PhaseAlphabet& alphabet,
                                           double mu_phase) {
  validate(instance);
  std::vector<PhaseIndex> indices(instance.size());
  for (std::size_t n = 0; n < instance.size(); ++n) {
    indices[n] = quantize_lemma2(instance.h[n].phase(), mu_phase, alphabet);
  }
  return indices;
}

Evaluation evaluate(const ChannelInstance& instance,
                    std::span<const PhaseIndex> indices,
                    const PhaseAlphabet& alphabet) {
  validate(instance);
  if (indices.size() != instance.size()) {
    throw InvalidArgumentError("evaluate: index vector arity mismatch");
  }
  for (const PhaseIndex k : indices) {
    if (k < 0 || k >= alphabet.size()) {
      throw InvalidArgumentError("evaluate: phase index out of range");
    }
  }
  const auto phasors = phasor_table(alphabet);
  const auto g = direct_composite(instance, indices, phasors);

  Evaluation ev;
  ev.g = {g.real(), g.imag()};
  ev.g_abs = ev.g.magnitude();
  const double h0_abs = instance.h0.magnitude();
  if (h0_abs > 0.0) {
    const double ratio = ev.g_abs / h0_abs;
    ev.boost = ratio * ratio;
  }
  return ev;
}

BeamformingSolution solve_sweep(const ChannelInstance& instance,
                                const PhaseAlphabet& alphabet,
                                const SweepOptions& options) {
  validate(instance);
  const BreakpointSchedule& schedule = scratch_schedule(instance, alphabet);
  const auto phasors = phasor_table(alphabet);

  const std::vector<PhaseIndex> initial =
      initial_assignment(instance, alphabet, 0.0);
  std::vector<PhaseIndex> indices = initial;

  KahanSum re;
  KahanSum im;
  const auto resync = [&] {
    const auto g = direct_composite(instance, indices, phasors);
    re.reset(g.real());
    im.reset(g.imag());
  };
  resync();

  // The configuration at phase reference 0 competes too; the printed loop
  // bounds of the source method would skip it.
  double best_mag2 = re.get() * re.get() + im.get() * im.get();
  std::size_t best_crossings = 0;

  std::size_t crossings_done = 0;
  for (std::size_t l = 0; l < schedule.size(); ++l) {
    const auto& entry = schedule.entries[l];
    for (std::uint32_t i = entry.first; i < entry.last; ++i) {
      const auto& crossing = schedule.crossings[i];
      const PhaseIndex from = indices[crossing.element];
      indices[crossing.element] = crossing.target;
      // Assigning the breakpoint's own slice index (rather than blindly
      // incrementing) keeps the sweep aligned with the quantizer even when
      // the initial assignment sat exactly on a slice boundary. Away from
      // those measure-zero ties the two are identical: target == from + 1
      // mod K at every crossing.
      const auto delta = instance.h[crossing.element].value() *
                         (phasors[crossing.target] - phasors[from]);
      re.add(delta.real());
      im.add(delta.imag());
    }
    ++crossings_done;
    if (options.verify_incremental) {
      const auto direct = direct_composite(instance, indices, phasors);
      const double err = std::hypot(re.get() - direct.real(),
                                    im.get() - direct.imag());
      const double scale = std::hypot(direct.real(), direct.imag());
      if (err > 1e-9 * std::max(scale, 1e-300)) {
        throw Error("solve_sweep: incremental composite drifted beyond 1e-9");
      }
    }
    if (options.resync_interval > 0 &&
        crossings_done % static_cast<std::size_t>(options.resync_interval) ==
            0) {
      resync();
    }
    const double mag2 = re.get() * re.get() + im.get() * im.get();
    if (mag2 > best_mag2) {
      best_mag2 = mag2;
      best_crossings = l + 1;
    }
  }

  // Replay up to the winning arc instead of copying the index vector on
  // every improvement; keeps the sweep O(N*K) after the sort.
  indices = initial;
  for (std::size_t l = 0; l < best_crossings; ++l) {
    for (const auto& crossing : schedule.members(l)) {
      indices[crossing.element] = crossing.target;
    }
  }
  return finish_solution(instance, alphabet, std::move(indices),
                         Algorithm::sweep_optimal);
}

BeamformingSolution solve_lemma1_baseline(const ChannelInstance& instance,
                                          const PhaseAlphabet& alphabet) {
  validate(instance);
  const BreakpointSchedule& schedule = scratch_schedule(instance, alphabet);
  const auto phasors = phasor_table(alphabet);
  const std::size_t arc_count = schedule.size();

  std::vector<PhaseIndex> indices(instance.size());
  std::vector<PhaseIndex> best;
  double best_mag2 = -1.0;
  for (std::size_t l = 0; l < arc_count; ++l) {
    const double lo = schedule.lambda(l);
    const double hi = (l + 1 < arc_count) ? schedule.lambda(l + 1)
                                          : schedule.lambda(0) + kTwoPi;
    const double mid = wrap_2pi(0.5 * (lo + hi));
    for (std::size_t n = 0; n < instance.size(); ++n) {
      indices[n] = quantize_lemma1(instance.h[n].phase(), mid, alphabet);
    }
    const auto g = direct_composite(instance, indices, phasors);
    const double mag2 = std::norm(g);
    if (mag2 > best_mag2) {
      best_mag2 = mag2;
      best = indices;
    }
  }
  return finish_solution(instance, alphabet, std::move(best),
                         Algorithm::lemma1_baseline);
}

}  // namespace discphase
