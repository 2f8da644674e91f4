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

#ifndef DISCPHASE_CORE_RNG_HPP
#define DISCPHASE_CORE_RNG_HPP

#include <cstdint>
#include <utility>

namespace discphase {

// SplitMix64 finalizer (Steele et al. / Vigna). Fixed published constants;
// the whole reproducibility story of the benchmark harness rests on this
// function never changing.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from a master seed and up to three
// coordinates (e.g. alphabet size, element count, realization index), so any
// grid cell is reproducible in isolation.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b, std::uint64_t c) {
  constexpr std::uint64_t gamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t h = master;
  h = mix64(h + gamma + a);
  h = mix64(h + gamma + b);
  h = mix64(h + gamma + c);
  return h;
}

// SplitMix64 stream. Deterministic for a given seed on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double next_unit_open() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// One Box-Muller pair of independent standard normal deviates. Consumes
// exactly two stream values, so the draw sequence is schedule-independent.
std::pair<double, double> gaussian_pair(SplitMix64& rng);

}  // namespace discphase

#endif
