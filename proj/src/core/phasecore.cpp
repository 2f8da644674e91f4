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

#include "core/phasecore.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace discphase {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw InvalidArgumentError(std::string(what) + ": non-finite value");
  }
}

}  // namespace

double ComplexCoeff::phase() const {
  double p = std::atan2(im, re);
  if (p < 0.0) p += kTwoPi;
  // atan2 results just below zero can round up to exactly 2*pi; -0 inputs
  // leave a negative zero behind. Both map to the canonical 0.
  if (p >= kTwoPi || p == 0.0) p = 0.0;
  return p;
}

PhaseAlphabet::PhaseAlphabet(int size) : size_(size), step_(0.0) {
  if (size < 2) {
    throw InvalidArgumentError("phase alphabet size must be >= 2");
  }
  step_ = kTwoPi / size;
}

double wrap_2pi(double x) {
  require_finite(x, "wrap_2pi");
  double r = std::fmod(x, kTwoPi);  // fmod is exact
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi || r == 0.0) r = 0.0;
  return r;
}

double f1_gap(double x) {
  return std::numbers::pi - std::abs(wrap_2pi(x) - std::numbers::pi);
}

PhaseIndex quantize_lemma2(double alpha, double mu_phase,
                           const PhaseAlphabet& alphabet) {
  require_finite(alpha, "alpha");
  require_finite(mu_phase, "mu_phase");
  const int count = alphabet.size();
  double best = -2.0;
  for (int k = 0; k < count; ++k) {
    best = std::max(best, std::cos(alphabet.phase(k) + alpha - mu_phase));
  }
  for (int k = 0; k < count; ++k) {
    if (std::cos(alphabet.phase(k) + alpha - mu_phase) >=
        best - kQuantizeTieEps) {
      return k;
    }
  }
  return 0;  // unreachable: the maximizing k always re-qualifies
}

PhaseIndex quantize_lemma1(double alpha, double mu_phase,
                           const PhaseAlphabet& alphabet) {
  require_finite(alpha, "alpha");
  require_finite(mu_phase, "mu_phase");
  const int count = alphabet.size();
  double best = kTwoPi;
  for (int k = 0; k < count; ++k) {
    best = std::min(best, wrap_2pi(alphabet.phase(k) + alpha - mu_phase));
  }
  for (int k = 0; k < count; ++k) {
    if (wrap_2pi(alphabet.phase(k) + alpha - mu_phase) <=
        best + kQuantizeTieEps) {
      return k;
    }
  }
  return 0;  // unreachable
}

}  // namespace discphase
