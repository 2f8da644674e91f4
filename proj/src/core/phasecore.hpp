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

#ifndef DISCPHASE_CORE_PHASECORE_HPP
#define DISCPHASE_CORE_PHASECORE_HPP

#include <complex>
#include <numbers>

namespace discphase {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Comparisons between competing quantizer candidates treat values closer
// than this as tied; the smaller index wins. Ties only occur on the
// measure-zero slice boundaries, so the choice never affects generic inputs.
inline constexpr double kQuantizeTieEps = 1e-12;

// A complex channel coefficient. All phases in this library follow the
// [0, 2*pi) convention; phase() of the zero coefficient is defined as 0,
// which is only reachable with degenerate inputs.
struct ComplexCoeff {
  double re = 0.0;
  double im = 0.0;

  double magnitude() const { return std::hypot(re, im); }
  double phase() const;  // in [0, 2*pi)
  std::complex<double> value() const { return {re, im}; }
};

// The discrete phase set {0, w, 2w, ..., (K-1)w} with w = 2*pi/K, K >= 2.
// Quantized phases are handled as integer indices into this set so that
// long sweeps never accumulate floating-point modular drift.
class PhaseAlphabet {
 public:
  explicit PhaseAlphabet(int size);

  int size() const { return size_; }      // K
  double step() const { return step_; }   // w = 2*pi/K
  double phase(int index) const { return step_ * index; }

 private:
  int size_;
  double step_;
};

// Index into a PhaseAlphabet, in {0, ..., K-1}.
using PhaseIndex = int;

// Canonical representative of x modulo 2*pi, i.e. x - 2*pi*floor(x/(2*pi)),
// always in [0, 2*pi). Inputs already in range are returned unchanged.
// Throws InvalidArgumentError on non-finite input.
double wrap_2pi(double x);

// pi - |wrap_2pi(x) - pi|, in [0, pi]. Minimizing this gap over a phase
// alphabet is equivalent to maximizing cos; kept for that equivalence check.
double f1_gap(double x);

// The corrected per-element rule: the k in {0,...,K-1} maximizing
// cos(k*w + alpha - mu_phase). Equals round((mu_phase - alpha)/w) mod K away
// from slice boundaries; ties resolve to the smaller k.
PhaseIndex quantize_lemma2(double alpha, double mu_phase,
                           const PhaseAlphabet& alphabet);

// The flawed rule: the k minimizing wrap_2pi(k*w + alpha - mu_phase).
// Deliberately retained as the baseline/counterexample generator. The
// wrapped residual lacks the cosine's even symmetry, so this picks the
// alphabet point just counterclockwise of the reference instead of the
// nearest one; the two rules disagree for half of all reference phases.
PhaseIndex quantize_lemma1(double alpha, double mu_phase,
                           const PhaseAlphabet& alphabet);

}  // namespace discphase

#endif
