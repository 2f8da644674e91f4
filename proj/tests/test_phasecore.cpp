#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/channel.hpp"
#include "core/errors.hpp"
#include "core/phasecore.hpp"
#include "core/rng.hpp"
#include "core/sweep.hpp"

using discphase::f1_gap;
using discphase::kTwoPi;
using discphase::PhaseAlphabet;
using discphase::quantize_lemma1;
using discphase::quantize_lemma2;
using discphase::wrap_2pi;

namespace {
constexpr double kPi = std::numbers::pi;

// Independent argmax/argmin loops with the documented smaller-index tie
// rule, used to cross-check the production quantizers.
int reference_argmax_cos(double alpha, double mu, int k_count) {
  const double step = kTwoPi / k_count;
  double best = -2.0;
  int best_k = 0;
  for (int k = 0; k < k_count; ++k) {
    const double c = std::cos(step * k + alpha - mu);
    if (c > best + 1e-12) {
      best = c;
      best_k = k;
    }
  }
  return best_k;
}

int reference_argmin_gap(double alpha, double mu, int k_count) {
  const double step = kTwoPi / k_count;
  double best = 10.0;
  int best_k = 0;
  for (int k = 0; k < k_count; ++k) {
    const double r = wrap_2pi(step * k + alpha - mu);
    if (r < best - 1e-12) {
      best = r;
      best_k = k;
    }
  }
  return best_k;
}
}  // namespace

TEST_CASE("wrap_2pi canonical values") {
  CHECK(wrap_2pi(0.0) == 0.0);
  CHECK(wrap_2pi(6.9574) == doctest::Approx(0.67417).epsilon(2e-4));
  CHECK(wrap_2pi(-kPi / 2) == doctest::Approx(3.0 * kPi / 2).epsilon(1e-15));
  CHECK(wrap_2pi(1.25) == 1.25);  // already in range: returned unchanged
  CHECK(wrap_2pi(kTwoPi) == 0.0);
}

TEST_CASE("wrap_2pi rejects non-finite input") {
  CHECK_THROWS_AS(wrap_2pi(std::numeric_limits<double>::infinity()),
                  discphase::InvalidArgumentError);
  CHECK_THROWS_AS(wrap_2pi(std::numeric_limits<double>::quiet_NaN()),
                  discphase::InvalidArgumentError);
}

TEST_CASE("wrap_2pi range and periodicity") {
  discphase::SplitMix64 rng(101);
  for (int i = 0; i < 5000; ++i) {
    const double x = (rng.next_unit() - 0.5) * 100.0;
    const double r = wrap_2pi(x);
    CHECK(r >= 0.0);
    CHECK(r < kTwoPi);
    CHECK(std::abs(wrap_2pi(x + kTwoPi) - r) <= 1e-12);
    if (x >= 0.0 && x < kTwoPi) CHECK(r == x);
  }
}

TEST_CASE("phase alphabet construction") {
  CHECK_THROWS_AS(PhaseAlphabet(1), discphase::InvalidArgumentError);
  CHECK_THROWS_AS(PhaseAlphabet(0), discphase::InvalidArgumentError);
  CHECK_THROWS_AS(PhaseAlphabet(-3), discphase::InvalidArgumentError);
  for (int k = 2; k <= 64; ++k) {
    const PhaseAlphabet alphabet(k);
    CHECK(alphabet.size() == k);
    CHECK(std::abs(alphabet.step() * k - kTwoPi) <= 4e-16 * k);
  }
  CHECK(PhaseAlphabet(2).step() == doctest::Approx(kPi).epsilon(1e-16));
}

TEST_CASE("coefficient phase convention") {
  CHECK(discphase::ComplexCoeff{0.0, 0.0}.phase() == 0.0);
  CHECK(discphase::ComplexCoeff{-1.0, 0.0}.phase() ==
        doctest::Approx(kPi).epsilon(1e-15));
  const double p = discphase::ComplexCoeff{1.0, -1e-300}.phase();
  CHECK(p >= 0.0);
  CHECK(p < kTwoPi);
  CHECK(discphase::ComplexCoeff{3.0, 4.0}.magnitude() == doctest::Approx(5.0));
}

TEST_CASE("quantize_lemma2 worked examples") {
  const PhaseAlphabet two(2);
  CHECK(quantize_lemma2(6.1876, 2.3719, two) == 1);
  CHECK(quantize_lemma2(4.6664, 2.3719, two) == 1);
  CHECK(quantize_lemma2(0.0, 0.0, PhaseAlphabet(4)) == 0);
  // the winning cosines behind the first two cases
  CHECK(std::cos(kPi + 6.1876 - 2.3719) == doctest::Approx(0.7812).epsilon(1e-3));
  CHECK(std::cos(kPi + 4.6664 - 2.3719) == doctest::Approx(0.6622).epsilon(1e-3));
}

TEST_CASE("quantize_lemma1 worked examples and disagreement") {
  const PhaseAlphabet two(2);
  CHECK(quantize_lemma1(6.1876, 2.3719, two) == 1);   // 0.67417 < 3.8158
  CHECK(quantize_lemma1(4.6664, 2.3719, two) == 0);   // 2.2945 < 5.4361
  CHECK(quantize_lemma1(0.0, 0.0, two) == 0);         // residual exactly 0
  // the flawed rule picks the wrong index exactly where the corrected one
  // does not
  CHECK(quantize_lemma1(4.6664, 2.3719, two) !=
        quantize_lemma2(4.6664, 2.3719, two));
}

TEST_CASE("counterexample reproduces from the golden instance itself") {
  const auto golden = discphase::golden_table1();
  const PhaseAlphabet two(2);
  const double alpha2 = golden.instance.h[1].phase();
  const auto sweep = discphase::solve_sweep(golden.instance, two);
  CHECK(quantize_lemma1(alpha2, sweep.mu_phase, two) == 0);
  CHECK(quantize_lemma2(alpha2, sweep.mu_phase, two) == 1);
}

TEST_CASE("quantizers match exhaustive reference loops") {
  discphase::SplitMix64 rng(202);
  for (int i = 0; i < 4000; ++i) {
    const int k_count = 2 + static_cast<int>(rng.next() % 63);
    const double alpha = (rng.next_unit() - 0.5) * 20.0;
    const double mu = (rng.next_unit() - 0.5) * 20.0;
    const PhaseAlphabet alphabet(k_count);
    CHECK(quantize_lemma2(alpha, mu, alphabet) ==
          reference_argmax_cos(alpha, mu, k_count));
    CHECK(quantize_lemma1(alpha, mu, alphabet) ==
          reference_argmin_gap(alpha, mu, k_count));
  }
}

TEST_CASE("lemma2 residual lands in the top cosine slice") {
  discphase::SplitMix64 rng(303);
  for (int i = 0; i < 2000; ++i) {
    const int k_count = 2 + static_cast<int>(rng.next() % 31);
    const double alpha = (rng.next_unit() - 0.5) * 20.0;
    const double mu = (rng.next_unit() - 0.5) * 20.0;
    const PhaseAlphabet alphabet(k_count);
    const int k = quantize_lemma2(alpha, mu, alphabet);
    const double r = wrap_2pi(alphabet.phase(k) + alpha - mu);
    const double half = kPi / k_count;
    const bool in_slice = r <= half + 1e-9 || r >= kTwoPi - half - 1e-9;
    CHECK(in_slice);
  }
}

TEST_CASE("the flawed rule errs exactly on the clockwise half of each step") {
  // lemma1 picks the alphabet point just counterclockwise of the reference,
  // lemma2 the nearest one; they disagree precisely when the reference sits
  // in the lower half of a step, i.e. frac((mu - alpha)/w) in (0, 1/2).
  discphase::SplitMix64 rng(909);
  int checked = 0;
  int disagreements = 0;
  for (int i = 0; i < 5000; ++i) {
    const int k_count = 2 + static_cast<int>(rng.next() % 15);
    const PhaseAlphabet alphabet(k_count);
    const double alpha = (rng.next_unit() - 0.5) * 20.0;
    const double mu = (rng.next_unit() - 0.5) * 20.0;
    const double t = (mu - alpha) / alphabet.step();
    const double frac = t - std::floor(t);
    if (std::min({frac, std::abs(frac - 0.5), 1.0 - frac}) < 1e-9) continue;
    ++checked;
    const bool agree = quantize_lemma1(alpha, mu, alphabet) ==
                       quantize_lemma2(alpha, mu, alphabet);
    CHECK(agree == (frac > 0.5));
    if (!agree) ++disagreements;
  }
  CHECK(checked > 4900);
  // the error region is half the circle
  CHECK(disagreements > checked / 3);
  CHECK(disagreements < 2 * checked / 3);
}

TEST_CASE("f1 gap values and range") {
  CHECK(f1_gap(0.0) == 0.0);
  CHECK(f1_gap(kPi) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(f1_gap(3.0 * kPi / 2) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(f1_gap(kPi / 2) == doctest::Approx(f1_gap(3.0 * kPi / 2)));
  discphase::SplitMix64 rng(404);
  for (int i = 0; i < 1000; ++i) {
    const double g = f1_gap((rng.next_unit() - 0.5) * 40.0);
    CHECK(g >= 0.0);
    CHECK(g <= kPi + 1e-15);
  }
}

TEST_CASE("minimizing the f1 gap is maximizing the cosine") {
  discphase::SplitMix64 rng(505);
  for (int i = 0; i < 2000; ++i) {
    const int k_count = 2 + static_cast<int>(rng.next() % 31);
    const double alpha = (rng.next_unit() - 0.5) * 20.0;
    const double mu = (rng.next_unit() - 0.5) * 20.0;
    const PhaseAlphabet alphabet(k_count);

    double best_gap = 10.0;
    int best_k = 0;
    for (int k = 0; k < k_count; ++k) {
      const double g = f1_gap(alphabet.phase(k) + alpha - mu);
      if (g < best_gap - 1e-12) {
        best_gap = g;
        best_k = k;
      }
    }
    CHECK(best_k == quantize_lemma2(alpha, mu, alphabet));
  }
}

TEST_CASE("phase reference inside a slice recovers exactly that index") {
  discphase::SplitMix64 rng(606);
  for (int i = 0; i < 2000; ++i) {
    const int k_count = 2 + static_cast<int>(rng.next() % 31);
    const PhaseAlphabet alphabet(k_count);
    const double alpha = (rng.next_unit() - 0.5) * 20.0;
    const int k = static_cast<int>(rng.next() % k_count);
    // mu strictly inside (alpha + (k-0.5)w, alpha + (k+0.5)w), with margin
    const double t = 1e-6 + rng.next_unit() * (alphabet.step() - 2e-6);
    const double mu = wrap_2pi(alpha + (k - 0.5) * alphabet.step() + t);
    CHECK(quantize_lemma2(alpha, mu, alphabet) == k);
  }
}

TEST_CASE("shifting alpha by one step shifts the index down by one") {
  discphase::SplitMix64 rng(707);
  int tested = 0;
  for (int i = 0; i < 2000; ++i) {
    const int k_count = 2 + static_cast<int>(rng.next() % 31);
    const PhaseAlphabet alphabet(k_count);
    const double alpha = (rng.next_unit() - 0.5) * 20.0;
    const double mu = (rng.next_unit() - 0.5) * 20.0;
    // stay away from slice boundaries
    const double r = wrap_2pi(alphabet.phase(quantize_lemma2(alpha, mu,
                                                             alphabet)) +
                              alpha - mu);
    const double half = kPi / k_count;
    const double margin = std::min(std::abs(r - half),
                                   std::abs(r - (kTwoPi - half)));
    if (margin < 1e-9) continue;
    ++tested;
    const int base = quantize_lemma2(alpha, mu, alphabet);
    const int shifted = quantize_lemma2(alpha + alphabet.step(), mu, alphabet);
    CHECK(shifted == (base - 1 + k_count) % k_count);
  }
  CHECK(tested > 1500);
}
