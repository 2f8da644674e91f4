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

#ifndef DISCPHASE_CORE_KAHAN_HPP
#define DISCPHASE_CORE_KAHAN_HPP

namespace discphase {

// Compensated (Kahan-Babuska/Neumaier) accumulator. The sweep and the
// exhaustive enumerator maintain the composite channel through tens of
// thousands of incremental +/- updates; the compensation term keeps the
// accumulated rounding at a few ulps instead of growing with the update
// count. Also handles increments larger than the running sum.
class KahanSum {
 public:
  KahanSum() = default;
  explicit KahanSum(double init) : sum_(init) {}

  void add(double value) {
    const double t = sum_ + value;
    const double z = t - sum_;
    correction_ += (sum_ - (t - z)) + (value - z);
    sum_ = t;
  }

  // Discards history and restarts from a freshly computed value.
  void reset(double value) {
    sum_ = value;
    correction_ = 0.0;
  }

  double get() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace discphase

#endif
