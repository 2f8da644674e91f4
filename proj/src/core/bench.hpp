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

#ifndef DISCPHASE_CORE_BENCH_HPP
#define DISCPHASE_CORE_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/oracle.hpp"

namespace discphase {

// Monte Carlo campaign over a (K, N) grid. Realization r of cell (K, N)
// uses the instance seed derive_seed(master_seed, K, N, r), so every cell
// is reproducible in isolation; all selected algorithms see the same
// instance within a realization.
struct BenchRun {
  std::vector<int> alphabet_sizes;
  std::vector<int> element_counts;
  std::uint32_t realizations = 0;
  std::vector<Algorithm> algorithms;
  std::uint64_t master_seed = 0;
  double direct_scale = 1.0;
  std::optional<double> reflect_scale;  // empty: 1/sqrt(2N) per N
  std::uint64_t brute_force_limit = kDefaultBruteForceLimit;
};

struct CdfPoint {
  double boost_linear;
  double boost_db;
  double probability;
};

struct CdfCell {
  Algorithm algorithm;
  int alphabet_size;
  int element_count;
  std::vector<double> boosts;  // linear, in realization order
  std::vector<CdfPoint> cdf;   // nondecreasing, ends at probability 1
  double mean_db = 0.0;
  double median_db = 0.0;
  double min_db = 0.0;
  double max_db = 0.0;
  double median_solve_us = 0.0;
};

struct CdfTable {
  std::vector<CdfCell> cells;
};

// Sorted unique sample values with probability = (count <= value) / total.
std::vector<std::pair<double, double>> empirical_cdf(
    std::span<const double> samples);

// Runs the whole campaign. Grid/size violations (e.g. brute force beyond the
// configuration limit) are rejected before any work starts. Sample columns
// are deterministic for a fixed master seed; timings are not.
CdfTable run(const BenchRun& bench);

// `algorithm,K,N,boost_linear,boost_db,cdf`, one row per CDF point.
void write_cdf_csv(const CdfTable& table, std::ostream& out);
// `algorithm,K,N,mean_db,median_db,min_db,max_db,median_solve_us`.
void write_summary_csv(const CdfTable& table, std::ostream& out);

struct TimingPoint {
  int element_count;
  double median_us;
};

// Median wall time of solve_sweep per element count (ascending), measured
// around the solver call only. repeats == 0 yields an empty result.
std::vector<TimingPoint> timing_scan(const PhaseAlphabet& alphabet,
                                     std::span<const int> element_counts,
                                     int repeats, std::uint64_t seed = 0);

}  // namespace discphase

#endif
