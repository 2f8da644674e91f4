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

#include "core/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "core/errors.hpp"
#include "core/format.hpp"
#include "core/rng.hpp"

namespace discphase {

namespace {

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

void validate(const BenchRun& bench) {
  if (bench.realizations < 1) {
    throw InvalidArgumentError("bench: realizations must be >= 1");
  }
  if (bench.alphabet_sizes.empty()) {
    throw InvalidArgumentError("bench: at least one alphabet size required");
  }
  for (const int k : bench.alphabet_sizes) {
    if (k < 2) throw InvalidArgumentError("bench: alphabet sizes must be >= 2");
  }
  if (bench.element_counts.empty()) {
    throw InvalidArgumentError("bench: at least one element count required");
  }
  for (const int n : bench.element_counts) {
    if (n < 1) throw InvalidArgumentError("bench: element counts must be >= 1");
  }
  if (bench.algorithms.empty()) {
    throw InvalidArgumentError("bench: at least one algorithm required");
  }
  // each (algorithm, K, N) cell must be unique or its samples would merge
  const auto has_duplicates = [](auto values) {
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) != values.end();
  };
  if (has_duplicates(bench.alphabet_sizes)) {
    throw InvalidArgumentError("bench: duplicate alphabet size");
  }
  if (has_duplicates(bench.element_counts)) {
    throw InvalidArgumentError("bench: duplicate element count");
  }
  if (has_duplicates(bench.algorithms)) {
    throw InvalidArgumentError("bench: duplicate algorithm");
  }
  if (!(bench.direct_scale > 0.0) || !std::isfinite(bench.direct_scale)) {
    throw InvalidArgumentError("bench: direct_scale must be > 0");
  }
  if (bench.reflect_scale &&
      (!(*bench.reflect_scale > 0.0) || !std::isfinite(*bench.reflect_scale))) {
    throw InvalidArgumentError("bench: reflect_scale must be > 0");
  }
  const bool has_brute =
      std::find(bench.algorithms.begin(), bench.algorithms.end(),
                Algorithm::brute_force) != bench.algorithms.end();
  if (has_brute) {
    // Reject oversized grids before any work starts.
    for (const int k : bench.alphabet_sizes) {
      const PhaseAlphabet alphabet(k);
      for (const int n : bench.element_counts) {
        configuration_count(alphabet, static_cast<std::size_t>(n),
                            bench.brute_force_limit);
      }
    }
  }
}

void finalize_cell(CdfCell& cell, std::vector<double>& solve_times_us) {
  std::vector<double> db(cell.boosts.size());
  for (std::size_t i = 0; i < cell.boosts.size(); ++i) {
    db[i] = to_db(cell.boosts[i]);
  }
  double sum = 0.0;
  for (const double v : db) sum += v;
  cell.mean_db = sum / static_cast<double>(db.size());
  cell.median_db = median_of(db);
  cell.min_db = *std::min_element(db.begin(), db.end());
  cell.max_db = *std::max_element(db.begin(), db.end());
  cell.median_solve_us = median_of(solve_times_us);

  cell.cdf.clear();
  for (const auto& [value, probability] : empirical_cdf(cell.boosts)) {
    cell.cdf.push_back({value, to_db(value), probability});
  }
}

}  // namespace

std::vector<std::pair<double, double>> empirical_cdf(
    std::span<const double> samples) {
  if (samples.empty()) {
    throw InvalidArgumentError("empirical_cdf: empty sample set");
  }
  for (const double s : samples) {
    if (!std::isfinite(s)) {
      throw InvalidArgumentError("empirical_cdf: non-finite sample");
    }
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double total = static_cast<double>(sorted.size());

  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    points.emplace_back(sorted[i], static_cast<double>(i + 1) / total);
  }
  return points;
}

CdfTable run(const BenchRun& bench) {
  validate(bench);

  CdfTable table;
  std::vector<std::vector<double>> solve_times_us;
  const auto cell_index = [&](Algorithm algorithm, int k, int n) {
    for (std::size_t i = 0; i < table.cells.size(); ++i) {
      const CdfCell& cell = table.cells[i];
      if (cell.algorithm == algorithm && cell.alphabet_size == k &&
          cell.element_count == n) {
        return i;
      }
    }
    throw Error("bench: internal cell lookup failure");
  };

  for (const Algorithm algorithm : bench.algorithms) {
    for (const int k : bench.alphabet_sizes) {
      for (const int n : bench.element_counts) {
        CdfCell cell;
        cell.algorithm = algorithm;
        cell.alphabet_size = k;
        cell.element_count = n;
        cell.boosts.reserve(bench.realizations);
        table.cells.push_back(std::move(cell));
        solve_times_us.emplace_back();
        solve_times_us.back().reserve(bench.realizations);
      }
    }
  }

  using clock = std::chrono::steady_clock;
  for (const int k : bench.alphabet_sizes) {
    const PhaseAlphabet alphabet(k);
    for (const int n : bench.element_counts) {
      ChannelModelConfig config;
      config.n_elements = n;
      config.direct_scale = bench.direct_scale;
      config.reflect_scale =
          bench.reflect_scale.value_or(default_reflect_scale(n));
      for (std::uint32_t r = 0; r < bench.realizations; ++r) {
        config.seed = derive_seed(bench.master_seed,
                                  static_cast<std::uint64_t>(k),
                                  static_cast<std::uint64_t>(n), r);
        const ChannelInstance instance = generate(config);
        for (const Algorithm algorithm : bench.algorithms) {
          const auto start = clock::now();
          const BeamformingSolution solution =
              solve_with(algorithm, instance, alphabet,
                         bench.brute_force_limit);
          const auto stop = clock::now();
          if (!solution.boost) {
            throw BoostUndefinedError(
                "bench: |h0| = 0, SNR boost undefined");
          }
          const std::size_t i = cell_index(algorithm, k, n);
          table.cells[i].boosts.push_back(*solution.boost);
          solve_times_us[i].push_back(
              std::chrono::duration<double, std::micro>(stop - start).count());
        }
      }
    }
  }

  for (std::size_t i = 0; i < table.cells.size(); ++i) {
    finalize_cell(table.cells[i], solve_times_us[i]);
  }
  return table;
}

void write_cdf_csv(const CdfTable& table, std::ostream& out) {
  out << "algorithm,K,N,boost_linear,boost_db,cdf\n";
  for (const CdfCell& cell : table.cells) {
    for (const CdfPoint& point : cell.cdf) {
      out << algorithm_name(cell.algorithm) << ',' << cell.alphabet_size << ','
          << cell.element_count << ',' << format_double(point.boost_linear)
          << ',' << format_double(point.boost_db) << ','
          << format_double(point.probability) << '\n';
    }
  }
}

void write_summary_csv(const CdfTable& table, std::ostream& out) {
  out << "algorithm,K,N,mean_db,median_db,min_db,max_db,median_solve_us\n";
  for (const CdfCell& cell : table.cells) {
    out << algorithm_name(cell.algorithm) << ',' << cell.alphabet_size << ','
        << cell.element_count << ',' << format_double(cell.mean_db) << ','
        << format_double(cell.median_db) << ',' << format_double(cell.min_db)
        << ',' << format_double(cell.max_db) << ','
        << format_double(cell.median_solve_us) << '\n';
  }
}

std::vector<TimingPoint> timing_scan(const PhaseAlphabet& alphabet,
                                     std::span<const int> element_counts,
                                     int repeats, std::uint64_t seed) {
  for (std::size_t i = 0; i + 1 < element_counts.size(); ++i) {
    if (element_counts[i] >= element_counts[i + 1]) {
      throw InvalidArgumentError("timing_scan: element counts must ascend");
    }
  }
  for (const int n : element_counts) {
    if (n < 1) {
      throw InvalidArgumentError("timing_scan: element counts must be >= 1");
    }
  }
  if (repeats <= 0) return {};

  using clock = std::chrono::steady_clock;
  const auto instance_for = [&](int n, std::uint64_t rep) {
    ChannelModelConfig config;
    config.n_elements = n;
    config.direct_scale = 1.0;
    config.reflect_scale = default_reflect_scale(n);
    config.seed = derive_seed(seed, static_cast<std::uint64_t>(alphabet.size()),
                              static_cast<std::uint64_t>(n), rep);
    return generate(config);
  };

  // Warm-up pass so allocator and cache effects do not land on the first
  // timed repeat.
  for (const int n : element_counts) {
    (void)solve_sweep(instance_for(n, ~std::uint64_t{0}), alphabet);
  }

  // Repeats are interleaved across the element counts so that slow drifts
  // of the host (frequency scaling, co-tenancy) spread evenly over all
  // sizes instead of biasing whichever size was measured in one block.
  std::vector<std::vector<double>> times_us(element_counts.size());
  for (auto& t : times_us) t.reserve(repeats);
  for (int rep = 0; rep < repeats; ++rep) {
    for (std::size_t i = 0; i < element_counts.size(); ++i) {
      const ChannelInstance instance =
          instance_for(element_counts[i], static_cast<std::uint64_t>(rep));
      const auto start = clock::now();
      const BeamformingSolution solution = solve_sweep(instance, alphabet);
      const auto stop = clock::now();
      (void)solution;
      times_us[i].push_back(
          std::chrono::duration<double, std::micro>(stop - start).count());
    }
  }

  std::vector<TimingPoint> points;
  points.reserve(element_counts.size());
  for (std::size_t i = 0; i < element_counts.size(); ++i) {
    points.push_back({element_counts[i], median_of(std::move(times_us[i]))});
  }
  return points;
}

}  // namespace discphase
