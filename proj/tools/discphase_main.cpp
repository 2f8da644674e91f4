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

// Command-line front end. Deliberately a thin shell over the C API in
// discphase.h: everything numerical happens inside the shared library.
//
// Exit codes: 0 success, 1 failed verification checks, 2 usage/validation
// error, 3 domain error (e.g. SNR boost undefined because |h0| = 0).

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "discphase.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

int exit_code_for(dp_status status) {
  switch (status) {
    case DP_OK:
      return kExitOk;
    case DP_ERROR_BOOST_UNDEFINED:
      return kExitDomain;
    default:
      return kExitUsage;
  }
}

int report_failure(dp_status status) {
  std::fprintf(stderr, "error: %s: %s\n", dp_status_name(status),
               dp_last_error());
  return exit_code_for(status);
}

struct InstanceDeleter {
  void operator()(dp_instance* p) const { dp_instance_destroy(p); }
};
struct SolutionDeleter {
  void operator()(dp_solution* p) const { dp_solution_destroy(p); }
};
struct BenchDeleter {
  void operator()(dp_bench_result* p) const { dp_bench_result_destroy(p); }
};
using InstancePtr = std::unique_ptr<dp_instance, InstanceDeleter>;
using SolutionPtr = std::unique_ptr<dp_solution, SolutionDeleter>;
using BenchPtr = std::unique_ptr<dp_bench_result, BenchDeleter>;

// Angles print with 6 significant digits; --degrees only changes display.
std::string format_angle(double radians, bool degrees) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g",
                degrees ? radians * 57.295779513082321 : radians);
  return buf;
}

std::string format_value(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

bool parse_algorithm(const std::string& name, dp_algorithm& out) {
  if (name == "sweep" || name == "sweep_optimal") {
    out = DP_ALGORITHM_SWEEP;
    return true;
  }
  if (name == "lemma1" || name == "lemma1-baseline" ||
      name == "lemma1_baseline") {
    out = DP_ALGORITHM_LEMMA1_BASELINE;
    return true;
  }
  if (name == "brute" || name == "brute_force") {
    out = DP_ALGORITHM_BRUTE_FORCE;
    return true;
  }
  return false;
}

const char* algorithm_label(int32_t algorithm) {
  switch (algorithm) {
    case DP_ALGORITHM_SWEEP:
      return "sweep_optimal";
    case DP_ALGORITHM_LEMMA1_BASELINE:
      return "lemma1_baseline";
    case DP_ALGORITHM_BRUTE_FORCE:
      return "brute_force";
    default:
      return "unknown";
  }
}

// Resolves the effective alphabet size from --K and the document hint.
bool resolve_alphabet(int flag_k, int32_t hint, int& out) {
  if (flag_k > 0) {
    if (hint > 0 && hint != flag_k) {
      std::fprintf(stderr,
                   "warning: instance document hints K=%d, overridden by "
                   "--K %d\n",
                   hint, flag_k);
    }
    out = flag_k;
    return true;
  }
  if (hint > 0) {
    out = hint;
    return true;
  }
  std::fprintf(stderr,
               "error: K not specified (pass --K or add a \"K\" hint to the "
               "instance document)\n");
  return false;
}

int print_solution(const dp_solution* solution, int k, bool degrees) {
  const size_t n = dp_solution_element_count(solution);
  std::vector<int32_t> indices(n);
  dp_solution_indices(solution, indices.data());

  std::printf("algorithm      %s\n",
              algorithm_label(dp_solution_algorithm(solution)));
  std::printf("elements       %zu\n", n);
  std::printf("K              %d\n", k);
  std::printf("indices       ");
  for (const int32_t index : indices) std::printf(" %d", index);
  std::printf("\n");

  const double step = 6.283185307179586 / k;
  std::printf(degrees ? "theta_deg     " : "theta_rad     ");
  for (const int32_t index : indices) {
    std::printf(" %s", format_angle(step * index, degrees).c_str());
  }
  std::printf("\n");

  double g_re = 0.0, g_im = 0.0;
  dp_solution_composite(solution, &g_re, &g_im);
  std::printf("g              (%s, %s)\n", format_value(g_re).c_str(),
              format_value(g_im).c_str());
  std::printf("|g|            %s\n",
              format_value(dp_solution_magnitude(solution)).c_str());
  std::printf(degrees ? "mu_phase_deg   %s\n" : "mu_phase_rad   %s\n",
              format_angle(dp_solution_mu_phase(solution), degrees).c_str());

  double boost = 0.0;
  const dp_status status = dp_solution_boost(solution, &boost);
  if (status != DP_OK) {
    std::printf("boost          undefined (|h0| = 0)\n");
    return report_failure(status);
  }
  std::printf("boost_linear   %s\n", format_value(boost).c_str());
  std::printf("boost_db       %s\n",
              format_value(10.0 * std::log10(boost)).c_str());
  return kExitOk;
}

int run_solve(const std::string& path, int flag_k, const std::string& name,
              std::uint64_t limit, bool degrees) {
  dp_algorithm algorithm;
  if (!parse_algorithm(name, algorithm)) {
    std::fprintf(stderr, "error: unknown algorithm '%s'\n", name.c_str());
    return kExitUsage;
  }

  dp_instance* raw_instance = nullptr;
  int32_t hint = 0;
  dp_status status = dp_instance_read_file(path.c_str(), &raw_instance, &hint);
  if (status != DP_OK) return report_failure(status);
  InstancePtr instance(raw_instance);

  int k = 0;
  if (!resolve_alphabet(flag_k, hint, k)) return kExitUsage;

  dp_solution* raw_solution = nullptr;
  status = dp_solve(instance.get(), k, algorithm, limit, &raw_solution);
  if (status != DP_OK) return report_failure(status);
  SolutionPtr solution(raw_solution);

  return print_solution(solution.get(), k, degrees);
}

int run_verify_golden(bool use_printed_h2) {
  dp_golden_check* checks = nullptr;
  size_t count = 0;
  const dp_status status =
      dp_verify_golden(use_printed_h2 ? 1 : 0, &checks, &count);
  if (status != DP_OK) return report_failure(status);

  size_t failures = 0;
  size_t annotated = 0;
  for (size_t i = 0; i < count; ++i) {
    const dp_golden_check& check = checks[i];
    const char* verdict = "PASS";
    if (check.annotated) {
      verdict = "NOTE";
      ++annotated;
    } else if (!check.passed) {
      verdict = "FAIL";
      ++failures;
    }
    std::printf("%s  %-22s expected % .6g  actual % .6g  tol %.1e%s%s\n",
                verdict, check.name, check.expected, check.actual,
                check.tolerance, check.relative ? " rel" : " abs",
                check.annotated ? "  (known printed-value deviation)" : "");
  }
  std::printf("%zu checks: %zu passed, %zu failed, %zu annotated\n", count,
              count - failures - annotated, failures, annotated);
  dp_golden_checks_destroy(checks);
  return failures == 0 ? kExitOk : kExitCheckFailure;
}

int run_bench(const std::vector<int>& ks, const std::vector<int>& ns,
              std::uint32_t realizations,
              const std::vector<std::string>& algorithm_names,
              std::uint64_t seed, double direct_scale, double reflect_scale,
              const std::string& out_dir) {
  std::vector<int32_t> algorithms;
  for (const std::string& name : algorithm_names) {
    dp_algorithm algorithm;
    if (!parse_algorithm(name, algorithm)) {
      std::fprintf(stderr, "error: unknown algorithm '%s'\n", name.c_str());
      return kExitUsage;
    }
    algorithms.push_back(algorithm);
  }
  const std::vector<int32_t> ks32(ks.begin(), ks.end());
  const std::vector<int32_t> ns32(ns.begin(), ns.end());

  dp_bench_config config{};
  config.alphabet_sizes = ks32.data();
  config.n_alphabet_sizes = ks32.size();
  config.element_counts = ns32.data();
  config.n_element_counts = ns32.size();
  config.realizations = realizations;
  config.algorithms = algorithms.data();
  config.n_algorithms = algorithms.size();
  config.master_seed = seed;
  config.direct_scale = direct_scale;
  config.reflect_scale = reflect_scale;

  dp_bench_result* raw_result = nullptr;
  dp_status status = dp_bench_run(&config, &raw_result);
  if (status != DP_OK) return report_failure(status);
  BenchPtr result(raw_result);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "error: cannot create output directory %s: %s\n",
                 out_dir.c_str(), ec.message().c_str());
    return kExitUsage;
  }
  const std::string cdf_path = out_dir + "/cdf.csv";
  const std::string summary_path = out_dir + "/summary.csv";
  status = dp_bench_write_cdf_csv(result.get(), cdf_path.c_str());
  if (status != DP_OK) return report_failure(status);
  status = dp_bench_write_summary_csv(result.get(), summary_path.c_str());
  if (status != DP_OK) return report_failure(status);

  std::printf("%-16s %4s %6s %12s %12s %12s %12s %14s\n", "algorithm", "K",
              "N", "mean_db", "median_db", "min_db", "max_db", "solve_us");
  const size_t cells = dp_bench_cell_count(result.get());
  for (size_t i = 0; i < cells; ++i) {
    dp_bench_cell_summary cell{};
    dp_bench_cell_summary_get(result.get(), i, &cell);
    std::printf("%-16s %4d %6d %12.6f %12.6f %12.6f %12.6f %14.1f\n",
                algorithm_label(cell.algorithm), cell.alphabet_size,
                cell.element_count, cell.mean_db, cell.median_db, cell.min_db,
                cell.max_db, cell.median_solve_us);
  }
  std::printf("wrote %s and %s\n", cdf_path.c_str(), summary_path.c_str());
  return kExitOk;
}

int run_timing(int k, const std::vector<int>& ns, std::uint32_t repeats,
               std::uint64_t seed) {
  const std::vector<int32_t> ns32(ns.begin(), ns.end());
  std::vector<double> median_us(ns32.size(), 0.0);
  size_t count = 0;
  const dp_status status =
      dp_timing_scan(k, ns32.data(), ns32.size(), repeats, seed,
                     median_us.data(), &count);
  if (status != DP_OK) return report_failure(status);

  std::printf("N,median_solve_us\n");
  for (size_t i = 0; i < count; ++i) {
    std::printf("%d,%.3f\n", ns32[i], median_us[i]);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discphase: optimal discrete phase configurations for "
               "composite channels"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand(
      "solve", "solve one instance document with a chosen algorithm");
  std::string solve_path;
  int solve_k = 0;
  std::string solve_algorithm = "sweep";
  std::uint64_t solve_limit = 0;
  bool solve_degrees = false;
  solve->add_option("--instance", solve_path, "instance document (JSON)")
      ->required();
  solve->add_option("--K", solve_k, "alphabet size (>= 2)")
      ->check(CLI::Range(2, 1 << 24));
  solve->add_option("--algorithm", solve_algorithm,
                    "sweep | lemma1-baseline | brute");
  solve->add_option("--limit", solve_limit,
                    "configuration cap for brute (default 10^7)");
  solve->add_flag("--degrees", solve_degrees, "display angles in degrees");

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "exhaustive K^N search (ground truth for small instances)");
  std::string oracle_path;
  int oracle_k = 0;
  std::uint64_t oracle_limit = 0;
  bool oracle_degrees = false;
  oracle->add_option("--instance", oracle_path, "instance document (JSON)")
      ->required();
  oracle->add_option("--K", oracle_k, "alphabet size (>= 2)")
      ->check(CLI::Range(2, 1 << 24));
  oracle->add_option("--limit", oracle_limit,
                     "configuration cap (default 10^7)");
  oracle->add_flag("--degrees", oracle_degrees, "display angles in degrees");

  // verify-golden
  auto* verify = app.add_subcommand(
      "verify-golden", "recompute the golden reference tables cell by cell");
  bool use_printed_h2 = false;
  verify->add_flag("--use-printed-h2", use_printed_h2,
                   "rebuild the golden instance with the printed "
                   "(inconsistent) Im(h2) to demonstrate the discrepancy");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "Monte Carlo SNR-boost campaign, CSV output");
  std::vector<int> bench_ks;
  std::vector<int> bench_ns;
  std::uint32_t bench_realizations = 0;
  std::vector<std::string> bench_algorithms;
  std::uint64_t bench_seed = 0;
  double bench_direct = 1.0;
  double bench_reflect = 0.0;
  std::string bench_out;
  bench->add_option("--K", bench_ks, "alphabet sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--N", bench_ns, "element counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--realizations", bench_realizations,
                    "channel draws per (K, N) cell")
      ->required();
  bench->add_option("--algorithms", bench_algorithms,
                    "subset of sweep,lemma1,brute")
      ->required()
      ->delimiter(',');
  bench->add_option("--seed", bench_seed, "master seed")->required();
  bench->add_option("--direct-scale", bench_direct,
                    "h0 per-component standard deviation (default 1)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--reflect-scale", bench_reflect,
                    "element per-component standard deviation "
                    "(default 1/sqrt(2N))")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "output directory")->required();

  // timing
  auto* timing = app.add_subcommand(
      "timing", "median sweep solve time per element count");
  int timing_k = 0;
  std::vector<int> timing_ns;
  std::uint32_t timing_repeats = 0;
  std::uint64_t timing_seed = 0;
  timing->add_option("--K", timing_k, "alphabet size")
      ->required()
      ->check(CLI::Range(2, 1 << 24));
  timing->add_option("--N", timing_ns, "ascending element counts")
      ->required()
      ->delimiter(',');
  timing->add_option("--repeats", timing_repeats, "timed solves per N")
      ->required();
  timing->add_option("--seed", timing_seed, "master seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (solve->parsed()) {
    return run_solve(solve_path, solve_k, solve_algorithm, solve_limit,
                     solve_degrees);
  }
  if (oracle->parsed()) {
    return run_solve(oracle_path, oracle_k, "brute", oracle_limit,
                     oracle_degrees);
  }
  if (verify->parsed()) {
    return run_verify_golden(use_printed_h2);
  }
  if (bench->parsed()) {
    if (bench_realizations == 0) {
      std::fprintf(stderr, "error: --realizations must be >= 1\n");
      return kExitUsage;
    }
    return run_bench(bench_ks, bench_ns, bench_realizations, bench_algorithms,
                     bench_seed, bench_direct, bench_reflect, bench_out);
  }
  if (timing->parsed()) {
    return run_timing(timing_k, timing_ns, timing_repeats, timing_seed);
  }
  return kExitUsage;
}
