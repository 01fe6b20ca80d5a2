// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file runner.hpp
 * @brief Batch verification suites and parameter sweeps.
 *
 * Configuration is an INI file:
 *
 *     [run]
 *     sites = 4
 *     seed = 7
 *     observable = spin_gap
 *
 *     [grids]
 *     lambda_tilde = 1.1:4.0:0.01
 *
 * Grids are written from:to:step and include both end points when the step
 * divides the range. Every report carries the seed it was produced with.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ternary/fixtures.hpp"

namespace ternary {

struct Grid {
  double from = 0.0;
  double to = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

/// Parses "from:to:step" or a single value. Throws std::invalid_argument on
/// non-finite entries, a non-positive step or to < from.
Grid parse_grid(std::string_view text);

enum class Observable { excited, absorbed, spin_gap, fission, dc, ac, entropy, packings, curie };

class UnknownObservable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Observable parse_observable(std::string_view name);
std::string to_string(Observable o);

struct ExperimentConfig {
  std::string suite = "default";
  int sites = 4;
  std::vector<int> modes;  ///< empty means every y in 1..sites-1

  Grid lambda{0.0, 1.5, 0.1};
  Grid lambda_tilde{1.1, 4.0, 0.01};
  Grid alpha{-3.0, 3.0, 0.3};
  Grid theta{0.0, 1.5707963267948966, 0.39269908169872414};
  Grid phi{0.0, 6.283185307179586, 0.39269908169872414};
  Grid omega{0.0, 2.0, 0.5};
  Grid beta{0.5, 2.5, 0.5};

  std::uint64_t seed = 1;
  std::string output;
  std::string observable = "spin_gap";
  double tolerance = 1e-12;
  unsigned threads = 0;  ///< 0 means hardware concurrency
  std::size_t memory_budget_mb = 1024;

  double dc_lambda = 1.0;
  double fission_lambda_2 = 0.1;
  int rungs = 6;

  std::vector<int> active_modes() const;
};

/// Throws std::invalid_argument naming the offending key.
ExperimentConfig parse_config(const std::string& ini_text);
ExperimentConfig load_config(const std::string& path);

class InfeasibleSize : public std::runtime_error {
 public:
  InfeasibleSize(int sites, double estimate_bytes, double budget_bytes);
  int sites;
  double estimate_bytes;
  double budget_bytes;
};

/// Working-set estimate of the verification suite on a chain of this length.
double verify_memory_estimate(int sites);

struct CheckResult {
  std::string name;
  std::string relation;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  int sites = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<CheckResult> checks;
  Json reported;  ///< diagnostics that are emitted but not asserted
  bool pass() const;
};

/// Runs every identity suite at the configured chain length. Throws
/// InfeasibleSize when the memory estimate exceeds the budget.
VerifyReport run_verify(const ExperimentConfig& config);

Json to_json(const CheckResult& c);
Json to_json(const VerifyReport& r);

struct SweepTable {
  Observable observable = Observable::spin_gap;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// One row per grid point in grid order. Points run on a worker pool.
SweepTable run_sweep(const ExperimentConfig& config, Observable observable);

/// '#'-prefixed "key = value" metadata, a header row, then the data rows.
void write_csv(std::ostream& os, const SweepTable& table);

Json run_fission(const ExperimentConfig& config);
Json run_spin_enum(const ExperimentConfig& config);
Json run_thermal(const ExperimentConfig& config);

}  // namespace ternary
