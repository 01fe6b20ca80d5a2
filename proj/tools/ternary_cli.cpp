// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

// Batch front end: ternary_cli <verify|sweep|fission|spin-enum|thermal> [flags]

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ternary/runner.hpp"

namespace {

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<int> sites;
  std::optional<int> rungs;
  std::string out;
  std::string observable;
};

ternary::ExperimentConfig resolve(const Options& o) {
  auto c = o.config_path.empty() ? ternary::ExperimentConfig{} : ternary::load_config(o.config_path);
  if (o.seed) c.seed = *o.seed;
  if (o.tolerance) c.tolerance = *o.tolerance;
  if (o.sites) c.sites = *o.sites;
  if (o.rungs) c.rungs = *o.rungs;
  if (!o.out.empty()) c.output = o.out;
  if (!o.observable.empty()) c.observable = o.observable;
  return c;
}

template <class Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  write(os);
}

void emit_json(const std::string& path, const ternary::Json& j) {
  emit(path, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced-ternary exciton toolkit: identity verification and observable sweeps"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "INI configuration file")->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed, "seed for random probes and thermal parameters");
  app.add_option("--out", o.out, "output path; '-' or empty writes to stdout");
  app.add_option("--tolerance", o.tolerance, "residual tolerance for exact identities");
  app.add_option("--sites", o.sites, "chain length L");

  auto* verify = app.add_subcommand("verify", "run every identity suite and write a JSON report");
  auto* sweep = app.add_subcommand("sweep", "tabulate an observable over its grid as CSV");
  sweep->add_option("--observable", o.observable,
                    "excited|absorbed|spin_gap|fission|dc|ac|entropy|packings|curie");
  auto* fission = app.add_subcommand("fission", "fission action checks over the lambda_tilde grid");
  auto* spin = app.add_subcommand("spin-enum", "enumerate and classify maximal ladder configurations");
  spin->add_option("--rungs", o.rungs, "number of rungs R (at most 12)");
  auto* thermal = app.add_subcommand("thermal", "assemble a seeded thermal state and its commutator report");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto config = resolve(o);
    if (*verify) {
      const auto report = ternary::run_verify(config);
      emit_json(config.output, ternary::to_json(report));
      for (const auto& c : report.checks) {
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual " << ternary::format12(c.max_residual)
                  << '\n';
      }
      return report.pass() ? 0 : 1;
    }
    if (*sweep) {
      const auto table = ternary::run_sweep(config, ternary::parse_observable(config.observable));
      emit(config.output, [&](std::ostream& os) { ternary::write_csv(os, table); });
    } else if (*fission) {
      emit_json(config.output, ternary::run_fission(config));
    } else if (*spin) {
      emit_json(config.output, ternary::run_spin_enum(config));
    } else if (*thermal) {
      emit_json(config.output, ternary::run_thermal(config));
    }
  } catch (const ternary::InfeasibleSize& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
