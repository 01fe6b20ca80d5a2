// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/runner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <boost/algorithm/string/trim.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "ternary/exciton_ops.hpp"
#include "ternary/fission.hpp"
#include "ternary/fock_space.hpp"
#include "ternary/moment_engine.hpp"
#include "ternary/packing.hpp"
#include "ternary/qutrit_algebra.hpp"
#include "ternary/spin_ladder.hpp"
#include "ternary/thermo_ensemble.hpp"

namespace ternary {

namespace {

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(what + ": '" + text + "' is not finite");
  return v;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    boost::algorithm::trim(item);
    if (item.empty()) continue;
    out.push_back(static_cast<int>(parse_number(item, "modes")));
  }
  return out;
}

/// Runs body(i) for i in [0, n) on `threads` workers; results land by index.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<double> Grid::values() const {
  if (step <= 0.0) return {from};
  const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9));
  std::vector<double> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(from + static_cast<double>(i) * step);
  return out;
}

Grid parse_grid(std::string_view text) {
  std::vector<std::string> parts;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ':')) {
    boost::algorithm::trim(item);
    parts.push_back(item);
  }
  if (parts.size() == 1) {
    const double v = parse_number(parts[0], "grid");
    return {v, v, 1.0};
  }
  if (parts.size() != 3) throw std::invalid_argument("grid '" + std::string(text) + "' is not from:to:step");
  Grid g{parse_number(parts[0], "grid"), parse_number(parts[1], "grid"), parse_number(parts[2], "grid")};
  if (g.step <= 0.0) throw std::invalid_argument("grid step must be positive");
  if (g.to < g.from) throw std::invalid_argument("grid end lies before its start");
  return g;
}

Observable parse_observable(std::string_view name) {
  static const std::pair<std::string_view, Observable> table[] = {
      {"excited", Observable::excited}, {"absorbed", Observable::absorbed}, {"spin_gap", Observable::spin_gap},
      {"fission", Observable::fission}, {"dc", Observable::dc},             {"ac", Observable::ac},
      {"entropy", Observable::entropy}, {"packings", Observable::packings}, {"curie", Observable::curie}};
  for (const auto& [n, o] : table) {
    if (n == name) return o;
  }
  throw UnknownObservable("unknown observable '" + std::string(name) +
                          "'; expected excited, absorbed, spin_gap, fission, dc, ac, entropy, packings or curie");
}

std::string to_string(Observable o) {
  switch (o) {
    case Observable::excited: return "excited";
    case Observable::absorbed: return "absorbed";
    case Observable::spin_gap: return "spin_gap";
    case Observable::fission: return "fission";
    case Observable::dc: return "dc";
    case Observable::ac: return "ac";
    case Observable::entropy: return "entropy";
    case Observable::packings: return "packings";
    case Observable::curie: return "curie";
  }
  return "?";
}

std::vector<int> ExperimentConfig::active_modes() const {
  if (!modes.empty()) return modes;
  std::vector<int> all;
  for (int y = 1; y < sites; ++y) all.push_back(y);
  return all;
}

ExperimentConfig parse_config(const std::string& ini_text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(ini_text);
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }

  ExperimentConfig c;
  using Setter = std::function<void(const std::string&)>;
  const auto integer = [](const std::string& key, auto& field) {
    return [&field, key](const std::string& v) {
      const double d = parse_number(v, key);
      if (d != std::floor(d)) throw std::invalid_argument(key + ": '" + v + "' is not an integer");
      field = static_cast<std::remove_reference_t<decltype(field)>>(d);
    };
  };
  const auto real = [](const std::string& key, double& field) {
    return [&field, key](const std::string& v) { field = parse_number(v, key); };
  };
  const auto grid = [](Grid& field) { return [&field](const std::string& v) { field = parse_grid(v); }; };
  const auto text = [](std::string& field) { return [&field](const std::string& v) { field = v; }; };

  const std::map<std::string, Setter> setters = {
      {"run.suite", text(c.suite)},
      {"run.sites", integer("sites", c.sites)},
      {"run.modes", [&c](const std::string& v) { c.modes = parse_int_list(v); }},
      {"run.seed", integer("seed", c.seed)},
      {"run.output", text(c.output)},
      {"run.observable", text(c.observable)},
      {"run.tolerance", real("tolerance", c.tolerance)},
      {"run.threads", integer("threads", c.threads)},
      {"run.memory_budget_mb", integer("memory_budget_mb", c.memory_budget_mb)},
      {"grids.lambda", grid(c.lambda)},
      {"grids.lambda_tilde", grid(c.lambda_tilde)},
      {"grids.alpha", grid(c.alpha)},
      {"grids.theta", grid(c.theta)},
      {"grids.phi", grid(c.phi)},
      {"grids.omega", grid(c.omega)},
      {"grids.beta", grid(c.beta)},
      {"transport.dc_lambda", real("dc_lambda", c.dc_lambda)},
      {"fission.lambda_2", real("lambda_2", c.fission_lambda_2)},
      {"ladder.rungs", integer("rungs", c.rungs)},
  };

  for (const auto& [section, body] : tree) {
    if (body.empty()) throw std::invalid_argument("config: key '" + section + "' lies outside any section");
    for (const auto& [key, value] : body) {
      const auto full = section + "." + key;
      const auto it = setters.find(full);
      if (it == setters.end()) throw std::invalid_argument("config: unknown key '" + full + "'");
      auto v = value.get_value<std::string>();
      boost::algorithm::trim(v);
      it->second(v);
    }
  }
  if (c.sites < 2) throw std::invalid_argument("config: sites must be at least 2");
  if (!(c.tolerance > 0.0)) throw std::invalid_argument("config: tolerance must be positive");
  for (int y : c.modes) {
    if (y < 1 || y >= c.sites) throw std::invalid_argument("config: mode " + std::to_string(y) + " outside 1..sites-1");
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

InfeasibleSize::InfeasibleSize(int sites_, double estimate, double budget)
    : std::runtime_error("L = " + std::to_string(sites_) + " needs an estimated " + format12(estimate / 1048576.0) +
                         " MiB, above the budget of " + format12(budget / 1048576.0) + " MiB"),
      sites(sites_),
      estimate_bytes(estimate),
      budget_bytes(budget) {}

double verify_memory_estimate(int sites) {
  // Four resident full-space state vectors of 64-byte sparse entries.
  return std::pow(4.0, sites) * 64.0 * 4.0;
}

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Json to_json(const CheckResult& c) {
  return {{"name", c.name},
          {"relation", c.relation},
          {"max_residual", round12(c.max_residual)},
          {"tolerance", c.tolerance},
          {"pass", c.pass}};
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"sites", r.sites},     {"seed", r.seed},         {"tolerance", r.tolerance},
          {"pass", r.pass()},     {"checks", checks},       {"reported", r.reported}};
}

namespace {

std::string cell(double v) { return format12(v); }
std::string cell(bool v) { return v ? "1" : "0"; }
std::string cell(std::uint64_t v) { return std::to_string(v); }
std::string cell(int v) { return std::to_string(v); }

std::string kind_cell(FissionKind k) {
  switch (k) {
    case FissionKind::exothermal: return "exothermal";
    case FissionKind::boundary: return "boundary";
    case FissionKind::endothermal: return "endothermal";
  }
  return "?";
}

struct SweepPlan {
  std::string formula;
  std::vector<std::string> columns;
  std::size_t points = 0;
  std::function<std::vector<std::string>(std::size_t)> row;
};

SweepPlan plan_for(const ExperimentConfig& c, Observable o) {
  SweepPlan plan;
  switch (o) {
    case Observable::excited:
    case Observable::absorbed: {
      const auto grid = c.lambda.values();
      const bool excited = o == Observable::excited;
      plan.formula = excited ? "(1 + 3x + x^2)/(1 + x), x = |lambda|^2" : "1 + x - x^2/(1 + x), x = |lambda|^2";
      plan.columns = {"lambda", "x", excited ? "excited" : "absorbed"};
      plan.points = grid.size();
      plan.row = [grid, excited](std::size_t i) {
        const double l = grid[i];
        return std::vector<std::string>{cell(l), cell(l * l), cell(excited ? excited_number(l) : absorbed_number(l))};
      };
      break;
    }
    case Observable::spin_gap: {
      const auto grid = c.lambda_tilde.values();
      plan.formula = "(x^3 - 9x^2 + 18x - 6)/(x^2 - 4x + 2), x = |lambda_tilde|^2";
      plan.columns = {"lambda_tilde", "x", "spin_gap", "near_pole"};
      plan.points = grid.size();
      plan.row = [grid](std::size_t i) {
        const auto g = spin_gap(grid[i]);
        return std::vector<std::string>{cell(grid[i]), cell(grid[i] * grid[i]), cell(g.value), cell(g.near_pole)};
      };
      break;
    }
    case Observable::fission: {
      std::vector<double> grid;
      for (double v : c.lambda_tilde.values()) {
        if (v > 1.0) grid.push_back(v);
      }
      plan.formula = "delta = 2/x - 1, x = |lambda_tilde_1|^2";
      plan.columns = {"lambda_tilde_1", "delta", "kind"};
      plan.points = grid.size();
      plan.row = [grid](std::size_t i) {
        const auto e = fission_energy(grid[i]);
        return std::vector<std::string>{cell(grid[i]), cell(e.delta), kind_cell(e.kind)};
      };
      break;
    }
    case Observable::dc: {
      const auto grid = c.phi.values();
      const double lambda = c.dc_lambda;
      plan.formula = "dc current at alpha = 0 over phi; odd in phi";
      plan.columns = {"phi", "current", "two_step"};
      plan.points = grid.size();
      plan.row = [grid, lambda](std::size_t i) {
        const auto d = dc_current(lambda, grid[i], 0.0, 0.0);
        return std::vector<std::string>{cell(grid[i]), cell(d.value), cell(d.two_step)};
      };
      break;
    }
    case Observable::ac: {
      const auto w = c.omega.values(), t = c.theta.values(), b = c.beta.values();
      plan.formula = "omega sin(2 theta)/(1 - e^{-beta_E})";
      plan.columns = {"omega", "theta", "beta_E", "current"};
      plan.points = w.size() * t.size() * b.size();
      plan.row = [w, t, b](std::size_t i) {
        const std::size_t k = i % b.size(), j = (i / b.size()) % t.size(), h = i / (b.size() * t.size());
        return std::vector<std::string>{cell(w[h]), cell(t[j]), cell(b[k]), cell(ac_current(w[h], t[j], b[k]))};
      };
      break;
    }
    case Observable::entropy: {
      plan.formula = "S_thermal = (L - 1) ln 2, S_Gibbs = ln of the packing ceiling";
      plan.columns = {"L", "degeneracy", "thermal_entropy", "gibbs_entropy"};
      plan.points = static_cast<std::size_t>(std::max(0, c.sites - 1));
      plan.row = [](std::size_t i) {
        const int L = static_cast<int>(i) + 2;
        return std::vector<std::string>{cell(L), cell(degeneracy(L)), cell(thermal_entropy(L)), cell(gibbs_entropy(L))};
      };
      break;
    }
    case Observable::packings: {
      std::vector<std::array<int, 3>> keys;
      for (int L = 2; L <= c.sites; ++L) {
        for (int y = 1; y < L; ++y) {
          for (int m = 0; m <= max_packings(L, y); ++m) keys.push_back({L, y, m});
        }
      }
      plan.formula = "count of m disjoint y-pairs on L sites; S_exact = ln of the ceiling for y, S_closed_form = ln(L/2)";
      plan.columns = {"L", "y", "m", "count", "S_exact", "S_closed_form"};
      plan.points = keys.size();
      plan.row = [keys](std::size_t i) {
        const auto [L, y, m] = keys[i];
        return std::vector<std::string>{cell(L), cell(y), cell(m), cell(count_packings(L, y, m)),
                                        cell(gibbs_entropy_exact(L, y)), cell(gibbs_entropy(L))};
      };
      break;
    }
    case Observable::curie: {
      const auto grid = c.lambda_tilde.values();
      const auto report = curie_report(c.lambda_tilde.from, c.lambda_tilde.to, c.lambda_tilde.step);
      plan.formula = "sign change of (x^3 - 9x^2 + 18x - 6)/(x^2 - 4x + 2); threshold " + format12(report.threshold);
      plan.columns = {"lambda_tilde", "spin_gap", "near_pole", "sign_change"};
      plan.points = report.rows.size();
      plan.row = [rows = report.rows](std::size_t i) {
        const auto& r = rows[i];
        return std::vector<std::string>{cell(r.lambda_tilde), cell(r.spin_gap), cell(r.near_pole), cell(r.sign_change)};
      };
      break;
    }
  }
  return plan;
}

}  // namespace

SweepTable run_sweep(const ExperimentConfig& config, Observable observable) {
  const auto plan = plan_for(config, observable);
  SweepTable table;
  table.observable = observable;
  table.metadata = {{"observable", to_string(observable)},
                    {"formula", plan.formula},
                    {"seed", std::to_string(config.seed)},
                    {"sites", std::to_string(config.sites)},
                    {"rows", std::to_string(plan.points)}};
  table.columns = plan.columns;
  table.rows.resize(plan.points);
  parallel_for(plan.points, config.threads, [&](std::size_t i) { table.rows[i] = plan.row(i); });
  return table;
}

void write_csv(std::ostream& os, const SweepTable& table) {
  for (const auto& [k, v] : table.metadata) os << "# " << k << " = " << v << '\n';
  const auto join = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  join(table.columns);
  for (const auto& r : table.rows) join(r);
}

Json run_fission(const ExperimentConfig& config) {
  Json rows = Json::array();
  for (double lt : config.lambda_tilde.values()) {
    if (lt <= 1.0) continue;
    rows.push_back(to_json(fission_action_check(config.sites, lt, config.fission_lambda_2)));
  }
  return {{"seed", config.seed}, {"sites", config.sites}, {"lambda_2", config.fission_lambda_2}, {"checks", rows}};
}

Json run_spin_enum(const ExperimentConfig& config) {
  const auto configs = enumerate_configs(config.rungs);
  Json singles = Json::array();
  for (const auto& c : configs) {
    if (classify(c).cls == ConfigClass::single) singles.push_back(render(c));
  }
  return {{"seed", config.seed}, {"rungs", config.rungs}, {"counts", to_json(tally(configs))}, {"single", singles}};
}

Json run_thermal(const ExperimentConfig& config) {
  const auto spec = random_thermal_spec(config.sites - 1, config.seed);
  return {{"seed", config.seed},
          {"thermal", to_json(build_thermal_state(spec, config.sites))},
          {"commutator", to_json(stabilizer_commutator(config.sites, config.active_modes()))}};
}

}  // namespace ternary
