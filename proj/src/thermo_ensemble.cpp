// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/thermo_ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "ternary/fock_space.hpp"

namespace ternary {

namespace {

double poisson_tail(double x, int m_max) {
  double term = std::exp(-x);
  double kept = 0.0;
  for (int k = 0; k <= m_max; ++k) {
    kept += term;
    term *= x / (k + 1);
  }
  return std::max(0.0, 1.0 - kept);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    const unsigned __int128 next = static_cast<unsigned __int128>(out) * static_cast<std::uint64_t>(n - k + i) /
                                   static_cast<std::uint64_t>(i);
    if (next > UINT64_MAX) throw std::overflow_error("binomial exceeds 64 bits");
    out = static_cast<std::uint64_t>(next);
  }
  return out;
}

/// Sum_k lambda^k/k! A^k psi, stopping once A annihilates the running term.
ChainState apply_nilpotent_exp(const LinearOp& a, Complex lambda, const ChainState& psi) {
  ChainState out = psi;
  if (lambda == Complex{}) return out;
  ChainState term = psi;
  for (int k = 1; k <= 2 * psi.sites() + 1; ++k) {
    term = a(term);
    term.prune();
    if (term.norm_squared() == 0.0) break;
    term *= lambda / static_cast<double>(k);
    out += term;
  }
  out.prune();
  return out;
}

ChainState assemble(const ThermalStateSpec& spec, int sites, const std::vector<ThermalFactor>& order) {
  ChainState psi = qutrit_vacuum(sites);
  const auto first_comp = std::find_if(spec.factors.begin(), spec.factors.end(),
                                       [](const ThermalFactor& f) { return f.kind == FactorKind::complementary; });
  if (first_comp != spec.factors.end()) psi = fully_occupied_state(first_comp->y, sites, spec.uniform_fill);
  for (const auto& f : order) {
    const auto op = f.kind == FactorKind::canonical ? mode_create(sites, f.y, spec.theta)
                                                    : mode_annihilate(sites, f.y, spec.theta);
    psi = apply_nilpotent_exp(op, f.value, psi);
  }
  return psi.normalized();
}

void require_modes(int sites, const std::vector<int>& modes) {
  for (int y : modes) {
    if (y < 1 || y > sites - 1) throw std::out_of_range("mode y = " + std::to_string(y) + " outside 1..L-1");
  }
}

}  // namespace

double gibbs_entropy(int sites) { return std::log(sites / 2.0); }

double gibbs_entropy_exact(int sites, int y) { return std::log(static_cast<double>(max_packings(sites, y))); }

double boltzmann_entropy(int sites, int m) { return 0.5 * sites * std::log(static_cast<double>(m)); }

double boltzmann_temperature(int sites, int m) { return 2.0 * m / sites; }

std::vector<int> concavity_violations(int sites, int y) {
  const auto counts = packing_counts(sites, y);
  std::vector<int> out;
  for (std::size_t m = 1; m + 1 < counts.size(); ++m) {
    const double d2 = std::log(static_cast<double>(counts[m + 1])) - 2.0 * std::log(static_cast<double>(counts[m])) +
                      std::log(static_cast<double>(counts[m - 1]));
    if (d2 > 1e-12) out.push_back(static_cast<int>(m));
  }
  return out;
}

Degeneracy degeneracy_report(int sites) {
  if (sites < 1) throw std::out_of_range("degeneracy needs L >= 1");
  const int n = sites - 1;
  Degeneracy out{binomial(n, n / 2), {}};
  if (n % 2 != 0) {
    out.diagnostic = "L - 1 = " + std::to_string(n) + " is odd; used C(" + std::to_string(n) + ", " +
                     std::to_string(n / 2) + ")";
  }
  return out;
}

std::uint64_t degeneracy(int sites) { return degeneracy_report(sites).value; }

double thermal_entropy(int sites) { return (sites - 1) * std::log(2.0); }

ThermalStateSpec ThermalStateSpec::from_pairs(
    const std::vector<std::pair<std::optional<Complex>, std::optional<Complex>>>& pairs, double theta) {
  ThermalStateSpec spec;
  spec.theta = theta;
  int y = 1;
  for (const auto& [lambda, lambda_tilde] : pairs) {
    if (lambda) spec.factors.push_back({y, FactorKind::canonical, *lambda});
    if (lambda_tilde) spec.factors.push_back({y + 1, FactorKind::complementary, *lambda_tilde});
    y += 2;
  }
  return spec;
}

ThermalStateSpec random_thermal_spec(int max_y, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> small(0.0, 0.3), large(1.5, 3.0);
  ThermalStateSpec spec;
  for (int y = 1; y + 1 <= max_y; y += 2) {
    spec.factors.push_back({y, FactorKind::canonical, Complex{small(rng)}});
    spec.factors.push_back({y + 1, FactorKind::complementary, Complex{large(rng)}});
  }
  return spec;
}

StabilizerPair stabilizer_op(int sites, const std::vector<int>& modes, double theta) {
  require_modes(sites, modes);
  LinearOp b = LinearOp::zero(sites);
  for (int y : modes) b = b + (y % 2 == 1 ? mode_annihilate(sites, y, theta) : mode_create(sites, y, theta));
  return {b + b.adjoint(), b};
}

ThermalReport build_thermal_state(const ThermalStateSpec& spec, int sites) {
  ThermalReport rep{qutrit_vacuum(sites), {}, {}};
  std::set<int> modes;
  for (const auto& f : spec.factors) {
    if (f.y < 1 || f.y > sites - 1) throw std::out_of_range("thermal factor y outside 1..L-1");
    modes.insert(f.y);
    FactorReport fr{f, 0.0};
    if (f.kind == FactorKind::canonical) {
      fr.tail_weight = poisson_tail(std::norm(f.value), max_packings(sites, f.y));
      if (fr.tail_weight > spec.max_tail) {
        throw std::domain_error("thermal factor y = " + std::to_string(f.y) + " drops tail weight " +
                                std::to_string(fr.tail_weight) + " > " + std::to_string(spec.max_tail));
      }
    }
    rep.factors.push_back(fr);
  }
  rep.modes.assign(modes.begin(), modes.end());

  rep.state = assemble(spec, sites, spec.factors);
  if (spec.factors.size() > 1) {
    std::vector<ThermalFactor> reversed(spec.factors.rbegin(), spec.factors.rend());
    rep.reorder_overlap = rep.state.inner(assemble(spec, sites, reversed));
  }
  if (!rep.modes.empty()) {
    const auto s = stabilizer_op(sites, rep.modes, spec.theta).s;
    const ChainState image = s(rep.state);
    rep.stabilizer_mean = rep.state.inner(image).real();
    rep.stabilizer_residual = (image - rep.stabilizer_mean * rep.state).norm();
  }
  return rep;
}

CommutatorReport stabilizer_commutator(int sites, const std::vector<int>& modes, double theta) {
  const auto [s, b] = stabilizer_op(sites, modes, theta);
  const auto bd = b.adjoint();
  const auto raw = commutator(b, bd);
  CommutatorReport rep{sites, modes, 0, 0.0, {}};
  for (int y : modes) rep.ideal_value += y % 2 == 1 ? 1 : -1;
  const auto comm = raw - Complex{static_cast<double>(rep.ideal_value)} * LinearOp::identity(sites);
  const auto vac = qutrit_vacuum(sites);
  rep.vacuum_residual = comm(vac).norm();
  rep.records.push_back({"vacuum", rep.vacuum_residual});
  for (int y : modes) {
    const auto probe = mode_create(sites, y, theta)(vac);
    if (probe.norm_squared() == 0.0) continue;
    rep.records.push_back({"b^dag_" + std::to_string(y) + "|o>", comm(probe.normalized()).norm()});
  }
  const auto one = bd(vac);
  if (one.norm_squared() > 0.0) {
    rep.records.push_back({"B^dag|o>", comm(one.normalized()).norm()});
    const auto two = bd(one);
    if (two.norm_squared() > 0.0) rep.records.push_back({"B^dag B^dag|o>", comm(two.normalized()).norm()});
  }
  return rep;
}

}  // namespace ternary
