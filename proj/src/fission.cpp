// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/fission.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "ternary/exciton_ops.hpp"
#include "ternary/fock_space.hpp"
#include "ternary/thermo_ensemble.hpp"

namespace ternary {

namespace {

int count_window_pairs(const std::string& window, int y) {
  std::vector<bool> used(window.size(), false);
  int count = 0;
  for (std::size_t i = 0; i + static_cast<std::size_t>(y) < window.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(y);
    if (used[i] || used[j] || window[i] != '-' || window[j] != '+') continue;
    used[i] = used[j] = true;
    ++count;
  }
  return count;
}

}  // namespace

FissionActionReport fission_action_check(int sites, double lambda_tilde_1, double lambda_2, std::optional<int> r,
                                         double max_tail) {
  FissionActionReport rep;
  rep.sites = sites;
  rep.r = r.value_or(sites / 2 - 1);
  rep.lambda_tilde_1 = lambda_tilde_1;
  rep.lambda_2 = lambda_2;
  if (rep.r < 1 || rep.r + 3 > sites) throw std::out_of_range("fission window r..r+3 must lie on the chain");
  rep.energy = fission_energy(lambda_tilde_1);

  ThermalStateSpec spec;
  spec.factors = {{1, FactorKind::complementary, Complex{lambda_tilde_1}},
                  {2, FactorKind::canonical, Complex{lambda_2}}};
  spec.max_tail = max_tail;
  const auto thermal = build_thermal_state(spec, sites);
  const ChainState& bg = thermal.state;
  rep.background_tail = thermal.factors.at(1).tail_weight;

  const auto b1d = mode_create(sites, 1);
  const ChainState b1d_bg = b1d(bg);
  rep.eigen_residual = (b1d_bg + lambda_tilde_1 * bg).norm();

  const auto inject = exciton_create(sites, {rep.r + 3, rep.r});
  rep.post = inject(Complex{-1.0 / lambda_tilde_1} * b1d_bg);
  rep.post.prune();
  rep.post_norm = rep.post.norm();
  if (rep.post_norm == 0.0) return rep;

  const ChainState target = exciton_create(sites, {rep.r + 2, rep.r})(exciton_create(sites, {rep.r + 3, rep.r + 1})(bg));
  const double target_n2 = target.norm_squared();
  if (target_n2 > 0.0) {
    const Complex ov = target.inner(rep.post);
    rep.coefficient = ov / target_n2;
    rep.regrouped_fraction = std::norm(ov) / (target_n2 * rep.post.norm_squared());
  }
  rep.predicted_magnitude = zeta(sites, 1, 1) / std::abs(lambda_tilde_1);

  std::map<std::string, double> windows;
  for (const auto& [ket, amp] : label_decomposition(rep.post)) {
    std::string w;
    for (int p = rep.r; p <= rep.r + 3; ++p) w.push_back(ket[static_cast<std::size_t>(sites - p)]);
    windows[w] += std::norm(amp);
  }
  double best = -1.0;
  for (const auto& [w, weight] : windows) {
    if (weight > best) {
      best = weight;
      rep.dominant_pattern = w;
    }
  }
  const double total = rep.post.norm_squared();
  rep.pattern_fraction = windows.contains("--++") ? windows.at("--++") / total : 0.0;
  for (int y = 1; y <= 3; ++y) {
    const int n = count_window_pairs(rep.dominant_pattern, y);
    if (n > rep.emergent_count) {
      rep.emergent_count = n;
      rep.emergent_y = y;
    }
  }

  const ChainState direct = inject(bg);
  if (direct.norm_squared() > 0.0) rep.substitution_overlap = std::norm(direct.normalized().inner(rep.post.normalized()));
  return rep;
}

}  // namespace ternary
