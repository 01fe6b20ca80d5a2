// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fission.hpp
 * @brief Chain-level check of exciton fission: a y = 3 exciton injected into
 *        the short-coherence thermal state |lambda_tilde_1, lambda_2) regroups
 *        into two y = 2 excitons.
 */

#pragma once

#include <optional>
#include <string>

#include "ternary/chain_state.hpp"
#include "ternary/moment_engine.hpp"

namespace ternary {

struct FissionActionReport {
  int sites = 0;
  int r = 0;  ///< hole site of the injected a^dag_{r+3,r}
  double lambda_tilde_1 = 0.0;
  double lambda_2 = 0.0;
  double background_tail = 0.0;  ///< Poisson tail of the lambda_2 factor

  ChainState post{1};       ///< a^dag_{r+3,r} (-b^dag_1/lambda_tilde_1)|lambda_tilde_1, lambda_2)
  double post_norm = 0.0;

  /// |<target|post>|^2 / (||target||^2 ||post||^2) with
  /// target = a^dag_{r+2,r} a^dag_{r+3,r+1}|lambda_tilde_1, lambda_2).
  double regrouped_fraction = 0.0;
  /// Weight fraction of post with sites r..r+3 reading (-, -, +, +).
  double pattern_fraction = 0.0;
  std::string dominant_pattern;  ///< most weighted window pattern, site r first

  Complex coefficient{};              ///< <target|post>/<target|target>
  double predicted_magnitude = 0.0;   ///< zeta_1(m = 1)/|lambda_tilde_1|

  /// Distance y carrying the most disjoint (-, +) pairs in the dominant
  /// window, and that number of pairs.
  int emergent_y = 0;
  int emergent_count = 0;

  /// ||(b^dag_1 + lambda_tilde_1)|bg>|| for the normalized background: how far the finite background
  /// is from the b^dag_1 eigenrelation used in the substitution.
  double eigen_residual = 0.0;
  /// |<direct|post>|^2 of normalized a^dag_{r+3,r}|bg> and post.
  double substitution_overlap = 0.0;

  FissionEnergy energy;
};

/// Runs the check on L sites. r defaults to the central window L/2 - 1.
/// Throws std::domain_error if the lambda_2 factor fails its tail certificate.
FissionActionReport fission_action_check(int sites, double lambda_tilde_1, double lambda_2,
                                         std::optional<int> r = std::nullopt, double max_tail = 1e-4);

}  // namespace ternary
