// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file qutrit_algebra.hpp
 * @brief Single-site balanced-ternary operators built on the fermionic modes.
 *
 * f = (c + d)/sqrt2 and g = (c - d)/sqrt2 act on one site of a chain. The
 * number operator n = f^dag f - g g^dag reads +1, 0, -1 on |+>, |o>, |->, and
 * gamma = i(f g - g^dag f^dag) generates the rotation between |-> and |+>.
 */

#pragma once

#include "ternary/chain_state.hpp"
#include "ternary/linear_op.hpp"

namespace ternary {

enum class FG { f, g, f_dag, g_dag };
enum class PairAction { raise, lower };

LinearOp build_fg(int sites, int site, FG which);

/// n = f^dag f - g g^dag on one site.
LinearOp number_op(int sites, int site);

/// Sum of number_op over every site.
LinearOp total_number_op(int sites);

/// exp(i pi n) on one site: -1 on charged sites, +1 on neutral ones.
LinearOp parity_op(int sites, int site);

/// gamma = i(f g - g^dag f^dag).
LinearOp gamma_op(int sites, int site);

/// exp(i theta gamma); exact because gamma^3 = gamma.
LinearOp bogoliubov(double theta, int sites, int site);

/// raise = g^dag f^dag, lower = f g.
LinearOp pair_raise_lower(int sites, int site, PairAction which);

/// (2 cosh a)^(-1/2) (e^(a/2)|-> + e^(-a/2)|+>) on `site`, every other site in |o>.
ChainState thermal_excited_state(double alpha, int sites = 1, int site = 1);

/// 1 / (e^(2 alpha) + 1).
double fermi_dirac(double alpha);

/// sin(theta) = (e^(2 alpha) + 1)^(-1/2), theta in (0, pi/2).
double alpha_to_theta(double alpha);
double theta_to_alpha(double theta);

}  // namespace ternary
