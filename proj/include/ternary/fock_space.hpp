// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock_space.hpp
 * @brief Jordan-Wigner mode operators, the balanced-ternary site basis and
 *        projection onto the qutrit subspace.
 *
 * Sign convention. Mode operators carry the Jordan-Wigner sign
 * (-1)^(occupied modes preceding the target) in the order
 * (c_1, d_1, ..., c_L, d_L). Product kets are written with the highest site
 * first, |s_L ... s_1>, and are defined as
 *
 *     |s_L ... s_1> = O_L(s_L) ... O_1(s_1) |0>,
 *
 * with O(+) = c^dag, O(-) = d, O(o) = (1 + c^dag d)/sqrt2,
 * O(p) = (1 - c^dag d)/sqrt2 and O(0) = 1 acting on the closed-shell
 * reference |0> (every d occupied). In this frame a single-site creation at
 * site mu picks up (-1)^k with k the number of charged sites written in front
 * of it (higher site index), and the exciton creator acts with sign +1 on
 * every background.
 */

#pragma once

#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ternary/chain_state.hpp"
#include "ternary/linear_op.hpp"

namespace ternary {

enum class Ladder { create, annihilate };

/// Per-site basis label. Plus/Vacuum/Minus span the qutrit; VacuumPrime is the
/// screened partner of Vacuum; Reference is the closed-shell (0, 1) site.
enum class SiteLabel { plus, vacuum, minus, vacuum_prime, reference };

char to_char(SiteLabel label);
SiteLabel site_label_from_char(char ch);

/// Parses ket text, highest site first: "+o-" is site 3 = +, site 2 = o, site 1 = -.
std::vector<SiteLabel> parse_ket(std::string_view text);
std::string format_ket(const std::vector<SiteLabel>& labels_high_first);

/// c, c^dag, d or d^dag on a 1-based site.
LinearOp build_mode_op(int sites, Ladder kind, Species species, int site);

/// (-1)^{sum over charged sites p of (# neutral sites below p)}: the phase that
/// relates a product ket in the convention above to its occupation pattern.
int convention_sign(FockBasisState s, int sites);

ChainState product_state(const std::vector<SiteLabel>& labels_high_first);
ChainState product_state(std::string_view ket);

/// Every site at (0, 1).
ChainState closed_shell_reference(int sites);

/// Every site in |o>: the exciton vacuum of the chain.
ChainState qutrit_vacuum(int sites);

struct ProjectionResult {
  ChainState state;
  double removed_weight = 0.0;
};

/// Projects every neutral site onto |o>, discarding |o'> components.
ProjectionResult qutrit_project(const ChainState& psi);

/// Squared norm of psi restricted to the sector where every site is +, o or -.
double qutrit_weight(const ChainState& psi);

/// Decomposition of psi in the per-site {+, o, -, p} product basis. Keys are
/// ket strings, highest site first.
std::map<std::string, Complex> label_decomposition(const ChainState& psi);

class NonIntegerSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight of psi in each eigenvalue sector of a Hermitian observable with
/// integer spectrum on the Krylov space of psi. Throws NonIntegerSpectrum.
std::map<int, double> sector_decompose(const ChainState& psi, const LinearOp& observable);

/// Random normalised state with the given number of occupation components.
ChainState random_state(int sites, std::mt19937_64& rng, std::size_t components);

/// Random normalised superposition of qutrit product kets.
ChainState random_qutrit_state(int sites, std::mt19937_64& rng, std::size_t components);

}  // namespace ternary
