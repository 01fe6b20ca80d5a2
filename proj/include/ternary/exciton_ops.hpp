// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file exciton_ops.hpp
 * @brief Charge-transfer exciton operators on a chain of qutrits.
 *
 * The electron always sits at the larger site index: a^dag_{mu,nu} with
 * mu > nu turns |o_mu o_nu> into |+_mu -_nu>. Mode operators b_y^dag sum the
 * pair creators at fixed distance y = mu - nu, dressed by the polarization
 * rotation exp(i Theta J_{mu,nu}) and the sector normalization
 * zeta_y = (L - y - 2(m_y - 1))^(-1/2).
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ternary/chain_state.hpp"
#include "ternary/fermion_word.hpp"
#include "ternary/linear_op.hpp"

namespace ternary {

struct ExcitonIndex {
  int mu;  ///< electron site
  int nu;  ///< hole site
  int y() const { return mu - nu; }
};

/// prod_{delta = nu+1}^{mu-1} exp(i pi n_delta).
LinearOp string_op(int sites, int nu, int mu);

/// Composite word expansions, handy for building further operators.
FermionPolynomial exciton_create_poly(ExcitonIndex idx);
FermionPolynomial current_kernel_poly(int mu, int nu);

LinearOp exciton_create(int sites, ExcitonIndex idx);
LinearOp exciton_annihilate(int sites, ExcitonIndex idx);

/// m_{mu,nu} = a^dag a.
LinearOp exciton_number(int sites, ExcitonIndex idx);

/// J = -i(e^{i phi} f_mu g_mu g^dag_nu f^dag_nu - h.c.).
LinearOp current_op(int sites, int mu, int nu, double phi = 0.0);

/// exp(i Theta J_{mu,nu}) with phi = 0; exact because J^3 = J.
LinearOp polarization_rotation(int sites, int mu, int nu, double theta);

/// Moves an electron from mu_from to an empty site mu_to:
/// g^dag_{mu_to} f^dag_{mu_to} f_{mu_to} f^dag_{mu_from} f_{mu_from} g_{mu_from}.
LinearOp hopping_op(int sites, int mu_to, int mu_from);

/// Number of y-excitons a basis state carries: the largest set of disjoint
/// distance-y pairs with opposite charges, in either orientation.
int exciton_sector_count(FockBasisState s, int sites, int y);

/// Sum over placements of the oriented pair count (+ at mu, - at mu - y).
LinearOp mode_number_op(int sites, int y);

/// zeta_y for m_y excitons; 0 for m = 0. A nonpositive radicand is clamped to 1.
double zeta(int sites, int y, int m);

LinearOp mode_create(int sites, int y, double theta = 0.0);
LinearOp mode_annihilate(int sites, int y, double theta = 0.0);

struct FockStateResult {
  ChainState state;
  double raw_norm = 0.0;    ///< norm of (m!)^{-1/2} (b^dag)^m |o> before renormalizing
  std::string diagnostic;   ///< nonempty when m exceeds the packing ceiling
};

/// (m!)^{-1/2} (b^dag_y)^m |o>, renormalized to unit norm.
FockStateResult chain_fock_state(int y, int m, int sites, double theta = 0.0);

struct CoherentState {
  ChainState state;
  double tail_weight = 0.0;  ///< Poisson weight beyond the packing ceiling
  int m_max = 0;
};

inline constexpr double kDefaultMaxTail = 1e-6;

/// Normalized truncation of exp(lambda b^dag - |lambda|^2/2)|o>. Throws
/// std::domain_error when the truncated tail carries more than max_tail.
CoherentState chain_coherent_state(int y, Complex lambda, int sites, double theta = 0.0,
                                   double max_tail = kDefaultMaxTail);

/// Fully occupied reference |*> for mode y: the left-aligned greedy packing,
/// or the uniform superposition of all maximal packings when `uniform`.
ChainState fully_occupied_state(int y, int sites, bool uniform = false);

/// Normalized exp(lambda_tilde b_y)|*>; the series terminates at the ceiling.
CoherentState complementary_coherent_state(int y, Complex lambda_tilde, int sites, double theta = 0.0,
                                           bool uniform = false);

struct ResidualRecord {
  std::string relation;
  int sites = 0;
  int y = 0;
  double lambda = 0.0;
  double residual = 0.0;
  double tail_weight = 0.0;
};

/// ||f^dag_r|l) + l g^dag_{r+y}|l)|| and ||g_{r+y}|l) - l f_r|l)||, plus the two
/// exact vacuum seed identities for a^dag_{r+y,r} (tail weight 0).
std::vector<ResidualRecord> injection_check(int r, int y, double lambda, int sites,
                                            double max_tail = kDefaultMaxTail);

struct DiradicalReport {
  ChainState state;
  double pp_weight = 0.0;      ///< sites (r, r+y) both +
  double mm_weight = 0.0;      ///< sites (r-y, r) both -
  double paired_weight = 0.0;  ///< an original y-exciton still ends on r
  double vacuum_weight = 0.0;  ///< site r neutral
  double other_weight = 0.0;
  bool pp_available = false;
  bool mm_available = false;
  double tail_weight = 0.0;
};

/// exp(i theta gamma_r)|lambda_y) split into its diradical branches.
DiradicalReport diradical_generate(int r, double theta, int y, Complex lambda, int sites,
                                   double max_tail = kDefaultMaxTail);

struct RegionReport {
  std::vector<int> electron_only;  ///< sites that appear only as + in b^dag_y|o>
  std::vector<int> hole_only;      ///< sites that appear only as -
  std::vector<int> mixed;          ///< sites that appear as both
  std::vector<int> untouched;      ///< sites never charged
};

RegionReport electron_hole_rich_regions(int y, int sites, double theta = 0.0);

}  // namespace ternary
