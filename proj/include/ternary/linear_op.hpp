// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file linear_op.hpp
 * @brief Matrix-free operators on ChainStates.
 *
 * A LinearOp carries its forward action and the action of its adjoint, so
 * adjoints, products and sums compose without ever forming a matrix. Dense
 * matrices are available for short chains as an oracle path only.
 */

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "ternary/chain_state.hpp"

namespace ternary {

/// Largest chain for which dense() is permitted.
inline constexpr int kMaxDenseSites = 4;

class LinearOp {
 public:
  using Action = std::function<ChainState(const ChainState&)>;
  using DiagonalEntry = std::function<Complex(FockBasisState)>;

  LinearOp(int sites, Action forward, Action adjoint, std::string label = {});

  static LinearOp identity(int sites);
  static LinearOp zero(int sites);

  /// Operator diagonal in the occupation basis; the adjoint conjugates entries.
  static LinearOp diagonal(int sites, DiagonalEntry entry, std::string label = {});

  int sites() const { return impl_->sites; }
  const std::string& label() const { return impl_->label; }

  ChainState operator()(const ChainState& psi) const;

  LinearOp adjoint() const;

  /// Product: (A * B)(psi) = A(B(psi)).
  LinearOp operator*(const LinearOp& rhs) const;
  LinearOp operator+(const LinearOp& rhs) const;
  LinearOp operator-(const LinearOp& rhs) const;
  friend LinearOp operator*(Complex s, const LinearOp& op);

  /// Full matrix over all 4^L occupation states, indexed by occupation value.
  Eigen::MatrixXcd dense() const;

 private:
  struct Impl {
    int sites;
    Action forward;
    Action adjoint;
    std::string label;
  };
  explicit LinearOp(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

LinearOp commutator(const LinearOp& a, const LinearOp& b);
LinearOp anticommutator(const LinearOp& a, const LinearOp& b);

/// exp(i theta G) for generators with G^3 = G (projector-valued G^2):
/// 1 + i sin(theta) G + (cos(theta) - 1) G^2.
LinearOp rotation_exp(const LinearOp& generator, double theta);

/// exp(A)|psi> by Taylor summation until the next term falls below tol.
ChainState taylor_exp_apply(const LinearOp& a, const ChainState& psi, double tol = 1e-17,
                            int max_terms = 200);

/// exp(A) as a LinearOp built from Taylor summation (adjoint via exp(A^dag)).
LinearOp taylor_exp(const LinearOp& a);

/// All 4^L occupation states of a chain.
std::vector<FockBasisState> all_basis_states(int sites);

/// max over the given basis states of ||A|s> - B|s>||.
double max_action_difference(const LinearOp& a, const LinearOp& b,
                             std::span<const FockBasisState> states);

/// max over the given states of ||A|psi> - B|psi>||.
double max_action_difference(const LinearOp& a, const LinearOp& b,
                             std::span<const ChainState> states);

}  // namespace ternary
