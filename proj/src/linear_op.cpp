// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/linear_op.hpp"

#include <cmath>
#include <stdexcept>

namespace ternary {

namespace {

void require_same_chain(const LinearOp& a, const LinearOp& b) {
  if (a.sites() != b.sites()) throw std::invalid_argument("operators act on different chains");
}

}  // namespace

LinearOp::LinearOp(int sites, Action forward, Action adjoint, std::string label)
    : impl_(std::make_shared<const Impl>(
          Impl{sites, std::move(forward), std::move(adjoint), std::move(label)})) {}

LinearOp LinearOp::identity(int sites) {
  auto id = [](const ChainState& psi) { return psi; };
  return LinearOp(sites, id, id, "1");
}

LinearOp LinearOp::zero(int sites) {
  auto z = [sites](const ChainState&) { return ChainState(sites); };
  return LinearOp(sites, z, z, "0");
}

LinearOp LinearOp::diagonal(int sites, DiagonalEntry entry, std::string label) {
  auto fwd = [entry](const ChainState& psi) {
    ChainState out(psi.sites());
    for (const auto& [occ, a] : psi.terms()) out.add(FockBasisState{occ}, entry(FockBasisState{occ}) * a);
    out.prune();
    return out;
  };
  auto adj = [entry](const ChainState& psi) {
    ChainState out(psi.sites());
    for (const auto& [occ, a] : psi.terms()) {
      out.add(FockBasisState{occ}, std::conj(entry(FockBasisState{occ})) * a);
    }
    out.prune();
    return out;
  };
  return LinearOp(sites, fwd, adj, std::move(label));
}

ChainState LinearOp::operator()(const ChainState& psi) const {
  if (psi.sites() != impl_->sites) throw std::invalid_argument("state and operator chain lengths differ");
  return impl_->forward(psi);
}

LinearOp LinearOp::adjoint() const {
  return LinearOp(impl_->sites, impl_->adjoint, impl_->forward, "(" + impl_->label + ")^dag");
}

LinearOp LinearOp::operator*(const LinearOp& rhs) const {
  require_same_chain(*this, rhs);
  auto lf = impl_->forward, la = impl_->adjoint;
  auto rf = rhs.impl_->forward, ra = rhs.impl_->adjoint;
  return LinearOp(
      impl_->sites, [lf, rf](const ChainState& psi) { return lf(rf(psi)); },
      [la, ra](const ChainState& psi) { return ra(la(psi)); }, impl_->label + " " + rhs.impl_->label);
}

LinearOp LinearOp::operator+(const LinearOp& rhs) const {
  require_same_chain(*this, rhs);
  auto lf = impl_->forward, la = impl_->adjoint;
  auto rf = rhs.impl_->forward, ra = rhs.impl_->adjoint;
  auto sum = [](const auto& f, const auto& g) {
    return [f, g](const ChainState& psi) {
      ChainState out = f(psi);
      out += g(psi);
      out.prune();
      return out;
    };
  };
  return LinearOp(impl_->sites, sum(lf, rf), sum(la, ra),
                  "(" + impl_->label + " + " + rhs.impl_->label + ")");
}

LinearOp LinearOp::operator-(const LinearOp& rhs) const { return *this + Complex{-1.0} * rhs; }

LinearOp operator*(Complex s, const LinearOp& op) {
  auto f = op.impl_->forward, a = op.impl_->adjoint;
  return LinearOp(
      op.sites(), [f, s](const ChainState& psi) { return s * f(psi); },
      [a, s](const ChainState& psi) { return std::conj(s) * a(psi); }, op.label());
}

Eigen::MatrixXcd LinearOp::dense() const {
  if (sites() > kMaxDenseSites) {
    throw std::out_of_range("dense matrices are limited to chains of at most " +
                            std::to_string(kMaxDenseSites) + " sites");
  }
  const auto dim = std::size_t{1} << (2 * sites());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    auto image = (*this)(ChainState::basis(sites(), FockBasisState{col}));
    for (const auto& [row, a] : image.terms()) {
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = a;
    }
  }
  return m;
}

LinearOp commutator(const LinearOp& a, const LinearOp& b) { return a * b - b * a; }
LinearOp anticommutator(const LinearOp& a, const LinearOp& b) { return a * b + b * a; }

LinearOp rotation_exp(const LinearOp& generator, double theta) {
  const Complex s{0.0, std::sin(theta)};
  const double cm1 = std::cos(theta) - 1.0;
  return LinearOp::identity(generator.sites()) + s * generator +
         Complex{cm1} * (generator * generator);
}

ChainState taylor_exp_apply(const LinearOp& a, const ChainState& psi, double tol, int max_terms) {
  ChainState out = psi;
  ChainState term = psi;
  for (int k = 1; k <= max_terms; ++k) {
    term = a(term);
    term *= 1.0 / k;
    if (term.norm() < tol) return out;
    out += term;
  }
  throw std::runtime_error("Taylor series for exp(A) did not converge");
}

LinearOp taylor_exp(const LinearOp& a) {
  auto adj = a.adjoint();
  return LinearOp(
      a.sites(), [a](const ChainState& psi) { return taylor_exp_apply(a, psi); },
      [adj](const ChainState& psi) { return taylor_exp_apply(adj, psi); }, "exp(" + a.label() + ")");
}

std::vector<FockBasisState> all_basis_states(int sites) {
  if (sites < 1 || sites > 12) throw std::out_of_range("basis enumeration limited to 12 sites");
  const auto dim = std::uint64_t{1} << (2 * sites);
  std::vector<FockBasisState> out;
  out.reserve(dim);
  for (std::uint64_t occ = 0; occ < dim; ++occ) out.push_back(FockBasisState{occ});
  return out;
}

double max_action_difference(const LinearOp& a, const LinearOp& b,
                             std::span<const FockBasisState> states) {
  double worst = 0.0;
  for (const auto& s : states) {
    const auto psi = ChainState::basis(a.sites(), s);
    worst = std::max(worst, distance(a(psi), b(psi)));
  }
  return worst;
}

double max_action_difference(const LinearOp& a, const LinearOp& b, std::span<const ChainState> states) {
  double worst = 0.0;
  for (const auto& psi : states) worst = std::max(worst, distance(a(psi), b(psi)));
  return worst;
}

}  // namespace ternary
