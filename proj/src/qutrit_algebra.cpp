// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/qutrit_algebra.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ternary/fock_space.hpp"

namespace ternary {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

LinearOp build_fg(int sites, int site, FG which) {
  const bool dag = which == FG::f_dag || which == FG::g_dag;
  const Ladder kind = dag ? Ladder::create : Ladder::annihilate;
  const LinearOp c = build_mode_op(sites, kind, Species::c, site);
  const LinearOp d = build_mode_op(sites, kind, Species::d, site);
  const bool is_f = which == FG::f || which == FG::f_dag;
  LinearOp out = is_f ? Complex{kInvSqrt2} * (c + d) : Complex{kInvSqrt2} * (c - d);
  static constexpr const char* kNames[] = {"f", "g", "f^dag", "g^dag"};
  return LinearOp(
      sites, [out](const ChainState& psi) {
        auto r = out(psi);
        r.prune();
        return r;
      },
      [adj = out.adjoint()](const ChainState& psi) {
        auto r = adj(psi);
        r.prune();
        return r;
      },
      std::string(kNames[static_cast<int>(which)]) + "_" + std::to_string(site));
}

LinearOp number_op(int sites, int site) {
  if (site < 1 || site > sites) throw std::out_of_range("site outside chain");
  return LinearOp::diagonal(
      sites,
      [site](FockBasisState s) {
        const unsigned c = s.site_content(site);
        return Complex{static_cast<double>(std::popcount(c)) - 1.0};
      },
      "n_" + std::to_string(site));
}

LinearOp total_number_op(int sites) {
  return LinearOp::diagonal(
      sites,
      [](FockBasisState s) { return Complex{static_cast<double>(std::popcount(s.occ))} ; },
      "N")
      - Complex{static_cast<double>(sites)} * LinearOp::identity(sites);
}

LinearOp parity_op(int sites, int site) {
  if (site < 1 || site > sites) throw std::out_of_range("site outside chain");
  return LinearOp::diagonal(
      sites,
      [site](FockBasisState s) {
        const unsigned c = s.site_content(site);
        return Complex{c == content::kPlus || c == content::kMinus ? -1.0 : 1.0};
      },
      "P_" + std::to_string(site));
}

LinearOp gamma_op(int sites, int site) {
  const auto f = build_fg(sites, site, FG::f);
  const auto g = build_fg(sites, site, FG::g);
  const auto fd = build_fg(sites, site, FG::f_dag);
  const auto gd = build_fg(sites, site, FG::g_dag);
  return Complex{0.0, 1.0} * (f * g - gd * fd);
}

LinearOp bogoliubov(double theta, int sites, int site) {
  return rotation_exp(gamma_op(sites, site), theta);
}

LinearOp pair_raise_lower(int sites, int site, PairAction which) {
  if (which == PairAction::raise) return build_fg(sites, site, FG::g_dag) * build_fg(sites, site, FG::f_dag);
  return build_fg(sites, site, FG::f) * build_fg(sites, site, FG::g);
}

ChainState thermal_excited_state(double alpha, int sites, int site) {
  if (!std::isfinite(alpha)) throw std::domain_error("alpha must be finite");
  if (site < 1 || site > sites) throw std::out_of_range("site outside chain");
  std::string minus(static_cast<std::size_t>(sites), 'o');
  std::string plus = minus;
  minus[static_cast<std::size_t>(sites - site)] = '-';
  plus[static_cast<std::size_t>(sites - site)] = '+';
  // Weights e^(+-a/2)/sqrt(2 cosh a), written to stay finite for large |a|.
  const double a = std::abs(alpha);
  const double big = 1.0 / std::sqrt(1.0 + std::exp(-2.0 * a));
  const double small = std::exp(-a) * big;
  const double wm = alpha >= 0 ? big : small;
  const double wp = alpha >= 0 ? small : big;
  ChainState out = Complex{wm} * product_state(minus);
  out += Complex{wp} * product_state(plus);
  return out;
}

double fermi_dirac(double alpha) {
  if (alpha > 0) {
    const double e = std::exp(-2.0 * alpha);
    return e / (1.0 + e);
  }
  return 1.0 / (std::exp(2.0 * alpha) + 1.0);
}

double alpha_to_theta(double alpha) { return std::asin(std::sqrt(fermi_dirac(alpha))); }

double theta_to_alpha(double theta) {
  if (!(theta > 0.0 && theta < M_PI / 2)) throw std::domain_error("theta must lie in (0, pi/2)");
  return std::log(std::cos(theta) / std::sin(theta));
}

}  // namespace ternary
