// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/exciton_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ternary/fock_space.hpp"
#include "ternary/packing.hpp"
#include "ternary/qutrit_algebra.hpp"

namespace ternary {

namespace {

using FP = FermionPolynomial;

void require_index(int sites, ExcitonIndex idx) {
  if (!(1 <= idx.nu && idx.nu < idx.mu && idx.mu <= sites)) {
    throw std::out_of_range("exciton index (" + std::to_string(idx.mu) + ", " + std::to_string(idx.nu) +
                            ") invalid on a chain of " + std::to_string(sites) + " sites");
  }
}

void require_mode(int sites, int y) {
  if (y < 1 || y > sites - 1) {
    throw std::out_of_range("mode y = " + std::to_string(y) + " outside [1, " + std::to_string(sites - 1) + "]");
  }
}

constexpr bool charged(unsigned c) { return c == content::kPlus || c == content::kMinus; }

double string_sign(FockBasisState s, int nu, int mu) {
  int k = 0;
  for (int d = nu + 1; d < mu; ++d) k += charged(s.site_content(d));
  return (k & 1) ? -1.0 : 1.0;
}

/// Applies a two-site polynomial dressed by the string between nu and mu.
ChainState apply_with_string(const FP& p, int nu, int mu, const ChainState& psi) {
  ChainState raw(psi.sites());
  for (const auto& [occ, a] : psi.terms()) p.apply(FockBasisState{occ}, a, raw);
  ChainState out(psi.sites());
  for (const auto& [occ, a] : raw.terms()) out.add(FockBasisState{occ}, string_sign(FockBasisState{occ}, nu, mu) * a);
  out.prune();
  return out;
}

std::vector<char> labels_low_first(const std::string& ket) { return {ket.rbegin(), ket.rend()}; }

double poisson_tail(double x, int m_max) {
  if (x == 0.0) return 0.0;
  // Sum the terms beyond the ceiling directly to avoid cancellation.
  double term = std::exp(-x);
  for (int m = 1; m <= m_max; ++m) term *= x / m;
  double tail = 0.0;
  for (int m = m_max + 1; m < m_max + 400; ++m) {
    term *= x / m;
    tail += term;
    if (term < 1e-300 || term < tail * 1e-17) break;
  }
  return tail;
}

}  // namespace

LinearOp string_op(int sites, int nu, int mu) {
  if (!(1 <= nu && nu < mu && mu <= sites)) throw std::out_of_range("string endpoints invalid");
  return LinearOp::diagonal(
      sites, [nu, mu](FockBasisState s) { return Complex{string_sign(s, nu, mu)}; },
      "xi_" + std::to_string(nu) + "," + std::to_string(mu));
}

FermionPolynomial exciton_create_poly(ExcitonIndex idx) {
  const int mu = idx.mu, nu = idx.nu;
  const FP electron = FP::g(mu, true) * FP::f(mu, true) * FP::f(mu, false);
  const FP hole = FP::f(nu, false) * FP::g(nu, false) * FP::g(nu, true);
  return electron * hole;
}

FermionPolynomial current_kernel_poly(int mu, int nu) {
  return FP::f(mu, false) * FP::g(mu, false) * FP::g(nu, true) * FP::f(nu, true);
}

LinearOp exciton_create(int sites, ExcitonIndex idx) {
  require_index(sites, idx);
  const FP p = exciton_create_poly(idx);
  const FP q = p.adjoint();
  const int mu = idx.mu, nu = idx.nu;
  const std::string tag = std::to_string(mu) + "," + std::to_string(nu);
  return LinearOp(
      sites, [p, nu, mu](const ChainState& psi) { return apply_with_string(p, nu, mu, psi); },
      [q, nu, mu](const ChainState& psi) { return apply_with_string(q, nu, mu, psi); }, "a^dag_" + tag);
}

LinearOp exciton_annihilate(int sites, ExcitonIndex idx) { return exciton_create(sites, idx).adjoint(); }

LinearOp exciton_number(int sites, ExcitonIndex idx) {
  require_index(sites, idx);
  return LinearOp::diagonal(
      sites,
      [idx](FockBasisState s) {
        return Complex{s.site_content(idx.mu) == content::kPlus && s.site_content(idx.nu) == content::kMinus ? 1.0
                                                                                                          : 0.0};
      },
      "m_" + std::to_string(idx.mu) + "," + std::to_string(idx.nu));
}

LinearOp current_op(int sites, int mu, int nu, double phi) {
  if (mu < 1 || nu < 1 || mu > sites || nu > sites || mu == nu) throw std::out_of_range("current sites invalid");
  const FP k = current_kernel_poly(mu, nu);
  const Complex e = std::polar(1.0, phi);
  const FP j = Complex{0.0, -1.0} * (e * k - std::conj(e) * k.adjoint());
  return j.to_op(sites, "J_" + std::to_string(mu) + "," + std::to_string(nu));
}

LinearOp polarization_rotation(int sites, int mu, int nu, double theta) {
  return rotation_exp(current_op(sites, mu, nu, 0.0), theta);
}

LinearOp hopping_op(int sites, int mu_to, int mu_from) {
  if (mu_to < 1 || mu_from < 1 || mu_to > sites || mu_from > sites || mu_to == mu_from) {
    throw std::out_of_range("hopping sites invalid");
  }
  const FP arrive = FP::g(mu_to, true) * FP::f(mu_to, true) * FP::f(mu_to, false);
  const FP leave = FP::f(mu_from, true) * FP::f(mu_from, false) * FP::g(mu_from, false);
  return (arrive * leave).to_op(sites, "h_" + std::to_string(mu_to) + "," + std::to_string(mu_from));
}

int exciton_sector_count(FockBasisState s, int sites, int y) {
  int count = 0;
  for (int start = 1; start <= y && start <= sites; ++start) {
    // Maximum matching on the path start, start + y, ...: greedy from the low end.
    int prev = -1;
    for (int p = start; p <= sites; p += y) {
      const unsigned c = s.site_content(p);
      if (prev >= 0 && charged(c) && charged(static_cast<unsigned>(prev)) && c != static_cast<unsigned>(prev)) {
        ++count;
        prev = -1;
      } else {
        prev = static_cast<int>(c);
      }
    }
  }
  return count;
}

LinearOp mode_number_op(int sites, int y) {
  require_mode(sites, y);
  return LinearOp::diagonal(
      sites,
      [sites, y](FockBasisState s) {
        int m = 0;
        for (int nu = 1; nu + y <= sites; ++nu) {
          m += s.site_content(nu + y) == content::kPlus && s.site_content(nu) == content::kMinus;
        }
        return Complex{static_cast<double>(m)};
      },
      "m_y" + std::to_string(y));
}

double zeta(int sites, int y, int m) {
  if (m <= 0) return 0.0;
  const int den = sites - y - 2 * (m - 1);
  return 1.0 / std::sqrt(static_cast<double>(den > 0 ? den : 1));
}

namespace {

ChainState scale_by_zeta(const ChainState& psi, int sites, int y) {
  ChainState out(psi.sites());
  for (const auto& [occ, a] : psi.terms()) {
    const double z = zeta(sites, y, exciton_sector_count(FockBasisState{occ}, sites, y));
    if (z != 0.0) out.add(FockBasisState{occ}, z * a);
  }
  return out;
}

struct Placement {
  FP create;
  FP annihilate;
  int mu;
  int nu;
  std::optional<LinearOp> rotation;
};

std::vector<Placement> placements(int sites, int y, double theta) {
  std::vector<Placement> out;
  for (int nu = 1; nu + y <= sites; ++nu) {
    const int mu = nu + y;
    const FP p = exciton_create_poly({mu, nu});
    std::optional<LinearOp> rot;
    if (theta != 0.0) rot = polarization_rotation(sites, mu, nu, theta);
    out.push_back({p, p.adjoint(), mu, nu, rot});
  }
  return out;
}

}  // namespace

LinearOp mode_create(int sites, int y, double theta) {
  require_mode(sites, y);
  auto pl = std::make_shared<const std::vector<Placement>>(placements(sites, y, theta));
  auto forward = [pl, sites, y](const ChainState& psi) {
    ChainState raw(psi.sites());
    for (const auto& p : *pl) {
      ChainState term = apply_with_string(p.create, p.nu, p.mu, psi);
      if (p.rotation) term = (*p.rotation)(term);
      raw += term;
    }
    auto out = scale_by_zeta(raw, sites, y);
    out.prune();
    return out;
  };
  auto adjoint = [pl, sites, y](const ChainState& psi) {
    const ChainState scaled = scale_by_zeta(psi, sites, y);
    ChainState out(psi.sites());
    for (const auto& p : *pl) {
      const ChainState rotated = p.rotation ? p.rotation->adjoint()(scaled) : scaled;
      out += apply_with_string(p.annihilate, p.nu, p.mu, rotated);
    }
    out.prune();
    return out;
  };
  return LinearOp(sites, forward, adjoint, "b^dag_" + std::to_string(y));
}

LinearOp mode_annihilate(int sites, int y, double theta) { return mode_create(sites, y, theta).adjoint(); }

FockStateResult chain_fock_state(int y, int m, int sites, double theta) {
  require_mode(sites, y);
  if (m < 0) throw std::invalid_argument("exciton count must be nonnegative");
  FockStateResult out{ChainState(sites), 0.0, {}};
  const int ceiling = max_packings(sites, y);
  if (m > ceiling) {
    out.diagnostic = "m = " + std::to_string(m) + " exceeds the packing ceiling " + std::to_string(ceiling) +
                     " for L = " + std::to_string(sites) + ", y = " + std::to_string(y);
    return out;
  }
  const auto bd = mode_create(sites, y, theta);
  ChainState psi = qutrit_vacuum(sites);
  double fact = 1.0;
  for (int k = 1; k <= m; ++k) {
    psi = bd(psi);
    fact *= k;
  }
  out.raw_norm = psi.norm() / std::sqrt(fact);
  out.state = psi.normalized();
  return out;
}

CoherentState chain_coherent_state(int y, Complex lambda, int sites, double theta, double max_tail) {
  require_mode(sites, y);
  CoherentState out{qutrit_vacuum(sites), 0.0, max_packings(sites, y)};
  const double x = std::norm(lambda);
  out.tail_weight = poisson_tail(x, out.m_max);
  if (out.tail_weight > max_tail) {
    throw std::domain_error("coherent state with |lambda|^2 = " + std::to_string(x) + " on L = " +
                            std::to_string(sites) + ", y = " + std::to_string(y) + " drops tail weight " +
                            std::to_string(out.tail_weight) + " > " + std::to_string(max_tail) +
                            "; the chain is too short for this lambda");
  }
  if (lambda == Complex{}) return out;
  const auto bd = mode_create(sites, y, theta);
  ChainState term = out.state;
  for (int k = 1; k <= out.m_max; ++k) {
    term = bd(term);
    term *= lambda / static_cast<double>(k);
    out.state += term;
  }
  out.state.prune();
  out.state = out.state.normalized();
  return out;
}

ChainState fully_occupied_state(int y, int sites, bool uniform) {
  require_mode(sites, y);
  auto config = [sites, y](const std::vector<int>& holes) {
    std::string ket(static_cast<std::size_t>(sites), 'o');
    for (int nu : holes) {
      ket[static_cast<std::size_t>(sites - nu)] = '-';
      ket[static_cast<std::size_t>(sites - nu - y)] = '+';
    }
    return product_state(ket);
  };
  if (!uniform) return config(greedy_packing(sites, y));

  const int target = max_packings(sites, y);
  ChainState out(sites);
  std::vector<int> holes;
  std::vector<bool> used(static_cast<std::size_t>(sites) + 1, false);
  auto recurse = [&](auto&& self, int from) -> void {
    if (static_cast<int>(holes.size()) == target) {
      out += config(holes);
      return;
    }
    for (int nu = from; nu + y <= sites; ++nu) {
      if (used[nu] || used[nu + y]) continue;
      used[nu] = used[nu + y] = true;
      holes.push_back(nu);
      self(self, nu + 1);
      holes.pop_back();
      used[nu] = used[nu + y] = false;
    }
  };
  recurse(recurse, 1);
  return out.normalized();
}

CoherentState complementary_coherent_state(int y, Complex lambda_tilde, int sites, double theta, bool uniform) {
  CoherentState out{fully_occupied_state(y, sites, uniform), 0.0, max_packings(sites, y)};
  if (lambda_tilde == Complex{}) return out;
  const auto b = mode_annihilate(sites, y, theta);
  ChainState term = out.state;
  for (int k = 1; k <= out.m_max; ++k) {
    term = b(term);
    term *= lambda_tilde / static_cast<double>(k);
    out.state += term;
  }
  out.state.prune();
  out.state = out.state.normalized();
  return out;
}

std::vector<ResidualRecord> injection_check(int r, int y, double lambda, int sites, double max_tail) {
  if (r < 1 || r + y > sites) throw std::out_of_range("injection needs 1 <= r and r + y <= L");
  std::vector<ResidualRecord> out;
  const auto coh = chain_coherent_state(y, lambda, sites, 0.0, max_tail);
  const auto fd_r = build_fg(sites, r, FG::f_dag);
  const auto f_r = build_fg(sites, r, FG::f);
  const auto gd_ry = build_fg(sites, r + y, FG::g_dag);
  const auto g_ry = build_fg(sites, r + y, FG::g);
  out.push_back({"f^dag_r|l) = -l g^dag_{r+y}|l)", sites, y, lambda,
                 (fd_r(coh.state) + lambda * gd_ry(coh.state)).norm(), coh.tail_weight});
  out.push_back({"g_{r+y}|l) = l f_r|l)", sites, y, lambda, (g_ry(coh.state) - lambda * f_r(coh.state)).norm(),
                 coh.tail_weight});

  const auto vac = qutrit_vacuum(sites);
  const auto pair = exciton_create(sites, {r + y, r})(vac);
  out.push_back({"f^dag_nu a^dag_{mu,nu}|o> = -g^dag_mu|o>", sites, y, 0.0, (fd_r(pair) + gd_ry(vac)).norm(), 0.0});
  out.push_back({"g_mu a^dag_{mu,nu}|o> = f_nu|o>", sites, y, 0.0, (g_ry(pair) - f_r(vac)).norm(), 0.0});
  return out;
}

DiradicalReport diradical_generate(int r, double theta, int y, Complex lambda, int sites, double max_tail) {
  require_mode(sites, y);
  if (r < 1 || r > sites) throw std::out_of_range("diradical site outside chain");
  const auto coh = chain_coherent_state(y, lambda, sites, 0.0, max_tail);
  DiradicalReport rep{bogoliubov(theta, sites, r)(coh.state)};
  rep.tail_weight = coh.tail_weight;
  rep.pp_available = r + y <= sites;
  rep.mm_available = r - y >= 1;
  for (const auto& [ket, amp] : label_decomposition(rep.state)) {
    const auto lab = labels_low_first(ket);
    auto at = [&](int p) { return (p >= 1 && p <= sites) ? lab[static_cast<std::size_t>(p - 1)] : '\0'; };
    const double w = std::norm(amp);
    const char c = at(r);
    if (c == '+' && at(r + y) == '+') rep.pp_weight += w;
    else if (c == '-' && at(r - y) == '-') rep.mm_weight += w;
    else if ((c == '-' && at(r + y) == '+') || (c == '+' && at(r - y) == '-')) rep.paired_weight += w;
    else if (c == 'o') rep.vacuum_weight += w;
    else rep.other_weight += w;
  }
  return rep;
}

RegionReport electron_hole_rich_regions(int y, int sites, double theta) {
  const auto psi = mode_create(sites, y, theta)(qutrit_vacuum(sites));
  std::vector<bool> plus(static_cast<std::size_t>(sites) + 1, false), minus(plus);
  for (const auto& [ket, amp] : label_decomposition(psi)) {
    const auto lab = labels_low_first(ket);
    for (int p = 1; p <= sites; ++p) {
      plus[p] = plus[p] || lab[p - 1] == '+';
      minus[p] = minus[p] || lab[p - 1] == '-';
    }
  }
  RegionReport rep;
  for (int p = 1; p <= sites; ++p) {
    if (plus[p] && minus[p]) rep.mixed.push_back(p);
    else if (plus[p]) rep.electron_only.push_back(p);
    else if (minus[p]) rep.hole_only.push_back(p);
    else rep.untouched.push_back(p);
  }
  return rep;
}

}  // namespace ternary
