// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "ternary/exciton_ops.hpp"
#include "ternary/fock_space.hpp"
#include "ternary/moment_engine.hpp"
#include "ternary/packing.hpp"
#include "ternary/qutrit_algebra.hpp"
#include "ternary/runner.hpp"
#include "ternary/thermo_ensemble.hpp"

namespace ternary {

namespace {

/// Largest chain on which identities are checked against every occupation state.
constexpr int kFullBasisSites = 5;

/// Truncation allowance for the emitted, unasserted thermal-state diagnostics.
constexpr double kReportedMaxTail = 1e-3;

/// Every qutrit product ket on the chain, highest site first.
std::vector<std::string> qutrit_kets(int sites) {
  std::vector<std::string> kets{""};
  for (int p = 0; p < sites; ++p) {
    std::vector<std::string> next;
    next.reserve(kets.size() * 3);
    for (const auto& k : kets) {
      for (char c : {'+', 'o', '-'}) next.push_back(k + c);
    }
    kets = std::move(next);
  }
  return kets;
}

/// Probe set for operator identities: every occupation state on short chains,
/// every qutrit product ket plus seeded random states on longer ones.
std::vector<ChainState> probe_states(int sites, std::mt19937_64& rng) {
  std::vector<ChainState> out;
  if (sites <= kFullBasisSites) {
    for (auto s : all_basis_states(sites)) out.push_back(ChainState::basis(sites, s));
    return out;
  }
  for (const auto& k : qutrit_kets(sites)) out.push_back(product_state(k));
  for (int i = 0; i < 16; ++i) out.push_back(random_state(sites, rng, 24));
  return out;
}

/// Packings of m disjoint pairs {i, i + y} counted by walking every subset of pairs.
std::vector<std::uint64_t> subset_packings(int sites, int y) {
  const int pairs = sites - y;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(sites / 2 + 1), 0);
  for (std::uint32_t subset = 0; subset < (1U << pairs); ++subset) {
    std::uint32_t used = 0;
    bool ok = true;
    for (int i = 0; i < pairs && ok; ++i) {
      if (!((subset >> i) & 1U)) continue;
      const std::uint32_t cover = (1U << i) | (1U << (i + y));
      ok = (used & cover) == 0;
      used |= cover;
    }
    if (ok) ++counts[static_cast<std::size_t>(std::popcount(subset))];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

std::vector<ExcitonIndex> exciton_indices(int sites) {
  std::vector<ExcitonIndex> out;
  for (int mu = 2; mu <= sites; ++mu) {
    for (int nu = 1; nu < mu; ++nu) out.push_back({mu, nu});
  }
  return out;
}

double dense_residual(const Eigen::MatrixXcd& m) { return m.norm(); }

class Suite {
 public:
  Suite(VerifyReport& report, double tolerance) : report_(report), tolerance_(tolerance) {}

  void add(std::string name, std::string relation, double residual) {
    add(std::move(name), std::move(relation), residual, tolerance_);
  }

  void add(std::string name, std::string relation, double residual, double tolerance) {
    report_.checks.push_back({std::move(name), std::move(relation), residual, tolerance,
                              std::isfinite(residual) && residual <= tolerance});
  }

 private:
  VerifyReport& report_;
  double tolerance_;
};

void site_suite(Suite& suite, const ExperimentConfig& config) {
  const auto f = build_fg(1, 1, FG::f), fd = build_fg(1, 1, FG::f_dag);
  const auto g = build_fg(1, 1, FG::g), gd = build_fg(1, 1, FG::g_dag);
  const auto ket = [](const char* s) { return product_state(s); };

  double actions = 0.0;
  const auto act = [&](const LinearOp& op, const char* in, const ChainState& out) {
    actions = std::max(actions, distance(op(ket(in)), out));
  };
  act(fd, "-", ket("o"));
  act(f, "o", ket("-"));
  act(f, "+", ket("p"));
  act(gd, "o", ket("+"));
  act(gd, "-", -1.0 * ket("p"));
  act(g, "+", ket("o"));
  act(fd * f, "+", ket("+"));
  act(fd * f, "o", ket("o"));
  act(f * fd, "-", ket("-"));
  act(gd * g, "+", ket("+"));
  act(g * gd, "o", ket("o"));
  act(g * gd, "-", ket("-"));
  suite.add("site.actions", "f, g and their adjoints on |+>, |o>, |->", actions);

  const auto id = Eigen::MatrixXcd::Identity(4, 4);
  const auto F = f.dense(), Fd = fd.dense(), G = g.dense(), Gd = gd.dense();
  const double car = std::max({dense_residual(F * Fd + Fd * F - id), dense_residual(G * Gd + Gd * G - id),
                               dense_residual(F * G + G * F), dense_residual(F * Gd + Gd * F),
                               dense_residual(Fd * Gd + Gd * Fd), dense_residual(F * F), dense_residual(Gd * Gd)});
  suite.add("site.anticommutators", "{f, f^dag} = {g, g^dag} = 1, mixed anticommutators 0", car);

  const auto n = number_op(1, 1);
  double number = dense_residual((fd * f - g * gd).dense() - n.dense());
  number = std::max(number, distance(n(ket("+")), ket("+")));
  number = std::max(number, n(ket("o")).norm());
  number = std::max(number, distance(n(ket("-")), -1.0 * ket("-")));
  number = std::max(number, dense_residual(commutator(n, fd).dense() - Fd));
  number = std::max(number, dense_residual(commutator(n, f).dense() + F));
  number = std::max(number, dense_residual(commutator(n, gd).dense() - Gd));
  number = std::max(number, dense_residual(commutator(n, g).dense() + G));
  suite.add("site.number", "n = f^dag f - g g^dag with spectrum {+1, 0, -1}; [n, f^dag] = f^dag, [n, g^dag] = g^dag",
            number);

  const auto pair_up = pair_raise_lower(1, 1, PairAction::raise);
  const auto pair_down = pair_raise_lower(1, 1, PairAction::lower);
  const double pairs = std::max({distance(pair_up(ket("-")), ket("+")), distance(pair_down(ket("+")), ket("-")),
                                 pair_up(ket("+")).norm()});
  suite.add("site.pair", "pair raise |-> -> |+>, lower |+> -> |->", pairs);

  double fd_residual = std::abs(fermi_dirac(0.0) - 0.5);
  double bogo = 0.0;
  const auto fd_f = fd * f;
  for (double a : config.alpha.values()) {
    const auto s = thermal_excited_state(a);
    fd_residual = std::max(fd_residual, std::abs(s.inner(fd_f(s)).real() - 1.0 / (std::exp(2.0 * a) + 1.0)));
    const double t = alpha_to_theta(a);
    const auto u = bogoliubov(t, 1, 1);
    bogo = std::max(bogo, dense_residual(u.dense().adjoint() * u.dense() - id));
    bogo = std::max(bogo, distance(u(ket("-")), s));
  }
  suite.add("site.fermi_dirac", "<alpha| f^dag f |alpha> = 1/(e^{2 alpha} + 1) over the alpha grid", fd_residual);
  suite.add("site.bogoliubov", "exp(i theta gamma) unitary and maps |-> to |alpha>", bogo);
}

void chain_suite(Suite& suite, const ExperimentConfig& config, std::mt19937_64& rng) {
  const int L = config.sites;
  const auto probes = probe_states(L, rng);
  std::vector<ChainState> qutrit_probes;
  for (const auto& k : qutrit_kets(L)) qutrit_probes.push_back(product_state(k));

  std::vector<LinearOp> modes_c, modes_a;
  for (int site = 1; site <= L; ++site) {
    for (Species sp : {Species::c, Species::d}) {
      modes_a.push_back(build_mode_op(L, Ladder::annihilate, sp, site));
      modes_c.push_back(build_mode_op(L, Ladder::create, sp, site));
    }
  }
  std::vector<ChainState> random_probes;
  for (int i = 0; i < 8; ++i) random_probes.push_back(random_state(L, rng, 32));
  double car = 0.0;
  const auto id = LinearOp::identity(L), zero = LinearOp::zero(L);
  for (std::size_t i = 0; i < modes_a.size(); ++i) {
    for (std::size_t j = i; j < modes_a.size(); ++j) {
      car = std::max(car, max_action_difference(anticommutator(modes_a[i], modes_c[j]), i == j ? id : zero,
                                                std::span<const ChainState>(random_probes)));
      car = std::max(car, max_action_difference(anticommutator(modes_a[i], modes_a[j]), zero,
                                                std::span<const ChainState>(random_probes)));
    }
  }
  suite.add("chain.mode_anticommutators", "Jordan-Wigner c, d modes obey canonical anticommutators", car);

  const auto indices = exciton_indices(L);
  double sign = 0.0, adjoint = 0.0, number = 0.0;
  for (const auto& idx : indices) {
    const auto ad = exciton_create(L, idx), a = exciton_annihilate(L, idx);
    for (const auto& base : qutrit_kets(L)) {
      const auto p = product_state(base);
      auto ket = base;
      const auto at = [&](int site) -> char& { return ket[ket.size() - static_cast<std::size_t>(site)]; };
      const auto out = ad(p);
      if (at(idx.mu) == 'o' && at(idx.nu) == 'o') {
        at(idx.mu) = '+';
        at(idx.nu) = '-';
        const auto target = product_state(ket);
        sign = std::max(sign, distance(out, target));
        adjoint = std::max(adjoint, distance(a(target), p));
      } else {
        sign = std::max(sign, out.norm());
      }
    }
    const auto m = ad * a;
    const auto one = ad(qutrit_vacuum(L));
    number = std::max(number, distance(m(one), one));
    number = std::max(number, max_action_difference(m, exciton_number(L, idx), std::span<const ChainState>(probes)));
  }
  suite.add("exciton.action", "a^dag_{mu nu} |..o_mu..o_nu..> = +|..+_mu..-_nu..> on every background", sign);
  suite.add("exciton.adjoint", "a_{mu nu} reverses a^dag_{mu nu}", adjoint);
  suite.add("exciton.number", "a^dag a acts as the pair number and 1 on a^dag|o>", number);

  double hard_core = 0.0;
  const auto n = total_number_op(L);
  const auto& hc_probes = L <= kFullBasisSites ? probes : random_probes;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto ai = exciton_create(L, indices[i]);
    hard_core = std::max(hard_core, max_action_difference(commutator(ai, n), zero, std::span<const ChainState>(hc_probes)));
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      const auto aj = exciton_create(L, indices[j]);
      hard_core = std::max(hard_core, max_action_difference(commutator(ai, aj), zero, std::span<const ChainState>(hc_probes)));
      hard_core = std::max(hard_core, max_action_difference(commutator(ai.adjoint(), aj.adjoint()), zero,
                                                            std::span<const ChainState>(hc_probes)));
    }
  }
  suite.add("exciton.hard_core", "[a^dag, a'^dag] = [a, a'] = 0 and [a^dag, n] = 0", hard_core);

  double stated = 0.0, plus = 0.0;
  for (const auto& [mu, nu] : indices) {
    for (const auto& [mup, nup] : indices) {
      if (nup >= mu || nu >= mup || mu == mup || nu == nup) continue;
      const auto lhs = exciton_create(L, {mu, nu}) * exciton_create(L, {mup, nup});
      const auto rhs = exciton_create(L, {mu, nup}) * exciton_create(L, {mup, nu});
      stated = std::max(stated, max_action_difference(lhs, -1.0 * rhs, std::span<const ChainState>(qutrit_probes)));
      plus = std::max(plus, max_action_difference(lhs, rhs, std::span<const ChainState>(qutrit_probes)));
    }
  }
  suite.add("exciton.regrouping", "a^dag_{mu nu} a^dag_{mu' nu'} = -a^dag_{mu nu'} a^dag_{mu' nu}", stated);
  suite.add("exciton.regrouping_plus", "a^dag_{mu nu} a^dag_{mu' nu'} = +a^dag_{mu nu'} a^dag_{mu' nu}", plus);

  double seeds = 0.0;
  for (int y = 1; y < L; ++y) {
    for (int r = 1; r + y <= L; ++r) {
      for (const auto& row : injection_check(r, y, 0.0, L)) seeds = std::max(seeds, row.residual);
    }
  }
  suite.add("exciton.injection_seeds", "vacuum seed identities of a^dag_{r+y,r}", seeds);

  double ladder = 0.0;
  const int m_top = std::min(3, max_packings(L, 1));
  const auto bd = mode_create(L, 1), b = mode_annihilate(L, 1);
  for (int m = 0; m <= m_top; ++m) {
    const auto here = chain_fock_state(1, m, L).state;
    const auto up = chain_fock_state(1, m + 1, L).state;
    ladder = std::max(ladder, distance(bd(here), std::sqrt(m + 1.0) * up));
    if (m > 0) ladder = std::max(ladder, distance(b(here), std::sqrt(double(m)) * chain_fock_state(1, m - 1, L).state));
  }
  suite.add("mode.ladder", "b^dag|m) = sqrt(m+1)|m+1), b|m) = sqrt(m)|m-1) for y = 1, m <= 3", ladder, 1e-10);
}

double coefficient_mismatch(const RationalFunction& got, const Polynomial& num, const Polynomial& den) {
  return got.num == num && got.den == den ? 0.0 : 1.0;
}

void moment_suite(Suite& suite, const ExperimentConfig& config) {
  const auto P = [](std::initializer_list<std::int64_t> c) {
    std::vector<Rational> v;
    for (auto k : c) v.emplace_back(k);
    return Polynomial(v);
  };
  suite.add("moment.excited", "excited number = (1 + 3x + x^2)/(1 + x), exact coefficients",
            coefficient_mismatch(excited_number_symbolic(), P({1, 3, 1}), P({1, 1})), 0.0);
  suite.add("moment.spin_gap", "spin gap = (x^3 - 9x^2 + 18x - 6)/(x^2 - 4x + 2), exact coefficients",
            coefficient_mismatch(spin_gap_symbolic(), P({-6, 18, -9, 1}), P({2, -4, 1})), 0.0);

  double backend = 0.0;
  for (const char* word : {"B1+ B1", "B1 B1+", "B1+ B1+ B1 B1", "B1 B1 B1+ B1+", "B1+ B1 B1+ B1"}) {
    const auto w = parse_word(word);
    for (double l : config.lambda.values()) {
      if (std::abs(l) > 1.5) continue;
      for (double phase : {0.0, 0.7}) {
        const auto lambda = std::polar(l, phase);
        const MomentSpec spec{{1, {ModeKind::canonical, lambda}}};
        backend = std::max(backend, std::abs(expect(w, spec) - numeric_single_mode_expect(w, lambda, 40)));
      }
    }
  }
  suite.add("moment.numeric_backend", "canonical moments match a ceiling-40 Fock backend for |lambda| <= 1.5",
            backend, 1e-8);

  suite.add("moment.fission_boundary", "2/x - 1 vanishes at |lambda_tilde_1| = sqrt 2",
            std::abs(fission_energy(std::sqrt(2.0)).delta));
}

void thermo_suite(Suite& suite, const ExperimentConfig& config, VerifyReport& report) {
  const int L = config.sites;
  const auto modes = config.active_modes();

  suite.add("thermo.degeneracy", "degeneracy(5) = 6", std::abs(static_cast<double>(degeneracy(5)) - 6.0), 0.0);
  suite.add("thermo.thermal_entropy", "S = (L - 1) ln 2",
            std::abs(thermal_entropy(L) - (L - 1) * std::numbers::ln2));

  double packing = 0.0;
  for (int sites = 2; sites <= std::max(L, 14); ++sites) {
    for (int y = 1; y < sites; ++y) {
      const auto walked = subset_packings(sites, y);
      const auto counted = packing_counts(sites, y);
      if (walked.size() != counted.size()) packing = std::max(packing, 1.0);
      for (std::size_t m = 0; m < std::min(walked.size(), counted.size()); ++m) {
        packing = std::max(packing, std::abs(static_cast<double>(walked[m]) - static_cast<double>(counted[m])));
      }
    }
  }
  suite.add("thermo.packings", "transfer counts of m-packings equal a subset walk for L <= 14", packing, 0.0);

  double gibbs = 0.0;
  for (int y = 1; y <= 3; ++y) gibbs = std::max(gibbs, std::abs(gibbs_entropy_exact(12, y) - std::log(6.0)));
  suite.add("thermo.gibbs_y_independence", "exact Gibbs entropy at L = 12 is ln 6 for y = 1, 2, 3", gibbs);

  const auto [s, b] = stabilizer_op(L, modes);
  std::mt19937_64 rng(config.seed);
  std::vector<ChainState> probes{qutrit_vacuum(L)};
  for (int i = 0; i < 8; ++i) probes.push_back(random_qutrit_state(L, rng, 16));
  suite.add("thermo.stabilizer_split", "S = B + B^dag",
            max_action_difference(s, b + b.adjoint(), std::span<const ChainState>(probes)));

  const auto comm = stabilizer_commutator(L, modes);
  suite.add("thermo.vacuum_commutator", "[B, B^dag] = (#odd - #even) on the exciton vacuum", comm.vacuum_residual,
            1e-6);

  if (L <= 8) {
    report.reported["commutator"] = to_json(comm);
    try {
      auto spec = random_thermal_spec(L - 1, config.seed);
      spec.max_tail = kReportedMaxTail;
      report.reported["thermal"] = to_json(build_thermal_state(spec, L));
    } catch (const std::domain_error& e) {
      report.reported["thermal"] = {{"error", e.what()}};
    }
  }
}

}  // namespace

VerifyReport run_verify(const ExperimentConfig& config) {
  const double estimate = verify_memory_estimate(config.sites);
  const double budget = static_cast<double>(config.memory_budget_mb) * 1048576.0;
  if (estimate > budget) throw InfeasibleSize(config.sites, estimate, budget);

  VerifyReport report;
  report.sites = config.sites;
  report.seed = config.seed;
  report.tolerance = config.tolerance;
  report.reported = Json::object();
  Suite suite(report, config.tolerance);
  std::mt19937_64 rng(config.seed);
  site_suite(suite, config);
  chain_suite(suite, config, rng);
  moment_suite(suite, config);
  thermo_suite(suite, config, report);
  return report;
}

}  // namespace ternary
