// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion. Reference values come
// from test-side oracles (brute-force enumeration, an Eigen Fock backend,
// hand-built kets), never from the library routine under test.

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ternary/exciton_ops.hpp"
#include "ternary/fission.hpp"
#include "ternary/fixtures.hpp"
#include "ternary/fock_space.hpp"
#include "ternary/moment_engine.hpp"
#include "ternary/packing.hpp"
#include "ternary/qutrit_algebra.hpp"
#include "ternary/spin_ladder.hpp"
#include "ternary/thermo_ensemble.hpp"

using namespace ternary;

namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr double kReportedMaxTail = 1e-3;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) { return format12(v); }

std::vector<std::string> qutrit_kets(int L) {
  std::vector<std::string> out{""};
  for (int p = 0; p < L; ++p) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (char c : std::string("+o-")) next.push_back(s + c);
    }
    out = std::move(next);
  }
  return out;
}

char& at(std::string& ket, int site) { return ket[ket.size() - static_cast<std::size_t>(site)]; }

std::vector<ExcitonIndex> all_indices(int L) {
  std::vector<ExcitonIndex> out;
  for (int mu = 2; mu <= L; ++mu) {
    for (int nu = 1; nu < mu; ++nu) out.push_back({mu, nu});
  }
  return out;
}

Outcome single_site_algebra() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto f = build_fg(1, 1, FG::f), fd = build_fg(1, 1, FG::f_dag);
  const auto g = build_fg(1, 1, FG::g), gd = build_fg(1, 1, FG::g_dag);
  const auto k = [](const char* s) { return product_state(s); };
  double r = 0.0;
  const auto act = [&](const LinearOp& op, const char* in, const ChainState& want) {
    r = std::max(r, distance(op(k(in)), want));
  };
  act(fd, "-", k("o"));
  act(f, "o", k("-"));
  act(f, "+", k("p"));
  act(gd, "o", k("+"));
  act(gd, "-", -1.0 * k("p"));
  act(g, "+", k("o"));
  act(fd * f, "+", k("+"));
  act(fd * f, "o", k("o"));
  act(f * fd, "-", k("-"));
  act(gd * g, "+", k("+"));
  act(g * gd, "o", k("o"));
  act(g * gd, "-", k("-"));

  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(4, 4);
  const Eigen::MatrixXcd F = f.dense(), Fd = fd.dense(), G = g.dense(), Gd = gd.dense();
  for (const Eigen::MatrixXcd& m :
       {Eigen::MatrixXcd(F * Fd + Fd * F - I), Eigen::MatrixXcd(G * Gd + Gd * G - I), Eigen::MatrixXcd(F * G + G * F),
        Eigen::MatrixXcd(F * Gd + Gd * F), Eigen::MatrixXcd(Fd * Gd + Gd * Fd), Eigen::MatrixXcd(F * F),
        Eigen::MatrixXcd(G * G), Eigen::MatrixXcd(Fd - F.adjoint()), Eigen::MatrixXcd(Gd - G.adjoint())}) {
    r = std::max(r, m.norm());
  }
  const Eigen::MatrixXcd N = number_op(1, 1).dense();
  r = std::max(r, (Fd * F - G * Gd - N).norm());
  r = std::max(r, (N * Fd - Fd * N - Fd).norm());
  r = std::max(r, (N * F - F * N + F).norm());
  r = std::max(r, (N * Gd - Gd * N - Gd).norm());
  r = std::max(r, (N * G - G * N + G).norm());
  r = std::max(r, distance(number_op(1, 1)(k("+")), k("+")));
  r = std::max(r, number_op(1, 1)(k("o")).norm());
  r = std::max(r, distance(number_op(1, 1)(k("-")), -1.0 * k("-")));
  const double t = seconds_since(t0);
  return {r <= 1e-14 && t < 1.0, "max residual " + fmt(r) + ", " + fmt(t) + " s"};
}

Outcome fermi_dirac_backend() {
  const auto fdf = build_fg(1, 1, FG::f_dag) * build_fg(1, 1, FG::f);
  double r = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double a = -3.0 + 0.3 * i;
    const auto s = thermal_excited_state(a);
    r = std::max(r, std::abs(s.inner(fdf(s)) - Complex{1.0 / (std::exp(2.0 * a) + 1.0), 0.0}));
  }
  const auto s0 = thermal_excited_state(0.0);
  const Complex at_zero = s0.inner(fdf(s0));
  return {r <= 1e-12 && at_zero == Complex{0.5, 0.0},
          "max residual " + fmt(r) + " over 21 points; alpha = 0 gives " + fmt(at_zero.real())};
}

Outcome chain_exciton_identities() {
  const auto t0 = std::chrono::steady_clock::now();
  double action = 0.0, number = 0.0, hard_core = 0.0, seeds = 0.0, regroup = 0.0;
  for (int L : {4, 5}) {
    const auto idx = all_indices(L);
    const auto basis = all_basis_states(L);
    const auto kets = qutrit_kets(L);
    const auto zero = LinearOp::zero(L);
    const auto n = total_number_op(L);
    for (const auto& [mu, nu] : idx) {
      const auto ad = exciton_create(L, {mu, nu});
      const auto a = exciton_annihilate(L, {mu, nu});
      for (const auto& ket : kets) {
        auto t = ket;
        const auto out = ad(product_state(ket));
        if (at(t, mu) == 'o' && at(t, nu) == 'o') {
          at(t, mu) = '+';
          at(t, nu) = '-';
          action = std::max(action, distance(out, product_state(t)));
          action = std::max(action, distance(a(product_state(t)), product_state(ket)));
        } else {
          action = std::max(action, out.norm());
        }
      }
      const auto one = ad(qutrit_vacuum(L));
      number = std::max(number, distance((ad * a)(one), one));
      number = std::max(number, a(a(one)).norm());
      hard_core = std::max(hard_core, max_action_difference(commutator(ad, n), zero, basis));
      for (const auto& [mup, nup] : idx) {
        if (mup == mu && nup == nu) continue;
        const auto adp = exciton_create(L, {mup, nup});
        hard_core = std::max(hard_core, max_action_difference(commutator(ad, adp), zero, basis));
        hard_core = std::max(hard_core, max_action_difference(commutator(a, adp.adjoint()), zero, basis));
        if (nup < mu && nu < mup && mu != mup && nu != nup) {
          const auto lhs = ad * adp;
          const auto rhs = exciton_create(L, {mu, nup}) * exciton_create(L, {mup, nu});
          regroup = std::max(regroup, max_action_difference(lhs, -1.0 * rhs, basis));
        }
      }
    }
    // Injection seeds: f^dag_nu a^dag_{mu,nu}|o> = -g^dag_mu|o>, g_mu a^dag_{mu,nu}|o> = f_nu|o>.
    for (const auto& [mu, nu] : idx) {
      const auto vac = qutrit_vacuum(L);
      const auto pair = exciton_create(L, {mu, nu})(vac);
      seeds = std::max(seeds, (build_fg(L, nu, FG::f_dag)(pair) + build_fg(L, mu, FG::g_dag)(vac)).norm());
      seeds = std::max(seeds, (build_fg(L, mu, FG::g)(pair) - build_fg(L, nu, FG::f)(vac)).norm());
    }
  }
  const double t = seconds_since(t0);
  const bool exact = std::max({action, number, hard_core, seeds}) <= 1e-14;
  return {exact && regroup <= 1e-14 && t < 60.0,
          "action " + fmt(action) + ", number " + fmt(number) + ", hard-core " + fmt(hard_core) + ", seeds " +
              fmt(seeds) + ", regrouping with minus sign " + fmt(regroup) + ", " + fmt(t) + " s"};
}

/// b^dag_1 on a vacuum-generated y = 1 state, built from the exciton sum and
/// the sector scaling (L - y - 2(m - 1))^{-1/2}, m the number of '+' after creation.
ChainState oracle_mode_create(const ChainState& psi, int L) {
  ChainState raw(L);
  for (int nu = 1; nu < L; ++nu) raw += exciton_create(L, {nu + 1, nu})(psi);
  ChainState out(L);
  for (const auto& [ket, amp] : label_decomposition(raw)) {
    const auto m = std::count(ket.begin(), ket.end(), '+');
    out += (amp / std::sqrt(static_cast<double>(L - 1 - 2 * (m - 1)))) * product_state(ket);
  }
  return out;
}

Outcome mode_ladder() {
  const int L = 6;
  double zeta_r = 0.0;
  for (int m = 1; m <= 3; ++m) zeta_r = std::max(zeta_r, std::abs(zeta(L, 1, m) - 1.0 / std::sqrt(L - 1.0 - 2 * (m - 1))));

  std::vector<ChainState> ladder{qutrit_vacuum(L)};
  for (int m = 1; m <= 4; ++m) ladder.push_back(oracle_mode_create(ladder.back(), L));
  const auto bd = mode_create(L, 1), b = mode_annihilate(L, 1);
  double op_r = 0.0;
  for (int m = 0; m <= 3; ++m) op_r = std::max(op_r, distance(bd(ladder[static_cast<std::size_t>(m)]), ladder[static_cast<std::size_t>(m) + 1]));

  // |m) = (b^dag)^m|o>/sqrt(m!) must be normalized, which is the ladder relation.
  double ratio = 0.0;
  std::string norms;
  double fact = 1.0;
  for (int m = 0; m <= 3; ++m) {
    if (m > 0) fact *= m;
    const auto& km = ladder[static_cast<std::size_t>(m)];
    const double norm_m = km.norm() / std::sqrt(fact);
    norms += (m ? ", " : "") + fmt(norm_m);
    if (m == 0) continue;
    const double down = b(km).norm() / km.norm();
    ratio = std::max({ratio, std::abs(down - std::sqrt(double(m))), std::abs(norm_m - 1.0)});
    if (m + 1 <= max_packings(L, 1)) ratio = std::max(ratio, std::abs(bd(km).norm() / km.norm() - std::sqrt(m + 1.0)));
  }
  return {zeta_r <= 1e-10 && op_r <= 1e-10 && ratio <= 1e-10,
          "zeta " + fmt(zeta_r) + ", operator vs oracle " + fmt(op_r) + ", ladder ratio defect " + fmt(ratio) +
              ", norms of (b^dag)^m|o>/sqrt(m!) = [" + norms + "]"};
}

/// <l| word |l> on a Fock space cut at `ceiling` quanta, with Eigen matrices.
Complex eigen_fock_moment(const OpWord& word, Complex lambda, int ceiling) {
  const int n = ceiling + 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  const Eigen::MatrixXcd ad = a.adjoint();
  Eigen::VectorXcd v(n);
  Complex c{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    if (k > 0) c *= lambda / std::sqrt(static_cast<double>(k));
    v(k) = c;
  }
  v.normalize();
  Eigen::VectorXcd w = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = (it->create ? ad : a) * w;
  return v.dot(w);
}

Outcome moment_formulas() {
  const auto P = [](std::initializer_list<std::int64_t> c) {
    std::vector<Rational> v;
    for (auto k : c) v.emplace_back(k);
    return Polynomial(v);
  };
  const auto ex = excited_number_symbolic();
  const auto sg = spin_gap_symbolic();
  const bool exact = ex.num == P({1, 3, 1}) && ex.den == P({1, 1}) && sg.num == P({-6, 18, -9, 1}) &&
                     sg.den == P({2, -4, 1});
  double r = 0.0;
  for (const char* text : {"B1+ B1", "B1 B1+", "B1+ B1+ B1 B1", "B1 B1 B1+ B1+", "B1+ B1 B1+ B1", "B1 B1+ B1 B1+"}) {
    const auto word = parse_word(text);
    for (double l = 0.0; l <= 1.5 + 1e-9; l += 0.25) {
      for (double ph : {0.0, 1.1}) {
        const auto lambda = std::polar(l, ph);
        const MomentSpec spec{{1, {ModeKind::canonical, lambda}}};
        r = std::max(r, std::abs(expect(word, spec) - eigen_fock_moment(word, lambda, 40)));
      }
    }
  }
  return {exact && r <= 1e-8, std::string("exact coefficients ") + (exact ? "match" : "differ") +
                                  ", max |symbolic - ceiling-40 Fock| " + fmt(r)};
}

Outcome curie_threshold_check() {
  // Largest real root of x^3 - 9x^2 + 18x - 6 from the companion matrix.
  Eigen::Matrix3d comp;
  comp << 9.0, -18.0, 6.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0;
  const auto eig = comp.eigenvalues();
  double x = 0.0;
  for (int i = 0; i < 3; ++i) x = std::max(x, eig(i).real());
  const double oracle = std::sqrt(x);
  const double lib = curie_threshold();
  const bool matches_oracle = std::abs(lib - oracle) <= 1e-10;
  const bool in_window = std::abs(lib - 2.5068) <= 1e-3;
  const bool near_stated = std::abs(lib - 2.5) <= 0.01;
  return {matches_oracle && in_window && near_stated,
          "threshold " + fmt(lib) + " (oracle " + fmt(oracle) + "), |t - 2.5068| = " + fmt(std::abs(lib - 2.5068)) +
              ", |t - 2.5| = " + fmt(std::abs(lib - 2.5))};
}

Outcome fission_check() {
  double lo = 1.0 + 1e-9, hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (fission_energy(mid).delta > 0.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  const bool boundary = std::abs(root - std::sqrt(2.0)) <= 1e-12;
  double worst = 1.0;
  for (double l2 : {0.0, 0.05, 0.1, 0.2}) {
    const auto rep = fission_action_check(6, 2.0, l2);
    std::string want = "oooooo";
    at(want, rep.r + 3) = '+';
    at(want, rep.r + 2) = '+';
    at(want, rep.r + 1) = '-';
    at(want, rep.r) = '-';
    double hit = 0.0;
    for (const auto& [ket, amp] : label_decomposition(rep.post)) {
      if (ket == want) hit += std::norm(amp);
    }
    worst = std::min(worst, hit / rep.post.norm_squared());
  }
  return {boundary && worst > 0.9,
          "root " + fmt(root) + " (|root - sqrt2| = " + fmt(std::abs(root - std::sqrt(2.0))) +
              "), smallest regrouped fraction " + fmt(worst)};
}

Outcome transport() {
  double odd = 0.0;
  for (double phi = -3.0; phi <= 3.0; phi += 0.5) {
    for (double l : {0.5, 1.0, 1.5}) odd = std::max(odd, std::abs(dc_current(l, phi, 0.0, 0.0).value + dc_current(l, -phi, 0.0, 0.0).value));
  }
  const double dc = dc_current(1.0, std::numbers::pi / 2, 0.0, 0.0).value;
  double ac = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (int k = 0; k < 5; ++k) {
        const double w = 0.5 * i, th = 0.3 * j, be = 0.5 + 0.5 * k;
        const double want = w * std::sin(2.0 * th) / (1.0 - std::exp(-be));
        ac = std::max(ac, std::abs(ac_current(w, th, be) - want));
        if (i == 0) ac = std::max(ac, std::abs(ac_current(w, th, be)));
      }
    }
  }
  return {odd <= 1e-12 && std::abs(dc - 0.5) <= 1e-12 && ac <= 1e-12,
          "dc odd defect " + fmt(odd) + ", dc(1, pi/2, 0) = " + fmt(dc) + ", ac max residual " + fmt(ac)};
}

Outcome thermodynamics() {
  std::uint64_t mismatches = 0;
  for (int L = 2; L <= 14; ++L) {
    for (int y = 1; y < L; ++y) {
      const auto ref = oracle::brute_force_packings(L, y);
      for (int m = 0; m <= L / 2 + 1; ++m) {
        const std::uint64_t want = static_cast<std::size_t>(m) < ref.size() ? ref[static_cast<std::size_t>(m)] : 0;
        if (count_packings(L, y, m) != want) ++mismatches;
      }
    }
  }
  double s_thermal = 0.0;
  for (int L = 2; L <= 14; ++L) s_thermal = std::max(s_thermal, std::abs(thermal_entropy(L) - (L - 1) * std::numbers::ln2));
  double gibbs = 0.0;
  for (int y = 1; y <= 3; ++y) gibbs = std::max(gibbs, std::abs(gibbs_entropy_exact(12, y) - std::log(6.0)));
  const auto d5 = degeneracy(5);
  return {mismatches == 0 && d5 == 6 && s_thermal <= 1e-12 && gibbs <= 1e-12,
          "packing mismatches " + std::to_string(mismatches) + ", degeneracy(5) = " + std::to_string(d5) +
              ", thermal entropy defect " + fmt(s_thermal) + ", Gibbs L = 12 defect " + fmt(gibbs)};
}

Outcome spin_ladder() {
  bool ok = true;
  std::string counts;
  for (int R = 4; R <= 10; ++R) {
    const auto cfgs = enumerate_configs(R);
    int single = 0, single_parallel = 0;
    for (const auto& c : cfgs) {
      std::vector<SpinMode> used;
      for (const auto& p : c.placements) {
        if (std::find(used.begin(), used.end(), p.mode) == used.end()) used.push_back(p.mode);
      }
      if (used.size() != 1) continue;
      ++single;
      if (is_parallel(used[0])) ++single_parallel;
      // Independent occupancy: mark electron and hole sites of every placement.
      std::vector<int> occ(static_cast<std::size_t>(2 * R), 0);
      for (const auto& p : c.placements) {
        occ[static_cast<std::size_t>(interleave_index(electron_site(p.mode, p.anchor).rung, electron_site(p.mode, p.anchor).spin) - 1)]++;
        occ[static_cast<std::size_t>(interleave_index(hole_site(p.mode, p.anchor).rung, hole_site(p.mode, p.anchor).spin) - 1)]++;
      }
      std::vector<int> empty;
      for (int i = 0; i < 2 * R; ++i) {
        if (occ[static_cast<std::size_t>(i)] == 0) empty.push_back(i + 1);
      }
      ok = ok && empty.size() == 2 && interleave_site(empty[0]).rung == 1 && interleave_site(empty[1]).rung == R;
    }
    ok = ok && single == 2 && single_parallel == 0;
    counts += (R > 4 ? " " : "") + std::to_string(single);
  }
  // Leg counts of the fission map from the mode geometry.
  const auto legs = [](const std::vector<LabeledExciton>& terms) {
    std::map<std::string, int> out;
    for (const auto& e : terms) {
      const bool up_e = e.mode == SpinMode::parallel_up || e.mode == SpinMode::crossed_down;
      const bool up_h = e.mode == SpinMode::parallel_up || e.mode == SpinMode::crossed_up;
      out[up_e ? "e_up" : "e_down"]++;
      out[up_h ? "h_up" : "h_down"]++;
    }
    return out;
  };
  const std::vector<LabeledExciton> in{{3, SpinMode::parallel_up, 1}, {2, SpinMode::parallel_down, -1}};
  const bool conserved = legs(in) == legs(singlet_fission_map(in));
  return {ok && conserved, "single-mode counts for R = 4..10: " + counts + "; fission map conserves leg counts: " +
                               (conserved ? "yes" : "no")};
}

Outcome reported_not_asserted() {
  double worst_vacuum = 0.0;
  std::printf("  reported (seed %llu):\n", static_cast<unsigned long long>(kSeed));
  for (int L = 2; L <= 8; ++L) {
    std::vector<int> modes;
    for (int y = 1; y < L; ++y) modes.push_back(y);
    const auto comm = stabilizer_commutator(L, modes);
    worst_vacuum = std::max(worst_vacuum, comm.vacuum_residual);
    double worst_probe = 0.0;
    for (const auto& rec : comm.records) worst_probe = std::max(worst_probe, rec.residual);
    std::string phase = "n/a";
    if (L >= 3) {
      try {
        auto spec = random_thermal_spec(L - 1, kSeed);
        spec.max_tail = kReportedMaxTail;
        const auto th = build_thermal_state(spec, L);
        double tail = 0.0;
        for (const auto& f : th.factors) tail = std::max(tail, f.tail_weight);
        phase = fmt(std::arg(th.reorder_overlap)) + " |overlap| " + fmt(std::abs(th.reorder_overlap)) + " tail " +
                fmt(tail);
      } catch (const std::domain_error& e) {
        phase = std::string("skipped: ") + e.what();
      }
    }
    std::printf("    L = %d: vacuum %s, largest probe residual %s, reorder phase %s\n", L,
                fmt(comm.vacuum_residual).c_str(), fmt(worst_probe).c_str(), phase.c_str());
  }
  return {worst_vacuum <= 1e-6, "largest vacuum-sector residual " + fmt(worst_vacuum)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"single-site algebra", single_site_algebra},
      {"Fermi-Dirac occupation", fermi_dirac_backend},
      {"chain exciton identities", chain_exciton_identities},
      {"mode-operator ladder", mode_ladder},
      {"moment formulas", moment_formulas},
      {"Curie threshold", curie_threshold_check},
      {"fission", fission_check},
      {"transport closed forms", transport},
      {"thermodynamics", thermodynamics},
      {"spin ladder", spin_ladder},
      {"reported-not-asserted commutators", reported_not_asserted},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
