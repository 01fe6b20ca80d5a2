// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "ternary/fock_space.hpp"
#include "ternary/qutrit_algebra.hpp"

using namespace ternary;

namespace {

ChainState ket(const char* s) { return product_state(s); }

double dist(const ChainState& a, const ChainState& b) { return distance(a, b); }

}  // namespace

TEST_CASE("the listed single-site actions") {
  const auto f = build_fg(1, 1, FG::f), fd = build_fg(1, 1, FG::f_dag);
  const auto g = build_fg(1, 1, FG::g), gd = build_fg(1, 1, FG::g_dag);
  CHECK(dist(fd(ket("-")), ket("o")) < 1e-15);
  CHECK(dist(f(ket("o")), ket("-")) < 1e-15);
  CHECK(dist(f(ket("+")), ket("p")) < 1e-15);
  CHECK(dist(gd(ket("o")), ket("+")) < 1e-15);
  CHECK(dist(gd(ket("-")), -1.0 * ket("p")) < 1e-15);
  CHECK(dist(g(ket("+")), ket("o")) < 1e-15);

  CHECK(dist((fd * f)(ket("+")), ket("+")) < 1e-15);
  CHECK(dist((fd * f)(ket("o")), ket("o")) < 1e-15);
  CHECK(dist((f * fd)(ket("-")), ket("-")) < 1e-15);
  CHECK(dist((gd * g)(ket("+")), ket("+")) < 1e-15);
  CHECK(dist((g * gd)(ket("o")), ket("o")) < 1e-15);
  CHECK(dist((g * gd)(ket("-")), ket("-")) < 1e-15);
}

TEST_CASE("unlisted actions vanish or leave the qutrit subspace") {
  const LinearOp ops[] = {build_fg(1, 1, FG::f), build_fg(1, 1, FG::g), build_fg(1, 1, FG::f_dag),
                          build_fg(1, 1, FG::g_dag)};
  // (operator, input) pairs that land back in the qutrit basis.
  const std::vector<std::pair<int, char>> listed = {{0, 'o'}, {1, '+'}, {2, '-'}, {3, 'o'}};
  for (int k = 0; k < 4; ++k) {
    for (char in : std::string("+o-")) {
      const auto out = ops[k](ket(std::string(1, in).c_str()));
      const bool is_listed = std::find(listed.begin(), listed.end(), std::make_pair(k, in)) != listed.end();
      if (!is_listed) CHECK(qutrit_project(out).state.empty());
    }
  }
}

TEST_CASE("f and g obey canonical anticommutators on the site space") {
  const auto id = Eigen::MatrixXcd::Identity(4, 4);
  const auto f = build_fg(1, 1, FG::f).dense(), fd = build_fg(1, 1, FG::f_dag).dense();
  const auto g = build_fg(1, 1, FG::g).dense(), gd = build_fg(1, 1, FG::g_dag).dense();
  CHECK((f * fd + fd * f - id).norm() < 1e-15);
  CHECK((g * gd + gd * g - id).norm() < 1e-15);
  CHECK((f * g + g * f).norm() < 1e-15);
  CHECK((f * gd + gd * f).norm() < 1e-15);
  CHECK((fd * gd + gd * fd).norm() < 1e-15);
  CHECK((f * f).norm() < 1e-15);
  CHECK((gd * gd).norm() < 1e-15);
}

TEST_CASE("number operator spectrum and ladder commutators") {
  const auto n = number_op(1, 1);
  CHECK(dist(n(ket("+")), ket("+")) < 1e-15);
  CHECK(n(ket("o")).empty());
  CHECK(dist(n(ket("-")), -1.0 * ket("-")) < 1e-15);
  CHECK(n(ket("p")).empty());

  const auto f = build_fg(1, 1, FG::f), fd = build_fg(1, 1, FG::f_dag);
  const auto g = build_fg(1, 1, FG::g), gd = build_fg(1, 1, FG::g_dag);
  const auto composed = fd * f - g * gd;
  CHECK((composed.dense() - n.dense()).norm() < 1e-15);
  CHECK((commutator(n, fd).dense() - fd.dense()).norm() < 1e-15);
  CHECK((commutator(n, f).dense() + f.dense()).norm() < 1e-15);
  CHECK((commutator(n, gd).dense() - gd.dense()).norm() < 1e-15);
  CHECK((commutator(n, g).dense() + g.dense()).norm() < 1e-15);
}

TEST_CASE("pair raise and lower") {
  const auto up = pair_raise_lower(1, 1, PairAction::raise);
  const auto down = pair_raise_lower(1, 1, PairAction::lower);
  CHECK(dist(up(ket("-")), ket("+")) < 1e-15);
  CHECK(dist(down(ket("+")), ket("-")) < 1e-15);
  CHECK(up(ket("+")).empty());
}

TEST_CASE("Fermi-Dirac occupation") {
  CHECK(fermi_dirac(0.0) == 0.5);
  CHECK(std::abs(fermi_dirac(std::log(std::sqrt(3.0))) - 0.25) < 1e-15);
  CHECK(std::abs(fermi_dirac(-std::log(std::sqrt(3.0))) - 0.75) < 1e-15);
  for (double a = -4.0; a <= 4.0; a += 0.37) CHECK(std::abs(fermi_dirac(a) + fermi_dirac(-a) - 1.0) < 1e-15);
}

TEST_CASE("thermal excited state matrix elements") {
  const auto fd_f = build_fg(1, 1, FG::f_dag) * build_fg(1, 1, FG::f);
  const auto gd_g = build_fg(1, 1, FG::g_dag) * build_fg(1, 1, FG::g);
  const auto s = thermal_excited_state(0.5);
  CHECK(std::abs(s.norm() - 1.0) < 1e-15);
  CHECK(std::abs(s.inner(fd_f(s)).real() - 1.0 / (std::exp(1.0) + 1.0)) < 1e-12);
  CHECK(std::abs(s.inner(gd_g(s)).real() - 0.268941421369995) < 1e-12);
  CHECK(dist(thermal_excited_state(0.0), (ket("-") + ket("+")).normalized()) < 1e-15);
  CHECK(std::abs(thermal_excited_state(8.0).inner(ket("-"))) >= 1.0 - 1e-6);
  CHECK(std::abs(thermal_excited_state(800.0).norm() - 1.0) < 1e-15);
}

TEST_CASE("Bogoliubov rotation") {
  const auto b = [](double t) { return bogoliubov(t, 1, 1); };
  for (char in : std::string("+o-")) {
    const auto k = ket(std::string(1, in).c_str());
    CHECK(dist(b(0.0)(k), k) < 1e-15);
  }
  CHECK(dist(b(M_PI / 2)(ket("-")), ket("+")) < 1e-15);
  CHECK(dist(b(M_PI / 4)(ket("-")), thermal_excited_state(0.0)) < 1e-15);
  for (double t : {0.1, 0.7, 1.3, 2.9}) {
    const auto u = b(t).dense();
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-12);
    CHECK(dist(b(t)(ket("-")), std::cos(t) * ket("-") + std::sin(t) * ket("+")) < 1e-15);
    CHECK(dist(b(t)(ket("+")), std::cos(t) * ket("+") - std::sin(t) * ket("-")) < 1e-15);
  }
}

TEST_CASE("theta and alpha are consistent") {
  for (double a = -3.0; a <= 3.0; a += 0.25) {
    const double t = alpha_to_theta(a);
    CHECK(std::abs(std::pow(std::sin(t), 2) - fermi_dirac(a)) < 1e-14);
    CHECK(std::abs(theta_to_alpha(t) - a) < 1e-12);
    CHECK(dist(bogoliubov(t, 1, 1)(ket("-")), thermal_excited_state(a)) < 1e-14);
  }
}
