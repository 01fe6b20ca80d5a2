// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "ternary/exciton_ops.hpp"
#include "ternary/fixtures.hpp"
#include "ternary/fock_space.hpp"

using namespace ternary;

TEST_CASE("twelve significant digits") {
  CHECK(format12(1.0 / 3.0) == "0.333333333333");
  CHECK(round12(2.0 / 3.0) == 0.666666666667);
  CHECK(round12(0.0) == 0.0);
  CHECK(format12(1e-20) == "1e-20");
}

TEST_CASE("ket fixture round trip") {
  const auto psi = (Complex{0.6, 0.0} * product_state("+o-")) + (Complex{0.0, 0.8} * product_state("p0o"));
  const auto fx = ket_fixture(psi);
  CHECK(fx.at("sites") == 3);
  CHECK(fx.at("amplitudes").size() == 3);
  const auto back = state_from_fixture(Json::parse(fx.dump()));
  CHECK((back - psi).norm() < 1e-12);

  const auto coherent = chain_coherent_state(1, Complex{0.05, 0.02}, 4, 0.0, 1.0).state;
  CHECK((state_from_fixture(ket_fixture(coherent)) - coherent).norm() < 1e-11);
}

TEST_CASE("fixture with a wrong ket width is rejected") {
  Json bad = {{"sites", 2}, {"amplitudes", Json::array({{{"ket", "+o-"}, {"amp", {1.0, 0.0}}}})}};
  CHECK_THROWS_AS(state_from_fixture(bad), std::invalid_argument);
}

TEST_CASE("residual record keys") {
  const ResidualRecord r{"seed", 4, 1, 0.25, 1.0 / 3.0, 0.0};
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"relation", "L", "y", "lambda", "residual", "tail_weight"});
  CHECK(j.at("residual").get<double>() == 0.333333333333);
}

TEST_CASE("moment json") {
  MomentSpec spec{{1, {ModeKind::canonical, {0.5, 0.0}}}};
  const auto j = moment_json("B1+ B1", spec);
  CHECK(j.at("value")[0].get<double>() == doctest::Approx(0.25));
  const auto p = moment_polynomial_json("B1+ B1", 1, ModeKind::canonical);
  CHECK(p.at("polynomial").is_string());
  const auto q = moment_polynomial_json("B1", 1, ModeKind::canonical);
  CHECK(q.at("value").is_null());
}
