// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "ternary/moment_engine.hpp"

using namespace ternary;

namespace {

OpPolynomial P(const char* w) { return OpPolynomial(parse_word(w)); }

Polynomial poly(std::initializer_list<std::int64_t> c) {
  std::vector<Rational> v;
  for (auto k : c) v.emplace_back(k);
  return Polynomial(v);
}

MomentSpec canonical(std::complex<double> l) { return {{1, {ModeKind::canonical, l}}}; }
MomentSpec complementary(std::complex<double> l) { return {{1, {ModeKind::complementary, l}}}; }

}  // namespace

TEST_CASE("word text round-trips") {
  CHECK(format_word(parse_word("B1+ B1+ B1 B1")) == "B1+ B1+ B1 B1");
  CHECK(parse_word("B12+ B3").size() == 2);
  CHECK_THROWS_AS(parse_word("C1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("B+"), std::invalid_argument);
}

TEST_CASE("normal ordering") {
  CHECK(normal_order(P("B1 B1+")) == P("B1+ B1") + OpPolynomial::constant(1));
  CHECK(normal_order(P("B1 B1+ B1 B1+")) ==
        P("B1+ B1+ B1 B1") + ExactComplex{3} * P("B1+ B1") + OpPolynomial::constant(1));
  CHECK(normal_order(P("B1 B2+")) == P("B2+ B1"));
  CHECK(normal_order(P("B2+ B1+ B2 B1")) == P("B1+ B2+ B1 B2"));
  const auto ordered = normal_order(P("B1 B2 B1+ B2+ B1 B1+"));
  for (const auto& [w, c] : ordered.terms()) CHECK(is_normal_ordered(w));
}

TEST_CASE("rewriting is confluent") {
  const auto p = P("B1 B1+ B2 B1 B2+ B1+ B1 B2+") + ExactComplex{Rational{1, 3}, Rational{2}} * P("B2 B2 B2+ B1 B1+");
  const auto ref = normal_order(p, RewriteStrategy::leftmost);
  CHECK(normal_order(p, RewriteStrategy::rightmost) == ref);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) CHECK(normal_order(p, RewriteStrategy::random, seed) == ref);
  const auto aref = antinormal_order(p);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) CHECK(antinormal_order(p, RewriteStrategy::random, seed) == aref);
}

TEST_CASE("normal and antinormal forms are the same operator") {
  const auto p = P("B1+ B1 B1+ B1 B1 B1+");
  CHECK(normal_order(antinormal_order(p)) == normal_order(p));
  CHECK(antinormal_order(normal_order(p)) == antinormal_order(p));
  for (std::complex<double> l : {std::complex<double>{0.4, -0.3}, std::complex<double>{1.2, 0.5}}) {
    // Evaluating the antinormal form in a canonical state must match.
    CHECK(std::abs(expect(antinormal_order(p), canonical(l)) - expect(p, canonical(l))) < 1e-12);
  }
}

TEST_CASE("falling product identity") {
  for (int n = 1; n <= 4; ++n) {
    OpWord w;
    for (int k = 0; k < n; ++k) w.push_back({1, true});
    for (int k = 0; k < n; ++k) w.push_back({1, false});
    CHECK(antinormal_order(OpPolynomial(w)) == falling_product_antinormal(1, n));
  }
}

TEST_CASE("coherent moments") {
  const std::complex<double> l{0.6, 0.8};
  CHECK(std::abs(expect(P("B1+ B1"), canonical(l)) - 1.0) < 1e-14);
  CHECK(std::abs(expect(P("B1 B1+"), complementary(l)) - 1.0) < 1e-14);
  CHECK(std::abs(expect(P("B1"), canonical(l)) - l) < 1e-14);
  CHECK(std::abs(expect(P("B1+"), complementary(l)) + l) < 1e-14);
  CHECK(*expect_in_x(P("B1+ B1+ B1 B1"), 1, ModeKind::complementary) == poly({2, -4, 1}));
  CHECK(!expect_in_x(P("B1+ B1+ B1"), 1, ModeKind::canonical).has_value());
  CHECK_THROWS_AS(expect(P("B2"), canonical(l)), UndeclaredMode);
  MomentSpec two{{1, {ModeKind::canonical, 0.5}}, {2, {ModeKind::complementary, 2.0}}};
  CHECK(std::abs(expect(P("B1+ B2 B1 B2+"), two) - 0.25 * 4.0) < 1e-14);
}

TEST_CASE("excited, absorbed and fluctuation closed forms at coefficient level") {
  const auto ex = excited_number_symbolic();
  CHECK(ex.num == poly({1, 3, 1}));
  CHECK(ex.den == poly({1, 1}));
  const auto ab = absorbed_number_symbolic();
  CHECK(ab.equivalent({poly({1, 2}), poly({1, 1})}));
  // 1 + x - x^2/(1+x) as one fraction.
  CHECK(ab.equivalent({poly({1, 1}) * poly({1, 1}) - poly({0, 0, 1}), poly({1, 1})}));
  CHECK(fluctuation_symbolic() == poly({0, 1}));
  CHECK(excited_number(0.0) == 1.0);
  CHECK(absorbed_number(0.0) == 1.0);
  CHECK(std::abs(excited_number(1.0) - 2.5) < 1e-15);
}

TEST_CASE("spin gap") {
  const auto sg = spin_gap_symbolic();
  CHECK(sg.num == poly({-6, 18, -9, 1}));
  CHECK(sg.den == poly({2, -4, 1}));
  CHECK(std::abs(spin_gap(3.0).value - 156.0 / 47.0) < 1e-13);
  CHECK(std::abs(spin_gap(std::sqrt(2.0)).value + 1.0) < 1e-13);
  CHECK(spin_gap(std::sqrt(2.0 + std::sqrt(2.0)) + 1e-12).near_pole);
  const double c = curie_threshold();
  CHECK(std::abs(c * c - 6.289945082) < 1e-8);
  CHECK(std::abs(c - 2.5) < 0.01);
  CHECK(spin_gap(c - 1e-6).value < 0.0);
  CHECK(spin_gap(c + 1e-6).value > 0.0);
}

TEST_CASE("canonical moments agree with the truncated Fock backend") {
  const char* words[] = {"B1+ B1", "B1 B1+ B1 B1+", "B1+ B1+ B1 B1", "B1 B1 B1+", "B1+ B1 B1+ B1 B1"};
  for (double r : {0.0, 0.3, 0.9, 1.5}) {
    for (double ph : {0.0, 1.1}) {
      const auto l = std::polar(r, ph);
      for (const char* w : words) {
        CHECK(std::abs(expect(parse_word(w), canonical(l)) - numeric_single_mode_expect(parse_word(w), l)) < 1e-8);
      }
    }
  }
}

TEST_CASE("fission energy") {
  CHECK(std::abs(fission_energy(std::sqrt(2.0)).delta) < 1e-15);
  CHECK(fission_energy(2.0).delta == -0.5);
  CHECK(fission_energy(2.0).kind == FissionKind::exothermal);
  CHECK(std::abs(fission_energy(1.2).delta - (2.0 / 1.44 - 1.0)) < 1e-15);
  CHECK(fission_energy(1.2).kind == FissionKind::endothermal);
  CHECK_THROWS_AS(fission_energy(1.0), std::domain_error);
}

TEST_CASE("transport closed forms") {
  CHECK(dc_current(1.0, 0.0, 0.3, -0.2).value == 0.0);
  CHECK(std::abs(dc_current(1.0, M_PI / 2, 0.0, 0.0).value - 0.5) < 1e-15);
  for (double phi : {0.3, 1.7, 2.9}) {
    const auto d = dc_current(0.7, phi, 0.4, -1.1);
    CHECK(std::abs(d.value + dc_current(0.7, -phi, 0.4, -1.1).value) < 1e-15);
    CHECK(std::abs(d.value - d.two_step) < 1e-14);
  }
  CHECK(ac_current(0.0, 0.3, 1.0) == 0.0);
  CHECK(std::abs(ac_current(1.0, M_PI / 4, std::log(2.0)) - 2.0) < 1e-14);
  CHECK(std::abs(ac_current(1.3, M_PI / 4, 60.0) - 1.3) < 1e-14);
  CHECK(std::abs(ac_current(0.8, 0.2, 1.5) + ac_current(-0.8, 0.2, 1.5)) < 1e-15);
  CHECK_THROWS_AS(ac_current(1.0, 0.1, 0.0), std::domain_error);
}

TEST_CASE("Bose-Einstein matching") {
  const auto m = be_match(std::log(2.0), {1});
  CHECK(std::abs(m.total - 1.0) < 1e-14);
  CHECK(std::abs(m.pairs[0].lambda_sq - 0.5) < 1e-14);
  CHECK(std::abs(m.pairs[0].lambda_tilde_sq - 1.5) < 1e-14);
  CHECK(m.equal_energy);
  const auto many = be_match(0.7, {1, 3, 5});
  double sum = 0.0;
  for (const auto& p : many.pairs) sum += p.lambda_sq + p.lambda_tilde_sq - 1.0;
  CHECK(std::abs(sum - 1.0 / (std::exp(0.7) - 1.0)) < 1e-12);
  const auto cold = be_match(80.0, {1, 3});
  for (const auto& p : cold.pairs) {
    CHECK(p.lambda_sq < 1e-30);
    CHECK(std::abs(p.lambda_tilde_sq - 1.0) < 1e-30);
  }
  CHECK_THROWS_AS(be_match(-1.0, {1}), std::domain_error);
  CHECK_THROWS_AS(be_match(1.0, {2}), std::invalid_argument);
}
