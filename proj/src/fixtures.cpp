// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/fixtures.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ternary/fock_space.hpp"

namespace ternary {

namespace {

Json complex_pair(Complex z) { return Json::array({round12(z.real()), round12(z.imag())}); }

std::string kind_text(ModeKind k) { return k == ModeKind::canonical ? "canonical" : "complementary"; }

std::string kind_text(FactorKind k) { return k == FactorKind::canonical ? "canonical" : "complementary"; }

std::string kind_text(FissionKind k) {
  switch (k) {
    case FissionKind::exothermal: return "exothermal";
    case FissionKind::boundary: return "boundary";
    case FissionKind::endothermal: return "endothermal";
  }
  return "?";
}

Json spec_json(const MomentSpec& spec) {
  Json out = Json::object();
  for (const auto& [mode, st] : spec) {
    out[std::to_string(mode)] = {{"kind", kind_text(st.kind)}, {"value", complex_pair(st.value)}};
  }
  return out;
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json ket_fixture(const ChainState& psi) {
  Json amps = Json::array();
  for (const auto& [ket, amp] : label_decomposition(psi)) amps.push_back({{"ket", ket}, {"amp", complex_pair(amp)}});
  return {{"sites", psi.sites()}, {"amplitudes", amps}};
}

ChainState state_from_fixture(const Json& fixture) {
  const int sites = fixture.at("sites").get<int>();
  ChainState out(sites);
  for (const auto& entry : fixture.at("amplitudes")) {
    const auto ket = entry.at("ket").get<std::string>();
    if (static_cast<int>(ket.size()) != sites) {
      throw std::invalid_argument("fixture ket '" + ket + "' does not have " + std::to_string(sites) + " sites");
    }
    const auto& amp = entry.at("amp");
    out += Complex{amp.at(0).get<double>(), amp.at(1).get<double>()} * product_state(ket);
  }
  out.prune();
  return out;
}

Json to_json(const ResidualRecord& r) {
  return {{"relation", r.relation}, {"L", r.sites},           {"y", r.y},
          {"lambda", round12(r.lambda)}, {"residual", round12(r.residual)}, {"tail_weight", round12(r.tail_weight)}};
}

Json to_json(const std::vector<ResidualRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

Json to_json(const ThermalReport& r, bool include_state) {
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    factors.push_back({{"y", f.factor.y},
                       {"kind", kind_text(f.factor.kind)},
                       {"value", complex_pair(f.factor.value)},
                       {"tail_weight", round12(f.tail_weight)}});
  }
  Json out = {{"sites", r.state.sites()},
              {"factors", factors},
              {"modes", r.modes},
              {"reorder_overlap", complex_pair(r.reorder_overlap)},
              {"reorder_phase", round12(std::arg(r.reorder_overlap))},
              {"stabilizer_mean", round12(r.stabilizer_mean)},
              {"stabilizer_residual", round12(r.stabilizer_residual)}};
  if (include_state) out["state"] = ket_fixture(r.state);
  return out;
}

Json to_json(const CommutatorReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back({{"state", rec.state}, {"residual", round12(rec.residual)}});
  return {{"sites", r.sites},
          {"modes", r.modes},
          {"ideal_value", r.ideal_value},
          {"vacuum_residual", round12(r.vacuum_residual)},
          {"records", records}};
}

Json to_json(const FissionActionReport& r) {
  return {{"sites", r.sites},
          {"r", r.r},
          {"lambda_tilde_1", round12(r.lambda_tilde_1)},
          {"lambda_2", round12(r.lambda_2)},
          {"background_tail", round12(r.background_tail)},
          {"post_norm", round12(r.post_norm)},
          {"regrouped_fraction", round12(r.regrouped_fraction)},
          {"pattern_fraction", round12(r.pattern_fraction)},
          {"dominant_pattern", r.dominant_pattern},
          {"coefficient", complex_pair(r.coefficient)},
          {"predicted_magnitude", round12(r.predicted_magnitude)},
          {"emergent_y", r.emergent_y},
          {"emergent_count", r.emergent_count},
          {"eigen_residual", round12(r.eigen_residual)},
          {"substitution_overlap", round12(r.substitution_overlap)},
          {"energy", {{"delta", round12(r.energy.delta)}, {"kind", kind_text(r.energy.kind)}}}};
}

Json to_json(const ClassCounts& c) {
  return {{"total", c.total},
          {"single", c.single},
          {"single_parallel", c.single_parallel},
          {"double_parallel", c.double_parallel},
          {"double_crossed", c.double_crossed},
          {"double_mixed", c.double_mixed},
          {"multiple", c.multiple},
          {"gapless_without_witness", c.gapless_without_witness}};
}

Json to_json(const CurieReport& r) {
  Json out = {{"threshold", round12(r.threshold)}, {"stated", r.stated}, {"rows", r.rows.size()}};
  if (r.bracket) out["bracket"] = Json::array({round12(r.bracket->first), round12(r.bracket->second)});
  else out["bracket"] = nullptr;
  return out;
}

Json moment_json(const std::string& word, const MomentSpec& spec) {
  const auto value = expect(OpPolynomial(parse_word(word)), spec);
  return {{"word", word}, {"spec", spec_json(spec)}, {"value", complex_pair(value)}};
}

Json moment_polynomial_json(const std::string& word, int mode, ModeKind kind) {
  Json out = {{"word", word}, {"mode", mode}, {"kind", kind_text(kind)}};
  const auto poly = expect_in_x(OpPolynomial(parse_word(word)), mode, kind);
  if (poly) out["polynomial"] = poly->to_string();
  else out["value"] = nullptr;
  return out;
}

}  // namespace ternary
