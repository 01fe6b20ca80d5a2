// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fixtures.hpp
 * @brief JSON ket fixtures and report serialization.
 *
 * A ket fixture lists amplitudes in the per-site label basis, each ket written
 * highest site first with one character of {+, o, -, p, 0} per site:
 *
 *     {"sites": 3, "amplitudes": [{"ket": "+o-", "amp": [0.7071, 0.0]}, ...]}
 *
 * Every floating value is rounded to 12 significant digits on output.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ternary/chain_state.hpp"
#include "ternary/exciton_ops.hpp"
#include "ternary/fission.hpp"
#include "ternary/moment_engine.hpp"
#include "ternary/spin_ladder.hpp"
#include "ternary/thermo_ensemble.hpp"

namespace ternary {

using Json = nlohmann::ordered_json;

/// x rounded to 12 significant digits.
double round12(double x);

/// Shortest text of x at 12 significant digits.
std::string format12(double x);

Json ket_fixture(const ChainState& psi);
ChainState state_from_fixture(const Json& fixture);

Json to_json(const ResidualRecord& r);
Json to_json(const std::vector<ResidualRecord>& records);
Json to_json(const ThermalReport& r, bool include_state = false);
Json to_json(const CommutatorReport& r);
Json to_json(const FissionActionReport& r);
Json to_json(const ClassCounts& c);
Json to_json(const CurieReport& r);

/// {word, spec, value} for a numeric moment evaluation.
Json moment_json(const std::string& word, const MomentSpec& spec);
/// {word, mode, kind, polynomial} for an exact moment in x, or value null when
/// the word has no polynomial form.
Json moment_polynomial_json(const std::string& word, int mode, ModeKind kind);

}  // namespace ternary
