// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file thermo_ensemble.hpp
 * @brief Counting, entropies and the coherent thermal state of y-exciton
 *        ensembles, together with the stabilizer that characterises it.
 *
 * Exact packing counts are the ground truth. The closed forms ln(L/2),
 * (L/2) ln m and 2m/L are asymptotic estimates and are reported beside the
 * exact numbers, never in place of them.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ternary/chain_state.hpp"
#include "ternary/exciton_ops.hpp"
#include "ternary/linear_op.hpp"
#include "ternary/packing.hpp"

namespace ternary {

/// ln(L/2).
double gibbs_entropy(int sites);

/// ln(max_packings(L, y)).
double gibbs_entropy_exact(int sites, int y);

/// (L/2) ln m.
double boltzmann_entropy(int sites, int m);

/// (dS_B/dm)^{-1} = 2m/L.
double boltzmann_temperature(int sites, int m);

/// Values of m at which ln count_packings(L, y, m) fails to be concave,
/// i.e. where the second difference is positive.
std::vector<int> concavity_violations(int sites, int y);

struct Degeneracy {
  std::uint64_t value = 0;
  std::string diagnostic;  ///< set when L - 1 is odd and the floor convention applies
};

/// Number of orderings of the thermal-state factors: C(L-1, floor((L-1)/2)).
Degeneracy degeneracy_report(int sites);
std::uint64_t degeneracy(int sites);

/// (L - 1) ln 2.
double thermal_entropy(int sites);

enum class FactorKind { canonical, complementary };

/// One coherent factor of a thermal state: exp(lambda b^dag_y)|o> when
/// canonical, exp(lambda_tilde b_y)|*> when complementary.
struct ThermalFactor {
  int y = 1;
  FactorKind kind = FactorKind::canonical;
  Complex value{};
};

struct ThermalStateSpec {
  std::vector<ThermalFactor> factors;  ///< applied in order, first factor acts first
  double theta = 0.0;                  ///< polarization angle of every mode operator
  double max_tail = kDefaultMaxTail;
  bool uniform_fill = false;  ///< use the uniform |*> instead of the left-aligned one

  /// Factors |lambda_y lambda_tilde_{y+1}) for every odd y with y + 1 < L.
  /// Missing entries (nullopt) drop the corresponding factor.
  static ThermalStateSpec from_pairs(const std::vector<std::pair<std::optional<Complex>, std::optional<Complex>>>& pairs,
                                     double theta = 0.0);
};

/// Thermal parameters drawn from a seeded generator: lambda_y in [0, 0.3],
/// lambda_tilde_{y+1} in [1.5, 3] for every odd y with y + 1 <= max_y.
ThermalStateSpec random_thermal_spec(int max_y, std::uint64_t seed);

struct FactorReport {
  ThermalFactor factor;
  double tail_weight = 0.0;
};

struct StabilizerPair {
  LinearOp s;  ///< S = B + B^dag
  LinearOp b;  ///< B = sum over odd y of b_y plus sum over even y of b^dag_y
};

/// Stabilizer and its split form over the given modes (each in 1..L-1).
StabilizerPair stabilizer_op(int sites, const std::vector<int>& modes, double theta = 0.0);

struct ThermalReport {
  ChainState state;
  std::vector<FactorReport> factors;
  std::vector<int> modes;         ///< the distinct y of the factors
  Complex reorder_overlap{1.0};   ///< <forward|reversed> of the two factor orders
  double stabilizer_mean = 0.0;   ///< <T|S|T>
  double stabilizer_residual = 0.0;  ///< ||(S - <S>)|T>||
};

/// Assembles the thermal state on the chain. The reference is the vacuum, or
/// |*> of the first complementary factor when one is present. Throws
/// std::domain_error when a canonical factor's Poisson tail beyond the packing
/// ceiling exceeds spec.max_tail.
ThermalReport build_thermal_state(const ThermalStateSpec& spec, int sites);

struct CommutatorRecord {
  std::string state;      ///< description of the probe state
  double residual = 0.0;  ///< ||([B, B^dag] - ideal_value)|psi>||
};

struct CommutatorReport {
  int sites = 0;
  std::vector<int> modes;
  int ideal_value = 0;  ///< bosonic value of [B, B^dag]: (# odd modes) - (# even modes)
  double vacuum_residual = 0.0;
  std::vector<CommutatorRecord> records;  ///< vacuum-generated probe states
};

/// Deviation of [B, B^dag] from its bosonic value on the vacuum and on the
/// probes b^dag_y|o>, B^dag|o> and B^dag B^dag|o>.
CommutatorReport stabilizer_commutator(int sites, const std::vector<int>& modes, double theta = 0.0);

}  // namespace ternary
