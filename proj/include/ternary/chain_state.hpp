// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file chain_state.hpp
 * @brief Sparse amplitude vectors over the fermionic Fock basis of a chain.
 *
 * A chain of L sites carries 2L fermionic modes ordered
 * (c_1, d_1, c_2, d_2, ..., c_L, d_L). Mode k occupies bit k of a
 * FockBasisState, so site p (1-based) owns bits 2(p-1) (c) and 2(p-1)+1 (d).
 */

#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ternary {

using Complex = std::complex<double>;

/// Largest chain the 64-bit occupation encoding supports.
inline constexpr int kMaxSites = 16;

/// Amplitudes with modulus below this are dropped after each operator action.
inline constexpr double kPruneThreshold = 1e-14;

enum class Species { c, d };

/// Bit position of a mode in the fixed global order (site is 1-based).
constexpr int mode_index(int site, Species species) {
  return 2 * (site - 1) + (species == Species::d ? 1 : 0);
}

/// Occupation pattern of the 2L modes.
struct FockBasisState {
  std::uint64_t occ = 0;

  constexpr bool occupied(int mode) const { return ((occ >> mode) & 1U) != 0; }

  /// Two-bit content of a site: bit 0 = c occupied, bit 1 = d occupied.
  constexpr unsigned site_content(int site) const {
    return static_cast<unsigned>((occ >> (2 * (site - 1))) & 3U);
  }

  constexpr auto operator<=>(const FockBasisState&) const = default;
};

/// Per-site content codes in the c/d occupation encoding.
namespace content {
inline constexpr unsigned kMinus = 0;      // (n_c, n_d) = (0, 0)
inline constexpr unsigned kCOnly = 1;      // (1, 0)
inline constexpr unsigned kReference = 2;  // (0, 1), closed-shell site
inline constexpr unsigned kPlus = 3;       // (1, 1)
}  // namespace content

/// Occupation with every site at the closed-shell reference (0, 1).
FockBasisState reference_occupation(int sites);

/// Sparse complex vector over FockBasisStates of a fixed chain length.
class ChainState {
 public:
  using Map = std::unordered_map<std::uint64_t, Complex>;

  explicit ChainState(int sites);

  static ChainState basis(int sites, FockBasisState s, Complex amp = 1.0);

  int sites() const { return sites_; }
  std::size_t size() const { return amps_.size(); }
  bool empty() const { return amps_.empty(); }
  const Map& terms() const { return amps_; }

  Complex amplitude(FockBasisState s) const;
  void add(FockBasisState s, Complex amp);

  double norm_squared() const;
  double norm() const;

  /// <this|other>
  Complex inner(const ChainState& other) const;

  ChainState normalized() const;

  /// Drops amplitudes with modulus below the threshold.
  void prune(double threshold = kPruneThreshold);

  /// Terms sorted by occupation, for deterministic output.
  std::vector<std::pair<FockBasisState, Complex>> sorted_terms() const;

  ChainState& operator+=(const ChainState& rhs);
  ChainState& operator-=(const ChainState& rhs);
  ChainState& operator*=(Complex s);

  friend ChainState operator+(ChainState lhs, const ChainState& rhs) { return lhs += rhs; }
  friend ChainState operator-(ChainState lhs, const ChainState& rhs) { return lhs -= rhs; }
  friend ChainState operator*(Complex s, ChainState rhs) { return rhs *= s; }
  friend ChainState operator*(ChainState lhs, Complex s) { return lhs *= s; }

 private:
  int sites_;
  Map amps_;
};

/// ||a - b||
double distance(const ChainState& a, const ChainState& b);

}  // namespace ternary
