// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spin_ladder.hpp
 * @brief Spin-half excitons on a two-leg ladder.
 *
 * Rungs r = 1..R carry an up and a down site. Linear positions interleave as
 * (1, down) = 1, (1, up) = 2, (2, down) = 3, ... so that the spinless chain
 * machinery applies unchanged. A nearest-neighbour exciton anchored at rung r
 * puts its electron on rung r and its hole on rung r + 1:
 *
 *   ParallelUp    electron (r, up)    hole (r+1, up)
 *   ParallelDown  electron (r, down)  hole (r+1, down)
 *   CrossedDown   electron (r, up)    hole (r+1, down)
 *   CrossedUp     electron (r, down)  hole (r+1, up)
 *
 * A hole on the down leg leaves an up electron behind, so the crossed modes
 * carry S_z = +1 (CrossedDown) and -1 (CrossedUp); parallel modes carry 0.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ternary {

enum class Spin { down, up };

struct SpinSite {
  int rung = 1;
  Spin spin = Spin::down;
  bool operator==(const SpinSite&) const = default;
};

/// Linear chain position of a ladder site: 2r - 1 for down, 2r for up.
int interleave_index(int rung, Spin spin);
SpinSite interleave_site(int index);

enum class SpinMode { parallel_up, parallel_down, crossed_down, crossed_up };

inline constexpr std::array<SpinMode, 4> kSpinModes = {SpinMode::parallel_up, SpinMode::parallel_down,
                                                        SpinMode::crossed_down, SpinMode::crossed_up};

/// Unicode arrow for the mode: the harpoons for parallel, diagonal arrows for crossed.
std::string glyph(SpinMode mode);
/// ASCII tag used in reports: "pu", "pd", "cd", "cu".
std::string tag(SpinMode mode);
SpinMode spin_mode_from_tag(const std::string& tag);

bool is_parallel(SpinMode mode);
/// +1 for CrossedDown, -1 for CrossedUp, 0 for the parallel modes.
int spin_z(SpinMode mode);

SpinSite electron_site(SpinMode mode, int anchor);
SpinSite hole_site(SpinMode mode, int anchor);

struct Placement {
  SpinMode mode;
  int anchor;  ///< rung of the electron; the hole sits on anchor + 1
  bool operator==(const Placement&) const = default;
};

enum class Occupant : char { empty = '.', electron = 'e', hole = 'h' };

struct LadderConfiguration {
  int rungs = 0;
  std::vector<Placement> placements;  ///< ordered by anchor, then mode

  /// Occupant of every site, indexed by interleave_index - 1.
  std::vector<Occupant> occupancy() const;
  std::vector<int> empty_sites() const;  ///< linear indices
  int total_spin_z() const;
  std::vector<SpinMode> modes_used() const;  ///< distinct, in kSpinModes order
};

enum class ConfigClass { single, double_mode, multiple };

std::string to_string(ConfigClass c);

/// Two consecutive placements that can be exchanged for a different mode pair
/// with the same total S_z, so local modes change without changing the spin.
struct SpinWitness {
  Placement first;
  Placement second;
  std::array<SpinMode, 2> replacement;  ///< parallel modes whenever they qualify
};

struct Classification {
  ConfigClass cls = ConfigClass::single;
  bool spin_gap = false;
  std::optional<SpinWitness> witness;  ///< present for every gapless configuration
  std::string detail;                  ///< "crossed", "parallel" or "mixed" for double-mode
};

/// Every maximal placement of nearest-neighbour excitons on R rungs: no site
/// doubly occupied and no further exciton of any mode fits. R <= 12.
std::vector<LadderConfiguration> enumerate_configs(int rungs);

Classification classify(const LadderConfiguration& config);

struct ClassCounts {
  std::uint64_t total = 0;
  std::uint64_t single = 0;
  std::uint64_t single_parallel = 0;  ///< configurations using only one parallel mode
  std::uint64_t double_parallel = 0;  ///< {ParallelUp, ParallelDown}
  std::uint64_t double_crossed = 0;   ///< {CrossedDown, CrossedUp}
  std::uint64_t double_mixed = 0;
  std::uint64_t multiple = 0;
  std::uint64_t gapless_without_witness = 0;
};

ClassCounts tally(const std::vector<LadderConfiguration>& configs);

/// Two-line text art: the up leg above the down leg, rung 1 on the left.
/// Each cell is e or h followed by the glyph of its exciton; empty sites are '.'.
std::string render(const LadderConfiguration& config);

/// One term of a labelled two-exciton state: coefficient * |y, mode).
struct LabeledExciton {
  int y = 1;
  SpinMode mode = SpinMode::parallel_up;
  int coefficient = 1;
  bool operator==(const LabeledExciton&) const = default;
};

class PatternMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// |y_a, ParallelUp) - |y_b, ParallelDown)  ->  |y_b, CrossedDown) + |y_a, CrossedUp).
/// Throws PatternMismatch for any other input.
std::vector<LabeledExciton> singlet_fission_map(const std::vector<LabeledExciton>& input);

struct LegCounts {
  int up_electrons = 0;
  int up_holes = 0;
  int down_electrons = 0;
  int down_holes = 0;
  int spin_z = 0;
  bool operator==(const LegCounts&) const = default;
};

/// Electron and hole counts per leg, and total S_z, of the excitons in a term list.
LegCounts leg_counts(const std::vector<LabeledExciton>& terms);

struct CurieRow {
  double lambda_tilde = 0.0;
  double spin_gap = 0.0;
  bool near_pole = false;
  bool sign_change = false;  ///< the gap changes sign between this row and the next
};

struct CurieReport {
  std::vector<CurieRow> rows;
  double threshold = 0.0;  ///< sqrt of the largest root of the numerator
  double stated = 2.5;
  std::optional<std::pair<double, double>> bracket;  ///< last sign-change interval
};

/// Spin gap tabulated over [from, to] with the given step.
CurieReport curie_report(double from, double to, double step);

}  // namespace ternary
