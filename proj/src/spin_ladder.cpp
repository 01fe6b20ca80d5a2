// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/spin_ladder.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ternary/moment_engine.hpp"

namespace ternary {

namespace {

constexpr int kMaxRungs = 12;

int slot(SpinSite s) { return interleave_index(s.rung, s.spin) - 1; }

SpinMode other_parallel(SpinMode m) {
  return m == SpinMode::parallel_up ? SpinMode::parallel_down : SpinMode::parallel_up;
}

/// A different pair of modes with the same total S_z, or nothing when the
/// pair is locked (two equal crossed modes).
std::optional<std::array<SpinMode, 2>> spin_preserving_replacement(SpinMode a, SpinMode b) {
  const int sz = spin_z(a) + spin_z(b);
  const std::multiset<SpinMode> current{a, b};
  if (sz == 0) {
    const std::multiset<SpinMode> parallel{SpinMode::parallel_up, SpinMode::parallel_down};
    if (current != parallel) return std::array{SpinMode::parallel_up, SpinMode::parallel_down};
    return std::array{SpinMode::crossed_down, SpinMode::crossed_up};
  }
  if (sz == 1 || sz == -1) {
    const SpinMode crossed = is_parallel(a) ? b : a;
    const SpinMode parallel = is_parallel(a) ? a : b;
    return std::array{other_parallel(parallel), crossed};
  }
  return std::nullopt;
}

class Enumerator {
 public:
  explicit Enumerator(int rungs) : rungs_(rungs), occ_(static_cast<std::size_t>(2 * rungs), Occupant::empty) {}

  std::vector<LadderConfiguration> run() {
    if (rungs_ >= 2) descend(1);
    return std::move(out_);
  }

 private:
  bool fits(Placement p) const {
    return occ_[slot(electron_site(p.mode, p.anchor))] == Occupant::empty &&
           occ_[slot(hole_site(p.mode, p.anchor))] == Occupant::empty;
  }

  void set(Placement p, bool on) {
    occ_[slot(electron_site(p.mode, p.anchor))] = on ? Occupant::electron : Occupant::empty;
    occ_[slot(hole_site(p.mode, p.anchor))] = on ? Occupant::hole : Occupant::empty;
  }

  /// Whether some exciton anchored at `anchor` could still be added.
  bool open_at(int anchor) const {
    if (anchor < 1 || anchor > rungs_ - 1) return false;
    return std::any_of(kSpinModes.begin(), kSpinModes.end(), [&](SpinMode m) { return fits({m, anchor}); });
  }

  // Placements at anchor a touch rungs a and a + 1 only, so once anchor a is
  // decided nothing later can block a free slot at anchor a - 1.
  void descend(int anchor) {
    if (anchor == rungs_) {
      if (!open_at(rungs_ - 2) && !open_at(rungs_ - 1)) out_.push_back({rungs_, current_});
      return;
    }
    for (unsigned subset = 0; subset < 16U; ++subset) {
      std::vector<Placement> chosen;
      bool ok = true;
      for (std::size_t k = 0; k < kSpinModes.size() && ok; ++k) {
        if (!((subset >> k) & 1U)) continue;
        const Placement p{kSpinModes[k], anchor};
        ok = fits(p);
        if (ok) {
          set(p, true);
          chosen.push_back(p);
        }
      }
      if (ok && !open_at(anchor - 1)) {
        current_.insert(current_.end(), chosen.begin(), chosen.end());
        descend(anchor + 1);
        current_.resize(current_.size() - chosen.size());
      }
      for (const auto& p : chosen) set(p, false);
    }
  }

  int rungs_;
  std::vector<Occupant> occ_;
  std::vector<Placement> current_;
  std::vector<LadderConfiguration> out_;
};

}  // namespace

int interleave_index(int rung, Spin spin) {
  if (rung < 1) throw std::out_of_range("rung must be >= 1");
  return 2 * rung - (spin == Spin::down ? 1 : 0);
}

SpinSite interleave_site(int index) {
  if (index < 1) throw std::out_of_range("ladder index must be >= 1");
  return {(index + 1) / 2, index % 2 == 1 ? Spin::down : Spin::up};
}

std::string glyph(SpinMode mode) {
  switch (mode) {
    case SpinMode::parallel_up: return "⇀";
    case SpinMode::parallel_down: return "⇁";
    case SpinMode::crossed_down: return "↘";
    case SpinMode::crossed_up: return "↗";
  }
  return "?";
}

std::string tag(SpinMode mode) {
  switch (mode) {
    case SpinMode::parallel_up: return "pu";
    case SpinMode::parallel_down: return "pd";
    case SpinMode::crossed_down: return "cd";
    case SpinMode::crossed_up: return "cu";
  }
  return "?";
}

SpinMode spin_mode_from_tag(const std::string& t) {
  for (auto m : kSpinModes) {
    if (tag(m) == t) return m;
  }
  throw std::invalid_argument("unknown spin mode tag '" + t + "'");
}

bool is_parallel(SpinMode mode) { return mode == SpinMode::parallel_up || mode == SpinMode::parallel_down; }

int spin_z(SpinMode mode) {
  switch (mode) {
    case SpinMode::crossed_down: return 1;
    case SpinMode::crossed_up: return -1;
    default: return 0;
  }
}

SpinSite electron_site(SpinMode mode, int anchor) {
  const bool up = mode == SpinMode::parallel_up || mode == SpinMode::crossed_down;
  return {anchor, up ? Spin::up : Spin::down};
}

SpinSite hole_site(SpinMode mode, int anchor) {
  const bool up = mode == SpinMode::parallel_up || mode == SpinMode::crossed_up;
  return {anchor + 1, up ? Spin::up : Spin::down};
}

std::vector<Occupant> LadderConfiguration::occupancy() const {
  std::vector<Occupant> occ(static_cast<std::size_t>(2 * rungs), Occupant::empty);
  for (const auto& p : placements) {
    auto& e = occ[static_cast<std::size_t>(slot(electron_site(p.mode, p.anchor)))];
    auto& h = occ[static_cast<std::size_t>(slot(hole_site(p.mode, p.anchor)))];
    if (e != Occupant::empty || h != Occupant::empty) throw std::logic_error("ladder site doubly occupied");
    e = Occupant::electron;
    h = Occupant::hole;
  }
  return occ;
}

std::vector<int> LadderConfiguration::empty_sites() const {
  std::vector<int> out;
  const auto occ = occupancy();
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (occ[i] == Occupant::empty) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int LadderConfiguration::total_spin_z() const {
  int sz = 0;
  for (const auto& p : placements) sz += spin_z(p.mode);
  return sz;
}

std::vector<SpinMode> LadderConfiguration::modes_used() const {
  std::vector<SpinMode> out;
  for (auto m : kSpinModes) {
    if (std::any_of(placements.begin(), placements.end(), [m](const Placement& p) { return p.mode == m; })) {
      out.push_back(m);
    }
  }
  return out;
}

std::string to_string(ConfigClass c) {
  switch (c) {
    case ConfigClass::single: return "single";
    case ConfigClass::double_mode: return "double";
    case ConfigClass::multiple: return "multiple";
  }
  return "?";
}

std::vector<LadderConfiguration> enumerate_configs(int rungs) {
  if (rungs < 1 || rungs > kMaxRungs) {
    throw std::out_of_range("ladder enumeration supports 1..12 rungs, got " + std::to_string(rungs));
  }
  return Enumerator(rungs).run();
}

Classification classify(const LadderConfiguration& config) {
  Classification out;
  const auto modes = config.modes_used();
  out.cls = modes.size() <= 1 ? ConfigClass::single
            : modes.size() == 2 ? ConfigClass::double_mode
                                : ConfigClass::multiple;
  if (out.cls == ConfigClass::double_mode) {
    const bool a = is_parallel(modes[0]), b = is_parallel(modes[1]);
    out.detail = a && b ? "parallel" : (!a && !b ? "crossed" : "mixed");
  }
  for (std::size_t i = 0; i + 1 < config.placements.size(); ++i) {
    const auto& p = config.placements[i];
    const auto& q = config.placements[i + 1];
    if (const auto rep = spin_preserving_replacement(p.mode, q.mode)) {
      out.witness = SpinWitness{p, q, *rep};
      break;
    }
  }
  out.spin_gap = out.cls == ConfigClass::single;
  return out;
}

ClassCounts tally(const std::vector<LadderConfiguration>& configs) {
  ClassCounts c;
  for (const auto& cfg : configs) {
    ++c.total;
    const auto cl = classify(cfg);
    const auto modes = cfg.modes_used();
    switch (cl.cls) {
      case ConfigClass::single:
        ++c.single;
        if (modes.size() == 1 && is_parallel(modes[0])) ++c.single_parallel;
        break;
      case ConfigClass::double_mode:
        if (cl.detail == "parallel") ++c.double_parallel;
        else if (cl.detail == "crossed") ++c.double_crossed;
        else ++c.double_mixed;
        break;
      case ConfigClass::multiple: ++c.multiple; break;
    }
    if (!cl.spin_gap && !cl.witness) ++c.gapless_without_witness;
  }
  return c;
}

std::string render(const LadderConfiguration& config) {
  std::vector<std::string> cells(static_cast<std::size_t>(2 * config.rungs), " . ");
  for (const auto& p : config.placements) {
    cells[static_cast<std::size_t>(slot(electron_site(p.mode, p.anchor)))] = "e" + glyph(p.mode) + " ";
    cells[static_cast<std::size_t>(slot(hole_site(p.mode, p.anchor)))] = "h" + glyph(p.mode) + " ";
  }
  std::string up = "up   |", down = "down |";
  for (int r = 1; r <= config.rungs; ++r) {
    up += cells[static_cast<std::size_t>(slot({r, Spin::up}))];
    down += cells[static_cast<std::size_t>(slot({r, Spin::down}))];
  }
  return up + "\n" + down + "\n";
}

std::vector<LabeledExciton> singlet_fission_map(const std::vector<LabeledExciton>& input) {
  if (input.size() != 2) throw PatternMismatch("fission map expects exactly two labelled excitons");
  const auto pu = std::find_if(input.begin(), input.end(), [](const LabeledExciton& e) {
    return e.mode == SpinMode::parallel_up && e.coefficient == 1;
  });
  const auto pd = std::find_if(input.begin(), input.end(), [](const LabeledExciton& e) {
    return e.mode == SpinMode::parallel_down && e.coefficient == -1;
  });
  if (pu == input.end() || pd == input.end()) {
    throw PatternMismatch("fission map expects |y_a, pu) - |y_b, pd)");
  }
  if (pu->y < 1 || pd->y < 1) throw PatternMismatch("exciton distances must be positive");
  return {{pd->y, SpinMode::crossed_down, 1}, {pu->y, SpinMode::crossed_up, 1}};
}

LegCounts leg_counts(const std::vector<LabeledExciton>& terms) {
  LegCounts c;
  for (const auto& t : terms) {
    (electron_site(t.mode, 1).spin == Spin::up ? c.up_electrons : c.down_electrons) += 1;
    (hole_site(t.mode, 1).spin == Spin::up ? c.up_holes : c.down_holes) += 1;
    c.spin_z += spin_z(t.mode);
  }
  return c;
}

CurieReport curie_report(double from, double to, double step) {
  if (!(step > 0.0) || !(to >= from)) throw std::invalid_argument("curie_report needs from <= to and step > 0");
  CurieReport rep;
  rep.threshold = curie_threshold();
  const auto n = static_cast<long>(std::floor((to - from) / step + 1e-9));
  std::vector<double> denominators;
  for (long i = 0; i <= n; ++i) {
    const double lt = from + static_cast<double>(i) * step;
    const double x = lt * lt;
    const auto g = spin_gap(lt);
    rep.rows.push_back({lt, g.value, g.near_pole, false});
    denominators.push_back(x * x - 4.0 * x + 2.0);
  }
  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    auto& row = rep.rows[i];
    row.sign_change = std::signbit(row.spin_gap) != std::signbit(rep.rows[i + 1].spin_gap);
    const bool pole_between = std::signbit(denominators[i]) != std::signbit(denominators[i + 1]);
    if (row.sign_change && !pole_between) rep.bracket = {row.lambda_tilde, rep.rows[i + 1].lambda_tilde};
  }
  return rep;
}

}  // namespace ternary
