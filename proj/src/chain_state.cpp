// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/chain_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ternary {

FockBasisState reference_occupation(int sites) {
  std::uint64_t occ = 0;
  for (int p = 1; p <= sites; ++p) occ |= std::uint64_t{1} << mode_index(p, Species::d);
  return FockBasisState{occ};
}

ChainState::ChainState(int sites) : sites_(sites) {
  if (sites < 1 || sites > kMaxSites) {
    throw std::out_of_range("chain length " + std::to_string(sites) + " outside [1, " +
                            std::to_string(kMaxSites) + "]");
  }
}

ChainState ChainState::basis(int sites, FockBasisState s, Complex amp) {
  ChainState out(sites);
  out.add(s, amp);
  return out;
}

Complex ChainState::amplitude(FockBasisState s) const {
  auto it = amps_.find(s.occ);
  return it == amps_.end() ? Complex{} : it->second;
}

void ChainState::add(FockBasisState s, Complex amp) {
  if (amp == Complex{}) return;
  auto [it, inserted] = amps_.try_emplace(s.occ, amp);
  if (!inserted) it->second += amp;
}

double ChainState::norm_squared() const {
  double acc = 0.0;
  for (const auto& [occ, a] : amps_) acc += std::norm(a);
  return acc;
}

double ChainState::norm() const { return std::sqrt(norm_squared()); }

Complex ChainState::inner(const ChainState& other) const {
  const auto& small = amps_.size() <= other.amps_.size() ? amps_ : other.amps_;
  const auto& large = amps_.size() <= other.amps_.size() ? other.amps_ : amps_;
  const bool this_is_small = &small == &amps_;
  Complex acc{};
  for (const auto& [occ, a] : small) {
    auto it = large.find(occ);
    if (it == large.end()) continue;
    acc += this_is_small ? std::conj(a) * it->second : std::conj(it->second) * a;
  }
  return acc;
}

ChainState ChainState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalise the zero state");
  ChainState out = *this;
  out *= 1.0 / n;
  return out;
}

void ChainState::prune(double threshold) {
  std::erase_if(amps_, [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
}

std::vector<std::pair<FockBasisState, Complex>> ChainState::sorted_terms() const {
  std::vector<std::pair<FockBasisState, Complex>> out;
  out.reserve(amps_.size());
  for (const auto& [occ, a] : amps_) out.emplace_back(FockBasisState{occ}, a);
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first.occ < y.first.occ; });
  return out;
}

ChainState& ChainState::operator+=(const ChainState& rhs) {
  if (rhs.sites_ != sites_) throw std::invalid_argument("chain length mismatch");
  for (const auto& [occ, a] : rhs.amps_) add(FockBasisState{occ}, a);
  return *this;
}

ChainState& ChainState::operator-=(const ChainState& rhs) {
  if (rhs.sites_ != sites_) throw std::invalid_argument("chain length mismatch");
  for (const auto& [occ, a] : rhs.amps_) add(FockBasisState{occ}, -a);
  return *this;
}

ChainState& ChainState::operator*=(Complex s) {
  if (s == Complex{}) {
    amps_.clear();
    return *this;
  }
  for (auto& [occ, a] : amps_) a *= s;
  return *this;
}

double distance(const ChainState& a, const ChainState& b) { return (a - b).norm(); }

}  // namespace ternary
