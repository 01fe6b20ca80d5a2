// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/fermion_word.hpp"

#include <bit>
#include <cmath>
#include <map>

namespace ternary {

std::optional<std::pair<FockBasisState, int>> apply_word(const FermionWord& word, FockBasisState s) {
  std::uint64_t occ = s.occ;
  int parity = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const std::uint64_t bit = std::uint64_t{1} << it->mode;
    if (((occ & bit) != 0) == it->create) return std::nullopt;
    parity ^= std::popcount(occ & (bit - 1)) & 1;
    occ ^= bit;
  }
  return std::make_pair(FockBasisState{occ}, parity ? -1 : 1);
}

FermionPolynomial FermionPolynomial::letter(int mode, bool create) {
  FermionPolynomial p;
  p.terms_.push_back({FermionWord{{mode, create}}, Complex{1.0}});
  return p;
}

FermionPolynomial FermionPolynomial::scalar(Complex c) {
  FermionPolynomial p;
  if (c != Complex{}) p.terms_.push_back({FermionWord{}, c});
  return p;
}

FermionPolynomial FermionPolynomial::f(int site, bool dag) {
  const double r = 1.0 / std::sqrt(2.0);
  return Complex{r} * (letter(mode_index(site, Species::c), dag) + letter(mode_index(site, Species::d), dag));
}

FermionPolynomial FermionPolynomial::g(int site, bool dag) {
  const double r = 1.0 / std::sqrt(2.0);
  return Complex{r} * (letter(mode_index(site, Species::c), dag) - letter(mode_index(site, Species::d), dag));
}

FermionPolynomial FermionPolynomial::operator*(const FermionPolynomial& rhs) const {
  FermionPolynomial out;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : rhs.terms_) {
      FermionWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.terms_.push_back({std::move(w), ca * cb});
    }
  }
  out.canonicalize();
  return out;
}

FermionPolynomial FermionPolynomial::operator+(const FermionPolynomial& rhs) const {
  FermionPolynomial out = *this;
  out.terms_.insert(out.terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  out.canonicalize();
  return out;
}

FermionPolynomial FermionPolynomial::operator-(const FermionPolynomial& rhs) const {
  return *this + Complex{-1.0} * rhs;
}

FermionPolynomial operator*(Complex s, const FermionPolynomial& p) {
  FermionPolynomial out = p;
  for (auto& [w, c] : out.terms_) c *= s;
  out.canonicalize();
  return out;
}

FermionPolynomial FermionPolynomial::adjoint() const {
  FermionPolynomial out;
  for (const auto& [w, c] : terms_) {
    FermionWord r(w.rbegin(), w.rend());
    for (auto& l : r) l.create = !l.create;
    out.terms_.push_back({std::move(r), std::conj(c)});
  }
  out.canonicalize();
  return out;
}

void FermionPolynomial::canonicalize() {
  std::map<FermionWord, Complex> merged;
  for (auto& [w, c] : terms_) {
    bool dead = false;
    for (std::size_t i = 1; i < w.size() && !dead; ++i) dead = w[i] == w[i - 1];
    if (!dead) merged[std::move(w)] += c;
  }
  terms_.clear();
  for (auto& [w, c] : merged) {
    if (std::abs(c) > 1e-15) terms_.push_back({w, c});
  }
}

void FermionPolynomial::apply(FockBasisState s, Complex amp, ChainState& out) const {
  for (const auto& [w, c] : terms_) {
    if (auto r = apply_word(w, s)) out.add(r->first, static_cast<double>(r->second) * c * amp);
  }
}

LinearOp FermionPolynomial::to_op(int sites, std::string label) const {
  auto make = [](FermionPolynomial p) {
    return [p = std::move(p)](const ChainState& psi) {
      ChainState out(psi.sites());
      for (const auto& [occ, a] : psi.terms()) p.apply(FockBasisState{occ}, a, out);
      out.prune();
      return out;
    };
  };
  return LinearOp(sites, make(*this), make(adjoint()), std::move(label));
}

}  // namespace ternary
