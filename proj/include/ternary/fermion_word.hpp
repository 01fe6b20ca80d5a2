// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fermion_word.hpp
 * @brief Polynomials in fermionic ladder letters, applied by bit arithmetic.
 *
 * Composite operators such as the exciton creator are short products of sums
 * (f = (c + d)/sqrt2, ...). Expanding them into words of single-mode letters
 * lets a basis state be pushed through the whole operator with a handful of
 * popcounts instead of a chain of intermediate ChainStates.
 */

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ternary/chain_state.hpp"
#include "ternary/linear_op.hpp"

namespace ternary {

struct FermionLetter {
  int mode;
  bool create;
  auto operator<=>(const FermionLetter&) const = default;
};

/// Letters in written order; the last letter acts first.
using FermionWord = std::vector<FermionLetter>;

/// Applies a word to a basis state. Returns the image and its sign, or nothing.
std::optional<std::pair<FockBasisState, int>> apply_word(const FermionWord& word, FockBasisState s);

class FermionPolynomial {
 public:
  FermionPolynomial() = default;

  static FermionPolynomial letter(int mode, bool create);
  static FermionPolynomial scalar(Complex c);

  /// Single-site combinations on a 1-based site.
  static FermionPolynomial f(int site, bool dag);
  static FermionPolynomial g(int site, bool dag);

  FermionPolynomial operator*(const FermionPolynomial& rhs) const;
  FermionPolynomial operator+(const FermionPolynomial& rhs) const;
  FermionPolynomial operator-(const FermionPolynomial& rhs) const;
  friend FermionPolynomial operator*(Complex s, const FermionPolynomial& p);

  FermionPolynomial adjoint() const;

  const std::vector<std::pair<FermionWord, Complex>>& terms() const { return terms_; }

  /// Adds (this)|s> * amp into out.
  void apply(FockBasisState s, Complex amp, ChainState& out) const;

  LinearOp to_op(int sites, std::string label = {}) const;

 private:
  void canonicalize();
  std::vector<std::pair<FermionWord, Complex>> terms_;
};

}  // namespace ternary
