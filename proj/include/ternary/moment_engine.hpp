// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file moment_engine.hpp
 * @brief Exact bosonic word algebra and coherent-state moments.
 *
 * Words in the letters b_y, b_y^dag are rewritten with [b_y, b_y'^dag] =
 * delta_yy' using exact rational arithmetic. Canonical coherent modes are
 * evaluated from the normal-ordered form, complementary modes from the
 * antinormal-ordered form:
 *
 *     canonical:      <b^dag^m b^n>  = conj(l)^m l^n
 *     complementary:  <b^m b^dag^n>  = (-conj(lt))^m (-lt)^n
 *
 * Single-mode results that depend only on x = |l|^2 come back as exact
 * polynomials in x, so closed forms can be compared coefficient by
 * coefficient.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace ternary {

using Rational = boost::rational<std::int64_t>;

struct ExactComplex {
  Rational re{0};
  Rational im{0};

  ExactComplex() = default;
  ExactComplex(Rational r, Rational i = Rational{0}) : re(r), im(i) {}
  ExactComplex(std::int64_t r) : re(r) {}

  bool is_zero() const { return re.numerator() == 0 && im.numerator() == 0; }
  ExactComplex conj() const { return {re, -im}; }
  std::complex<double> to_complex() const;

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ExactComplex& operator+=(const ExactComplex& b) { return *this = *this + b; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const ExactComplex& c);

struct Letter {
  int mode;
  bool create;
  auto operator<=>(const Letter&) const = default;
};

using OpWord = std::vector<Letter>;

/// Parses "B1+ B1+ B1 B1": mode number after B, trailing '+' marks creation.
OpWord parse_word(std::string_view text);
std::string format_word(const OpWord& w);

class OpPolynomial {
 public:
  using Map = std::map<OpWord, ExactComplex>;

  OpPolynomial() = default;
  explicit OpPolynomial(const OpWord& w, ExactComplex c = ExactComplex{1});
  static OpPolynomial constant(ExactComplex c);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const OpWord& w, const ExactComplex& c);

  OpPolynomial operator+(const OpPolynomial& rhs) const;
  OpPolynomial operator-(const OpPolynomial& rhs) const;
  OpPolynomial operator*(const OpPolynomial& rhs) const;
  friend OpPolynomial operator*(const ExactComplex& c, const OpPolynomial& p);
  friend bool operator==(const OpPolynomial& a, const OpPolynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  Map terms_;
};

enum class RewriteStrategy { leftmost, rightmost, random };

/// Creations before annihilations, each group sorted by mode.
bool is_normal_ordered(const OpWord& w);
/// Annihilations before creations, each group sorted by mode.
bool is_antinormal_ordered(const OpWord& w);

OpPolynomial normal_order(const OpPolynomial& p, RewriteStrategy strategy = RewriteStrategy::leftmost,
                          std::uint64_t seed = 0);
OpPolynomial antinormal_order(const OpPolynomial& p, RewriteStrategy strategy = RewriteStrategy::leftmost,
                              std::uint64_t seed = 0);

enum class ModeKind { canonical, complementary };

struct ModeState {
  ModeKind kind = ModeKind::canonical;
  std::complex<double> value;  ///< lambda or lambda_tilde
};

using MomentSpec = std::map<int, ModeState>;

class UndeclaredMode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric expectation of a polynomial under a product of coherent modes.
std::complex<double> expect(const OpPolynomial& p, const MomentSpec& spec);
std::complex<double> expect(const OpWord& w, const MomentSpec& spec);

/// Exact univariate polynomial, coefficient k multiplies x^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial x();

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double operator()(double x) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct RationalFunction {
  Polynomial num;
  Polynomial den;
  double operator()(double x) const { return num(x) / den(x); }
  /// Equality as functions: num * rhs.den == rhs.num * den.
  bool equivalent(const RationalFunction& rhs) const;
};

/// Single-mode expectation as an exact polynomial in x = |lambda|^2 (or
/// |lambda_tilde|^2). Returns nullopt when the result is not phase-invariant.
std::optional<Polynomial> expect_in_x(const OpPolynomial& p, int mode, ModeKind kind);

RationalFunction excited_number_symbolic();
RationalFunction absorbed_number_symbolic();
Polynomial fluctuation_symbolic();
RationalFunction spin_gap_symbolic();

/// (1 + 3x + x^2)/(1 + x), x = |lambda|^2.
double excited_number(std::complex<double> lambda);
/// 1 + x - x^2/(1 + x).
double absorbed_number(std::complex<double> lambda);

struct SpinGapValue {
  double value = 0.0;
  bool near_pole = false;
};

/// (x^3 - 9x^2 + 18x - 6)/(x^2 - 4x + 2), x = |lambda_tilde|^2.
SpinGapValue spin_gap(std::complex<double> lambda_tilde);

/// |lambda_tilde| at the largest root of x^3 - 9x^2 + 18x - 6, by bisection.
double curie_threshold(double tol = 1e-12);

/// b^dag^n b^n in antinormal form built as prod_{k=1..n} (b b^dag - k).
OpPolynomial falling_product_antinormal(int mode, int n);

enum class FissionKind { exothermal, boundary, endothermal };

struct FissionEnergy {
  double delta = 0.0;
  FissionKind kind = FissionKind::boundary;
};

/// 2/|lt|^2 - 1; |lt| <= 1 is rejected.
FissionEnergy fission_energy(std::complex<double> lambda_tilde_1);

struct DcCurrent {
  double value = 0.0;
  double theta_L = 0.0;
  double theta_1 = 0.0;
  double two_step = 0.0;  ///< 2 l^2 sin(phi) sin cos(theta_L) sin cos(theta_1)
};

DcCurrent dc_current(double lambda, double phi, double alpha_L, double alpha_1);

/// omega sin(2 theta) / (1 - e^{-beta_E}).
double ac_current(double omega, double theta, double beta_e);

struct BeAssignment {
  int y = 0;                      ///< odd mode carrying the canonical factor
  double lambda_sq = 0.0;         ///< |lambda_y|^2
  double lambda_tilde_sq = 0.0;   ///< |lambda_tilde_{y+1}|^2
};

struct BeMatch {
  double total = 0.0;  ///< 1/(e^beta - 1)
  std::vector<BeAssignment> pairs;
  bool equal_energy = true;
};

/// Uniform split of the Bose-Einstein occupation over the odd modes.
BeMatch be_match(double beta_e, const std::vector<int>& odd_modes);

/// Truncated single-mode Fock backend: <l| word |l> with the coherent state cut
/// at `ceiling` quanta and renormalized.
std::complex<double> numeric_single_mode_expect(const OpWord& w, std::complex<double> lambda, int ceiling = 40);

}  // namespace ternary
