// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/moment_engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "ternary/qutrit_algebra.hpp"

namespace ternary {

std::complex<double> ExactComplex::to_complex() const {
  return {boost::rational_cast<double>(re), boost::rational_cast<double>(im)};
}

namespace {

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

}  // namespace

std::string to_string(const ExactComplex& c) {
  if (c.im.numerator() == 0) return rational_text(c.re);
  if (c.re.numerator() == 0) return rational_text(c.im) + "i";
  return "(" + rational_text(c.re) + (c.im.numerator() < 0 ? " - " : " + ") + rational_text(c.im.numerator() < 0 ? -c.im : c.im) + "i)";
}

OpWord parse_word(std::string_view text) {
  OpWord out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'B' && tok[0] != 'b')) throw std::invalid_argument("bad letter '" + tok + "'");
    bool create = tok.back() == '+';
    const std::string digits = tok.substr(1, tok.size() - 1 - (create ? 1 : 0));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw std::invalid_argument("bad mode in letter '" + tok + "'");
    }
    out.push_back({std::stoi(digits), create});
  }
  return out;
}

std::string format_word(const OpWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += "B" + std::to_string(l.mode) + (l.create ? "+" : "");
  }
  return out;
}

OpPolynomial::OpPolynomial(const OpWord& w, ExactComplex c) { add(w, c); }

OpPolynomial OpPolynomial::constant(ExactComplex c) { return OpPolynomial(OpWord{}, c); }

void OpPolynomial::add(const OpWord& w, const ExactComplex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

OpPolynomial OpPolynomial::operator+(const OpPolynomial& rhs) const {
  OpPolynomial out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add(w, c);
  return out;
}

OpPolynomial OpPolynomial::operator-(const OpPolynomial& rhs) const { return *this + ExactComplex{-1} * rhs; }

OpPolynomial OpPolynomial::operator*(const OpPolynomial& rhs) const {
  OpPolynomial out;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : rhs.terms_) {
      OpWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

OpPolynomial operator*(const ExactComplex& c, const OpPolynomial& p) {
  OpPolynomial out;
  for (const auto& [w, v] : p.terms_) out.add(w, c * v);
  return out;
}

std::string OpPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += ternary::to_string(c);
    if (!w.empty()) out += " " + format_word(w);
  }
  return out;
}

namespace {

/// Sort key of a letter: creations first for normal order, last for antinormal.
int key(const Letter& l, bool normal) { return ((l.create == normal) ? 0 : 1) * 1'000'000 + l.mode; }

std::vector<std::size_t> disorders(const OpWord& w, bool normal) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (key(w[i], normal) > key(w[i + 1], normal)) out.push_back(i);
  }
  return out;
}

OpPolynomial reorder(const OpPolynomial& p, bool normal, RewriteStrategy strategy, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  OpPolynomial done;
  std::vector<std::pair<OpWord, ExactComplex>> work(p.terms().begin(), p.terms().end());
  // Contracting b b^dag gives +1 in normal order; b^dag b gives -1 in antinormal order.
  const ExactComplex contraction = normal ? ExactComplex{1} : ExactComplex{-1};
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    const auto bad = disorders(w, normal);
    if (bad.empty()) {
      done.add(w, c);
      continue;
    }
    std::size_t i = bad.front();
    if (strategy == RewriteStrategy::rightmost) i = bad.back();
    if (strategy == RewriteStrategy::random) {
      i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
    }
    if (w[i].mode == w[i + 1].mode && w[i].create != w[i + 1].create) {
      OpWord contracted;
      contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      work.emplace_back(std::move(contracted), contraction * c);
    }
    std::swap(w[i], w[i + 1]);
    work.emplace_back(std::move(w), c);
  }
  return done;
}

}  // namespace

bool is_normal_ordered(const OpWord& w) { return disorders(w, true).empty(); }
bool is_antinormal_ordered(const OpWord& w) { return disorders(w, false).empty(); }

OpPolynomial normal_order(const OpPolynomial& p, RewriteStrategy strategy, std::uint64_t seed) {
  return reorder(p, true, strategy, seed);
}

OpPolynomial antinormal_order(const OpPolynomial& p, RewriteStrategy strategy, std::uint64_t seed) {
  return reorder(p, false, strategy, seed);
}

namespace {

std::complex<double> single_mode_expect(const OpWord& w, const ModeState& st) {
  const bool canonical = st.kind == ModeKind::canonical;
  const auto ordered = canonical ? normal_order(OpPolynomial(w)) : antinormal_order(OpPolynomial(w));
  // Complementary moments carry the eigenvalue -lt of b^dag.
  const std::complex<double> l = canonical ? st.value : -st.value;
  std::complex<double> acc{};
  for (const auto& [word, c] : ordered.terms()) {
    int m = 0, n = 0;
    for (const auto& letter : word) (letter.create ? m : n) += 1;
    const auto lc = std::conj(l);
    acc += canonical ? c.to_complex() * std::pow(lc, m) * std::pow(l, n)
                     : c.to_complex() * std::pow(l, m) * std::pow(lc, n);
  }
  return acc;
}

}  // namespace

std::complex<double> expect(const OpWord& w, const MomentSpec& spec) {
  std::map<int, OpWord> by_mode;
  for (const auto& l : w) {
    if (!spec.contains(l.mode)) throw UndeclaredMode("mode " + std::to_string(l.mode) + " has no declared state");
    by_mode[l.mode].push_back(l);
  }
  std::complex<double> acc{1.0};
  for (const auto& [mode, sub] : by_mode) acc *= single_mode_expect(sub, spec.at(mode));
  return acc;
}

std::complex<double> expect(const OpPolynomial& p, const MomentSpec& spec) {
  std::complex<double> acc{};
  for (const auto& [w, c] : p.terms()) acc += c.to_complex() * expect(w, spec);
  return acc;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::x() { return Polynomial({Rational{0}, Rational{1}}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().numerator() == 0) c_.pop_back();
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + boost::rational_cast<double>(*it);
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Rational> out(std::max(c_.size(), rhs.c_.size()), Rational{0});
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<Rational> neg = rhs.c_;
  for (auto& v : neg) v = -v;
  return *this + Polynomial(std::move(neg));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (c_.empty() || rhs.c_.empty()) return {};
  std::vector<Rational> out(c_.size() + rhs.c_.size() - 1, Rational{0});
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& v = c_[static_cast<std::size_t>(k)];
    if (v.numerator() == 0) continue;
    const bool neg = v.numerator() < 0;
    const Rational a = neg ? -v : v;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (a != Rational{1} || k == 0) out += rational_text(a);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

bool RationalFunction::equivalent(const RationalFunction& rhs) const { return num * rhs.den == rhs.num * den; }

std::optional<Polynomial> expect_in_x(const OpPolynomial& p, int mode, ModeKind kind) {
  const auto ordered = kind == ModeKind::canonical ? normal_order(p) : antinormal_order(p);
  std::vector<Rational> coeffs;
  for (const auto& [w, c] : ordered.terms()) {
    int m = 0, n = 0;
    for (const auto& l : w) {
      if (l.mode != mode) throw UndeclaredMode("expect_in_x: word mixes modes");
      (l.create ? m : n) += 1;
    }
    if (m != n || c.im.numerator() != 0) return std::nullopt;
    // (-1)^(m+n) from the complementary eigenvalue is +1 when m == n.
    if (coeffs.size() <= static_cast<std::size_t>(m)) coeffs.resize(static_cast<std::size_t>(m) + 1, Rational{0});
    coeffs[static_cast<std::size_t>(m)] += c.re;
  }
  return Polynomial(std::move(coeffs));
}

namespace {

Polynomial must(std::optional<Polynomial> p) {
  if (!p) throw std::logic_error("moment is not phase invariant");
  return *p;
}

Polynomial canonical_x(const char* word) { return must(expect_in_x(OpPolynomial(parse_word(word)), 1, ModeKind::canonical)); }

Polynomial complementary_x(const char* word) {
  return must(expect_in_x(OpPolynomial(parse_word(word)), 1, ModeKind::complementary));
}

}  // namespace

RationalFunction excited_number_symbolic() {
  return {canonical_x("B1 B1+ B1 B1+"), canonical_x("B1 B1+")};
}

RationalFunction absorbed_number_symbolic() {
  const auto ex = excited_number_symbolic();
  return {ex.num - canonical_x("B1+ B1") * ex.den, ex.den};
}

Polynomial fluctuation_symbolic() {
  const auto mean = canonical_x("B1+ B1");
  return canonical_x("B1+ B1 B1+ B1") - mean * mean;
}

RationalFunction spin_gap_symbolic() {
  return {complementary_x("B1+ B1+ B1+ B1 B1 B1"), complementary_x("B1+ B1+ B1 B1")};
}

double excited_number(std::complex<double> lambda) {
  const double x = std::norm(lambda);
  return (1.0 + 3.0 * x + x * x) / (1.0 + x);
}

double absorbed_number(std::complex<double> lambda) {
  const double x = std::norm(lambda);
  return 1.0 + x - x * x / (1.0 + x);
}

SpinGapValue spin_gap(std::complex<double> lambda_tilde) {
  const double x = std::norm(lambda_tilde);
  const double den = x * x - 4.0 * x + 2.0;
  SpinGapValue out;
  out.near_pole = std::abs(den) < 1e-8;
  if (den == 0.0) throw std::domain_error("spin gap evaluated on a pole of x^2 - 4x + 2");
  out.value = (x * x * x - 9.0 * x * x + 18.0 * x - 6.0) / den;
  return out;
}

double curie_threshold(double tol) {
  auto cubic = [](double x) { return ((x - 9.0) * x + 18.0) * x - 6.0; };
  // Local maximum/minimum of the cubic sit at 3 -+ sqrt(3); the largest root lies above 3 + sqrt(3).
  double lo = 3.0 + std::sqrt(3.0), hi = 20.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (cubic(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::sqrt(0.5 * (lo + hi));
}

OpPolynomial falling_product_antinormal(int mode, int n) {
  OpPolynomial out = OpPolynomial::constant(ExactComplex{1});
  const OpPolynomial bbd(OpWord{{mode, false}, {mode, true}});
  for (int k = 1; k <= n; ++k) out = out * (bbd - OpPolynomial::constant(ExactComplex{k}));
  return antinormal_order(out);
}

FissionEnergy fission_energy(std::complex<double> lambda_tilde_1) {
  const double x = std::norm(lambda_tilde_1);
  if (!(x > 1.0)) throw std::domain_error("fission energy needs |lambda_tilde_1| > 1");
  FissionEnergy out{2.0 / x - 1.0, FissionKind::boundary};
  if (out.delta < 0.0) out.kind = FissionKind::exothermal;
  if (out.delta > 0.0) out.kind = FissionKind::endothermal;
  return out;
}

DcCurrent dc_current(double lambda, double phi, double alpha_L, double alpha_1) {
  DcCurrent out;
  out.value = lambda * lambda * std::sin(phi) / (2.0 * std::cosh(alpha_L) * std::cosh(alpha_1));
  out.theta_L = alpha_to_theta(alpha_L);
  out.theta_1 = alpha_to_theta(alpha_1);
  out.two_step = 2.0 * lambda * lambda * std::sin(phi) * std::sin(out.theta_L) * std::cos(out.theta_L) *
                 std::sin(out.theta_1) * std::cos(out.theta_1);
  return out;
}

double ac_current(double omega, double theta, double beta_e) {
  if (!(beta_e > 0.0)) throw std::domain_error("ac current needs beta_E > 0");
  return omega * std::sin(2.0 * theta) / (-std::expm1(-beta_e));
}

BeMatch be_match(double beta_e, const std::vector<int>& odd_modes) {
  if (!(beta_e > 0.0)) throw std::domain_error("Bose-Einstein matching needs beta_E > 0");
  if (odd_modes.empty()) throw std::invalid_argument("Bose-Einstein matching needs at least one odd mode");
  for (int y : odd_modes) {
    if (y < 1 || y % 2 == 0) throw std::invalid_argument("mode " + std::to_string(y) + " is not a positive odd y");
  }
  BeMatch out;
  out.total = 1.0 / std::expm1(beta_e);
  const double share = out.total / static_cast<double>(odd_modes.size());
  if (share < 0.0) throw std::domain_error("negative occupation share");
  for (int y : odd_modes) {
    BeAssignment a{y, share / 2.0, 1.0 + share / 2.0};
    out.equal_energy = out.equal_energy && std::abs((a.lambda_tilde_sq - 1.0) - a.lambda_sq) < 1e-12;
    out.pairs.push_back(a);
  }
  return out;
}

std::complex<double> numeric_single_mode_expect(const OpWord& w, std::complex<double> lambda, int ceiling) {
  const int dim = ceiling + 1;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXcd bd = b.adjoint();
  Eigen::VectorXcd psi(dim);
  std::complex<double> amp{1.0};
  for (int n = 0; n < dim; ++n) {
    psi(n) = amp;
    amp *= lambda / std::sqrt(static_cast<double>(n + 1));
  }
  psi.normalize();
  Eigen::VectorXcd v = psi;
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = (it->create ? bd : b) * v;
  return psi.dot(v);
}

}  // namespace ternary
