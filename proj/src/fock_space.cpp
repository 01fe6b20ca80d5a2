// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/fock_space.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ternary {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_site(int sites, int site) {
  if (site < 1 || site > sites) {
    throw std::out_of_range("site " + std::to_string(site) + " outside chain of " +
                            std::to_string(sites) + " sites");
  }
}

struct SiteComponent {
  unsigned content;
  double amp;
};

std::vector<SiteComponent> components_of(SiteLabel label) {
  switch (label) {
    case SiteLabel::plus: return {{content::kPlus, 1.0}};
    case SiteLabel::minus: return {{content::kMinus, 1.0}};
    case SiteLabel::vacuum: return {{content::kReference, kInvSqrt2}, {content::kCOnly, kInvSqrt2}};
    case SiteLabel::vacuum_prime: return {{content::kReference, kInvSqrt2}, {content::kCOnly, -kInvSqrt2}};
    case SiteLabel::reference: return {{content::kReference, 1.0}};
  }
  return {};
}

constexpr bool is_neutral(unsigned c) { return c == content::kReference || c == content::kCOnly; }

FockBasisState with_site_content(FockBasisState s, int site, unsigned c) {
  const int shift = 2 * (site - 1);
  s.occ = (s.occ & ~(std::uint64_t{3} << shift)) | (std::uint64_t{c} << shift);
  return s;
}

}  // namespace

char to_char(SiteLabel label) {
  switch (label) {
    case SiteLabel::plus: return '+';
    case SiteLabel::vacuum: return 'o';
    case SiteLabel::minus: return '-';
    case SiteLabel::vacuum_prime: return 'p';
    case SiteLabel::reference: return '0';
  }
  return '?';
}

SiteLabel site_label_from_char(char ch) {
  switch (ch) {
    case '+': return SiteLabel::plus;
    case 'o': return SiteLabel::vacuum;
    case '-': return SiteLabel::minus;
    case 'p': return SiteLabel::vacuum_prime;
    case '0': return SiteLabel::reference;
    default: throw std::invalid_argument(std::string("unknown site label '") + ch + "'");
  }
}

std::vector<SiteLabel> parse_ket(std::string_view text) {
  std::vector<SiteLabel> out;
  out.reserve(text.size());
  for (char ch : text) out.push_back(site_label_from_char(ch));
  return out;
}

std::string format_ket(const std::vector<SiteLabel>& labels_high_first) {
  std::string out;
  for (auto l : labels_high_first) out.push_back(to_char(l));
  return out;
}

LinearOp build_mode_op(int sites, Ladder kind, Species species, int site) {
  require_site(sites, site);
  const int mode = mode_index(site, species);
  const std::uint64_t bit = std::uint64_t{1} << mode;
  const std::uint64_t below = bit - 1;

  auto act = [bit, below](bool create) {
    return [bit, below, create](const ChainState& psi) {
      ChainState out(psi.sites());
      for (const auto& [occ, a] : psi.terms()) {
        const bool filled = (occ & bit) != 0;
        if (filled == create) continue;
        const double sign = (std::popcount(occ & below) & 1) ? -1.0 : 1.0;
        out.add(FockBasisState{occ ^ bit}, sign * a);
      }
      return out;
    };
  };
  const bool create = kind == Ladder::create;
  std::string label = std::string(species == Species::c ? "c" : "d") + (create ? "^dag_" : "_") +
                      std::to_string(site);
  return LinearOp(sites, act(create), act(!create), std::move(label));
}

int convention_sign(FockBasisState s, int sites) {
  int neutral_below = 0;
  int parity = 0;
  for (int p = 1; p <= sites; ++p) {
    const unsigned c = s.site_content(p);
    if (is_neutral(c)) {
      ++neutral_below;
    } else {
      parity ^= neutral_below & 1;
    }
  }
  return parity ? -1 : 1;
}

ChainState product_state(const std::vector<SiteLabel>& labels_high_first) {
  const int sites = static_cast<int>(labels_high_first.size());
  ChainState out(sites);
  // Enumerate the per-site components, site 1 first.
  std::vector<std::vector<SiteComponent>> per_site(sites);
  for (int p = 1; p <= sites; ++p) per_site[p - 1] = components_of(labels_high_first[sites - p]);

  std::vector<std::size_t> pick(sites, 0);
  while (true) {
    FockBasisState s{};
    double amp = 1.0;
    for (int p = 1; p <= sites; ++p) {
      const auto& comp = per_site[p - 1][pick[p - 1]];
      s = with_site_content(s, p, comp.content);
      amp *= comp.amp;
    }
    out.add(s, amp * convention_sign(s, sites));
    int p = 0;
    while (p < sites && ++pick[p] == per_site[p].size()) pick[p++] = 0;
    if (p == sites) break;
  }
  return out;
}

ChainState product_state(std::string_view ket) { return product_state(parse_ket(ket)); }

ChainState closed_shell_reference(int sites) {
  return ChainState::basis(sites, reference_occupation(sites));
}

ChainState qutrit_vacuum(int sites) {
  return product_state(std::vector<SiteLabel>(static_cast<std::size_t>(sites), SiteLabel::vacuum));
}

ProjectionResult qutrit_project(const ChainState& psi) {
  ChainState current = psi;
  for (int p = 1; p <= psi.sites(); ++p) {
    ChainState next(psi.sites());
    ChainState::Map paired;
    for (const auto& [occ, a] : current.terms()) {
      const FockBasisState s{occ};
      if (!is_neutral(s.site_content(p))) {
        next.add(s, a);
        continue;
      }
      paired[with_site_content(s, p, content::kReference).occ] += a;
    }
    for (const auto& [occ, sum] : paired) {
      const FockBasisState base{occ};
      next.add(base, 0.5 * sum);
      next.add(with_site_content(base, p, content::kCOnly), 0.5 * sum);
    }
    next.prune();
    current = std::move(next);
  }
  const double removed = std::max(0.0, psi.norm_squared() - current.norm_squared());
  return {std::move(current), removed};
}

double qutrit_weight(const ChainState& psi) { return qutrit_project(psi).state.norm_squared(); }

std::map<std::string, Complex> label_decomposition(const ChainState& psi) {
  const int sites = psi.sites();
  std::map<std::string, Complex> out;
  for (const auto& [occ, a] : psi.terms()) {
    const FockBasisState s{occ};
    const double sign = convention_sign(s, sites);
    std::vector<int> neutral_sites;
    std::string ket(static_cast<std::size_t>(sites), '?');
    for (int p = 1; p <= sites; ++p) {
      const unsigned c = s.site_content(p);
      char& slot = ket[static_cast<std::size_t>(sites - p)];
      if (c == content::kPlus) slot = '+';
      else if (c == content::kMinus) slot = '-';
      else neutral_sites.push_back(p);
    }
    const std::size_t n = neutral_sites.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      double coef = sign;
      for (std::size_t i = 0; i < n; ++i) {
        const int p = neutral_sites[i];
        const bool prime = ((mask >> i) & 1U) != 0;
        ket[static_cast<std::size_t>(sites - p)] = prime ? 'p' : 'o';
        coef *= kInvSqrt2;
        if (prime && s.site_content(p) == content::kCOnly) coef = -coef;
      }
      out[ket] += coef * a;
    }
  }
  std::erase_if(out, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
  return out;
}

std::map<int, double> sector_decompose(const ChainState& psi, const LinearOp& observable) {
  constexpr double kIntegerTol = 1e-9;
  std::map<int, double> out;
  const double norm2 = psi.norm_squared();
  if (norm2 == 0.0) return out;

  // Fast path: observable diagonal on the support of psi.
  bool diagonal = true;
  std::map<int, double> diag_weights;
  for (const auto& [occ, a] : psi.terms()) {
    const auto image = observable(ChainState::basis(psi.sites(), FockBasisState{occ}));
    const Complex ev = image.amplitude(FockBasisState{occ});
    if (std::abs(image.norm_squared() - std::norm(ev)) > 1e-20) {
      diagonal = false;
      break;
    }
    const double r = std::round(ev.real());
    if (std::abs(ev.imag()) > kIntegerTol || std::abs(ev.real() - r) > kIntegerTol) {
      throw NonIntegerSpectrum("observable has non-integer eigenvalue " + std::to_string(ev.real()));
    }
    diag_weights[static_cast<int>(r)] += std::norm(a);
  }
  if (diagonal) return diag_weights;

  // Krylov space of psi; invariant once Gram-Schmidt stalls.
  constexpr int kMaxKrylov = 64;
  std::vector<ChainState> basis{psi.normalized()};
  while (static_cast<int>(basis.size()) < kMaxKrylov) {
    ChainState w = observable(basis.back());
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& v : basis) w -= v.inner(w) * v;
    }
    w.prune();
    if (w.norm() < 1e-10) break;
    basis.push_back(w.normalized());
  }
  const auto k = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd h(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const auto image = observable(basis[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < k; ++i) h(i, j) = basis[static_cast<std::size_t>(i)].inner(image);
  }
  if ((h - h.adjoint()).norm() > 1e-9) throw NonIntegerSpectrum("observable is not Hermitian on psi's Krylov space");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  for (Eigen::Index e = 0; e < k; ++e) {
    const double ev = solver.eigenvalues()(e);
    const double r = std::round(ev);
    if (std::abs(ev - r) > kIntegerTol) {
      throw NonIntegerSpectrum("observable has non-integer eigenvalue " + std::to_string(ev));
    }
    // psi = ||psi|| basis[0], so its overlap with eigenvector e is the first component.
    const double w = norm2 * std::norm(solver.eigenvectors()(0, e));
    if (w > 0.0) out[static_cast<int>(r)] += w;
  }
  return out;
}

ChainState random_state(int sites, std::mt19937_64& rng, std::size_t components) {
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << (2 * sites)) - 1);
  std::normal_distribution<double> gauss;
  ChainState out(sites);
  for (std::size_t i = 0; i < components; ++i) out.add(FockBasisState{pick(rng)}, Complex{gauss(rng), gauss(rng)});
  return out.normalized();
}

ChainState random_qutrit_state(int sites, std::mt19937_64& rng, std::size_t components) {
  static constexpr SiteLabel kLabels[] = {SiteLabel::plus, SiteLabel::vacuum, SiteLabel::minus};
  std::uniform_int_distribution<int> pick(0, 2);
  std::normal_distribution<double> gauss;
  ChainState out(sites);
  for (std::size_t i = 0; i < components; ++i) {
    std::vector<SiteLabel> labels(static_cast<std::size_t>(sites));
    for (auto& l : labels) l = kLabels[pick(rng)];
    out += Complex{gauss(rng), gauss(rng)} * product_state(labels);
  }
  return out.normalized();
}

}  // namespace ternary
