// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

#include "ternary/packing.hpp"

#include <stdexcept>
#include <string>

namespace ternary {

namespace {

void require_problem(int sites, int y) {
  if (sites < 1 || y < 1) {
    throw std::invalid_argument("packing needs L >= 1 and y >= 1, got L = " + std::to_string(sites) +
                                ", y = " + std::to_string(y));
  }
  if (y > 30) throw std::invalid_argument("packing span limited to y <= 30");
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("packing count exceeds 64 bits");
  return r;
}

}  // namespace

std::vector<std::uint64_t> packing_counts(int sites, int y) {
  require_problem(sites, y);
  const int max_m = sites / 2;
  // dp[mask][m]: bit k-1 of mask marks site (i + k) as already claimed.
  const std::size_t masks = std::size_t{1} << y;
  using Row = std::vector<std::uint64_t>;
  std::vector<Row> dp(masks, Row(max_m + 1, 0));
  dp[0][0] = 1;
  for (int i = 1; i <= sites; ++i) {
    std::vector<Row> next(masks, Row(max_m + 1, 0));
    for (std::size_t mask = 0; mask < masks; ++mask) {
      const bool claimed = (mask & 1U) != 0;
      const std::size_t shifted = mask >> 1;
      for (int m = 0; m <= max_m; ++m) {
        const std::uint64_t v = dp[mask][m];
        if (v == 0) continue;
        next[shifted][m] = checked_add(next[shifted][m], v);
        if (!claimed && i + y <= sites && m < max_m) {
          const std::size_t partner = std::size_t{1} << (y - 1);
          if ((shifted & partner) == 0) next[shifted | partner][m + 1] = checked_add(next[shifted | partner][m + 1], v);
        }
      }
    }
    dp = std::move(next);
  }
  Row out(max_m + 1, 0);
  for (const auto& row : dp) {
    for (int m = 0; m <= max_m; ++m) out[m] = checked_add(out[m], row[m]);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::uint64_t count_packings(int sites, int y, int m) {
  if (m < 0) throw std::invalid_argument("exciton count must be nonnegative");
  const auto counts = packing_counts(sites, y);
  return m < static_cast<int>(counts.size()) ? counts[m] : 0;
}

int max_packings(int sites, int y) { return static_cast<int>(packing_counts(sites, y).size()) - 1; }

std::vector<int> greedy_packing(int sites, int y) {
  require_problem(sites, y);
  std::vector<bool> used(static_cast<std::size_t>(sites) + 1, false);
  std::vector<int> holes;
  for (int i = 1; i + y <= sites; ++i) {
    if (used[i] || used[i + y]) continue;
    used[i] = used[i + y] = true;
    holes.push_back(i);
  }
  return holes;
}

}  // namespace ternary
