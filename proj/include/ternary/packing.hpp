// Copyright 2026 The Ternary Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file packing.hpp
 * @brief Exact counts of disjoint distance-y site pairs on an open chain.
 */

#pragma once

#include <cstdint>
#include <vector>

namespace ternary {

/// counts[m] = number of ways to place m disjoint pairs {i, i+y} on sites 1..L.
/// Throws std::overflow_error if a count exceeds 64 bits.
std::vector<std::uint64_t> packing_counts(int sites, int y);

std::uint64_t count_packings(int sites, int y, int m);

/// Largest m with a nonzero count.
int max_packings(int sites, int y);

/// Left-aligned maximal packing: scan sites upwards and open a pair at every
/// free site whose partner is on the chain and free. Returns the hole sites.
std::vector<int> greedy_packing(int sites, int y);

}  // namespace ternary
