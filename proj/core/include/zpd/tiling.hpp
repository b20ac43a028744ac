#pragma once

#include "zpd/point_set.hpp"

#include <optional>

namespace zpd {

// True iff every g in G is uniquely a + b (equivalently 1_A * 1_B = 1_G).
bool is_tiling(const PointSet &a, const PointSet &b);

// Backtracking search for B with A + B = G: always covers the smallest
// uncovered point next, trying translates g - a in the order of A's elements.
// Exhaustive, so nullopt means A does not tile.
std::optional<PointSet> find_tiling_complement(const PointSet &a);

} // namespace zpd
