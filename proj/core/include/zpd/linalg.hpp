#pragma once

#include "zpd/lp.hpp"

namespace zpd {

struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    // Set iff the system is consistent with full column rank.
    std::optional<std::vector<Rational>> unique;
};

// Exact Gauss-Jordan elimination on rows coeffs . x = rhs.
LinearSolution solve_linear_system(std::size_t num_vars, std::vector<LpRow> rows);

} // namespace zpd
