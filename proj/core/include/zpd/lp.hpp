#pragma once

#include "zpd/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace zpd {

struct LpRow {
    std::vector<Rational> coeffs;
    Rational rhs;
};

/// Pure feasibility problem over x >= 0:
///   equalities:   coeffs . x == rhs
///   inequalities: coeffs . x >= rhs
struct LpInstance {
    std::size_t num_vars = 0;
    std::vector<LpRow> equalities;
    std::vector<LpRow> inequalities;
};

struct SimplexResult {
    std::optional<std::vector<Rational>> solution;
    std::size_t pivots = 0;

    bool feasible() const noexcept { return solution.has_value(); }
};

// Exact phase-1 simplex with Bland's rule. Before pivoting, equality rows with
// zero right-hand side and single-signed coefficients fix their variables at
// zero, and duplicate rows are dropped. The verdict is exact: infeasible iff
// the phase-1 optimum is positive.
SimplexResult simplex_feasibility(const LpInstance &inst);

// True iff x >= 0 satisfies every row of the instance exactly.
bool satisfies(const LpInstance &inst, const std::vector<Rational> &x);

} // namespace zpd
