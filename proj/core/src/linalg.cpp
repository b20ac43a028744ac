#include "zpd/linalg.hpp"

#include "zpd/errors.hpp"

namespace zpd {

LinearSolution solve_linear_system(std::size_t num_vars, std::vector<LpRow> rows) {
    for (const auto &r : rows) {
        if (r.coeffs.size() != num_vars) {
            throw InputError("linear system row has the wrong width");
        }
    }
    LinearSolution out;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < num_vars && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv].coeffs[col]) == 0) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[piv], rows[rank]);
        auto &pr = rows[rank];
        const Rational inv = 1 / pr.coeffs[col];
        for (auto &v : pr.coeffs) {
            v *= inv;
        }
        pr.rhs *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || sgn(rows[i].coeffs[col]) == 0) {
                continue;
            }
            const Rational f = rows[i].coeffs[col];
            for (std::size_t j = 0; j < num_vars; ++j) {
                rows[i].coeffs[j] -= f * pr.coeffs[j];
            }
            rows[i].rhs -= f * pr.rhs;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    out.rank = rank;
    out.consistent = true;
    for (std::size_t i = rank; i < rows.size(); ++i) {
        if (sgn(rows[i].rhs) != 0) {
            out.consistent = false;
        }
    }
    if (out.consistent && rank == num_vars) {
        std::vector<Rational> x(num_vars);
        for (std::size_t i = 0; i < rank; ++i) {
            x[pivot_col[i]] = rows[i].rhs;
        }
        out.unique = std::move(x);
    }
    return out;
}

} // namespace zpd
