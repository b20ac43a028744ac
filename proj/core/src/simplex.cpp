#include "zpd/lp.hpp"

#include "zpd/errors.hpp"

#include <algorithm>
#include <set>

namespace zpd {

namespace {

Rational dot(const std::vector<Rational> &a, const std::vector<Rational> &x) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0) {
            s += a[i] * x[i];
        }
    }
    return s;
}

void validate(const LpInstance &inst) {
    const auto check = [&](const LpRow &r) {
        if (r.coeffs.size() != inst.num_vars) {
            throw InputError("LP row has " + std::to_string(r.coeffs.size()) + " coefficients, expected " +
                             std::to_string(inst.num_vars));
        }
    };
    std::for_each(inst.equalities.begin(), inst.equalities.end(), check);
    std::for_each(inst.inequalities.begin(), inst.inequalities.end(), check);
}

struct Presolved {
    std::vector<std::size_t> columns;   // surviving original variable indices
    std::vector<LpRow> equalities;      // over surviving columns
    std::vector<LpRow> inequalities;
    bool infeasible = false;
};

Presolved presolve(const LpInstance &inst) {
    std::vector<bool> fixed(inst.num_vars, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto &row : inst.equalities) {
            if (sgn(row.rhs) != 0) {
                continue;
            }
            int sign = 0;
            bool mixed = false;
            for (std::size_t j = 0; j < inst.num_vars && !mixed; ++j) {
                if (fixed[j] || sgn(row.coeffs[j]) == 0) {
                    continue;
                }
                const int s = sgn(row.coeffs[j]);
                mixed = sign != 0 && s != sign;
                sign = s;
            }
            if (mixed || sign == 0) {
                continue;
            }
            for (std::size_t j = 0; j < inst.num_vars; ++j) {
                if (!fixed[j] && sgn(row.coeffs[j]) != 0) {
                    fixed[j] = true;
                    changed = true;
                }
            }
        }
    }

    Presolved out;
    for (std::size_t j = 0; j < inst.num_vars; ++j) {
        if (!fixed[j]) {
            out.columns.push_back(j);
        }
    }
    const auto reduce = [&](const std::vector<LpRow> &rows, bool equality, std::vector<LpRow> &dst) {
        std::set<std::vector<Rational>> seen;
        for (const auto &row : rows) {
            std::vector<Rational> key;
            key.reserve(out.columns.size() + 1);
            bool nonzero = false;
            for (auto j : out.columns) {
                key.push_back(row.coeffs[j]);
                nonzero = nonzero || sgn(row.coeffs[j]) != 0;
            }
            if (!nonzero) {
                const bool ok = equality ? sgn(row.rhs) == 0 : sgn(row.rhs) <= 0;
                out.infeasible = out.infeasible || !ok;
                continue;
            }
            key.push_back(row.rhs);
            if (!seen.insert(key).second) {
                continue;
            }
            key.pop_back();
            dst.push_back(LpRow{std::move(key), row.rhs});
        }
    };
    reduce(inst.equalities, true, out.equalities);
    reduce(inst.inequalities, false, out.inequalities);
    return out;
}

} // namespace

SimplexResult simplex_feasibility(const LpInstance &inst) {
    validate(inst);
    SimplexResult result;
    const Presolved pre = presolve(inst);
    if (pre.infeasible) {
        return result;
    }

    const std::size_t n = pre.columns.size();
    const std::size_t n_slack = pre.inequalities.size();
    const std::size_t m = pre.equalities.size() + n_slack;

    // Column layout: [structural n][slack n_slack][artificial ...][rhs].
    // Inequality rows a.x - s = b with b <= 0 are negated so the slack can
    // start in the basis; every other row gets an artificial.
    std::vector<std::vector<Rational>> tab(m);
    std::vector<std::size_t> basis(m);
    std::vector<std::size_t> needs_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        const bool is_eq = i < pre.equalities.size();
        const LpRow &row = is_eq ? pre.equalities[i] : pre.inequalities[i - pre.equalities.size()];
        auto &t = tab[i];
        t.assign(n + n_slack, Rational(0));
        std::copy(row.coeffs.begin(), row.coeffs.end(), t.begin());
        Rational rhs = row.rhs;
        if (!is_eq) {
            t[n + (i - pre.equalities.size())] = -1;
        }
        if (sgn(rhs) < 0 || (!is_eq && sgn(rhs) == 0)) {
            for (auto &v : t) {
                v = -v;
            }
            rhs = -rhs;
        }
        if (!is_eq && sgn(row.rhs) <= 0) {
            basis[i] = n + (i - pre.equalities.size());
        } else {
            needs_artificial.push_back(i);
        }
        t.push_back(rhs); // temporarily at the end; moved below
    }
    const std::size_t first_art = n + n_slack;
    const std::size_t cols = first_art + needs_artificial.size();
    for (auto &t : tab) {
        Rational rhs = std::move(t.back());
        t.pop_back();
        t.resize(cols + 1, Rational(0));
        t[cols] = std::move(rhs);
    }
    for (std::size_t a = 0; a < needs_artificial.size(); ++a) {
        const auto i = needs_artificial[a];
        tab[i][first_art + a] = 1;
        basis[i] = first_art + a;
    }

    // Reduced costs of the phase-1 objective (sum of artificials), with the
    // negated objective value in the last slot.
    std::vector<Rational> cost(cols + 1, Rational(0));
    for (auto i : needs_artificial) {
        for (std::size_t j = 0; j < first_art; ++j) {
            cost[j] -= tab[i][j];
        }
        cost[cols] -= tab[i][cols];
    }

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < first_art; ++j) {
            if (sgn(cost[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) {
            break;
        }
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(tab[i][enter]) <= 0) {
                continue;
            }
            Rational ratio = tab[i][cols] / tab[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        if (leave == m) {
            // Unbounded direction cannot occur for a phase-1 objective bounded below by 0.
            throw InvariantViolation("phase-1 simplex found an unbounded direction");
        }

        auto &prow = tab[leave];
        const Rational piv = prow[enter];
        for (auto &v : prow) {
            if (sgn(v) != 0) {
                v /= piv;
            }
        }
        const auto eliminate = [&](std::vector<Rational> &row) {
            if (sgn(row[enter]) == 0) {
                return;
            }
            const Rational factor = row[enter];
            for (std::size_t j = 0; j <= cols; ++j) {
                if (sgn(prow[j]) != 0) {
                    row[j] -= factor * prow[j];
                }
            }
        };
        for (std::size_t i = 0; i < m; ++i) {
            if (i != leave) {
                eliminate(tab[i]);
            }
        }
        eliminate(cost);
        basis[leave] = enter;
        ++result.pivots;
    }

    if (sgn(cost[cols]) != 0) {
        return result;
    }
    std::vector<Rational> x(inst.num_vars, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
            x[pre.columns[basis[i]]] = tab[i][cols];
        }
    }
    result.solution = std::move(x);
    return result;
}

bool satisfies(const LpInstance &inst, const std::vector<Rational> &x) {
    if (x.size() != inst.num_vars) {
        return false;
    }
    if (std::any_of(x.begin(), x.end(), [](const Rational &v) { return sgn(v) < 0; })) {
        return false;
    }
    for (const auto &r : inst.equalities) {
        if (dot(r.coeffs, x) != r.rhs) {
            return false;
        }
    }
    for (const auto &r : inst.inequalities) {
        if (dot(r.coeffs, x) < r.rhs) {
            return false;
        }
    }
    return true;
}

} // namespace zpd
