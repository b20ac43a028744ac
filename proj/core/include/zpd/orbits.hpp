#pragma once

#include "zpd/point_set.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace zpd {

/// x -> M x + b with M invertible, stored row-major.
struct AffineMap {
    std::vector<std::uint32_t> matrix; // d x d
    std::uint32_t translation = 0;     // point index of b

    std::uint32_t apply(const Geometry &geo, std::uint32_t x) const;
    PointSet apply(const PointSet &a) const;
};

// Uniform over invertible M (rejection sampling) and uniform b.
AffineMap random_affine(const Geometry &geo, std::mt19937_64 &rng);

// A canonical image of the set under the affine group: the lexicographically
// least sorted image among those that send some a0 in A to 0 and some ordered
// basis b_1, b_2, ... drawn from A - a0 to e_d, e_{d-1}, .... The candidate
// list is the same for A and gA, so equal forms mean equal orbits.
std::vector<std::uint32_t> canonical_form(const Geometry &geo, std::span<const std::uint32_t> set);
inline PointSet canonical_form(const PointSet &a) {
    return PointSet(a.geometry_ptr(), canonical_form(a.geometry(), a.elems()));
}

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string &what, std::size_t count) : std::runtime_error(what), count_(count) {}
    std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_;
};

// Canonical representatives of the affine orbits of subsets of the given size,
// in ascending order. Built level by level (each orbit of size s contains an
// extension of a representative of size s - 1); sizes above |G|/2 come from
// complements. Throws BudgetExceeded when a level outgrows `budget`.
std::vector<PointSet> orbit_reps(const GroupParams &g, std::uint32_t size, std::size_t budget = 100'000);
// Several sizes at once, building each level only once.
std::map<std::uint32_t, std::vector<PointSet>> orbit_reps(const GroupParams &g, const std::vector<std::uint32_t> &sizes,
                                                         std::size_t budget = 100'000);

} // namespace zpd
