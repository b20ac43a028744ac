#pragma once

// Slow, independent reference implementations used only by the tests.

#include "zpd/functions.hpp"
#include "zpd/lp.hpp"
#include "zpd/orbits.hpp"
#include "zpd/point_set.hpp"

#include <random>
#include <vector>

namespace zpd::oracle {

// sum_x f(x) w^<t,x> from the residue-class sums c_r = sum_{<t,x> = r} f(x).
// The value is rational iff c_1 = ... = c_{p-1}, and is then c_0 - c_1.
// Throws if the classes differ.
Rational ft_at(const RationalFn &f, const Point &t);

// Convolution with explicit coordinate arithmetic (no geometry tables).
RationalFn convolve(const RationalFn &a, const RationalFn &b);

// Feasibility of {x >= 0, E x = b, C x >= d} by enumerating candidate
// vertices: n independent tight constraints, solved exactly.
bool lp_feasible_by_vertices(const LpInstance &inst);

// Weak pd-tiling feasibility over arbitrary real h (one variable per point,
// no evenness or ray assumption), for p in {2, 3} where the real and
// imaginary parts of h-hat have rational coefficients.
bool general_weak_pd_feasible(const PointSet &a);

// Brute force over all B of size |G| / |A|.
bool tiles_brute(const PointSet &a);

// Brute force over all S containing 0, orthogonality in complex doubles.
bool spectral_brute(const PointSet &a);

// All invertible d x d matrices over Z_p, row-major.
std::vector<std::vector<std::uint32_t>> general_linear_group(const GroupParams &g);

// Lexicographically least sorted image over every x -> Mx + b.
std::vector<std::uint32_t> brute_canonical(const Geometry &geo, const std::vector<std::vector<std::uint32_t>> &gl,
                                           const std::vector<std::uint32_t> &set);

RayFn random_ray_fn(const GeometryPtr &geo, std::mt19937_64 &rng, bool nonnegative = false);

std::vector<PointSet> all_subsets(const GeometryPtr &geo);

} // namespace zpd::oracle
