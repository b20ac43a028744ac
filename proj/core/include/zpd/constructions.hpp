#pragma once

#include "zpd/four_tuple.hpp"

#include <vector>

namespace zpd {

/// Unnormalized functions of the triangle construction in (Z_p)^3, with S_i
/// the coordinate planes {x_i = 0} and L_i the coordinate axes:
///   f0    = 2 1_G - 2 sum 1_{S_i} + p sum 1_{L_i}
///   h0    = sum 1_{S_i} - 2 sum 1_{L_i} + 2p delta_0
///   fhat0 = p^2 sum 1_{L_i-perp} - 2p^2 sum 1_{S_i-perp} + 2p^3 delta_0
///   hhat0 = 2p 1 - 2p sum 1_{L_i-perp} + p^2 sum 1_{S_i-perp}
/// The transforms here are assembled from the formulas, not computed.
struct DavidClosedForms {
    RayFn f0;
    RayFn h0;
    RayFn fhat0;
    RayFn hhat0;
};

DavidClosedForms david_closed_forms(std::uint32_t p);

// f = f0 / (3p - 4), h = h0 / (2p - 3), transforms by ft_ray. Throws
// DomainError for p = 2 and InvariantViolation if ft_ray disagrees with the
// closed forms.
FourTuple example_david(std::uint32_t p);

/// k - 1 collinear projective points and one apex off their line, as
/// nonzero vectors of (Z_p)^3 (any nonzero multiple names the same point).
struct NearPencil {
    std::vector<Point> collinear;
    Point apex;
};

// collinear = (1,0,0), (0,1,0), (1,1,0), (1,2,0), ... (first k - 1),
// apex = (0,0,1). For k = 3 this is the coordinate triangle.
NearPencil standard_near_pencil(std::uint32_t p, std::uint32_t k);

// Line-values are constant on the classes of the configuration (apex,
// collinear points, other points of their line, spokes from the apex, the
// rest). The unknown class values solve the linear conditions fhat = 0 and
// hhat = 0 on the dual classes where the complementary transform lives.
// Throws InputError for a bad configuration and DomainError, with the
// system, if it has no unique solution or the solution fails an axiom.
FourTuple near_pencil_tuple(std::uint32_t p, std::uint32_t k);
FourTuple near_pencil_tuple(std::uint32_t p, const NearPencil &config);

} // namespace zpd
