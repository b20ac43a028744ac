#pragma once

#include "zpd/functions.hpp"

namespace zpd {

/// f = w 1_G + sum_i c_i 1_{S_i} + sum_i d_i 1_{L_i} + m delta_0, with full
/// (non-punctured) planes S_i and lines L_i. `planes` is indexed by the line
/// index of the plane's normal and is empty for d = 2.
struct Decomposition {
    GeometryPtr geo;
    Rational w;
    std::vector<Rational> planes;
    std::vector<Rational> lines;
    Rational m;
};

// Greedy extraction in the fixed lexicographic order: first the largest
// constant w (bounded by the minimum over all of G, origin included, and by
// 0 from below), then for d = 3 each plane coefficient in order, then each
// line coefficient; m absorbs whatever remains at the origin.
// Requires d in {2, 3} and nonnegative values off the origin.
Decomposition greedy_decompose(const RayFn &f);

RayFn reconstruct(const Decomposition &dec);

} // namespace zpd
