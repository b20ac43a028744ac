#pragma once

#include "zpd/point_set.hpp"

#include <optional>

namespace zpd {

/// A set of dual points whose characters restricted to A are pairwise
/// orthogonal and span L^2(A). Spectra found by find_spectrum contain 0.
struct Spectrum {
    GeometryPtr geo;
    std::vector<std::uint32_t> points;
};

// Two characters t, t' are orthogonal on A iff 1_A-hat(t - t') = 0, i.e. the
// dual line of t - t' is in the zero-set. A spectrum is therefore a clique of
// size |A| in that Cayley graph; by translation it can be assumed to contain
// 0. Branch and bound with greedy-colouring bounds; exhaustive.
std::optional<Spectrum> find_spectrum(const PointSet &a);

// Size |A|, distinct points, all pairwise differences on zero-set lines.
bool is_spectrum(const PointSet &a, const Spectrum &s);

} // namespace zpd
