#pragma once

#include "zpd/functions.hpp"
#include "zpd/lp.hpp"
#include "zpd/point_set.hpp"
#include "zpd/spectrum.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace zpd {

enum class Provenance { FromTiling, FromSpectrum, FromLp };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view s);

/// A ray-type h witnessing that A pd-tiles G weakly.
struct Certificate {
    RayFn h;
    Provenance provenance;
};

/// Each condition of a weak pd-tiling checked separately. The support
/// condition (A - A) & supp h = {0} is implied by the others; it failing alone
/// means a bug somewhere upstream.
struct PdTilingReport {
    bool nonnegative = false;
    bool normalized = false;
    bool positive_definite = false;
    bool tiles = false;
    bool support_condition = false;
    std::string detail;

    bool passed() const noexcept {
        return nonnegative && normalized && positive_definite && tiles && support_condition;
    }
};

// ray_average(1_B * 1_{-B} / |B|)
Certificate h_from_tiling(const PointSet &b);

// h-hat = |G|/|A|^2 * ray_average(1_S * 1_{-S}) on the dual, h = ift_ray(h-hat).
// Throws DomainError if S is not a spectrum of A.
Certificate h_from_spectrum(const PointSet &a, const Spectrum &s);

PdTilingReport verify_pd_tiling(const PointSet &a, const RayFn &h);

// One variable per punctured line (h(0) = 1 is fixed):
//   (1_A * h)(x) = 1 for every x in G,
//   h-hat(t) >= 0 for every dual line and for t = 0.
LpInstance build_weak_pd_lp(const PointSet &a);

// Searches ray-type h only. That loses nothing: if h works then so does every
// dilate x -> h(kx) (the zero-set of 1_A-hat is a union of punctured lines),
// and so does their average, which is ray-type.
std::optional<Certificate> pd_tiling_feasible(const PointSet &a);

} // namespace zpd
