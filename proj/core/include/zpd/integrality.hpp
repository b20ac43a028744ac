#pragma once

#include "zpd/four_tuple.hpp"
#include "zpd/point_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace zpd {

/// The two values |A| would have to take if the tuple came from a set A by
/// averaging: sum f when f is the averaged autocorrelation, sum h when the
/// roles of f and h are exchanged. (|G| / sum h is sum f again, by (vii).)
struct IntegralityVerdict {
    Rational from_f;
    bool from_f_integer = false;
    Rational from_h;
    bool from_h_integer = false;

    // true when neither candidate is an integer: no set A averages to t.
    bool excludes_all() const noexcept { return !from_f_integer && !from_h_integer; }
};

IntegralityVerdict integrality_filter(const FourTuple &t);

// True iff some invertible linear M has a(Mx) = b(x) for all x.
bool equal_up_to_linear(const RayFn &a, const RayFn &b);

// Orbit representatives A of size `size` whose averaged autocorrelation is
// linearly equivalent to target.
std::vector<PointSet> sets_averaging_to(const RayFn &target, std::uint32_t size);

struct ExclusionReport {
    std::uint32_t p = 3;
    bool vacuous = false; // p = 2: there is no tuple to exclude
    std::vector<Integer> sizes_checked;
    std::size_t representatives = 0;
    std::vector<PointSet> matches;
    // A subgroup plane, moved by a fixed matrix, must be found by the same
    // matcher; false here means the matcher cannot be trusted.
    bool positive_control_matched = false;

    bool excluded() const noexcept { return vacuous || (matches.empty() && positive_control_matched); }
};

// For the triangle tuple at p = 3: for every integer candidate size, each
// affine orbit representative in (Z_3)^3 of that size is compared with f and
// with h, up to invertible linear maps.
ExclusionReport david_p3_exclusion(std::uint32_t p = 3);

} // namespace zpd
