#pragma once

#include "zpd/group.hpp"

#include <memory>
#include <span>
#include <vector>

namespace zpd {

/// A nonempty subset A of G, held as sorted distinct point indices. The
/// zero-set of its indicator's Fourier transform is computed on first use and
/// shared between copies.
class PointSet {
public:
    PointSet(GeometryPtr geo, std::vector<std::uint32_t> elems);

    static PointSet from_points(const GroupParams &g, std::span<const Point> points);
    static PointSet whole(GeometryPtr geo);
    static PointSet origin(GeometryPtr geo);

    const Geometry &geometry() const noexcept { return *geo_; }
    const GeometryPtr &geometry_ptr() const noexcept { return geo_; }
    const GroupParams &params() const noexcept { return geo_->params(); }

    const std::vector<std::uint32_t> &elems() const noexcept { return elems_; }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(elems_.size()); }
    bool contains(std::uint32_t x) const;
    std::vector<Point> points() const;

    // zeroset()[l] is true iff 1_A-hat vanishes on the dual punctured line l.
    const std::vector<bool> &zeroset() const;

    // -A
    PointSet negated() const;

    friend bool operator==(const PointSet &a, const PointSet &b) {
        return a.params() == b.params() && a.elems_ == b.elems_;
    }

private:
    struct ZeroSetCache;

    GeometryPtr geo_;
    std::vector<std::uint32_t> elems_;
    std::shared_ptr<ZeroSetCache> cache_;
};

// Dual line indices on which 1_A-hat vanishes, ascending. A line is in the
// zero-set iff <t, a> takes every residue equally often over a in A (for
// prime p the only vanishing integer combinations of p-th roots of unity are
// multiples of 1 + w + ... + w^(p-1)).
std::vector<std::uint32_t> indicator_ft_zeroset(const PointSet &a);

} // namespace zpd
