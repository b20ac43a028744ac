#include "zpd/point_set.hpp"

#include <algorithm>
#include <mutex>

namespace zpd {

struct PointSet::ZeroSetCache {
    std::once_flag once;
    std::vector<bool> lines;
};

PointSet::PointSet(GeometryPtr geo, std::vector<std::uint32_t> elems)
    : geo_(std::move(geo)), elems_(std::move(elems)), cache_(std::make_shared<ZeroSetCache>()) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.empty()) {
        throw InputError("point set must be nonempty");
    }
    if (elems_.back() >= geo_->order()) {
        throw InputError("point index out of range for " + to_string(geo_->params()));
    }
}

PointSet PointSet::from_points(const GroupParams &g, std::span<const Point> points) {
    auto geo = Geometry::of(g);
    std::vector<std::uint32_t> idx;
    idx.reserve(points.size());
    for (const auto &x : points) {
        idx.push_back(geo->index(x));
    }
    return PointSet(std::move(geo), std::move(idx));
}

PointSet PointSet::whole(GeometryPtr geo) {
    std::vector<std::uint32_t> all(geo->order());
    for (std::uint32_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    return PointSet(std::move(geo), std::move(all));
}

PointSet PointSet::origin(GeometryPtr geo) { return PointSet(std::move(geo), {0}); }

bool PointSet::contains(std::uint32_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::vector<Point> PointSet::points() const {
    std::vector<Point> out;
    out.reserve(elems_.size());
    for (auto x : elems_) {
        out.push_back(geo_->point(x));
    }
    return out;
}

const std::vector<bool> &PointSet::zeroset() const {
    std::call_once(cache_->once, [this] {
        const auto &geo = *geo_;
        auto &lines = cache_->lines;
        lines.assign(geo.line_count(), false);
        if (elems_.size() % geo.p() != 0) {
            return;
        }
        std::vector<std::uint32_t> counts(geo.p());
        for (std::uint32_t l = 0; l < geo.line_count(); ++l) {
            std::fill(counts.begin(), counts.end(), 0);
            const auto t = geo.rep(l);
            for (auto a : elems_) {
                ++counts[geo.pairing(t, a)];
            }
            lines[l] = std::all_of(counts.begin(), counts.end(),
                                   [&](std::uint32_t c) { return c == counts[0]; });
        }
    });
    return cache_->lines;
}

PointSet PointSet::negated() const {
    std::vector<std::uint32_t> out;
    out.reserve(elems_.size());
    for (auto x : elems_) {
        out.push_back(geo_->neg(x));
    }
    return PointSet(geo_, std::move(out));
}

std::vector<std::uint32_t> indicator_ft_zeroset(const PointSet &a) {
    const auto &z = a.zeroset();
    std::vector<std::uint32_t> out;
    for (std::uint32_t l = 0; l < z.size(); ++l) {
        if (z[l]) {
            out.push_back(l);
        }
    }
    return out;
}

} // namespace zpd
