#include "zpd/spectrum.hpp"

#include <algorithm>

namespace zpd {

namespace {

// Colouring costs O(|P|^2) adjacency tests per node; above this the search
// falls back to the plain size bound.
constexpr std::size_t kColourLimit = 4096;

class CliqueSearch {
public:
    CliqueSearch(const Geometry &geo, const std::vector<bool> &zero, std::uint32_t need)
        : geo_(geo), zero_(zero), need_(need) {}

    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        return zero_[geo_.line_index(geo_.sub(u, v))];
    }

    bool expand(std::vector<std::uint32_t> &clique, const std::vector<std::uint32_t> &cand) {
        if (clique.size() == need_) {
            return true;
        }
        if (clique.size() + cand.size() < need_) {
            return false;
        }
        std::vector<std::uint32_t> order;
        std::vector<std::uint32_t> colour;
        colour_sort(cand, order, colour);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (clique.size() + colour[i] < need_) {
                return false;
            }
            const auto v = order[i];
            std::vector<std::uint32_t> next;
            for (std::size_t j = 0; j < i; ++j) {
                if (adjacent(order[j], v)) {
                    next.push_back(order[j]);
                }
            }
            clique.push_back(v);
            if (expand(clique, next)) {
                return true;
            }
            clique.pop_back();
        }
        return false;
    }

private:
    // Greedy sequential colouring; `colour[i]` bounds the clique size within
    // order[0..i].
    void colour_sort(const std::vector<std::uint32_t> &cand, std::vector<std::uint32_t> &order,
                     std::vector<std::uint32_t> &colour) const {
        if (cand.size() > kColourLimit) {
            order = cand;
            colour.resize(cand.size());
            for (std::size_t i = 0; i < cand.size(); ++i) {
                colour[i] = static_cast<std::uint32_t>(i + 1);
            }
            return;
        }
        std::vector<std::vector<std::uint32_t>> classes;
        for (auto v : cand) {
            auto it = std::find_if(classes.begin(), classes.end(), [&](const auto &cls) {
                return std::none_of(cls.begin(), cls.end(), [&](std::uint32_t u) { return adjacent(u, v); });
            });
            if (it == classes.end()) {
                classes.emplace_back();
                it = std::prev(classes.end());
            }
            it->push_back(v);
        }
        order.clear();
        colour.clear();
        for (std::size_t c = 0; c < classes.size(); ++c) {
            for (auto v : classes[c]) {
                order.push_back(v);
                colour.push_back(static_cast<std::uint32_t>(c + 1));
            }
        }
    }

    const Geometry &geo_;
    const std::vector<bool> &zero_;
    std::size_t need_;
};

} // namespace

std::optional<Spectrum> find_spectrum(const PointSet &a) {
    const auto &geo = a.geometry();
    const auto &zero = a.zeroset();
    const std::uint32_t k = a.size();
    if (k == 1) {
        return Spectrum{a.geometry_ptr(), {0}};
    }
    if (std::all_of(zero.begin(), zero.end(), [](bool z) { return z; })) {
        // Complete graph: any k dual points work.
        std::vector<std::uint32_t> pts(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            pts[i] = i;
        }
        return Spectrum{a.geometry_ptr(), std::move(pts)};
    }
    std::vector<std::uint32_t> cand;
    for (std::uint32_t t = 1; t < geo.order(); ++t) {
        if (zero[geo.line_index(t)]) {
            cand.push_back(t);
        }
    }
    CliqueSearch search(geo, zero, k - 1);
    std::vector<std::uint32_t> clique;
    if (!search.expand(clique, cand)) {
        return std::nullopt;
    }
    clique.push_back(0);
    std::sort(clique.begin(), clique.end());
    return Spectrum{a.geometry_ptr(), std::move(clique)};
}

bool is_spectrum(const PointSet &a, const Spectrum &s) {
    if (!(s.geo->params() == a.params()) || s.points.size() != a.size()) {
        return false;
    }
    const auto &geo = a.geometry();
    const auto &zero = a.zeroset();
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (s.points[i] >= geo.order()) {
            return false;
        }
        for (std::size_t j = i + 1; j < s.points.size(); ++j) {
            const auto diff = geo.sub(s.points[i], s.points[j]);
            if (diff == 0 || !zero[geo.line_index(diff)]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace zpd
