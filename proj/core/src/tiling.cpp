#include "zpd/tiling.hpp"

namespace zpd {

bool is_tiling(const PointSet &a, const PointSet &b) {
    if (!(a.params() == b.params())) {
        throw InputError("is_tiling: group mismatch");
    }
    const auto &geo = a.geometry();
    if (static_cast<std::uint64_t>(a.size()) * b.size() != geo.order()) {
        return false;
    }
    std::vector<char> covered(geo.order(), 0);
    for (auto x : a.elems()) {
        for (auto y : b.elems()) {
            auto &c = covered[geo.add(x, y)];
            if (c) {
                return false;
            }
            c = 1;
        }
    }
    return true;
}

std::optional<PointSet> find_tiling_complement(const PointSet &a) {
    const auto &geo = a.geometry();
    const std::uint32_t n = geo.order();
    if (n % a.size() != 0) {
        return std::nullopt;
    }
    const auto &elems = a.elems();
    std::vector<char> covered(n, 0);

    const auto fits = [&](std::uint32_t b) {
        for (auto x : elems) {
            if (covered[geo.add(x, b)]) {
                return false;
            }
        }
        return true;
    };
    const auto mark = [&](std::uint32_t b, char v) {
        for (auto x : elems) {
            covered[geo.add(x, b)] = v;
        }
    };
    const auto next_uncovered = [&](std::uint32_t from) {
        while (from < n && covered[from]) {
            ++from;
        }
        return from;
    };

    struct Frame {
        std::uint32_t target;
        std::uint32_t next = 0;
        bool placed = false;
        std::uint32_t b = 0;
    };
    const std::uint32_t needed = n / a.size();
    std::vector<Frame> stack;
    stack.push_back({next_uncovered(0)});
    while (!stack.empty()) {
        auto &f = stack.back();
        if (f.placed) {
            mark(f.b, 0);
            f.placed = false;
        }
        while (f.next < elems.size()) {
            const auto b = geo.sub(f.target, elems[f.next++]);
            if (fits(b)) {
                mark(b, 1);
                f.placed = true;
                f.b = b;
                break;
            }
        }
        if (!f.placed) {
            stack.pop_back();
            continue;
        }
        if (stack.size() == needed) {
            std::vector<std::uint32_t> out;
            out.reserve(needed);
            for (const auto &fr : stack) {
                out.push_back(fr.b);
            }
            return PointSet(a.geometry_ptr(), std::move(out));
        }
        const auto target = next_uncovered(f.target + 1);
        stack.push_back({target});
    }
    return std::nullopt;
}

} // namespace zpd
