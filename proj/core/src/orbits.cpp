#include "zpd/orbits.hpp"

#include "zpd/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace zpd {

namespace {

using Vec = std::array<std::uint32_t, kMaxDim>;

Vec coords(const Geometry &geo, std::uint32_t x) {
    Vec v{};
    const auto pt = geo.point(x);
    for (std::uint32_t i = 0; i < geo.d(); ++i) {
        v[i] = pt[i];
    }
    return v;
}

// Row-reduced basis with the transform recording how each reduced row is
// built from the chosen vectors: reduced[j] = sum_i transform[j][i] chosen[i].
class Span {
public:
    Span(const Geometry &geo) : p_(geo.p()), d_(geo.d()) {}

    std::uint32_t rank() const noexcept { return rank_; }

    // Coordinates of v in the chosen vectors, or false if v is outside.
    bool coordinates(const Vec &v, Vec &out) const {
        Vec rest = v;
        Vec y{};
        for (std::uint32_t j = 0; j < rank_; ++j) {
            const auto c = rest[pivot_[j]];
            y[j] = c;
            if (c != 0) {
                for (std::uint32_t k = 0; k < d_; ++k) {
                    rest[k] = (rest[k] + (p_ - c) * reduced_[j][k]) % p_;
                }
            }
        }
        for (std::uint32_t k = 0; k < d_; ++k) {
            if (rest[k] != 0) {
                return false;
            }
        }
        out.fill(0);
        for (std::uint32_t j = 0; j < rank_; ++j) {
            for (std::uint32_t i = 0; i < rank_; ++i) {
                out[i] = (out[i] + y[j] * transform_[j][i]) % p_;
            }
        }
        return true;
    }

    bool contains(const Vec &v) const {
        Vec dummy;
        return coordinates(v, dummy);
    }

    // v must be outside the span.
    void push(const Vec &v, const std::vector<std::uint32_t> &inv) {
        Vec row = v;
        Vec tr{};
        tr[rank_] = 1;
        for (std::uint32_t j = 0; j < rank_; ++j) {
            const auto c = row[pivot_[j]];
            if (c != 0) {
                for (std::uint32_t k = 0; k < d_; ++k) {
                    row[k] = (row[k] + (p_ - c) * reduced_[j][k]) % p_;
                }
                for (std::uint32_t i = 0; i < rank_; ++i) {
                    tr[i] = (tr[i] + (p_ - c) * transform_[j][i]) % p_;
                }
            }
        }
        std::uint32_t piv = 0;
        while (row[piv] == 0) {
            ++piv;
        }
        const auto s = inv[row[piv]];
        for (std::uint32_t k = 0; k < d_; ++k) {
            row[k] = row[k] * s % p_;
        }
        for (std::uint32_t i = 0; i <= rank_; ++i) {
            tr[i] = tr[i] * s % p_;
        }
        // Clear the new pivot column from earlier rows.
        for (std::uint32_t j = 0; j < rank_; ++j) {
            const auto c = reduced_[j][piv];
            if (c != 0) {
                for (std::uint32_t k = 0; k < d_; ++k) {
                    reduced_[j][k] = (reduced_[j][k] + (p_ - c) * row[k]) % p_;
                }
                for (std::uint32_t i = 0; i <= rank_; ++i) {
                    transform_[j][i] = (transform_[j][i] + (p_ - c) * tr[i]) % p_;
                }
            }
        }
        reduced_[rank_] = row;
        transform_[rank_] = tr;
        pivot_[rank_] = piv;
        ++rank_;
    }

private:
    std::uint32_t p_;
    std::uint32_t d_;
    std::uint32_t rank_ = 0;
    std::array<Vec, kMaxDim> reduced_{};
    std::array<Vec, kMaxDim> transform_{};
    std::array<std::uint32_t, kMaxDim> pivot_{};
};

class Canonicalizer {
public:
    Canonicalizer(const Geometry &geo, std::span<const std::uint32_t> set) : geo_(geo), set_(set) {
        inv_.assign(geo.p(), 0);
        for (std::uint32_t k = 1; k < geo.p(); ++k) {
            inv_[k] = geo.inverse(k);
        }
        pow_.assign(geo.d(), 1);
        for (std::uint32_t i = 1; i < geo.d(); ++i) {
            pow_[i] = pow_[i - 1] * geo.p();
        }
    }

    std::vector<std::uint32_t> run() {
        for (auto a0 : set_) {
            diffs_.clear();
            for (auto x : set_) {
                diffs_.push_back(coords(geo_, geo_.sub(x, a0)));
            }
            full_rank_ = rank_of(diffs_); // the same for every anchor
            search(Span(geo_));
        }
        return best_;
    }

private:
    std::uint32_t rank_of(const std::vector<Vec> &vs) const {
        Span s(geo_);
        for (const auto &v : vs) {
            if (!s.contains(v)) {
                s.push(v, inv_);
            }
        }
        return s.rank();
    }

    void search(const Span &span) {
        if (span.rank() == full_rank_) {
            image_.clear();
            Vec c;
            for (const auto &v : diffs_) {
                span.coordinates(v, c);
                std::uint32_t idx = 0;
                for (std::uint32_t i = 0; i < full_rank_; ++i) {
                    idx += c[i] * pow_[i];
                }
                image_.push_back(idx);
            }
            std::sort(image_.begin(), image_.end());
            if (best_.empty() || image_ < best_) {
                best_ = image_;
            }
            return;
        }
        for (const auto &v : diffs_) {
            if (!span.contains(v)) {
                Span next = span;
                next.push(v, inv_);
                search(next);
            }
        }
    }

    const Geometry &geo_;
    std::span<const std::uint32_t> set_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint32_t> pow_;
    std::vector<Vec> diffs_;
    std::uint32_t full_rank_ = 0;
    std::vector<std::uint32_t> image_;
    std::vector<std::uint32_t> best_;
};

std::vector<std::uint32_t> complement(const Geometry &geo, const std::vector<std::uint32_t> &set) {
    std::vector<std::uint32_t> out;
    std::size_t j = 0;
    for (std::uint32_t x = 0; x < geo.order(); ++x) {
        if (j < set.size() && set[j] == x) {
            ++j;
        } else {
            out.push_back(x);
        }
    }
    return out;
}

} // namespace

std::uint32_t AffineMap::apply(const Geometry &geo, std::uint32_t x) const {
    const auto v = geo.point(x);
    Point out = v;
    for (std::uint32_t i = 0; i < geo.d(); ++i) {
        std::uint64_t s = 0;
        for (std::uint32_t j = 0; j < geo.d(); ++j) {
            s += std::uint64_t(matrix[i * geo.d() + j]) * v[j];
        }
        out[i] = static_cast<std::uint32_t>(s % geo.p());
    }
    return geo.add(geo.index(out), translation);
}

PointSet AffineMap::apply(const PointSet &a) const {
    std::vector<std::uint32_t> out;
    for (auto x : a.elems()) {
        out.push_back(apply(a.geometry(), x));
    }
    return PointSet(a.geometry_ptr(), std::move(out));
}

AffineMap random_affine(const Geometry &geo, std::mt19937_64 &rng) {
    const auto d = geo.d();
    AffineMap m;
    m.matrix.resize(d * d);
    for (;;) {
        for (auto &e : m.matrix) {
            e = static_cast<std::uint32_t>(rng() % geo.p());
        }
        Span s(geo);
        std::vector<std::uint32_t> inv(geo.p(), 0);
        for (std::uint32_t k = 1; k < geo.p(); ++k) {
            inv[k] = geo.inverse(k);
        }
        bool ok = true;
        for (std::uint32_t i = 0; i < d && ok; ++i) {
            Vec row{};
            for (std::uint32_t j = 0; j < d; ++j) {
                row[j] = m.matrix[i * d + j];
            }
            if (s.contains(row)) {
                ok = false;
            } else {
                s.push(row, inv);
            }
        }
        if (ok) {
            break;
        }
    }
    m.translation = static_cast<std::uint32_t>(rng() % geo.order());
    return m;
}

std::vector<std::uint32_t> canonical_form(const Geometry &geo, std::span<const std::uint32_t> set) {
    if (set.empty()) {
        throw InputError("canonical_form: empty set");
    }
    return Canonicalizer(geo, set).run();
}

std::map<std::uint32_t, std::vector<PointSet>> orbit_reps(const GroupParams &g,
                                                         const std::vector<std::uint32_t> &sizes,
                                                         std::size_t budget) {
    const auto geo = Geometry::of(g);
    std::set<std::uint32_t> wanted;
    std::uint32_t depth = 1;
    for (auto size : sizes) {
        if (size == 0 || size > g.order()) {
            throw InputError("orbit_reps: size must be in 1.." + std::to_string(g.order()));
        }
        // Sizes above |G|/2 come from complements, the whole group is its own orbit.
        const auto low = std::min(size, g.order() - size);
        if (low > 0) {
            wanted.insert(low);
            depth = std::max(depth, low);
        }
    }
    const auto by_elems = [](const PointSet &a, const PointSet &b) { return a.elems() < b.elems(); };

    std::map<std::uint32_t, std::vector<PointSet>> low_levels;
    std::set<std::vector<std::uint32_t>> level{{0}};
    for (std::uint32_t s = 1; s <= depth; ++s) {
        if (s > 1) {
            std::set<std::vector<std::uint32_t>> next;
            for (const auto &rep : level) {
                auto ext = rep;
                ext.push_back(0);
                for (std::uint32_t x = 0; x < g.order(); ++x) {
                    if (std::binary_search(rep.begin(), rep.end(), x)) {
                        continue;
                    }
                    ext.back() = x;
                    next.insert(canonical_form(*geo, ext));
                    if (next.size() > budget) {
                        throw BudgetExceeded("orbit_reps: more than " + std::to_string(budget) +
                                                 " representatives of size " + std::to_string(s),
                                             next.size());
                    }
                }
            }
            level = std::move(next);
        }
        if (wanted.contains(s)) {
            auto &out = low_levels[s];
            for (const auto &rep : level) {
                out.emplace_back(geo, rep);
            }
        }
    }

    std::map<std::uint32_t, std::vector<PointSet>> result;
    for (auto size : sizes) {
        if (result.contains(size)) {
            continue;
        }
        auto &out = result[size];
        if (size == g.order()) {
            out.push_back(PointSet::whole(geo));
        } else if (2 * size <= g.order()) {
            out = low_levels.at(size);
        } else {
            for (const auto &r : low_levels.at(g.order() - size)) {
                out.emplace_back(geo, canonical_form(*geo, complement(*geo, r.elems())));
            }
            std::sort(out.begin(), out.end(), by_elems);
        }
    }
    return result;
}

std::vector<PointSet> orbit_reps(const GroupParams &g, std::uint32_t size, std::size_t budget) {
    return std::move(orbit_reps(g, std::vector<std::uint32_t>{size}, budget).at(size));
}

} // namespace zpd
