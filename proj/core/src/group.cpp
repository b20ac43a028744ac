#include "zpd/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace zpd {

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            return false;
        }
    }
    return true;
}

GroupParams::GroupParams(std::uint32_t p, std::uint32_t d) : p_(p), d_(d), order_(1) {
    if (!is_prime(p)) {
        throw InputError("p = " + std::to_string(p) + " is not prime");
    }
    if (d < 1 || d > kMaxDim) {
        throw InputError("d = " + std::to_string(d) + " outside 1..4");
    }
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        order *= p;
        if (order > kMaxOrder) {
            throw InputError("p^d exceeds 10^6 for p = " + std::to_string(p) +
                             ", d = " + std::to_string(d));
        }
    }
    order_ = static_cast<std::uint32_t>(order);
}

std::string to_string(const GroupParams &g) {
    return "(Z_" + std::to_string(g.p()) + ")^" + std::to_string(g.d());
}

Point::Point(std::span<const std::uint32_t> coords) {
    if (coords.size() > kMaxDim) {
        throw InputError("point has more than 4 coordinates");
    }
    dim_ = static_cast<std::uint32_t>(coords.size());
    std::copy(coords.begin(), coords.end(), c_.begin());
}

Point::Point(std::initializer_list<std::uint32_t> coords)
    : Point(std::span<const std::uint32_t>(coords.begin(), coords.size())) {}

bool Point::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.begin() + dim_, [](std::uint32_t v) { return v == 0; });
}

bool operator==(const Point &a, const Point &b) noexcept {
    return a.dim_ == b.dim_ && std::equal(a.c_.begin(), a.c_.begin() + a.dim_, b.c_.begin());
}

std::strong_ordering operator<=>(const Point &a, const Point &b) noexcept {
    if (auto c = a.dim_ <=> b.dim_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.begin() + a.dim_,
                                                  b.c_.begin(), b.c_.begin() + b.dim_);
}

std::string to_string(const Point &x) {
    std::ostringstream os;
    os << '[';
    for (std::uint32_t i = 0; i < x.dim(); ++i) {
        os << (i ? "," : "") << x[i];
    }
    os << ']';
    return os.str();
}

Geometry::Geometry(GroupParams g) : g_(g), pow_(g.d()), inv_(g.p(), 0), line_of_(g.order(), kNoLine) {
    const std::uint32_t p = g.p();
    std::uint32_t w = 1;
    for (std::uint32_t j = g.d(); j-- > 0;) {
        pow_[j] = w;
        w *= p;
    }
    for (std::uint32_t a = 1; a < p; ++a) {
        for (std::uint32_t b = 1; b < p; ++b) {
            if (static_cast<std::uint64_t>(a) * b % p == 1) {
                inv_[a] = b;
                break;
            }
        }
    }
    // Canonical reps are exactly the points whose first nonzero digit is 1.
    // Scanning indices in order yields them sorted lexicographically.
    for (std::uint32_t x = 1; x < g.order(); ++x) {
        std::uint32_t lead = 0;
        for (std::uint32_t j = 0; j < g.d(); ++j) {
            lead = (x / pow_[j]) % p;
            if (lead != 0) {
                break;
            }
        }
        if (lead == 1) {
            const auto line = static_cast<std::uint32_t>(reps_.size());
            reps_.push_back(x);
            for (std::uint32_t k = 1; k < p; ++k) {
                line_of_[scale(k, x)] = line;
            }
        }
    }
}

std::shared_ptr<const Geometry> Geometry::of(GroupParams g) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Geometry>> cache;
    std::lock_guard lock(mu);
    auto &slot = cache[{g.p(), g.d()}];
    if (!slot) {
        slot = std::make_shared<const Geometry>(g);
    }
    return slot;
}

std::uint32_t Geometry::index(const Point &x) const {
    if (x.dim() != d()) {
        throw InputError("point " + to_string(x) + " has dimension " + std::to_string(x.dim()) +
                         ", expected " + std::to_string(d()));
    }
    std::uint32_t idx = 0;
    for (std::uint32_t j = 0; j < d(); ++j) {
        if (x[j] >= p()) {
            throw InputError("coordinate " + std::to_string(x[j]) + " of " + to_string(x) +
                             " is not a residue mod " + std::to_string(p()));
        }
        idx += x[j] * pow_[j];
    }
    return idx;
}

Point Geometry::point(std::uint32_t idx) const {
    std::array<std::uint32_t, kMaxDim> c{};
    for (std::uint32_t j = 0; j < d(); ++j) {
        c[j] = (idx / pow_[j]) % p();
    }
    return Point(std::span<const std::uint32_t>(c.data(), d()));
}

std::uint32_t Geometry::add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t p = g_.p();
    std::uint32_t r = 0;
    for (std::uint32_t j = 0; j < g_.d(); ++j) {
        const std::uint32_t s = (a / pow_[j]) % p + (b / pow_[j]) % p;
        r += (s >= p ? s - p : s) * pow_[j];
    }
    return r;
}

std::uint32_t Geometry::sub(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t p = g_.p();
    std::uint32_t r = 0;
    for (std::uint32_t j = 0; j < g_.d(); ++j) {
        const std::uint32_t s = (a / pow_[j]) % p + p - (b / pow_[j]) % p;
        r += (s >= p ? s - p : s) * pow_[j];
    }
    return r;
}

std::uint32_t Geometry::neg(std::uint32_t a) const noexcept { return sub(0, a); }

std::uint32_t Geometry::scale(std::uint32_t k, std::uint32_t a) const noexcept {
    const std::uint32_t p = g_.p();
    std::uint32_t r = 0;
    for (std::uint32_t j = 0; j < g_.d(); ++j) {
        r += static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) * ((a / pow_[j]) % p) % p) * pow_[j];
    }
    return r;
}

std::uint32_t Geometry::pairing(std::uint32_t t, std::uint32_t x) const noexcept {
    const std::uint32_t p = g_.p();
    std::uint64_t s = 0;
    for (std::uint32_t j = 0; j < g_.d(); ++j) {
        s += static_cast<std::uint64_t>((t / pow_[j]) % p) * ((x / pow_[j]) % p);
    }
    return static_cast<std::uint32_t>(s % p);
}

std::uint32_t Geometry::line_index(const LineId &l) const {
    const auto idx = index(l.rep);
    const auto line = line_of_[idx];
    if (line == kNoLine || reps_[line] != idx) {
        throw InputError(to_string(l.rep) + " is not a canonical line representative");
    }
    return line;
}

std::vector<std::uint32_t> Geometry::hyperplane_lines(std::uint32_t normal) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t l = 0; l < line_count(); ++l) {
        if (line_in_hyperplane(normal, l)) {
            out.push_back(l);
        }
    }
    return out;
}

std::uint32_t pairing(const GroupParams &g, const Point &t, const Point &x) {
    const auto geo = Geometry::of(g);
    return geo->pairing(geo->index(t), geo->index(x));
}

LineId line_of(const GroupParams &g, const Point &x) {
    const auto geo = Geometry::of(g);
    const auto idx = geo->index(x);
    if (idx == 0) {
        throw DomainError("the origin lies on every line");
    }
    return geo->line_id(geo->line_index(idx));
}

std::vector<LineId> enumerate_lines(const GroupParams &g) {
    const auto geo = Geometry::of(g);
    std::vector<LineId> out;
    out.reserve(geo->line_count());
    for (std::uint32_t l = 0; l < geo->line_count(); ++l) {
        out.push_back(geo->line_id(l));
    }
    return out;
}

HyperplaneId perp_hyperplane(const LineId &l) { return HyperplaneId{l}; }

std::vector<LineId> lines_in_hyperplane(const GroupParams &g, const HyperplaneId &h) {
    const auto geo = Geometry::of(g);
    std::vector<LineId> out;
    for (auto l : geo->hyperplane_lines(geo->line_index(h.normal))) {
        out.push_back(geo->line_id(l));
    }
    return out;
}

} // namespace zpd
