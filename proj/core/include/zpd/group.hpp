#pragma once

#include "zpd/errors.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace zpd {

inline constexpr std::uint32_t kMaxDim = 4;
inline constexpr std::uint64_t kMaxOrder = 1'000'000;

bool is_prime(std::uint64_t n);

/// The pair (p, d) fixing G = (Z_p)^d. The dual group is identified with the
/// same coordinate space, so one GroupParams describes both sides.
class GroupParams {
public:
    // Validates p prime, 1 <= d <= 4, p^d <= 10^6. Throws InputError.
    GroupParams(std::uint32_t p, std::uint32_t d);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t d() const noexcept { return d_; }
    std::uint32_t order() const noexcept { return order_; }
    // (p^d - 1) / (p - 1)
    std::uint32_t line_count() const noexcept { return (order_ - 1) / (p_ - 1); }

    friend bool operator==(const GroupParams &, const GroupParams &) = default;

private:
    std::uint32_t p_;
    std::uint32_t d_;
    std::uint32_t order_;
};

std::string to_string(const GroupParams &g);

/// A vector of d residues. Used for both x in G and t in the dual.
class Point {
public:
    Point() = default;
    explicit Point(std::span<const std::uint32_t> coords);
    Point(std::initializer_list<std::uint32_t> coords);

    std::uint32_t dim() const noexcept { return dim_; }
    std::uint32_t operator[](std::uint32_t i) const { return c_[i]; }
    std::uint32_t &operator[](std::uint32_t i) { return c_[i]; }
    std::span<const std::uint32_t> coords() const noexcept { return {c_.data(), dim_}; }
    bool is_zero() const noexcept;

    friend bool operator==(const Point &a, const Point &b) noexcept;
    friend std::strong_ordering operator<=>(const Point &a, const Point &b) noexcept;

private:
    std::array<std::uint32_t, kMaxDim> c_{};
    std::uint32_t dim_ = 0;
};

std::string to_string(const Point &x);

/// A punctured line through the origin, named by its canonical representative
/// (first nonzero coordinate equal to 1).
struct LineId {
    Point rep;
    friend bool operator==(const LineId &, const LineId &) = default;
    friend auto operator<=>(const LineId &, const LineId &) = default;
};

/// The hyperplane { x : <normal.rep, x> = 0 }.
struct HyperplaneId {
    LineId normal;
    friend bool operator==(const HyperplaneId &, const HyperplaneId &) = default;
};

/// Dense tables for one group: base-p point indexing (first coordinate most
/// significant, so index order is lexicographic order) and the line table.
/// Immutable; obtain shared instances through Geometry::of.
class Geometry {
public:
    static constexpr std::uint32_t kNoLine = UINT32_MAX;

    explicit Geometry(GroupParams g);

    static std::shared_ptr<const Geometry> of(GroupParams g);

    const GroupParams &params() const noexcept { return g_; }
    std::uint32_t p() const noexcept { return g_.p(); }
    std::uint32_t d() const noexcept { return g_.d(); }
    std::uint32_t order() const noexcept { return g_.order(); }
    std::uint32_t line_count() const noexcept { return static_cast<std::uint32_t>(reps_.size()); }

    // Point <-> index. index() validates the point against the group.
    std::uint32_t index(const Point &x) const;
    Point point(std::uint32_t idx) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg(std::uint32_t a) const noexcept;
    std::uint32_t scale(std::uint32_t k, std::uint32_t a) const noexcept;
    std::uint32_t pairing(std::uint32_t t, std::uint32_t x) const noexcept;

    // Line index of a nonzero point, kNoLine for the origin.
    std::uint32_t line_index(std::uint32_t point) const noexcept { return line_of_[point]; }
    // Point index of the canonical representative of a line.
    std::uint32_t rep(std::uint32_t line) const noexcept { return reps_[line]; }
    std::span<const std::uint32_t> reps() const noexcept { return reps_; }

    LineId line_id(std::uint32_t line) const { return LineId{point(reps_[line])}; }
    std::uint32_t line_index(const LineId &l) const;

    // Does line `line` lie in the hyperplane with normal `normal`?
    bool line_in_hyperplane(std::uint32_t normal, std::uint32_t line) const noexcept {
        return pairing(reps_[normal], reps_[line]) == 0;
    }
    // Lines of the hyperplane whose normal has line index `normal`, ascending.
    std::vector<std::uint32_t> hyperplane_lines(std::uint32_t normal) const;

    std::uint32_t inverse(std::uint32_t k) const noexcept { return inv_[k]; }

private:
    GroupParams g_;
    std::vector<std::uint32_t> pow_;    // p^(d-1-j)
    std::vector<std::uint32_t> inv_;    // multiplicative inverses mod p
    std::vector<std::uint32_t> line_of_;
    std::vector<std::uint32_t> reps_;
};

using GeometryPtr = std::shared_ptr<const Geometry>;

// Free-function surface over explicit points.
std::uint32_t pairing(const GroupParams &g, const Point &t, const Point &x);
LineId line_of(const GroupParams &g, const Point &x);
std::vector<LineId> enumerate_lines(const GroupParams &g);
HyperplaneId perp_hyperplane(const LineId &l);
std::vector<LineId> lines_in_hyperplane(const GroupParams &g, const HyperplaneId &h);

} // namespace zpd
