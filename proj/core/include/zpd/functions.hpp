#pragma once

#include "zpd/group.hpp"
#include "zpd/rational.hpp"

#include <span>
#include <vector>

namespace zpd {

/// An exact rational-valued function on G, stored densely by point index.
class RationalFn {
public:
    explicit RationalFn(GeometryPtr geo);
    RationalFn(GeometryPtr geo, std::vector<Rational> values);

    // 1_A for the given point indices (duplicates counted once).
    static RationalFn indicator(GeometryPtr geo, std::span<const std::uint32_t> points);

    const Geometry &geometry() const noexcept { return *geo_; }
    const GeometryPtr &geometry_ptr() const noexcept { return geo_; }
    const GroupParams &params() const noexcept { return geo_->params(); }

    const Rational &operator[](std::uint32_t idx) const { return values_[idx]; }
    Rational &operator[](std::uint32_t idx) { return values_[idx]; }
    const Rational &at(const Point &x) const { return values_[geo_->index(x)]; }
    std::span<const Rational> values() const noexcept { return values_; }

    // x -> f(-x)
    RationalFn reflected() const;

    RationalFn &operator*=(const Rational &s);
    friend RationalFn operator*(RationalFn f, const Rational &s) { return f *= s; }
    friend bool operator==(const RationalFn &a, const RationalFn &b);

private:
    GeometryPtr geo_;
    std::vector<Rational> values_;
};

/// A ray-type function: one value at the origin and one per punctured line.
/// Lines are indexed in the lexicographic order of Geometry. Every RayFn is
/// even because -x lies on the same punctured line as x.
class RayFn {
public:
    explicit RayFn(GeometryPtr geo);
    RayFn(GeometryPtr geo, Rational at_zero, std::vector<Rational> on_line);

    static RayFn delta(GeometryPtr geo);
    static RayFn constant(GeometryPtr geo, const Rational &c);
    // 1_L for the full line L (origin included).
    static RayFn full_line(GeometryPtr geo, std::uint32_t line);
    // 1_S for the hyperplane with the given normal line (origin included).
    static RayFn hyperplane(GeometryPtr geo, std::uint32_t normal);

    const Geometry &geometry() const noexcept { return *geo_; }
    const GeometryPtr &geometry_ptr() const noexcept { return geo_; }
    const GroupParams &params() const noexcept { return geo_->params(); }

    const Rational &at_zero() const noexcept { return at_zero_; }
    Rational &at_zero() noexcept { return at_zero_; }
    const Rational &on_line(std::uint32_t line) const { return on_line_[line]; }
    Rational &on_line(std::uint32_t line) { return on_line_[line]; }
    std::span<const Rational> line_values() const noexcept { return on_line_; }

    // Value at a point index.
    const Rational &value(std::uint32_t point) const {
        return point == 0 ? at_zero_ : on_line_[geo_->line_index(point)];
    }
    const Rational &value(const Point &x) const { return value(geo_->index(x)); }

    bool supported_at_zero() const { return sgn(at_zero_) != 0; }
    bool supported_on(std::uint32_t line) const { return sgn(on_line_[line]) != 0; }

    RationalFn expand() const;

    RayFn &operator+=(const RayFn &o);
    RayFn &operator-=(const RayFn &o);
    RayFn &operator*=(const Rational &s);
    friend RayFn operator+(RayFn a, const RayFn &b) { return a += b; }
    friend RayFn operator-(RayFn a, const RayFn &b) { return a -= b; }
    friend RayFn operator*(RayFn a, const Rational &s) { return a *= s; }
    friend RayFn operator*(const Rational &s, RayFn a) { return a *= s; }
    friend bool operator==(const RayFn &a, const RayFn &b);

private:
    void check_same_group(const RayFn &o) const;

    GeometryPtr geo_;
    Rational at_zero_;
    std::vector<Rational> on_line_;
};

// (a * b)(x) = sum_y a(x - y) b(y), by direct summation.
RationalFn convolve(const RationalFn &a, const RationalFn &b);

// Direct convolution of two ray-type functions. The result is ray-type, so it
// is evaluated only at 0 and at one representative per line.
RayFn convolve(const RayFn &a, const RayFn &b);

// 1_A * 1_{-A}
RationalFn autocorrelation(GeometryPtr geo, std::span<const std::uint32_t> points);

// at_zero = f(0); on_line(L) = mean of f over the punctured line L.
RayFn ray_average(const RationalFn &f);

// Exact Fourier transform of a ray-type function, as a function on the dual.
//   fhat(0) = f(0) + (p-1) sum_L v_L
//   fhat(t) = f(0) - sum_L v_L + p sum_{L in t-perp} v_L      (t != 0)
RayFn ft_ray(const RayFn &f);

// Inverse transform: ft_ray(F) / |G|.
RayFn ift_ray(const RayFn &F);

// sum over G = f(0) + (p-1) sum_L v_L
Rational mass(const RayFn &f);

// Pointwise product.
RayFn pointwise_product(const RayFn &a, const RayFn &b);

} // namespace zpd
