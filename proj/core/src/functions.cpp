#include "zpd/functions.hpp"

#include <algorithm>

namespace zpd {

namespace {

void require_same_group(const Geometry &a, const Geometry &b, const char *what) {
    if (!(a.params() == b.params())) {
        throw InputError(std::string(what) + ": group mismatch " + to_string(a.params()) +
                         " vs " + to_string(b.params()));
    }
}

} // namespace

RationalFn::RationalFn(GeometryPtr geo) : geo_(std::move(geo)), values_(geo_->order()) {}

RationalFn::RationalFn(GeometryPtr geo, std::vector<Rational> values)
    : geo_(std::move(geo)), values_(std::move(values)) {
    if (values_.size() != geo_->order()) {
        throw InputError("function table has " + std::to_string(values_.size()) +
                         " entries, expected " + std::to_string(geo_->order()));
    }
}

RationalFn RationalFn::indicator(GeometryPtr geo, std::span<const std::uint32_t> points) {
    RationalFn f(std::move(geo));
    for (auto x : points) {
        f.values_.at(x) = 1;
    }
    return f;
}

RationalFn RationalFn::reflected() const {
    RationalFn out(geo_);
    for (std::uint32_t x = 0; x < geo_->order(); ++x) {
        out.values_[geo_->neg(x)] = values_[x];
    }
    return out;
}

RationalFn &RationalFn::operator*=(const Rational &s) {
    for (auto &v : values_) {
        v *= s;
    }
    return *this;
}

bool operator==(const RationalFn &a, const RationalFn &b) {
    return a.params() == b.params() && a.values_ == b.values_;
}

RayFn::RayFn(GeometryPtr geo) : geo_(std::move(geo)), on_line_(geo_->line_count()) {}

RayFn::RayFn(GeometryPtr geo, Rational at_zero, std::vector<Rational> on_line)
    : geo_(std::move(geo)), at_zero_(std::move(at_zero)), on_line_(std::move(on_line)) {
    if (on_line_.size() != geo_->line_count()) {
        throw InputError("ray function has " + std::to_string(on_line_.size()) +
                         " line values, expected " + std::to_string(geo_->line_count()));
    }
}

RayFn RayFn::delta(GeometryPtr geo) {
    RayFn f(std::move(geo));
    f.at_zero_ = 1;
    return f;
}

RayFn RayFn::constant(GeometryPtr geo, const Rational &c) {
    RayFn f(std::move(geo));
    f.at_zero_ = c;
    std::fill(f.on_line_.begin(), f.on_line_.end(), c);
    return f;
}

RayFn RayFn::full_line(GeometryPtr geo, std::uint32_t line) {
    RayFn f(std::move(geo));
    f.at_zero_ = 1;
    f.on_line_.at(line) = 1;
    return f;
}

RayFn RayFn::hyperplane(GeometryPtr geo, std::uint32_t normal) {
    RayFn f(std::move(geo));
    f.at_zero_ = 1;
    for (std::uint32_t l = 0; l < f.geo_->line_count(); ++l) {
        if (f.geo_->line_in_hyperplane(normal, l)) {
            f.on_line_[l] = 1;
        }
    }
    return f;
}

RationalFn RayFn::expand() const {
    std::vector<Rational> values(geo_->order());
    values[0] = at_zero_;
    for (std::uint32_t x = 1; x < geo_->order(); ++x) {
        values[x] = on_line_[geo_->line_index(x)];
    }
    return RationalFn(geo_, std::move(values));
}

void RayFn::check_same_group(const RayFn &o) const {
    require_same_group(*geo_, *o.geo_, "ray function arithmetic");
}

RayFn &RayFn::operator+=(const RayFn &o) {
    check_same_group(o);
    at_zero_ += o.at_zero_;
    for (std::size_t l = 0; l < on_line_.size(); ++l) {
        on_line_[l] += o.on_line_[l];
    }
    return *this;
}

RayFn &RayFn::operator-=(const RayFn &o) {
    check_same_group(o);
    at_zero_ -= o.at_zero_;
    for (std::size_t l = 0; l < on_line_.size(); ++l) {
        on_line_[l] -= o.on_line_[l];
    }
    return *this;
}

RayFn &RayFn::operator*=(const Rational &s) {
    at_zero_ *= s;
    for (auto &v : on_line_) {
        v *= s;
    }
    return *this;
}

bool operator==(const RayFn &a, const RayFn &b) {
    return a.params() == b.params() && a.at_zero_ == b.at_zero_ && a.on_line_ == b.on_line_;
}

RationalFn convolve(const RationalFn &a, const RationalFn &b) {
    require_same_group(a.geometry(), b.geometry(), "convolve");
    const auto &geo = a.geometry();
    RationalFn out(a.geometry_ptr());
    Rational term;
    for (std::uint32_t y = 0; y < geo.order(); ++y) {
        if (sgn(b[y]) == 0) {
            continue;
        }
        for (std::uint32_t x = 0; x < geo.order(); ++x) {
            const auto &av = a[geo.sub(x, y)];
            if (sgn(av) != 0) {
                term = av * b[y];
                out[x] += term;
            }
        }
    }
    return out;
}

RayFn convolve(const RayFn &a, const RayFn &b) {
    require_same_group(a.geometry(), b.geometry(), "convolve");
    const auto &geo = a.geometry();
    const auto sum_at = [&](std::uint32_t x) {
        Rational s;
        for (std::uint32_t y = 0; y < geo.order(); ++y) {
            const auto &bv = b.value(y);
            if (sgn(bv) == 0) {
                continue;
            }
            const auto &av = a.value(geo.sub(x, y));
            if (sgn(av) != 0) {
                s += av * bv;
            }
        }
        return s;
    };
    RayFn out(a.geometry_ptr());
    out.at_zero() = sum_at(0);
    for (std::uint32_t l = 0; l < geo.line_count(); ++l) {
        out.on_line(l) = sum_at(geo.rep(l));
    }
    return out;
}

RationalFn autocorrelation(GeometryPtr geo, std::span<const std::uint32_t> points) {
    RationalFn out(geo);
    for (auto a : points) {
        for (auto b : points) {
            out[geo->sub(a, b)] += 1;
        }
    }
    return out;
}

RayFn ray_average(const RationalFn &f) {
    const auto &geo = f.geometry();
    RayFn out(f.geometry_ptr());
    out.at_zero() = f[0];
    for (std::uint32_t x = 1; x < geo.order(); ++x) {
        out.on_line(geo.line_index(x)) += f[x];
    }
    const Rational scale(1, geo.p() - 1);
    for (std::uint32_t l = 0; l < geo.line_count(); ++l) {
        out.on_line(l) *= scale;
    }
    return out;
}

RayFn ft_ray(const RayFn &f) {
    const auto &geo = f.geometry();
    const std::uint32_t lines = geo.line_count();
    Rational total;
    for (const auto &v : f.line_values()) {
        total += v;
    }
    RayFn out(f.geometry_ptr());
    out.at_zero() = f.at_zero() + Rational(geo.p() - 1) * total;
    const Rational base = f.at_zero() - total;
    const Rational p(geo.p());
    for (std::uint32_t t = 0; t < lines; ++t) {
        Rational perp;
        for (std::uint32_t l = 0; l < lines; ++l) {
            if (sgn(f.on_line(l)) != 0 && geo.line_in_hyperplane(t, l)) {
                perp += f.on_line(l);
            }
        }
        out.on_line(t) = base + p * perp;
    }
    return out;
}

RayFn ift_ray(const RayFn &F) {
    RayFn out = ft_ray(F);
    out *= Rational(1, F.geometry().order());
    return out;
}

Rational mass(const RayFn &f) {
    Rational total;
    for (const auto &v : f.line_values()) {
        total += v;
    }
    return f.at_zero() + Rational(f.geometry().p() - 1) * total;
}

RayFn pointwise_product(const RayFn &a, const RayFn &b) {
    require_same_group(a.geometry(), b.geometry(), "pointwise product");
    RayFn out(a.geometry_ptr());
    out.at_zero() = a.at_zero() * b.at_zero();
    for (std::uint32_t l = 0; l < a.geometry().line_count(); ++l) {
        out.on_line(l) = a.on_line(l) * b.on_line(l);
    }
    return out;
}

} // namespace zpd
