#include "zpd/decomposition.hpp"

#include <algorithm>

namespace zpd {

Decomposition greedy_decompose(const RayFn &f) {
    const auto &geo = f.geometry();
    if (geo.d() != 2 && geo.d() != 3) {
        throw DomainError("greedy decomposition needs d = 2 or 3, got d = " + std::to_string(geo.d()));
    }
    const std::uint32_t lines = geo.line_count();
    std::vector<Rational> residual(f.line_values().begin(), f.line_values().end());
    for (std::uint32_t l = 0; l < lines; ++l) {
        if (sgn(residual[l]) < 0) {
            throw DomainError("negative value on line " + to_string(geo.line_id(l).rep));
        }
    }

    Decomposition dec{f.geometry_ptr(), 0, {}, std::vector<Rational>(lines), 0};
    dec.w = *std::min_element(residual.begin(), residual.end());
    if (f.at_zero() < dec.w) {
        dec.w = sgn(f.at_zero()) > 0 ? f.at_zero() : Rational(0);
    }
    for (auto &r : residual) {
        r -= dec.w;
    }
    Rational at_zero = f.at_zero() - dec.w;

    if (geo.d() == 3) {
        dec.planes.assign(lines, Rational(0));
        for (std::uint32_t n = 0; n < lines; ++n) {
            const auto inside = geo.hyperplane_lines(n);
            Rational c = residual[inside.front()];
            for (auto l : inside) {
                c = std::min(c, residual[l]);
            }
            if (sgn(c) == 0) {
                continue;
            }
            dec.planes[n] = c;
            for (auto l : inside) {
                residual[l] -= c;
            }
            at_zero -= c;
        }
    }

    for (std::uint32_t l = 0; l < lines; ++l) {
        dec.lines[l] = residual[l];
        at_zero -= residual[l];
    }
    dec.m = at_zero;
    return dec;
}

RayFn reconstruct(const Decomposition &dec) {
    const auto &geo = *dec.geo;
    RayFn out = RayFn::constant(dec.geo, dec.w);
    for (std::uint32_t n = 0; n < dec.planes.size(); ++n) {
        if (sgn(dec.planes[n]) != 0) {
            out += RayFn::hyperplane(dec.geo, n) * dec.planes[n];
        }
    }
    for (std::uint32_t l = 0; l < geo.line_count(); ++l) {
        out.on_line(l) += dec.lines[l];
        out.at_zero() += dec.lines[l];
    }
    out.at_zero() += dec.m;
    return out;
}

} // namespace zpd
