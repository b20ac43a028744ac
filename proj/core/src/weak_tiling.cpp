#include "zpd/weak_tiling.hpp"

namespace zpd {

std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::FromTiling:
        return "from-tiling";
    case Provenance::FromSpectrum:
        return "from-spectrum";
    case Provenance::FromLp:
        return "from-lp";
    }
    return "unknown";
}

Provenance parse_provenance(std::string_view s) {
    if (s == "from-tiling") {
        return Provenance::FromTiling;
    }
    if (s == "from-spectrum") {
        return Provenance::FromSpectrum;
    }
    if (s == "from-lp") {
        return Provenance::FromLp;
    }
    throw InputError("unknown provenance \"" + std::string(s) + "\"");
}

Certificate h_from_tiling(const PointSet &b) {
    auto corr = autocorrelation(b.geometry_ptr(), b.elems());
    corr *= Rational(1, b.size());
    return Certificate{ray_average(corr), Provenance::FromTiling};
}

Certificate h_from_spectrum(const PointSet &a, const Spectrum &s) {
    if (!is_spectrum(a, s)) {
        throw DomainError("h_from_spectrum: S is not a spectrum of A");
    }
    const auto &geo = a.geometry();
    RayFn hhat = ray_average(autocorrelation(s.geo, s.points));
    const Integer size(a.size());
    Rational scale(Integer(geo.order()), size * size);
    scale.canonicalize();
    hhat *= scale;
    return Certificate{ift_ray(hhat), Provenance::FromSpectrum};
}

PdTilingReport verify_pd_tiling(const PointSet &a, const RayFn &h) {
    if (!(a.params() == h.params())) {
        throw InputError("verify_pd_tiling: group mismatch");
    }
    const auto &geo = a.geometry();
    PdTilingReport r;
    const auto note = [&](const std::string &msg) {
        if (r.detail.empty()) {
            r.detail = msg;
        }
    };

    r.nonnegative = sgn(h.at_zero()) >= 0;
    for (std::uint32_t l = 0; l < geo.line_count() && r.nonnegative; ++l) {
        if (sgn(h.on_line(l)) < 0) {
            r.nonnegative = false;
            note("h < 0 on line " + to_string(geo.line_id(l).rep));
        }
    }
    if (sgn(h.at_zero()) < 0) {
        note("h(0) < 0");
    }

    r.normalized = h.at_zero() == 1;
    if (!r.normalized) {
        note("h(0) = " + to_string(h.at_zero()));
    }

    const RayFn hhat = ft_ray(h);
    r.positive_definite = sgn(hhat.at_zero()) >= 0;
    if (!r.positive_definite) {
        note("h-hat(0) < 0");
    }
    for (std::uint32_t l = 0; l < geo.line_count() && r.positive_definite; ++l) {
        if (sgn(hhat.on_line(l)) < 0) {
            r.positive_definite = false;
            note("h-hat < 0 on dual line " + to_string(geo.line_id(l).rep));
        }
    }

    r.tiles = true;
    for (std::uint32_t x = 0; x < geo.order() && r.tiles; ++x) {
        Rational s;
        for (auto y : a.elems()) {
            s += h.value(geo.sub(x, y));
        }
        if (s != 1) {
            r.tiles = false;
            note("(1_A * h)" + to_string(geo.point(x)) + " = " + to_string(s));
        }
    }

    r.support_condition = true;
    for (auto x : a.elems()) {
        for (auto y : a.elems()) {
            if (x != y && sgn(h.value(geo.sub(x, y))) != 0) {
                r.support_condition = false;
            }
        }
    }
    if (!r.support_condition) {
        note("(A - A) meets supp h outside 0");
    }
    return r;
}

LpInstance build_weak_pd_lp(const PointSet &a) {
    const auto &geo = a.geometry();
    const std::uint32_t lines = geo.line_count();
    LpInstance inst;
    inst.num_vars = lines;
    inst.equalities.reserve(geo.order());
    for (std::uint32_t x = 0; x < geo.order(); ++x) {
        LpRow row{std::vector<Rational>(lines), a.contains(x) ? Rational(0) : Rational(1)};
        for (auto y : a.elems()) {
            const auto diff = geo.sub(x, y);
            if (diff != 0) {
                row.coeffs[geo.line_index(diff)] += 1;
            }
        }
        inst.equalities.push_back(std::move(row));
    }
    const Rational p(geo.p());
    for (std::uint32_t t = 0; t < lines; ++t) {
        LpRow row{std::vector<Rational>(lines), Rational(-1)};
        for (std::uint32_t l = 0; l < lines; ++l) {
            row.coeffs[l] = geo.line_in_hyperplane(t, l) ? p - 1 : Rational(-1);
        }
        inst.inequalities.push_back(std::move(row));
    }
    inst.inequalities.push_back(LpRow{std::vector<Rational>(lines, p - 1), Rational(-1)});
    return inst;
}

std::optional<Certificate> pd_tiling_feasible(const PointSet &a) {
    const auto result = simplex_feasibility(build_weak_pd_lp(a));
    if (!result.feasible()) {
        return std::nullopt;
    }
    Certificate cert{RayFn(a.geometry_ptr(), Rational(1), *result.solution), Provenance::FromLp};
    const auto report = verify_pd_tiling(a, cert.h);
    if (!report.passed()) {
        throw InvariantViolation("LP certificate failed verification: " + report.detail);
    }
    return cert;
}

} // namespace zpd
