#include "zpd/four_tuple.hpp"

#include "zpd/weak_tiling.hpp"

#include <algorithm>

namespace zpd {

namespace {

// First line where pred fails, or line_count().
template <class Pred>
std::uint32_t first_line_failing(const RayFn &f, Pred pred) {
    for (std::uint32_t l = 0; l < f.geometry().line_count(); ++l) {
        if (!pred(f.on_line(l))) {
            return l;
        }
    }
    return f.geometry().line_count();
}

std::string line_name(const Geometry &geo, std::uint32_t l) { return to_string(geo.line_id(l).rep); }

void check_nonnegative(const RayFn &f, const char *name, bool &ok, std::string &detail) {
    if (sgn(f.at_zero()) < 0) {
        ok = false;
        detail = std::string(name) + "(0) < 0";
        return;
    }
    const auto l = first_line_failing(f, [](const Rational &v) { return sgn(v) >= 0; });
    if (l != f.geometry().line_count()) {
        ok = false;
        detail = std::string(name) + " < 0 on line " + line_name(f.geometry(), l);
    }
}

void check_disjoint(const RayFn &a, const RayFn &b, const char *names, bool &ok, std::string &detail) {
    if (!a.supported_at_zero() || !b.supported_at_zero()) {
        ok = false;
        detail = std::string(names) + ": origin missing from a support";
        return;
    }
    for (std::uint32_t l = 0; l < a.geometry().line_count(); ++l) {
        if (a.supported_on(l) && b.supported_on(l)) {
            ok = false;
            detail = std::string(names) + ": supports share line " + line_name(a.geometry(), l);
            return;
        }
    }
}

void check_constant(const RayFn &f, const Rational &c, const char *name, bool &ok, std::string &detail) {
    if (f.at_zero() != c) {
        ok = false;
        detail = std::string(name) + "(0) = " + to_string(f.at_zero());
        return;
    }
    const auto l = first_line_failing(f, [&](const Rational &v) { return v == c; });
    if (l != f.geometry().line_count()) {
        ok = false;
        detail = std::string(name) + " = " + to_string(f.on_line(l)) + " on line " + line_name(f.geometry(), l);
    }
}

} // namespace

FourTuple make_four_tuple(RayFn f, RayFn h) {
    if (!(f.params() == h.params())) {
        throw InputError("four-tuple: f and h live on different groups");
    }
    RayFn fhat = ft_ray(f);
    RayFn hhat = ft_ray(h);
    return FourTuple{std::move(f), std::move(h), std::move(fhat), std::move(hhat)};
}

bool AxiomReport::passed() const noexcept {
    return std::all_of(axiom.begin(), axiom.end(), [](bool b) { return b; });
}

AxiomReport verify_four_tuple(const FourTuple &t) {
    AxiomReport r;
    r.axiom.fill(true);
    const auto &g = t.f.params();

    if (!(t.h.params() == g && t.fhat.params() == g && t.hhat.params() == g)) {
        r.axiom.fill(false);
        r.detail[0] = "functions live on different groups";
        return r;
    }
    const auto &geo = t.f.geometry();
    const Rational order(geo.order());

    if (!(ft_ray(t.f) == t.fhat)) {
        r.axiom[0] = false;
        r.detail[0] = "fhat is not the Fourier transform of f";
    } else if (!(ft_ray(t.h) == t.hhat)) {
        r.axiom[0] = false;
        r.detail[0] = "hhat is not the Fourier transform of h";
    }

    check_nonnegative(t.f, "f", r.axiom[1], r.detail[1]);
    if (r.axiom[1]) {
        check_nonnegative(t.h, "h", r.axiom[1], r.detail[1]);
    }

    if (t.f.at_zero() != 1 || t.h.at_zero() != 1) {
        r.axiom[2] = false;
        r.detail[2] = "f(0) = " + to_string(t.f.at_zero()) + ", h(0) = " + to_string(t.h.at_zero());
    }

    check_constant(convolve(t.f, t.h), Rational(1), "f * h", r.axiom[3], r.detail[3]);
    check_disjoint(t.f, t.h, "f, h", r.axiom[4], r.detail[4]);

    check_nonnegative(t.fhat, "fhat", r.axiom[5], r.detail[5]);
    if (r.axiom[5]) {
        check_nonnegative(t.hhat, "hhat", r.axiom[5], r.detail[5]);
    }

    r.mass = mass(t.f);
    if (t.fhat.at_zero() != r.mass) {
        r.axiom[6] = false;
        r.detail[6] = "fhat(0) = " + to_string(t.fhat.at_zero()) + " but sum f = " + to_string(r.mass);
    } else if (t.fhat.at_zero() * t.hhat.at_zero() != order) {
        r.axiom[6] = false;
        r.detail[6] = "fhat(0) hhat(0) = " + to_string(t.fhat.at_zero() * t.hhat.at_zero()) + " != |G|";
    }
    if (is_integer(r.mass)) {
        r.set_size = r.mass.get_num();
    }

    check_constant(convolve(t.fhat, t.hhat), order, "fhat * hhat", r.axiom[7], r.detail[7]);
    check_disjoint(t.fhat, t.hhat, "fhat, hhat", r.axiom[8], r.detail[8]);
    return r;
}

RayFn averaged_autocorrelation(const PointSet &a) {
    auto corr = autocorrelation(a.geometry_ptr(), a.elems());
    corr *= Rational(1, a.size());
    return ray_average(corr);
}

FourTuple average_from_weak_tiling(const PointSet &a, const RayFn &h1) {
    const auto report = verify_pd_tiling(a, h1);
    if (!report.passed()) {
        throw DomainError("not a weak pd-tiling: " + report.detail);
    }
    return make_four_tuple(averaged_autocorrelation(a), h1);
}

FourTuple average_from_weak_tiling(const PointSet &a, const RationalFn &h1) {
    return average_from_weak_tiling(a, ray_average(h1));
}

} // namespace zpd
