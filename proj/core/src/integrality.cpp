#include "zpd/integrality.hpp"

#include "zpd/constructions.hpp"
#include "zpd/errors.hpp"
#include "zpd/orbits.hpp"

#include <algorithm>

namespace zpd {

IntegralityVerdict integrality_filter(const FourTuple &t) {
    IntegralityVerdict v;
    v.from_f = mass(t.f);
    v.from_f_integer = is_integer(v.from_f);
    v.from_h = mass(t.h);
    v.from_h_integer = is_integer(v.from_h);
    return v;
}

namespace {

class LinearMatcher {
public:
    LinearMatcher(const RayFn &a, const RayFn &b) : a_(a), b_(b), geo_(a.geometry()) {
        img_.assign(geo_.order(), kUnset);
        img_[0] = 0;
        span_ = {0};
    }

    bool run() { return extend(0); }

private:
    static constexpr std::uint32_t kUnset = UINT32_MAX;

    std::uint32_t unit(std::uint32_t j) const {
        Point e(std::vector<std::uint32_t>(geo_.d(), 0));
        e[j] = 1;
        return geo_.index(e);
    }

    // Chooses the image of e_j; span_ holds span(e_0..e_{j-1}).
    bool extend(std::uint32_t j) {
        if (j == geo_.d()) {
            return true;
        }
        const auto ej = unit(j);
        const auto before = span_.size();
        for (std::uint32_t c = 1; c < geo_.order(); ++c) {
            bool ok = true;
            for (std::size_t i = 0; i < before && ok; ++i) {
                const auto x = geo_.add(span_[i], ej);
                const auto mx = geo_.add(img_[span_[i]], c);
                ok = mx != 0 && a_.value(mx) == b_.value(x);
            }
            if (!ok) {
                continue;
            }
            // Commit the coset span + s e_j for every s.
            for (std::uint32_t s = 1; s < geo_.p(); ++s) {
                const auto sej = geo_.scale(s, ej);
                const auto sc = geo_.scale(s, c);
                for (std::size_t i = 0; i < before; ++i) {
                    const auto x = geo_.add(span_[i], sej);
                    img_[x] = geo_.add(img_[span_[i]], sc);
                    span_.push_back(x);
                }
            }
            if (extend(j + 1)) {
                return true;
            }
            for (std::size_t i = before; i < span_.size(); ++i) {
                img_[span_[i]] = kUnset;
            }
            span_.resize(before);
        }
        return false;
    }

    const RayFn &a_;
    const RayFn &b_;
    const Geometry &geo_;
    std::vector<std::uint32_t> img_;
    std::vector<std::uint32_t> span_;
};

} // namespace

bool equal_up_to_linear(const RayFn &a, const RayFn &b) {
    if (!(a.params() == b.params())) {
        throw InputError("equal_up_to_linear: functions live on different groups");
    }
    if (a.at_zero() != b.at_zero()) {
        return false;
    }
    std::vector<Rational> va(a.line_values().begin(), a.line_values().end());
    std::vector<Rational> vb(b.line_values().begin(), b.line_values().end());
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) {
        return false;
    }
    return LinearMatcher(a, b).run();
}

std::vector<PointSet> sets_averaging_to(const RayFn &target, std::uint32_t size) {
    std::vector<PointSet> out;
    for (auto &a : orbit_reps(target.params(), size)) {
        if (equal_up_to_linear(averaged_autocorrelation(a), target)) {
            out.push_back(std::move(a));
        }
    }
    return out;
}

ExclusionReport david_p3_exclusion(std::uint32_t p) {
    ExclusionReport r;
    r.p = p;
    if (p == 2) {
        r.vacuous = true;
        return r;
    }
    if (p != 3) {
        throw InputError("david-p3-exclusion: only p = 2 and p = 3 need a finite check; "
                         "for larger p the integrality filter already excludes every set");
    }
    const auto t = example_david(p);
    const auto v = integrality_filter(t);
    // Each integer candidate is compared with both f and h: a set of that size
    // could sit in either role.
    for (const auto *cand : {&v.from_f, &v.from_h}) {
        if (!is_integer(*cand) || std::find(r.sizes_checked.begin(), r.sizes_checked.end(), cand->get_num()) !=
                                      r.sizes_checked.end()) {
            continue;
        }
        r.sizes_checked.push_back(cand->get_num());
        const auto reps = orbit_reps(t.f.params(), static_cast<std::uint32_t>(cand->get_num().get_ui()));
        r.representatives += reps.size();
        for (const auto &a : reps) {
            const auto avg = averaged_autocorrelation(a);
            if (equal_up_to_linear(avg, t.f) || equal_up_to_linear(avg, t.h)) {
                r.matches.push_back(a);
            }
        }
    }

    // Positive control: the plane x_0 = 0 moved by an invertible matrix.
    const auto geo = t.f.geometry_ptr();
    AffineMap m{{1, 1, 0, 0, 1, 1, 1, 0, 1}, 0};
    std::vector<std::uint32_t> plane;
    for (std::uint32_t x = 0; x < geo->order(); ++x) {
        if (geo->point(x)[0] == 0) {
            plane.push_back(x);
        }
    }
    const auto moved = m.apply(PointSet(geo, plane));
    r.positive_control_matched = !sets_averaging_to(averaged_autocorrelation(moved), moved.size()).empty();
    return r;
}

} // namespace zpd
