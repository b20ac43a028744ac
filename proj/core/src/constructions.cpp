#include "zpd/constructions.hpp"

#include "zpd/linalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace zpd {

namespace {

GeometryPtr geometry3(std::uint32_t p) { return Geometry::of(GroupParams(p, 3)); }

std::uint32_t axis_line(const Geometry &geo, std::uint32_t i) {
    Point e{0, 0, 0};
    e[i] = 1;
    return geo.line_index(geo.index(e));
}

// sum over the three coordinate directions of make(line of e_i)
template <class Make>
RayFn sum_axes(const GeometryPtr &geo, Make make) {
    RayFn out(geo);
    for (std::uint32_t i = 0; i < 3; ++i) {
        out += make(geo, axis_line(*geo, i));
    }
    return out;
}

std::uint32_t cross(const Geometry &geo, std::uint32_t a, std::uint32_t b) {
    const auto x = geo.point(a);
    const auto y = geo.point(b);
    const std::int64_t p = geo.p();
    auto m = [p](std::int64_t v) { return static_cast<std::uint32_t>(((v % p) + p) % p); };
    const Point c{m(std::int64_t(x[1]) * y[2] - std::int64_t(x[2]) * y[1]),
                  m(std::int64_t(x[2]) * y[0] - std::int64_t(x[0]) * y[2]),
                  m(std::int64_t(x[0]) * y[1] - std::int64_t(x[1]) * y[0])};
    return geo.index(c);
}

enum Cls { kApex, kOnPencil, kEllOther, kSpoke, kOff, kNumCls };
constexpr std::array<const char *, kNumCls> kClsName{"apex", "collinear", "line-other", "spoke", "off"};

// Class of every line for the configuration (collinear line indices, apex).
std::vector<Cls> classes(const Geometry &geo, const std::vector<std::uint32_t> &pts, std::uint32_t apex) {
    const auto ell = cross(geo, geo.rep(pts[0]), geo.rep(pts[1]));
    std::vector<std::uint32_t> spokes;
    for (auto q : pts) {
        spokes.push_back(cross(geo, geo.rep(apex), geo.rep(q)));
    }
    std::vector<Cls> cls(geo.line_count(), kOff);
    for (std::uint32_t l = 0; l < geo.line_count(); ++l) {
        const auto x = geo.rep(l);
        if (l == apex) {
            cls[l] = kApex;
        } else if (std::find(pts.begin(), pts.end(), l) != pts.end()) {
            cls[l] = kOnPencil;
        } else if (geo.pairing(ell, x) == 0) {
            cls[l] = kEllOther;
        } else {
            for (auto s : spokes) {
                if (geo.pairing(s, x) == 0) {
                    cls[l] = kSpoke;
                    break;
                }
            }
        }
    }
    return cls;
}

std::string describe(const std::vector<Cls> &unknowns, const std::vector<LpRow> &rows) {
    std::ostringstream os;
    os << "unknowns [";
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
        os << (i ? ", " : "") << kClsName[unknowns[i]];
    }
    os << "]; rows:";
    for (const auto &r : rows) {
        os << " [";
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            os << (i ? " " : "") << to_string(r.coeffs[i]);
        }
        os << " | " << to_string(r.rhs) << "]";
    }
    return os.str();
}

// Solves for a ray-type fn with fn(0) = 1, line-values constant on each class
// in `support` and 0 elsewhere, whose transform vanishes on every dual line
// whose dual class is in `zero_on`.
RayFn solve_side(const GeometryPtr &geo, const std::vector<Cls> &primal, const std::vector<Cls> &dual,
                 std::vector<Cls> support, const std::vector<Cls> &zero_on, const char *name) {
    std::erase_if(support, [&](Cls c) { return std::find(primal.begin(), primal.end(), c) == primal.end(); });
    const auto n = support.size();
    const auto p = geo->p();

    // fhat(t) = 1 - sum_L v_L + p sum_{L in t-perp} v_L  (t != 0)
    std::vector<LpRow> rows;
    for (std::uint32_t t = 0; t < geo->line_count(); ++t) {
        if (std::find(zero_on.begin(), zero_on.end(), dual[t]) == zero_on.end()) {
            continue;
        }
        LpRow row{std::vector<Rational>(n), Rational(-1)};
        for (std::uint32_t l = 0; l < geo->line_count(); ++l) {
            const auto it = std::find(support.begin(), support.end(), primal[l]);
            if (it == support.end()) {
                continue;
            }
            auto &c = row.coeffs[it - support.begin()];
            c -= 1;
            if (geo->line_in_hyperplane(t, l)) {
                c += p;
            }
        }
        if (std::find_if(rows.begin(), rows.end(), [&](const LpRow &r) {
                return r.coeffs == row.coeffs && r.rhs == row.rhs;
            }) == rows.end()) {
            rows.push_back(std::move(row));
        }
    }
    const auto sol = solve_linear_system(n, rows);
    if (!sol.unique) {
        throw DomainError(std::string("near-pencil: the system for ") + name + " has " +
                          (sol.consistent ? "no unique" : "no") + " solution; " + describe(support, rows));
    }
    RayFn fn(geo);
    fn.at_zero() = 1;
    for (std::uint32_t l = 0; l < geo->line_count(); ++l) {
        const auto it = std::find(support.begin(), support.end(), primal[l]);
        if (it != support.end()) {
            fn.on_line(l) = (*sol.unique)[it - support.begin()];
        }
    }
    return fn;
}

} // namespace

DavidClosedForms david_closed_forms(std::uint32_t p) {
    const auto geo = geometry3(p);
    const Rational P(p);
    const auto planes = sum_axes(geo, RayFn::hyperplane);
    const auto lines = sum_axes(geo, RayFn::full_line);
    const auto delta = RayFn::delta(geo);
    const auto one = RayFn::constant(geo, Rational(1));
    // The plane S_i = {x_i = 0} has normal e_i, and the axis L_i is spanned
    // by e_i; so 1_{S_i-perp} is the full line e_i and 1_{L_i-perp} is the
    // plane with normal e_i.
    return DavidClosedForms{
        one * Rational(2) - planes * Rational(2) + lines * P,
        planes - lines * Rational(2) + delta * (2 * P),
        planes * (P * P) - lines * (2 * P * P) + delta * (2 * P * P * P),
        one * (2 * P) - planes * (2 * P) + lines * (P * P),
    };
}

FourTuple example_david(std::uint32_t p) {
    if (p == 2) {
        throw DomainError("example_david: p = 2 is excluded");
    }
    auto forms = david_closed_forms(p);
    if (!(ft_ray(forms.f0) == forms.fhat0)) {
        throw InvariantViolation("example_david: ft_ray(f0) differs from the closed form");
    }
    if (!(ft_ray(forms.h0) == forms.hhat0)) {
        throw InvariantViolation("example_david: ft_ray(h0) differs from the closed form");
    }
    const Rational cf(3 * static_cast<long>(p) - 4);
    const Rational ch(2 * static_cast<long>(p) - 3);
    return FourTuple{forms.f0 * (1 / cf), forms.h0 * (1 / ch), forms.fhat0 * (1 / cf), forms.hhat0 * (1 / ch)};
}

NearPencil standard_near_pencil(std::uint32_t p, std::uint32_t k) {
    if (k < 3 || k > p + 1) {
        throw InputError("near-pencil: need 3 <= k <= p + 1, got k = " + std::to_string(k));
    }
    NearPencil c;
    c.collinear = {Point{1, 0, 0}, Point{0, 1, 0}};
    for (std::uint32_t j = 1; c.collinear.size() < k - 1; ++j) {
        c.collinear.push_back(Point{1, j, 0});
    }
    c.apex = Point{0, 0, 1};
    return c;
}

FourTuple near_pencil_tuple(std::uint32_t p, std::uint32_t k) {
    return near_pencil_tuple(p, standard_near_pencil(p, k));
}

FourTuple near_pencil_tuple(std::uint32_t p, const NearPencil &config) {
    if (p < 3) {
        throw InputError("near-pencil: need p >= 3");
    }
    const auto geo = geometry3(p);
    const auto k = config.collinear.size() + 1;
    if (k < 3 || k > p + 1) {
        throw InputError("near-pencil: need 3 <= k <= p + 1, got k = " + std::to_string(k));
    }
    std::vector<std::uint32_t> pts;
    for (const auto &x : config.collinear) {
        const auto l = geo->line_index(geo->index(x));
        if (l == Geometry::kNoLine) {
            throw InputError("near-pencil: the zero vector is not a projective point");
        }
        if (std::find(pts.begin(), pts.end(), l) != pts.end()) {
            throw InputError("near-pencil: repeated point " + to_string(x));
        }
        pts.push_back(l);
    }
    const auto apex = geo->line_index(geo->index(config.apex));
    if (apex == Geometry::kNoLine) {
        throw InputError("near-pencil: the zero vector is not a projective point");
    }
    const auto ell = cross(*geo, geo->rep(pts[0]), geo->rep(pts[1]));
    for (auto l : pts) {
        if (geo->pairing(ell, geo->rep(l)) != 0) {
            throw InputError("near-pencil: the k - 1 points are not collinear");
        }
    }
    if (geo->pairing(ell, geo->rep(apex)) == 0) {
        throw InputError("near-pencil: the apex lies on the line of the other points");
    }

    // Dual configuration: the line of the points becomes a point, each spoke
    // becomes a point on the dual line apex-perp.
    std::vector<std::uint32_t> dual_pts;
    for (auto l : pts) {
        dual_pts.push_back(geo->line_index(cross(*geo, geo->rep(apex), geo->rep(l))));
    }
    const auto dual_apex = geo->line_index(ell);

    const auto primal = classes(*geo, pts, apex);
    const auto dual = classes(*geo, dual_pts, dual_apex);

    auto f = solve_side(geo, primal, dual, {kApex, kOnPencil, kOff}, {kApex, kOnPencil, kOff}, "f");
    auto h = solve_side(geo, primal, dual, {kEllOther, kSpoke}, {kEllOther, kSpoke}, "h");
    auto t = make_four_tuple(std::move(f), std::move(h));
    const auto report = verify_four_tuple(t);
    if (!report.passed()) {
        for (std::size_t i = 0; i < report.axiom.size(); ++i) {
            if (!report.axiom[i]) {
                throw DomainError("near-pencil: solved tuple fails axiom " + std::to_string(i + 1) + ": " +
                                  report.detail[i]);
            }
        }
    }
    return t;
}

} // namespace zpd
