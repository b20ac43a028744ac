#include "zpd/case_analysis.hpp"

#include "zpd/errors.hpp"
#include "zpd/tiling.hpp"

#include <array>

namespace zpd {

namespace {

bool full_support(const RayFn &f) {
    if (!f.supported_at_zero()) {
        return false;
    }
    for (std::uint32_t l = 0; l < f.geometry().line_count(); ++l) {
        if (!f.supported_on(l)) {
            return false;
        }
    }
    return true;
}

std::uint32_t first_zero_line(const RayFn &f) {
    for (std::uint32_t l = 0; l < f.geometry().line_count(); ++l) {
        if (!f.supported_on(l)) {
            return l;
        }
    }
    throw InvariantViolation("case analysis: expected a line outside the support");
}

std::vector<std::uint32_t> line_points(const Geometry &geo, std::uint32_t line) {
    std::vector<std::uint32_t> pts{0};
    for (std::uint32_t k = 1; k < geo.p(); ++k) {
        pts.push_back(geo.scale(k, geo.rep(line)));
    }
    return pts;
}

std::vector<std::uint32_t> plane_points(const Geometry &geo, std::uint32_t normal) {
    std::vector<std::uint32_t> pts;
    for (std::uint32_t x = 0; x < geo.order(); ++x) {
        if (geo.pairing(geo.rep(normal), x) == 0) {
            pts.push_back(x);
        }
    }
    return pts;
}

constexpr std::array<char, 4> kLetters{'a', 'b', 'c', 'd'};

// Index of the function whose support is disjoint from fn's away from 0.
constexpr std::array<int, 4> kComplement{1, 0, 3, 2};

struct Found {
    int which;         // 0..3 for f, h, fhat, hhat
    bool via_full;     // Case III
    PlaneWitness plane;
};

CaseResult label_only(const FourTuple &t, std::optional<Found> &found, int &case_one) {
    const std::array<const RayFn *, 4> fns{&t.f, &t.h, &t.fhat, &t.hhat};
    case_one = -1;
    for (int i = 0; i < 4; ++i) {
        if (full_support(*fns[i])) {
            case_one = i;
            return CaseResult{std::string("I(") + kLetters[i] + ")", std::nullopt, std::nullopt};
        }
    }
    for (int i = 0; i < 4; ++i) {
        const auto v = is_dispersive(*fns[i], i < 2 ? Side::Primal : Side::Dual);
        if (v.dispersive) {
            continue;
        }
        if (v.witness->meet == PlaneMeet::Trivial) {
            found = Found{i, false, *v.witness};
            return CaseResult{std::string("II(") + kLetters[i] + ")", v.witness, std::nullopt};
        }
        // The complementary function can only meet this plane at 0.
        const int j = kComplement[i];
        const auto meets = plane_meets(*fns[j]);
        if (meets[v.witness->normal] != PlaneMeet::Trivial) {
            throw InvariantViolation("case III: complementary support is not trivial on the witness plane");
        }
        const PlaneWitness w{v.witness->normal, PlaneMeet::Trivial};
        found = Found{j, true, w};
        return CaseResult{std::string("III->II(") + kLetters[j] + ")", w, std::nullopt};
    }
    return CaseResult{"dispersive", std::nullopt, std::nullopt};
}

void check_tuple(const FourTuple &t) {
    if (t.f.geometry().d() != 3) {
        throw DomainError("case analysis is defined for d = 3 only");
    }
}

} // namespace

CaseResult classify_case(const FourTuple &t) {
    check_tuple(t);
    std::optional<Found> found;
    int case_one = -1;
    return label_only(t, found, case_one);
}

CaseResult classify_case(const PointSet &a, const FourTuple &t) {
    check_tuple(t);
    if (!(a.params() == t.f.params())) {
        throw InputError("case analysis: set and tuple live on different groups");
    }
    if (!(averaged_autocorrelation(a) == t.f)) {
        throw DomainError("case analysis: tuple f is not the averaged autocorrelation of A");
    }
    const auto &geo = a.geometry();
    std::optional<Found> found;
    int case_one = -1;
    CaseResult r = label_only(t, found, case_one);

    std::vector<std::uint32_t> partner;
    if (case_one >= 0) {
        // (a), (d): A = G so {0}; (b), (c): |A| = 1 so G.
        if (case_one == 0 || case_one == 3) {
            partner = {0};
        } else {
            partner = PointSet::whole(a.geometry_ptr()).elems();
        }
    } else if (found) {
        switch (found->which) {
        case 0: // one point of A on each coset of S
            partner = plane_points(geo, found->plane.normal);
            break;
        case 1:
        case 2: // f vanishes on some line L, and A + L = G
            partner = line_points(geo, first_zero_line(t.f));
            break;
        default: // fhat vanishes on a dual line; its perp plane complements A
            partner = plane_points(geo, first_zero_line(t.fhat));
            break;
        }
    } else {
        return r;
    }

    PointSet b(a.geometry_ptr(), std::move(partner));
    if (!is_tiling(a, b)) {
        throw InvariantViolation("case " + r.label + ": partner of size " + std::to_string(b.size()) +
                                 " fails is_tiling");
    }
    r.partner = std::move(b);
    return r;
}

} // namespace zpd
