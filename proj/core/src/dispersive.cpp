#include "zpd/dispersive.hpp"

#include "zpd/errors.hpp"

namespace zpd {

std::string_view to_string(Side s) { return s == Side::Primal ? "primal" : "dual"; }

std::string_view to_string(PlaneMeet m) { return m == PlaneMeet::Trivial ? "trivial" : "full"; }

std::vector<std::optional<PlaneMeet>> plane_meets(const RayFn &fn) {
    const auto &geo = fn.geometry();
    if (geo.d() != 3) {
        throw DomainError("dispersive property is defined for d = 3 only, got d = " + std::to_string(geo.d()));
    }
    std::vector<std::optional<PlaneMeet>> out(geo.line_count());
    for (std::uint32_t n = 0; n < geo.line_count(); ++n) {
        std::uint32_t hit = 0;
        const auto lines = geo.hyperplane_lines(n);
        for (auto l : lines) {
            hit += fn.supported_on(l) ? 1 : 0;
        }
        if (hit == 0) {
            out[n] = PlaneMeet::Trivial;
        } else if (hit == lines.size() && fn.supported_at_zero()) {
            out[n] = PlaneMeet::Full;
        }
    }
    return out;
}

DispersiveVerdict is_dispersive(const RayFn &fn, Side) {
    const auto meets = plane_meets(fn);
    for (std::uint32_t n = 0; n < meets.size(); ++n) {
        if (meets[n]) {
            return DispersiveVerdict{false, PlaneWitness{n, *meets[n]}};
        }
    }
    return DispersiveVerdict{};
}

} // namespace zpd
