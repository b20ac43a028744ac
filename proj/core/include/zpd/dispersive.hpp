#pragma once

#include "zpd/four_tuple.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace zpd {

// Which side of the transform a function lives on. Primal and dual share one
// geometry, so this only affects how a witness is reported.
enum class Side { Primal, Dual };

std::string_view to_string(Side s);

enum class PlaneMeet {
    Trivial, // supp meets the plane in at most {0}
    Full,    // supp contains the whole plane
};

std::string_view to_string(PlaneMeet m);

struct PlaneWitness {
    std::uint32_t normal; // line index of the plane's normal
    PlaneMeet meet;
};

struct DispersiveVerdict {
    bool dispersive = true;
    std::optional<PlaneWitness> witness; // first violating plane, by normal
};

// d = 3 only (DomainError otherwise). A plane S is violating when supp fn
// contains no nonzero point of S, or contains all of S. An empty meet counts
// as trivial: it can only happen when fn(0) = 0, and no tuple function has that.
DispersiveVerdict is_dispersive(const RayFn &fn, Side side);

// Plane-by-plane verdicts in normal order; is_dispersive stops at the first.
std::vector<std::optional<PlaneMeet>> plane_meets(const RayFn &fn);

} // namespace zpd
