#pragma once

#include "zpd/dispersive.hpp"
#include "zpd/four_tuple.hpp"
#include "zpd/point_set.hpp"

#include <optional>
#include <string>

namespace zpd {

/// Outcome of the d = 3 case analysis. label is one of
///   "I(a)".."I(d)"       a support is everything
///   "II(a)".."II(d)"     a support meets a plane only at 0
///   "III->II(a)".."III->II(d)"   a support contains a plane; the
///                        complementary function then meets it only at 0
///   "dispersive"         none of the above
/// Letters name the function: a = f, b = h, c = fhat, d = hhat.
struct CaseResult {
    std::string label;
    std::optional<PlaneWitness> plane; // the witness plane for cases II/III
    std::optional<PointSet> partner;   // verified tiling partner (set mode)
};

// Set mode. t must be average_from_weak_tiling(A, .) for this A (checked:
// f must be the averaged autocorrelation of A). Every partner returned has
// passed is_tiling; a failure throws InvariantViolation.
CaseResult classify_case(const PointSet &a, const FourTuple &t);

// Tuple-only mode: the label from supports alone, no partner.
CaseResult classify_case(const FourTuple &t);

} // namespace zpd
