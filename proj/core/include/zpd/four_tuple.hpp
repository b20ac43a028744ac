#pragma once

#include "zpd/functions.hpp"
#include "zpd/point_set.hpp"

#include <array>
#include <optional>
#include <string>

namespace zpd {

/// (f, h, f-hat, h-hat). f and h live on G, the transforms on the dual.
struct FourTuple {
    RayFn f;
    RayFn h;
    RayFn fhat;
    RayFn hhat;
};

FourTuple make_four_tuple(RayFn f, RayFn h);

/// Verdicts for the nine conditions, numbered (i)..(ix) as axiom[0..8]:
///   (i)    all four ray-type, and fhat/hhat are the transforms of f/h
///   (ii)   f, h >= 0                (iii) f(0) = h(0) = 1
///   (iv)   f * h = 1_G              (v)   supp f & supp h = {0}
///   (vi)   fhat, hhat >= 0          (vii) fhat(0) = sum f, fhat(0) hhat(0) = |G|
///   (viii) fhat * hhat = |G| 1      (ix)  supp fhat & supp hhat = {0}
struct AxiomReport {
    std::array<bool, 9> axiom{};
    std::array<std::string, 9> detail;
    Rational mass;                   // sum of f over G
    std::optional<Integer> set_size; // mass, when it is an integer

    bool passed() const noexcept;
};

AxiomReport verify_four_tuple(const FourTuple &t);

// f = ray_average(1_A * 1_{-A} / |A|), h = ray_average(h1). Throws DomainError
// unless ray_average(h1) is a weak pd-tiling certificate for A.
FourTuple average_from_weak_tiling(const PointSet &a, const RayFn &h1);
FourTuple average_from_weak_tiling(const PointSet &a, const RationalFn &h1);

// ray_average(1_A * 1_{-A} / |A|)
RayFn averaged_autocorrelation(const PointSet &a);

} // namespace zpd
