#include "oracles.hpp"

#include "zpd/constructions.hpp"
#include "zpd/decomposition.hpp"

#include <gtest/gtest.h>

using namespace zpd;

TEST(Decompose, Constant) {
    for (std::uint32_t d : {2u, 3u}) {
        const auto geo = Geometry::of(GroupParams(3, d));
        const auto dec = greedy_decompose(RayFn::constant(geo, Rational(1)));
        EXPECT_EQ(dec.w, 1);
        EXPECT_EQ(dec.m, 0);
        for (const auto &c : dec.planes) {
            EXPECT_EQ(c, 0);
        }
        for (const auto &c : dec.lines) {
            EXPECT_EQ(c, 0);
        }
    }
}

TEST(Decompose, Delta) {
    const auto geo = Geometry::of(GroupParams(5, 3));
    const auto dec = greedy_decompose(RayFn::delta(geo));
    EXPECT_EQ(dec.w, 0);
    EXPECT_EQ(dec.m, 1);
    EXPECT_TRUE(std::all_of(dec.lines.begin(), dec.lines.end(), [](const Rational &q) { return q == 0; }));
    EXPECT_TRUE(std::all_of(dec.planes.begin(), dec.planes.end(), [](const Rational &q) { return q == 0; }));
}

TEST(Decompose, PlaneIndicatorIsOnePlane) {
    const auto geo = Geometry::of(GroupParams(3, 3));
    const auto dec = greedy_decompose(RayFn::hyperplane(geo, 4));
    EXPECT_EQ(dec.w, 0);
    EXPECT_EQ(dec.m, 0);
    for (std::uint32_t n = 0; n < geo->line_count(); ++n) {
        EXPECT_EQ(dec.planes[n], n == 4 ? 1 : 0);
    }
}

TEST(Decompose, RoundTripOnRandomNonnegative) {
    std::mt19937_64 rng(31);
    for (auto [p, d] : {std::pair{2u, 2u}, {3u, 2u}, {5u, 2u}, {2u, 3u}, {3u, 3u}}) {
        const auto geo = Geometry::of(GroupParams(p, d));
        for (int i = 0; i < 30; ++i) {
            const auto f = oracle::random_ray_fn(geo, rng, true);
            const auto dec = greedy_decompose(f);
            EXPECT_EQ(reconstruct(dec), f);
            EXPECT_GE(sgn(dec.w), 0);
            for (const auto &c : dec.planes) {
                EXPECT_GE(sgn(c), 0);
            }
            for (const auto &c : dec.lines) {
                EXPECT_GE(sgn(c), 0);
            }
        }
    }
}

TEST(Decompose, TriangleTupleHasDispersiveShape) {
    const auto t = example_david(5);
    const auto dec = greedy_decompose(t.f);
    EXPECT_EQ(reconstruct(dec), t.f);
    EXPECT_EQ(dec.w, 0);
    EXPECT_LT(sgn(dec.m), 0);
    for (const auto &c : dec.planes) {
        EXPECT_EQ(c, 0);
    }
    std::size_t positive = 0;
    for (const auto &c : dec.lines) {
        EXPECT_GE(sgn(c), 0);
        positive += sgn(c) > 0;
    }
    EXPECT_GT(positive, 0u);
}

TEST(Decompose, RejectsBadInput) {
    const auto geo = Geometry::of(GroupParams(3, 2));
    auto f = RayFn::constant(geo, Rational(1));
    f.on_line(2) = -1;
    EXPECT_THROW(greedy_decompose(f), DomainError);
    EXPECT_THROW(greedy_decompose(RayFn::delta(Geometry::of(GroupParams(3, 1)))), DomainError);
}
