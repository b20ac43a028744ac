#include "zpd/constructions.hpp"
#include "zpd/four_tuple.hpp"

#include <gtest/gtest.h>

using namespace zpd;

TEST(Triangle, PassesAllAxioms) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        const auto t = example_david(p);
        const auto r = verify_four_tuple(t);
        EXPECT_TRUE(r.passed()) << p;
        const Rational q(p);
        EXPECT_EQ(r.mass, q * q * (2 * q - 3) / (3 * q - 4));
    }
}

TEST(Triangle, MatchesClosedForms) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto t = example_david(p);
        const auto c = david_closed_forms(p);
        const Rational a(3 * p - 4), b(2 * p - 3);
        EXPECT_EQ(t.f * a, c.f0);
        EXPECT_EQ(t.h * b, c.h0);
        EXPECT_EQ(t.fhat * a, c.fhat0);
        EXPECT_EQ(t.hhat * b, c.hhat0);
        EXPECT_EQ(ft_ray(c.f0), c.fhat0);
        EXPECT_EQ(ft_ray(c.h0), c.hhat0);
    }
}

TEST(Triangle, ValuesAtFiveOnCoordinateObjects) {
    const auto c = david_closed_forms(5);
    const auto &geo = c.f0.geometry();
    // The origin, an axis, a coordinate plane off the axes, and a generic point.
    EXPECT_EQ(c.f0.value(Point{0, 0, 0}), 2 - 6 + 15);
    EXPECT_EQ(c.f0.value(Point{1, 0, 0}), 2 - 4 + 5);
    EXPECT_EQ(c.f0.value(Point{1, 1, 0}), 2 - 2);
    EXPECT_EQ(c.f0.value(Point{1, 1, 1}), 2);
    EXPECT_EQ(c.h0.value(Point{0, 0, 0}), 3 - 6 + 10);
    EXPECT_EQ(c.h0.value(Point{0, 1, 0}), 2 - 2);
    EXPECT_EQ(c.h0.value(Point{0, 1, 3}), 1);
    EXPECT_EQ(c.h0.value(Point{1, 2, 3}), 0);
    EXPECT_EQ(geo.p(), 5u);
}

TEST(Triangle, RejectsTwo) { EXPECT_THROW(example_david(2), DomainError); }

TEST(NearPencil, TriangleIsTheThreePointCase) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto a = near_pencil_tuple(p, 3);
        const auto b = example_david(p);
        EXPECT_EQ(a.f, b.f);
        EXPECT_EQ(a.h, b.h);
    }
}

TEST(NearPencil, LargerConfigurationsPass) {
    const auto t = near_pencil_tuple(5, 4);
    const auto r = verify_four_tuple(t);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.mass, Rational(25, 2));
    for (std::uint32_t p : {5u, 7u}) {
        for (std::uint32_t k = 3; k <= p + 1; ++k) {
            EXPECT_TRUE(verify_four_tuple(near_pencil_tuple(p, k)).passed()) << p << " " << k;
        }
    }
}

TEST(NearPencil, AnyConfigurationInGeneralPosition) {
    // Another frame: collinear points on x + y + z = 0, apex (1, 0, 0).
    NearPencil np{{{1, 2, 0}, {0, 1, 2}, {1, 0, 2}}, {1, 0, 0}};
    const auto t = near_pencil_tuple(3, np);
    EXPECT_TRUE(verify_four_tuple(t).passed());
    EXPECT_EQ(verify_four_tuple(t).mass, verify_four_tuple(near_pencil_tuple(3, 4)).mass);
}

TEST(NearPencil, RejectsDegenerateConfigurations) {
    EXPECT_THROW(near_pencil_tuple(2, 3), InputError);
    EXPECT_THROW(near_pencil_tuple(5, 2), InputError);
    EXPECT_THROW(near_pencil_tuple(5, 7), InputError);
    EXPECT_THROW(near_pencil_tuple(5, NearPencil{{{1, 0, 0}, {0, 1, 0}}, {1, 1, 0}}), InputError);
    EXPECT_THROW(near_pencil_tuple(5, NearPencil{{{1, 0, 0}, {2, 0, 0}}, {0, 0, 1}}), InputError);
    EXPECT_THROW(near_pencil_tuple(5, NearPencil{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 1, 1}}), InputError);
    EXPECT_THROW(near_pencil_tuple(5, NearPencil{{{1, 0, 0}, {0, 0, 0}}, {0, 0, 1}}), InputError);
}
