#include "oracles.hpp"

#include "zpd/constructions.hpp"
#include "zpd/json_io.hpp"

#include <gtest/gtest.h>

using namespace zpd;
using zpd::json::Json;

namespace {

template <class F> std::string error_of(F &&f) {
    try {
        f();
    } catch (const InputError &e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Json, PointSetRoundTrip) {
    const auto geo = Geometry::of(GroupParams(3, 2));
    const PointSet a(geo, {0, 4, 8});
    const auto j = json::to_json(a);
    EXPECT_EQ(j.dump(), R"({"d":2,"elems":[[0,0],[1,1],[2,2]],"p":3})");
    EXPECT_EQ(json::point_set_from_json(j), a);
}

TEST(Json, RayFnRoundTrip) {
    std::mt19937_64 rng(71);
    for (auto [p, d] : {std::pair{2u, 3u}, {5u, 2u}, {3u, 3u}}) {
        const auto geo = Geometry::of(GroupParams(p, d));
        for (int i = 0; i < 10; ++i) {
            const auto f = oracle::random_ray_fn(geo, rng);
            EXPECT_EQ(json::ray_fn_from_json(json::parse(json::to_json(f).dump())), f);
        }
    }
}

TEST(Json, TupleAndCertificateRoundTrip) {
    const auto t = example_david(3);
    const auto back = json::four_tuple_from_json(json::parse(json::to_json(t).dump()));
    EXPECT_EQ(back.f, t.f);
    EXPECT_EQ(back.h, t.h);
    EXPECT_EQ(back.fhat, t.fhat);
    EXPECT_EQ(back.hhat, t.hhat);

    const auto geo = Geometry::of(GroupParams(3, 2));
    const PointSet a(geo, {0, 3, 6});
    const Certificate c{RayFn::full_line(geo, 0), Provenance::FromTiling};
    const auto [a2, c2] = json::certificate_from_json(json::to_json(a, c));
    EXPECT_EQ(a2, a);
    EXPECT_EQ(c2.h, c.h);
    EXPECT_EQ(c2.provenance, c.provenance);

    const Spectrum s{geo, {0, 1, 2}};
    const auto s2 = json::spectrum_from_json(json::to_json(s));
    EXPECT_EQ(s2.points, s.points);
}

TEST(Json, AnyPointNamesItsLine) {
    const auto f = json::ray_fn_from_json(
        json::parse(R"({"p":3,"d":2,"at_zero":"1","lines":[{"rep":[2,0],"value":"1/2"}]})"));
    EXPECT_EQ(f.value(Point{1, 0}), Rational(1, 2));
}

TEST(Json, Rationals) {
    EXPECT_EQ(json::rational_from_json(Json("-3/6"), "q"), Rational(-1, 2));
    EXPECT_EQ(json::rational_from_json(Json(4), "q"), 4);
    EXPECT_EQ(json::to_json(Rational(6, 4)), Json("3/2"));
    EXPECT_THROW(json::rational_from_json(Json("1/0"), "q"), InputError);
    EXPECT_THROW(json::rational_from_json(Json("x"), "q"), InputError);
    EXPECT_THROW(json::rational_from_json(Json(0.5), "q"), InputError);
}

TEST(Json, ErrorsNameTheField) {
    EXPECT_NE(error_of([] { json::parse("{\"p\": 3,\n \"d\": }"); }).find("line 2"), std::string::npos);
    const auto range = error_of([] { json::point_set_from_json(json::parse(R"({"p":3,"d":2,"elems":[[0,0],[1,3]]})")); });
    EXPECT_NE(range.find("set.elems[1][1]"), std::string::npos) << range;
    const auto dim = error_of([] { json::point_set_from_json(json::parse(R"({"p":3,"d":2,"elems":[[0,0,0]]})")); });
    EXPECT_NE(dim.find("set.elems[0]"), std::string::npos) << dim;
    const auto prime = error_of([] { json::point_set_from_json(json::parse(R"({"p":4,"d":2,"elems":[[0,0]]})")); });
    EXPECT_FALSE(prime.empty());
    const auto missing = error_of([] { json::point_set_from_json(json::parse(R"({"p":3,"elems":[[0,0]]})")); });
    EXPECT_NE(missing.find("d"), std::string::npos);
    const auto empty = error_of([] { json::point_set_from_json(json::parse(R"({"p":3,"d":2,"elems":[]})")); });
    EXPECT_FALSE(empty.empty());
    const auto val = error_of([] {
        json::ray_fn_from_json(json::parse(R"({"p":3,"d":2,"at_zero":"1","lines":[{"rep":[1,0],"value":"a"}]})"));
    });
    EXPECT_NE(val.find("fn.lines[0].value"), std::string::npos) << val;
    const auto twice = error_of([] {
        json::ray_fn_from_json(json::parse(
            R"({"p":3,"d":2,"at_zero":"1","lines":[{"rep":[1,0],"value":"1"},{"rep":[2,0],"value":"1"}]})"));
    });
    EXPECT_NE(twice.find("fn.lines[1].rep"), std::string::npos) << twice;
    const auto origin = error_of([] {
        json::ray_fn_from_json(json::parse(R"({"p":3,"d":2,"at_zero":"1","lines":[{"rep":[0,0],"value":"1"}]})"));
    });
    EXPECT_NE(origin.find("fn.lines[0].rep"), std::string::npos) << origin;
}
