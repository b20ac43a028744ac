#include "oracles.hpp"

#include "zpd/case_analysis.hpp"
#include "zpd/constructions.hpp"
#include "zpd/dispersive.hpp"
#include "zpd/four_tuple.hpp"
#include "zpd/tiling.hpp"
#include "zpd/weak_tiling.hpp"

#include <gtest/gtest.h>

using namespace zpd;

namespace {

GeometryPtr G(std::uint32_t p, std::uint32_t d) { return Geometry::of(GroupParams(p, d)); }

PointSet plane_set(const GeometryPtr &geo, std::uint32_t normal) {
    std::vector<std::uint32_t> e;
    for (std::uint32_t x = 0; x < geo->order(); ++x) {
        if (geo->pairing(geo->rep(normal), x) == 0) e.push_back(x);
    }
    return PointSet(geo, e);
}

} // namespace

TEST(FourTuple, TrivialTuplePasses) {
    for (auto [p, d] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 3u}}) {
        const auto g = G(p, d);
        const auto t = make_four_tuple(RayFn::constant(g, Rational(1)), RayFn::delta(g));
        const auto r = verify_four_tuple(t);
        EXPECT_TRUE(r.passed());
        EXPECT_EQ(r.mass, g->order());
        ASSERT_TRUE(r.set_size.has_value());
        EXPECT_EQ(*r.set_size, g->order());
    }
}

TEST(FourTuple, AveragingExamples) {
    const auto g = G(3, 2);
    const Rational order(g->order());
    const auto t = average_from_weak_tiling(PointSet::whole(g), RayFn::delta(g));
    EXPECT_EQ(t.f, RayFn::constant(g, Rational(1)));
    EXPECT_EQ(t.h, RayFn::delta(g));
    EXPECT_EQ(t.fhat, RayFn::delta(g) * order);
    EXPECT_EQ(t.hhat, RayFn::constant(g, Rational(1)));

    const auto u = average_from_weak_tiling(PointSet::origin(g), RayFn::constant(g, Rational(1)));
    EXPECT_EQ(u.f, RayFn::delta(g));
    EXPECT_EQ(u.h, RayFn::constant(g, Rational(1)));

    const std::vector<Point> rp{{0, 0}, {1, 0}, {2, 0}}, cp{{0, 0}, {0, 1}, {0, 2}};
    const auto row = PointSet::from_points(g->params(), rp);
    const auto col = PointSet::from_points(g->params(), cp);
    std::vector<std::uint32_t> ce(col.elems());
    const auto v = average_from_weak_tiling(row, RationalFn::indicator(g, ce));
    const auto r = verify_four_tuple(v);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.mass, 3);

    EXPECT_THROW(average_from_weak_tiling(row, RayFn::delta(g)), DomainError);
}

TEST(FourTuple, TamperedLineValueFailsNonnegativity) {
    auto t = example_david(5);
    std::uint32_t line = 0;
    while (!t.h.supported_on(line)) ++line;
    t.h.on_line(line) = -1;
    const auto r = verify_four_tuple(t);
    EXPECT_FALSE(r.axiom[1]);
    EXPECT_NE(r.detail[1].find(to_string(t.h.geometry().line_id(line).rep)), std::string::npos) << r.detail[1];
    EXPECT_FALSE(r.passed());
}

TEST(FourTuple, EachAxiomCanFail) {
    const auto g = G(3, 3);
    const auto good = make_four_tuple(RayFn::constant(g, Rational(1)), RayFn::delta(g));
    auto bad_transform = good;
    bad_transform.fhat.on_line(0) += 1;
    EXPECT_FALSE(verify_four_tuple(bad_transform).axiom[0]);

    const auto scaled = make_four_tuple(RayFn::constant(g, Rational(2)), RayFn::delta(g));
    const auto r = verify_four_tuple(scaled);
    EXPECT_FALSE(r.axiom[2]);
    EXPECT_FALSE(r.axiom[3]);

    const auto overlap = make_four_tuple(RayFn::constant(g, Rational(1)), RayFn::constant(g, Rational(1)));
    EXPECT_FALSE(verify_four_tuple(overlap).axiom[4]);
}

TEST(FourTuple, SwappedTuplePassesWithReciprocalMass) {
    const auto g = G(3, 2);
    const std::vector<Point> rp{{0, 0}, {1, 0}, {2, 0}};
    const auto row = PointSet::from_points(g->params(), rp);
    const auto cert = pd_tiling_feasible(row);
    ASSERT_TRUE(cert.has_value());
    std::vector<FourTuple> tuples{average_from_weak_tiling(row, cert->h), example_david(3), example_david(5),
                                  near_pencil_tuple(5, 4)};
    for (const auto &t : tuples) {
        const auto order = Rational(t.f.geometry().order());
        const auto r = verify_four_tuple(t);
        ASSERT_TRUE(r.passed());
        const auto s = verify_four_tuple(FourTuple{t.h, t.f, t.hhat, t.fhat});
        EXPECT_TRUE(s.passed());
        EXPECT_EQ(s.mass, order / r.mass);
    }
}

TEST(Dispersive, Examples) {
    const auto g = G(3, 3);
    for (std::uint32_t n = 0; n < g->line_count(); ++n) {
        const auto v = is_dispersive(RayFn::hyperplane(g, n), Side::Primal);
        EXPECT_FALSE(v.dispersive);
        ASSERT_TRUE(v.witness.has_value());
        EXPECT_EQ(v.witness->normal, n);
        EXPECT_EQ(v.witness->meet, PlaneMeet::Full);
    }
    const auto d = is_dispersive(RayFn::delta(g), Side::Dual);
    EXPECT_FALSE(d.dispersive);
    ASSERT_TRUE(d.witness.has_value());
    EXPECT_EQ(d.witness->normal, 0u);
    EXPECT_EQ(d.witness->meet, PlaneMeet::Trivial);

    const auto line = RayFn::full_line(g, 3) + RayFn::full_line(g, 7);
    const auto meets = plane_meets(line);
    ASSERT_EQ(meets.size(), g->line_count());
    for (std::uint32_t n = 0; n < g->line_count(); ++n) {
        const bool has3 = g->line_in_hyperplane(n, 3), has7 = g->line_in_hyperplane(n, 7);
        EXPECT_EQ(meets[n].has_value(), !has3 && !has7) << n;
    }

    EXPECT_THROW(is_dispersive(RayFn::delta(G(3, 2)), Side::Primal), DomainError);
}

TEST(Dispersive, TriangleTupleIsDispersive) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto t = example_david(p);
        EXPECT_TRUE(is_dispersive(t.f, Side::Primal).dispersive);
        EXPECT_TRUE(is_dispersive(t.h, Side::Primal).dispersive);
        EXPECT_TRUE(is_dispersive(t.fhat, Side::Dual).dispersive);
        EXPECT_TRUE(is_dispersive(t.hhat, Side::Dual).dispersive);
    }
}

TEST(CaseAnalysis, WholeGroupIsCaseI) {
    const auto g = G(3, 3);
    const auto whole = PointSet::whole(g);
    const auto r = classify_case(whole, average_from_weak_tiling(whole, RayFn::delta(g)));
    EXPECT_EQ(r.label, "I(a)");
    ASSERT_TRUE(r.partner.has_value());
    EXPECT_EQ(*r.partner, PointSet::origin(g));

    const auto origin = PointSet::origin(g);
    const auto o = classify_case(origin, average_from_weak_tiling(origin, RayFn::constant(g, Rational(1))));
    EXPECT_EQ(o.label, "I(b)");
    ASSERT_TRUE(o.partner.has_value());
    EXPECT_EQ(*o.partner, whole);
}

TEST(CaseAnalysis, PlaneGetsVerifiedLinePartner) {
    const auto g = G(3, 3);
    for (std::uint32_t n = 0; n < g->line_count(); ++n) {
        const auto a = plane_set(g, n);
        const auto b = find_tiling_complement(a);
        ASSERT_TRUE(b.has_value());
        const auto r = classify_case(a, average_from_weak_tiling(a, h_from_tiling(*b).h));
        EXPECT_NE(r.label.find("II("), std::string::npos) << r.label;
        ASSERT_TRUE(r.plane.has_value());
        ASSERT_TRUE(r.partner.has_value());
        EXPECT_EQ(r.partner->size(), 3u);
        EXPECT_TRUE(is_tiling(a, *r.partner));
    }
}

TEST(CaseAnalysis, EveryFeasibleSetOfZ2CubedGetsAPartner) {
    const auto g = G(2, 3);
    for (const auto &a : oracle::all_subsets(g)) {
        const auto cert = pd_tiling_feasible(a);
        if (!cert) continue;
        const auto r = classify_case(a, average_from_weak_tiling(a, cert->h));
        ASSERT_TRUE(r.partner.has_value()) << r.label;
        EXPECT_TRUE(is_tiling(a, *r.partner));
    }
}

TEST(CaseAnalysis, TupleOnlyMode) {
    EXPECT_EQ(classify_case(example_david(5)).label, "dispersive");
    const auto r = classify_case(example_david(3));
    EXPECT_EQ(r.label, "dispersive");
    EXPECT_FALSE(r.partner.has_value());
    const auto g = G(3, 3);
    EXPECT_EQ(classify_case(make_four_tuple(RayFn::constant(g, Rational(1)), RayFn::delta(g))).label, "I(a)");
}

TEST(CaseAnalysis, RejectsTupleFromAnotherSet) {
    const auto g = G(3, 3);
    const auto whole = PointSet::whole(g);
    const auto t = average_from_weak_tiling(whole, RayFn::delta(g));
    EXPECT_THROW(classify_case(PointSet::origin(g), t), DomainError);
}
