#include "oracles.hpp"

#include "zpd/orbits.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace zpd;

namespace {

std::vector<std::size_t> counts(std::uint32_t p, std::uint32_t d, std::uint32_t max_size) {
    std::vector<std::size_t> out;
    for (std::uint32_t s = 1; s <= max_size; ++s) out.push_back(orbit_reps(GroupParams(p, d), s).size());
    return out;
}

PointSet random_set(const GeometryPtr &geo, std::mt19937_64 &rng, std::uint32_t size) {
    std::set<std::uint32_t> e;
    while (e.size() < size) e.insert(static_cast<std::uint32_t>(rng() % geo->order()));
    return PointSet(geo, {e.begin(), e.end()});
}

} // namespace

TEST(Orbits, SmallCounts) {
    EXPECT_EQ(orbit_reps(GroupParams(2, 2), 1).size(), 1u);
    const auto pairs = orbit_reps(GroupParams(3, 1), 2);
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_EQ(pairs[0].elems(), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(orbit_reps(GroupParams(3, 2), 3).size(), 2u);
    EXPECT_EQ(counts(3, 2, 9), (std::vector<std::size_t>{1, 1, 2, 2, 2, 2, 1, 1, 1}));
    EXPECT_EQ(counts(3, 3, 9), (std::vector<std::size_t>{1, 1, 2, 3, 5, 10, 16, 28, 47}));
    EXPECT_EQ(orbit_reps(GroupParams(5, 2), 5).size(), 11u);
    EXPECT_EQ(orbit_reps(GroupParams(5, 2), 25).size(), 1u);
}

TEST(Orbits, RejectsBadSizesAndBudget) {
    EXPECT_THROW(orbit_reps(GroupParams(3, 2), 0), InputError);
    EXPECT_THROW(orbit_reps(GroupParams(3, 2), 10), InputError);
    try {
        (void)orbit_reps(GroupParams(3, 3), 8, 5);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded &e) {
        EXPECT_GT(e.count(), 5u);
    }
}

TEST(Orbits, CanonicalFormAgreesWithBruteForce) {
    for (auto [p, d] : {std::pair{3u, 2u}, {2u, 3u}, {2u, 2u}, {5u, 1u}}) {
        const auto geo = Geometry::of(GroupParams(p, d));
        const auto gl = oracle::general_linear_group(geo->params());
        std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> brute_to_fast;
        std::map<std::uint32_t, std::set<std::vector<std::uint32_t>>> classes;
        for (const auto &a : oracle::all_subsets(geo)) {
            const auto brute = oracle::brute_canonical(*geo, gl, a.elems());
            const auto fast = canonical_form(*geo, a.elems());
            auto [it, fresh] = brute_to_fast.emplace(brute, fast);
            ASSERT_EQ(it->second, fast) << "same orbit, different canonical forms";
            classes[a.size()].insert(brute);
        }
        std::set<std::vector<std::uint32_t>> fast_forms;
        for (const auto &[b, f] : brute_to_fast) fast_forms.insert(f);
        EXPECT_EQ(fast_forms.size(), brute_to_fast.size()) << "different orbits share a canonical form";
        for (const auto &[size, cls] : classes) {
            const auto reps = orbit_reps(geo->params(), size);
            EXPECT_EQ(reps.size(), cls.size()) << to_string(geo->params()) << " size " << size;
            for (const auto &r : reps) {
                EXPECT_EQ(canonical_form(r), r);
            }
        }
    }
}

TEST(Orbits, CanonicalFormIsAffineInvariantAndIdempotent) {
    std::mt19937_64 rng(61);
    for (auto [p, d] : {std::pair{5u, 2u}, {3u, 3u}, {7u, 2u}, {2u, 4u}}) {
        const auto geo = Geometry::of(GroupParams(p, d));
        for (std::uint32_t size : {1u, 2u, 4u, 5u, 7u}) {
            const auto a = random_set(geo, rng, size);
            const auto c = canonical_form(a);
            EXPECT_EQ(canonical_form(c), c);
            EXPECT_EQ(c.size(), a.size());
            for (int i = 0; i < 50; ++i) {
                const auto m = random_affine(*geo, rng);
                ASSERT_EQ(canonical_form(m.apply(a)), c);
            }
        }
    }
}

TEST(Orbits, RepresentativesAreDistinctOrbits) {
    const auto reps = orbit_reps(GroupParams(3, 3), 6);
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto &r : reps) {
        EXPECT_TRUE(seen.insert(r.elems()).second);
        EXPECT_EQ(r.size(), 6u);
    }
    EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end(),
                               [](const PointSet &a, const PointSet &b) { return a.elems() < b.elems(); }));
}
