#include "hstar/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hstar;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

HStarPolynomial H(std::vector<BigInt> c) { return HStarPolynomial(std::move(c)); }

LatticeSimplex two_delta2() { return make_simplex(Rows{{0, 0}, {2, 0}, {0, 2}}); }

}  // namespace

TEST(LatticeSimplex, RejectsDegenerateInput) {
    EXPECT_THROW(make_simplex(Rows{{0, 0}, {1, 1}, {2, 2}}), Error);
    EXPECT_THROW(make_simplex(Rows{{0, 0}, {1, 0, 0}, {0, 1}}), Error);
    try {
        make_simplex(Rows{{0, 0}, {1, 1}, {2, 2}});
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "DegenerateSimplex");
    }
}

TEST(LatticeSimplex, NormalizedVolume) {
    EXPECT_EQ(two_delta2().volume(), 4);
    EXPECT_EQ(make_simplex(Rows{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).volume(), 1);
    EXPECT_EQ(make_simplex(Rows{{3}, {-2}}).volume(), 5);
}

TEST(HStarPolynomial, Invariants) {
    EXPECT_THROW(H({2, 1}), Error);
    EXPECT_THROW(H({1, -1}), Error);
    const auto h = H({1, 0, 8, 0});
    EXPECT_EQ(h.degree(), 2u);
    EXPECT_EQ(h.at_one(), 9);
    EXPECT_EQ(h.binomial_degree(), std::optional<std::size_t>(2));
    EXPECT_FALSE(H({1, 1, 1}).binomial_degree());
    EXPECT_EQ(to_string(h), "1 + 8t^2");
}

TEST(Ehrhart, CountsOfTwiceStandardTriangle) {
    const auto counts = ehrhart_counts(two_delta2());
    EXPECT_EQ(counts, (std::vector<BigInt>{1, 6, 15}));
    EXPECT_EQ(ehrhart_count(two_delta2(), 3), 28);
}

TEST(HStar, PaperExampleByBothRoutes) {
    EXPECT_EQ(hstar::hstar(two_delta2()), H({1, 3, 0}));
    EXPECT_EQ(hstar_via_ehrhart(two_delta2()), H({1, 3, 0}));
}

TEST(HStar, UnimodularAndSegments) {
    EXPECT_EQ(hstar::hstar(make_simplex(Rows{{0, 0}, {1, 0}, {0, 1}})), H({1, 0, 0}));
    EXPECT_EQ(hstar::hstar(make_simplex(Rows{{0}, {5}})), H({1, 4}));
}

TEST(HStar, ReeveTetrahedronIsBinomial) {
    const auto s = make_simplex(Rows{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}});
    EXPECT_EQ(hstar::hstar(s), H({1, 0, 2, 0}));
    EXPECT_EQ(hstar_via_ehrhart(s), H({1, 0, 2, 0}));
}

TEST(HStar, RandomSimplicesAgreeAndSumToVolume) {
    std::mt19937_64 rng(99);
    int checked = 0;
    while (checked < 60) {
        const std::size_t d = 1 + rng() % 4;
        Rows v(d + 1, std::vector<std::int64_t>(d));
        for (std::size_t i = 1; i <= d; ++i)
            for (auto& x : v[i]) x = static_cast<std::int64_t>(rng() % 7) - 3;
        try {
            const auto s = make_simplex(v);
            const auto h = hstar::hstar(s);
            EXPECT_EQ(h, hstar_via_ehrhart(s));
            EXPECT_EQ(h.at_one(), s.volume());
            ++checked;
        } catch (const Error&) {
        }
    }
}

TEST(HStar, TranslationInvariant) {
    const auto s = make_simplex(Rows{{5, -3}, {7, -3}, {5, -1}});
    EXPECT_EQ(hstar::hstar(s), H({1, 3, 0}));
    EXPECT_EQ(hstar_via_ehrhart(s), H({1, 3, 0}));
}

TEST(ResourceCaps, VolumeAndBoxCapsRaise) {
    ResourceCaps caps;
    caps.max_volume = 3;
    EXPECT_THROW(hstar::hstar(two_delta2(), caps), ResourceLimit);
    caps = {};
    caps.max_box_points = 4;
    EXPECT_THROW(hstar_via_ehrhart(two_delta2(), caps), ResourceLimit);
}

TEST(Pyramid, PreservesHStar) {
    auto s = two_delta2();
    for (int i = 0; i < 3; ++i) {
        s = pyramid(s);
        EXPECT_EQ(hstar::hstar(s).coeffs()[1], 3);
        EXPECT_EQ(hstar::hstar(s).at_one(), 4);
    }
}

TEST(NamedFamilies, ExceptionalSimplex) {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto s = exceptional_simplex(n);
        EXPECT_EQ(s.dim(), n);
        EXPECT_EQ(s.volume(), 4);
        EXPECT_EQ(hstar::hstar(s).degree(), 1u);
        EXPECT_EQ(hstar::hstar(s)[1], 3);
    }
    EXPECT_THROW(exceptional_simplex(1), Error);
}

TEST(NamedFamilies, LawrencePrismHasLinearHStar) {
    const auto p = lawrence_prism({2, 2});
    EXPECT_EQ(hstar_via_ehrhart(p), H({1, 3, 0}));
    const auto q = lawrence_prism({1, 2, 3});
    const auto h = hstar_via_ehrhart(q);
    EXPECT_LE(h.degree(), 1u);
    EXPECT_EQ(h.at_one(), 6);  // normalized volume = sum of heights
}

TEST(NamedFamilies, PolytopeRejectsLowerDimensionalInput) {
    EXPECT_THROW(make_polytope({{0, 0}, {1, 1}, {2, 2}}), Error);
}

TEST(NamedFamilies, CayleyOfEmptySegments) {
    // k = 2: e_1 and e_1 + 2 e_2.
    const auto s = cayley_empty_segments({IntVector{1, 0}, IntVector{1, 2}});
    EXPECT_EQ(s.dim(), 3u);
    EXPECT_EQ(hstar::hstar(s), H({1, 0, 1, 0}));
    EXPECT_EQ(hstar::hstar(cayley_empty_segments({IntVector{1, 0}, IntVector{0, 1}})).at_one(), 1);
    try {
        cayley_empty_segments({IntVector{2, 0}, IntVector{0, 1}});
        FAIL() << "expected NonEmptySegment";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "NonEmptySegment");
    }
}

TEST(NamedFamilies, CayleyWithThreeSegments) {
    const auto s = cayley_empty_segments({IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{1, 1, 2}});
    EXPECT_EQ(s.dim(), 5u);
    EXPECT_EQ(hstar::hstar(s), H({1, 0, 0, 1, 0, 0}));
}

// Three empty segments whose Cayley simplex is not a pyramid but has
// h* = 1 + 3t^2 rather than a binomial of degree 3. Both routes agree.
TEST(NamedFamilies, CayleyNonPyramidWithLowerDegree) {
    const auto s = cayley_empty_segments({IntVector{-1, -1, -1}, IntVector{1, -1, -1}, IntVector{-1, 1, -1}});
    EXPECT_EQ(hstar::hstar(s), H({1, 0, 3, 0, 0, 0}));
    EXPECT_EQ(hstar_via_ehrhart(s), hstar::hstar(s));
}
