#include "hstar/bernoulli.hpp"

#include <gtest/gtest.h>

using namespace hstar;

namespace {

std::vector<std::pair<int, int>> fields() { return {{3, 2}, {5, 2}, {3, 3}, {7, 2}}; }

}  // namespace

TEST(B1, Values) {
    EXPECT_EQ(b1(Rational(0)), 0);
    EXPECT_EQ(b1(Rational(1, 3)), Rational(-1, 6));
    EXPECT_EQ(b1(Rational(4, 3)), Rational(-1, 6));
    EXPECT_EQ(b1(Rational(-1, 4)), Rational(1, 4));
}

TEST(B1, SumsToZeroOverResidues) {
    for (int p = 3; p <= 50; p += 2) {
        if (!is_prime(p)) continue;
        Rational s = 0;
        for (int l = 0; l < p; ++l) s += b1(Rational(l, p));
        EXPECT_EQ(s, 0) << p;
    }
}

TEST(B1Chi, SmallestField) {
    const auto f = make_field(3, 1);
    const auto b = b1_chi(f, 1);
    EXPECT_EQ(b, CyclotomicNumber::rational(b.context(), Rational(-1, 3)));
    EXPECT_EQ(norm_square(b), CyclotomicNumber::rational(b.context(), Rational(1, 9)));
}

TEST(B1Chi, TrivialCharacterVanishes) {
    for (auto [p, r] : fields()) EXPECT_TRUE(b1_chi(make_field(p, r), 0).is_zero());
}

TEST(Characters, OddnessAndOrthogonality) {
    for (auto [p, r] : fields()) {
        const auto f = make_field(p, r);
        const auto ctx = character_context(f);
        std::size_t odd = 0;
        for (std::int64_t j = 0; j < f.q() - 1; ++j) {
            odd += is_odd_character(f, j);
            CyclotomicNumber s(ctx);
            for (std::int64_t t = 0; t < f.q() - 1; ++t) s += CyclotomicNumber::zeta(ctx, j * t);
            EXPECT_EQ(s.is_zero(), j != 0);
        }
        EXPECT_EQ(odd, static_cast<std::size_t>((f.q() - 1) / 2));
    }
    EXPECT_THROW(is_odd_character(make_field(3, 2), 8), Error);
}

TEST(Characters, OddCharactersRestrictNontrivially) {
    for (auto [p, r] : fields()) {
        const auto f = make_field(p, r);
        for (std::int64_t j = 1; j < f.q() - 1; j += 2) EXPECT_FALSE(restriction_is_trivial(f, j));
    }
}

TEST(TracePairSum, DocumentedValues) {
    EXPECT_EQ(trace_pair_sum(make_field(3, 1), 1), Rational(1, 18));
    const auto f9 = make_field(3, 2);
    EXPECT_EQ(trace_pair_sum(f9, 1), Rational(1, 6));
    for (std::int64_t c = 3; c < 9; ++c) EXPECT_EQ(trace_pair_sum(f9, c), 0);
    EXPECT_THROW(trace_pair_sum(f9, 0), Error);
}

TEST(TracePairSum, CaseSplitExhaustive) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {3, 3}}) {
        const auto f = make_field(p, r);
        for (std::int64_t c = 1; c < f.q(); ++c) EXPECT_EQ(trace_pair_sum(f, c), trace_pair_sum_predicted(f, c));
    }
}

TEST(NormIdentity, HoldsForOddCharacters) {
    for (auto [p, r] : fields()) {
        const auto f = make_field(p, r);
        const auto ctx = character_context(f);
        for (std::int64_t j = 1; j < f.q() - 1; j += 2) EXPECT_TRUE(norm_identity_check(f, j, ctx)) << f.q() << " " << j;
    }
    EXPECT_TRUE(norm_identity_check(make_field(3, 1), 1));
    EXPECT_THROW(norm_identity_check(make_field(3, 2), 2), Error);
}

TEST(Sweep, NoOddZeros) {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {3, 3}}) {
        const auto rep = nonvanishing_sweep(make_field(p, r));
        EXPECT_EQ(rep.odd_zero_count(), 0u);
        EXPECT_EQ(static_cast<std::int64_t>(rep.characters.size()), rep.characters.back().j + 1);
        for (std::size_t i = 0; i < rep.characters.size(); ++i) EXPECT_EQ(rep.characters[i].j, static_cast<std::int64_t>(i));
    }
}

TEST(Sweep, ResourceCap) {
    ResourceCaps caps;
    caps.max_field_order = 10;
    EXPECT_THROW(nonvanishing_sweep(make_field(5, 2), caps), ResourceLimit);
}

// Different primitive generators permute the character indices, so the
// multiset of values is unchanged.
TEST(Sweep, IndependentOfGeneratorChoice) {
    const auto f = make_field(5, 2);
    std::int64_t other = -1;
    for (std::int64_t g = f.generator_index() + 1; g < f.q(); ++g) {
        try {
            FqField::with_modulus(5, f.modulus(), g);
            other = g;
            break;
        } catch (const Error&) {
        }
    }
    ASSERT_GE(other, 0);
    const auto f2 = FqField::with_modulus(5, f.modulus(), other);
    auto values = [](const FqField& fld) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : nonvanishing_sweep(fld).characters) {
            std::vector<std::string> coeffs;
            for (const auto& x : c.norm_square.coeffs()) coeffs.push_back(to_string(x));
            out.push_back(coeffs);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    EXPECT_EQ(values(f), values(f2));
}
