#include "hstar/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hstar;

namespace {

CyclotomicNumber random_element(const std::shared_ptr<const CyclotomicContext>& ctx, std::mt19937_64& rng) {
    std::vector<Rational> c(ctx->degree());
    for (auto& x : c) x = Rational(static_cast<std::int64_t>(rng() % 11) - 5, 1 + static_cast<std::int64_t>(rng() % 4));
    return CyclotomicNumber(ctx, c);
}

}  // namespace

TEST(CyclotomicPolynomial, SmallIndices) {
    EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), (IntPoly{1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(8), (IntPoly{1, 0, 0, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (IntPoly{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(80).size() - 1, 32u);  // phi(80)
}

TEST(CyclotomicNumber, ZetaPowers) {
    const auto ctx = CyclotomicContext::make(8);
    const auto z = CyclotomicNumber::zeta(ctx, 1);
    auto p = CyclotomicNumber::rational(ctx, 1);
    for (int i = 0; i < 8; ++i) p = p * z;
    EXPECT_EQ(p, CyclotomicNumber::rational(ctx, 1));
    EXPECT_EQ(CyclotomicNumber::zeta(ctx, 4), CyclotomicNumber::rational(ctx, -1));
    EXPECT_EQ(norm_square(z), CyclotomicNumber::rational(ctx, 1));
    EXPECT_TRUE(norm_square(CyclotomicNumber(ctx)).is_zero());
}

TEST(CyclotomicNumber, RootsOfUnitySumToZero) {
    for (std::int64_t m : {3, 4, 9, 12, 24}) {
        const auto ctx = CyclotomicContext::make(m);
        CyclotomicNumber s(ctx);
        for (std::int64_t e = 0; e < m; ++e) s += CyclotomicNumber::zeta(ctx, e);
        EXPECT_TRUE(s.is_zero()) << m;
    }
}

TEST(CyclotomicNumber, ConjugationIsAnInvolutiveRingMap) {
    std::mt19937_64 rng(41);
    for (std::int64_t m : {5, 8, 24, 48}) {
        const auto ctx = CyclotomicContext::make(m);
        for (int t = 0; t < 20; ++t) {
            const auto x = random_element(ctx, rng);
            const auto y = random_element(ctx, rng);
            EXPECT_EQ(x.conj().conj(), x);
            EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
            EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
            EXPECT_EQ(norm_square(x).conj(), norm_square(x));
        }
    }
}

TEST(CyclotomicNumber, RingAxioms) {
    std::mt19937_64 rng(43);
    const auto ctx = CyclotomicContext::make(15);
    for (int t = 0; t < 20; ++t) {
        const auto x = random_element(ctx, rng), y = random_element(ctx, rng), z = random_element(ctx, rng);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_TRUE((x - x).is_zero());
    }
}

TEST(CyclotomicNumber, MixingFieldsIsAnError) {
    const auto a = CyclotomicNumber::zeta(CyclotomicContext::make(4), 1);
    const auto b = CyclotomicNumber::zeta(CyclotomicContext::make(8), 1);
    EXPECT_THROW(a + b, Error);
}
