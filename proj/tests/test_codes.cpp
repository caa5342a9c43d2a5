#include "hstar/codes.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hstar;

namespace {

std::string error_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

LinearCode A1_pair() { return pair_construct(3, {simplex_code_matrix(3, 2)}); }

}  // namespace

TEST(FpLinearAlgebra, RrefRankInverse) {
    const FpMatrix m = {{1, 2, 0}, {2, 1, 0}};  // second row = 2 * first over F_3
    EXPECT_EQ(fp::rank(m, 3), 1u);
    EXPECT_EQ(fp::rref(m, 3), (FpMatrix{{1, 2, 0}}));
    const FpMatrix a = {{1, 1}, {0, 1}};
    const auto inv = fp::invert(a, 5);
    ASSERT_TRUE(inv);
    EXPECT_EQ(fp::multiply(a, *inv, 5), (FpMatrix{{1, 0}, {0, 1}}));
    EXPECT_FALSE(fp::invert(FpMatrix{{1, 2}, {2, 4}}, 5));
    EXPECT_EQ(fp::inverse(3, 7), 5);
}

TEST(LinearCode, ValidatesInput) {
    EXPECT_EQ(error_code([] { LinearCode(4, 2, {{1, 0}}); }), "InvalidPrime");
    EXPECT_EQ(error_code([] { LinearCode(3, 2, {{1, 0, 1}}); }), "DimensionMismatch");
    EXPECT_EQ(error_code([] { LinearCode(3, 2, {{1, 1}, {2, 2}}); }), "DependentGenerators");
    EXPECT_EQ(error_code([] { LinearCode(3, 2, {{1, 3}}); }), "InvalidArgument");
}

TEST(Codewords, WeightAgeSupport) {
    const Codeword c = {0, 2, 1, 0, 2};
    EXPECT_EQ(weight(c), 3);
    EXPECT_EQ(age(c), 5);
    EXPECT_EQ(support(c), (std::vector<std::size_t>{1, 2, 4}));
}

TEST(Codewords, EnumerationVisitsEachWordOnce) {
    const LinearCode code(3, 4, {{1, 0, 1, 2}, {0, 1, 1, 1}});
    auto words = codewords(code);
    EXPECT_EQ(words.size(), 9u);
    EXPECT_EQ(words.front(), (Codeword{0, 0, 0, 0}));
    std::sort(words.begin(), words.end());
    EXPECT_EQ(std::unique(words.begin(), words.end()), words.end());
    ResourceCaps caps;
    caps.max_codewords = 8;
    EXPECT_THROW(codewords(code, caps), ResourceLimit);
}

TEST(SimplexCode, ShapeAndConstantWeight) {
    for (int p : {2, 3, 5, 7})
        for (std::size_t r = 1; r <= 3; ++r) {
            const auto code = simplex_code(p, r);
            const auto q = to_int64(ipow(BigInt(p), static_cast<unsigned>(r)));
            EXPECT_EQ(static_cast<std::int64_t>(code.length()), (q - 1) / (p - 1));
            EXPECT_EQ(constant_weight(code), to_int64(ipow(BigInt(p), static_cast<unsigned>(r - 1))));
        }
    EXPECT_EQ(simplex_code_matrix(3, 2), (FpMatrix{{0, 1, 1, 1}, {1, 0, 1, 2}}));
}

TEST(SimplexCode, RecognizesRescaledShuffledMatrices) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) EXPECT_TRUE(is_simplex_code_matrix(random_simplex_code_matrix(5, 2, rng), 5));
    EXPECT_FALSE(is_simplex_code_matrix(FpMatrix{{1, 1, 0}, {0, 2, 1}}, 3));
}

TEST(ConstantAge, ImpliesTwiceAgeEqualsPTimesWeight) {
    const auto code = A1_pair();
    const auto a = constant_age(code);
    const auto w = constant_weight(code);
    ASSERT_TRUE(a && w);
    EXPECT_EQ(*a, 9);
    EXPECT_EQ(2 * *a, 3 * *w);
    EXPECT_FALSE(constant_age(simplex_code(3, 2)));
}

TEST(Replicate, ScalesWeight) {
    const auto code = replicate(simplex_code(3, 2), 3);
    EXPECT_EQ(code.length(), 12u);
    EXPECT_EQ(constant_weight(code), 9);
}

TEST(PairConstruct, RejectsMixedBlocks) {
    EXPECT_EQ(error_code([] { pair_construct(3, {simplex_code_matrix(3, 2), simplex_code_matrix(3, 3)}); }),
              "MixedParameters");
    EXPECT_EQ(error_code([] { pair_construct(3, {FpMatrix{{1, 1}, {0, 1}}}); }), "MixedParameters");
}

TEST(Monomial, ComposeInverseAndApply) {
    std::mt19937_64 rng(5);
    const auto code = A1_pair();
    for (int i = 0; i < 20; ++i) {
        const auto f = random_monomial(code.length(), 3, rng);
        const auto g = random_monomial(code.length(), 3, rng);
        const auto fg = compose(g, f, 3);
        EXPECT_TRUE(same_code(apply_monomial(fg, code), apply_monomial(g, apply_monomial(f, code))));
        EXPECT_TRUE(same_code(apply_monomial(inverse(f, 3), apply_monomial(f, code)), code));
        EXPECT_EQ(compose(inverse(f, 3), f, 3), MonomialTransform::identity(code.length()));
        EXPECT_EQ(constant_weight(apply_monomial(f, code)), constant_weight(code));
    }
}

TEST(CanonicalForm, InvariantUnderEquivalenceAndRowChanges) {
    std::mt19937_64 rng(17);
    const auto code = A1_pair();
    const auto base = canonical_form(code).matrix;
    for (int i = 0; i < 15; ++i) {
        const auto f = random_monomial(code.length(), 3, rng);
        const auto other = apply_monomial(f, code);
        EXPECT_EQ(canonical_form(other).matrix, base);
        // Different generator rows of the same code.
        const auto g = other.generators();
        const LinearCode rows_changed(3, other.length(), {fp::rref(g, 3)[0], fp::rref(g, 3)[1]});
        EXPECT_EQ(canonical_form(rows_changed).matrix, base);
        const auto w = equivalence_witness(code, other);
        ASSERT_TRUE(w);
        EXPECT_TRUE(same_code(apply_monomial(*w, code), other));
    }
}

TEST(CanonicalForm, DistinguishesInequivalentCodes) {
    const LinearCode a(3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    const LinearCode b(3, 4, {{1, 0, 0, 1}, {0, 1, 0, 1}});
    EXPECT_FALSE(equivalence_witness(a, b));
    EXPECT_FALSE(equivalence_witness(a, simplex_code(3, 3)));
}

TEST(Bonisoli, SplitsReplicatedSimplexCodes) {
    std::mt19937_64 rng(23);
    const auto rep = replicate(simplex_code(5, 2), 3);
    const auto code = apply_monomial(random_monomial(rep.length(), 5, rng), rep);
    const auto blocks = bonisoli_decompose(code);
    ASSERT_EQ(blocks.size(), 3u);
    for (const auto& b : blocks) {
        std::vector<Codeword> cols;
        for (auto j : b) cols.push_back(code.column(j));
        EXPECT_TRUE(is_simplex_code_matrix(fp::from_columns(cols, 2), 5));
    }
}

TEST(Bonisoli, Errors) {
    EXPECT_EQ(error_code([] { bonisoli_decompose(LinearCode(3, 3, {{1, 1, 0}, {0, 1, 1}})); }), "NotConstantWeight");
    EXPECT_EQ(error_code([] { bonisoli_decompose(LinearCode(3, 5, {{0, 1, 1, 1, 0}, {1, 0, 1, 2, 0}})); }),
              "ZeroCoordinate");
}

TEST(PairDecompose, RecoversPairs) {
    const auto code = A1_pair();
    const auto d = pair_decompose(code);
    EXPECT_EQ(d.s, 1u);
    EXPECT_EQ(d.age, 9);
    ASSERT_EQ(d.pairs.size(), 1u);
    for (std::size_t i = 0; i < d.pairs[0].plus.size(); ++i)
        EXPECT_EQ(code.column(d.pairs[0].minus[i]), fp::negate(code.column(d.pairs[0].plus[i]), 3));
    EXPECT_FALSE(d.p2_unpaired);
}

TEST(PairDecompose, RejectsNonConstantAge) {
    EXPECT_EQ(error_code([] { pair_decompose(simplex_code(3, 2)); }), "NotConstantAge");
}

TEST(PairDecompose, BinaryOddReplicationIsFlagged) {
    const auto d = pair_decompose(simplex_code(2, 3));
    EXPECT_TRUE(d.p2_unpaired);
    EXPECT_EQ(d.bonisoli_blocks.size(), 1u);
    const auto even = pair_decompose(replicate(simplex_code(2, 2), 2));
    EXPECT_FALSE(even.p2_unpaired);
    EXPECT_EQ(even.s, 1u);
}

TEST(ParamCheck, Examples) {
    EXPECT_TRUE(param_check(3, 2, 3, 7));
    EXPECT_TRUE(param_check(2, 2, 2, 5));
    EXPECT_FALSE(param_check(3, 2, 3, 8));
    EXPECT_FALSE(param_check(4, 2, 3, 7));
    EXPECT_FALSE(param_check(3, 0, 3, 7));
}

TEST(Bridge, PairConstructToSimplexAndBack) {
    const auto code = A1_pair();
    const auto s = simplex_of_code(code);
    EXPECT_EQ(s.dim(), 7u);
    EXPECT_EQ(s.volume(), 9);
    EXPECT_EQ(hstar::hstar(s), HStarPolynomial(std::vector<BigInt>{1, 0, 0, 8, 0, 0, 0, 0}));
    const auto back = code_of_simplex(s);
    EXPECT_EQ(back.p, 3);
    EXPECT_EQ(back.k, 3u);
    EXPECT_TRUE(equivalence_witness(back.code, code));
    EXPECT_TRUE(param_check(3, 2, 3, 7));
}

TEST(Bridge, CodeOfSimplexErrors) {
    using Rows = std::vector<std::vector<std::int64_t>>;
    EXPECT_EQ(error_code([] { code_of_simplex(make_simplex(Rows{{0}, {1}})); }), "NotBinomial");
    EXPECT_EQ(error_code([] { code_of_simplex(make_simplex(Rows{{0, 0}, {2, 0}, {0, 2}})); }), "DegreeOutOfRange");
    const auto s = simplex_of_code(A1_pair());
    EXPECT_EQ(error_code([&] { code_of_simplex(pyramid(s)); }), "IsPyramid");
}
