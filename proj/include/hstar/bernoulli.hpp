// Generalized first Bernoulli numbers attached to multiplicative characters of
// F_q, evaluated exactly in Q(zeta_{q-1}).
//
// Characters are indexed by j in [0, q-1): chi_j(g^t) = zeta^(j t) for the
// field's fixed generator g. Since -1 = g^((q-1)/2), chi_j is odd iff j is odd.

#pragma once

#include "hstar/bigint.hpp"
#include "hstar/caps.hpp"
#include "hstar/cyclotomic.hpp"
#include "hstar/error.hpp"
#include "hstar/finite_field.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hstar {

/// Periodic first Bernoulli function: {x} - 1/2 off the integers, 0 on them.
inline Rational b1(const Rational& x) {
    const Rational frac = fractional_part(x);
    if (frac == 0) return Rational(0);
    return frac - Rational(1, 2);
}

namespace detail {

// 2p * b1(tr / p) for a trace representative tr in [0, p).
inline std::int64_t scaled_b1(int tr, int p) { return tr == 0 ? 0 : 2 * tr - p; }

inline void check_character(const FqField& f, std::int64_t j) {
    if (j < 0 || j >= f.q() - 1)
        fail("InvalidArgument", "character index must lie in [0, q-1)");
}

inline void check_sweep_cap(const FqField& f, const ResourceCaps& caps) {
    if (f.q() > caps.max_field_order)
        throw ResourceLimit("field order " + std::to_string(f.q()) + " exceeds cap " +
                            std::to_string(caps.max_field_order));
}

}  // namespace detail

inline bool is_odd_character(const FqField& f, std::int64_t j) {
    detail::check_character(f, j);
    return j % 2 != 0;
}

inline std::shared_ptr<const CyclotomicContext> character_context(const FqField& f) {
    return CyclotomicContext::make(f.q() - 1);
}

/// sum over t of zeta^(j t) * b1(Tr(g^t) / p).
inline CyclotomicNumber b1_chi(const FqField& f, std::int64_t j,
                               std::shared_ptr<const CyclotomicContext> ctx = nullptr,
                               const ResourceCaps& caps = {}) {
    detail::check_character(f, j);
    detail::check_sweep_cap(f, caps);
    if (!ctx) ctx = character_context(f);
    const std::int64_t m = f.q() - 1;
    std::vector<std::int64_t> weights(static_cast<std::size_t>(m), 0);
    for (std::int64_t t = 0; t < m; ++t)
        weights[static_cast<std::size_t>((j * t) % m)] += detail::scaled_b1(f.trace(f.exp(t)), f.p());
    return CyclotomicNumber::from_exponent_weights(ctx, weights, BigInt(2 * f.p()));
}

/// Restriction of chi_j to F_p^*, computed in the same field Q(zeta_{q-1}):
/// F_p^* is generated by h = g^e with e = (q-1)/(p-1), and chi_j(h^t) = zeta^(j e t).
inline CyclotomicNumber b1_chi_restricted(const FqField& f, std::int64_t j,
                                          std::shared_ptr<const CyclotomicContext> ctx = nullptr) {
    detail::check_character(f, j);
    if (!ctx) ctx = character_context(f);
    const std::int64_t m = f.q() - 1;
    const std::int64_t e = m / (f.p() - 1);
    std::vector<std::int64_t> weights(static_cast<std::size_t>(m), 0);
    for (std::int64_t t = 0; t < f.p() - 1; ++t) {
        const std::int64_t h = f.exp(e * t);
        if (!f.in_prime_field(h)) fail("InternalError", "g^e does not lie in the prime field");
        weights[static_cast<std::size_t>(mod_floor(j * e * t, m))] +=
            detail::scaled_b1(static_cast<int>(h), f.p());
    }
    return CyclotomicNumber::from_exponent_weights(ctx, weights, BigInt(2 * f.p()));
}

/// Whether chi_j restricted to F_p^* is the trivial character.
inline bool restriction_is_trivial(const FqField& f, std::int64_t j) {
    detail::check_character(f, j);
    const std::int64_t m = f.q() - 1;
    return (j * (m / (f.p() - 1))) % m == 0;
}

/// sum over a in F_q of b1(Tr(a)/p) * b1(Tr(a c)/p).
inline Rational trace_pair_sum(const FqField& f, std::int64_t c) {
    if (c == 0) fail("ZeroElement", "c must be nonzero");
    if (c < 0 || c >= f.q()) fail("InvalidArgument", "element index out of range");
    BigInt acc = 0;
    for (std::int64_t a = 0; a < f.q(); ++a)
        acc += detail::scaled_b1(f.trace(a), f.p()) * detail::scaled_b1(f.trace(f.mul(a, c)), f.p());
    return Rational(acc, BigInt(4 * f.p() * f.p()));
}

inline Rational trace_pair_sum(const FqField& f, const FqElement& c) { return trace_pair_sum(f, f.index(c)); }

/// Closed form: p^(r-1) times the F_p sum when c lies in F_p, zero otherwise.
inline Rational trace_pair_sum_predicted(const FqField& f, std::int64_t c) {
    if (c == 0) fail("ZeroElement", "c must be nonzero");
    if (!f.in_prime_field(c)) return Rational(0);
    const int p = f.p();
    BigInt acc = 0;
    for (int a = 1; a < p; ++a)
        acc += detail::scaled_b1(a, p) * detail::scaled_b1(static_cast<int>((static_cast<std::int64_t>(a) * c) % p), p);
    return Rational(acc * ipow(BigInt(p), static_cast<unsigned>(f.r() - 1)), BigInt(4 * p * p));
}

/// |B_{1,chi}|^2 == p^(r-1) |B_{1,chi restricted to F_p}|^2, exactly.
inline bool norm_identity_check(const FqField& f, std::int64_t j,
                                std::shared_ptr<const CyclotomicContext> ctx = nullptr) {
    if (!is_odd_character(f, j)) fail("EvenCharacter", "norm identity is stated for odd characters");
    if (!ctx) ctx = character_context(f);
    const auto lhs = norm_square(b1_chi(f, j, ctx));
    const Rational scale(ipow(BigInt(f.p()), static_cast<unsigned>(f.r() - 1)));
    const auto rhs = norm_square(b1_chi_restricted(f, j, ctx)) * scale;
    return lhs == rhs;
}

struct CharacterRecord {
    std::int64_t j = 0;
    bool odd = false;
    bool is_zero = false;
    CyclotomicNumber norm_square;
};

struct SweepReport {
    int p = 0;
    int r = 0;
    std::vector<int> modulus;
    FqElement generator;
    std::vector<CharacterRecord> characters;

    std::size_t odd_zero_count() const {
        std::size_t n = 0;
        for (const auto& c : characters) n += c.odd && c.is_zero;
        return n;
    }
};

/// Evaluates every character in order of j; throws TheoremViolation if an odd one vanishes.
inline SweepReport nonvanishing_sweep(const FqField& f, const ResourceCaps& caps = {}) {
    detail::check_sweep_cap(f, caps);
    const auto ctx = character_context(f);
    SweepReport rep{f.p(), f.r(), f.modulus(), f.generator(), {}};
    for (std::int64_t j = 0; j < f.q() - 1; ++j) {
        auto b = b1_chi(f, j, ctx, caps);
        CharacterRecord rec{j, j % 2 != 0, b.is_zero(), norm_square(b)};
        if (rec.odd && rec.is_zero)
            fail("TheoremViolation", "B_1,chi vanishes for odd character j=" + std::to_string(j));
        rep.characters.push_back(std::move(rec));
    }
    return rep;
}

}  // namespace hstar
