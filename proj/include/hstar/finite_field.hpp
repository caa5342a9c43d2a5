// Finite fields F_q, q = p^r, p odd, with log/exp tables over a fixed
// primitive element.

#pragma once

#include "hstar/bigint.hpp"
#include "hstar/error.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hstar {

/// Coefficients c_0 + c_1 x + ... + c_{r-1} x^{r-1} over F_p.
struct FqElement {
    std::vector<int> coeffs;
    friend bool operator==(const FqElement&, const FqElement&) = default;
};

namespace detail {

/// Remainder of a (low-to-high coefficients) modulo monic f over F_p.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& f, int p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t i = a.size(); i-- > deg;) {
        const int c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j)
            a[i - deg + j] = static_cast<int>(mod_floor(a[i - deg + j] - static_cast<std::int64_t>(c) * f[j], p));
    }
    a.resize(deg, 0);
    return a;
}

inline bool is_irreducible(const std::vector<int>& f, int p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::int64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            std::vector<int> g(d + 1);
            std::int64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[d] = 1;
            auto rem = poly_mod(f, g, p);
            bool zero = true;
            for (int x : rem) zero = zero && x == 0;
            if (zero) return false;
        }
    }
    return true;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

class FqField {
  public:
    /// Lexicographically smallest monic irreducible modulus (candidates
    /// enumerated by the base-p integer c_0 + c_1 p + ... of their lower
    /// coefficients) and the smallest primitive element in the same order.
    static FqField make(int p, int r) {
        check_params(p, r);
        std::int64_t count = 1;
        for (int i = 0; i < r; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            std::vector<int> f(static_cast<std::size_t>(r) + 1);
            std::int64_t c = code;
            for (int i = 0; i < r; ++i) {
                f[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            f.back() = 1;
            if (detail::is_irreducible(f, p)) return with_modulus(p, f);
        }
        fail("InternalError", "no irreducible polynomial found");
    }

    /// Field F_p[x]/(modulus); generator defaults to the smallest primitive element.
    static FqField with_modulus(int p, const std::vector<int>& modulus,
                                std::optional<std::int64_t> generator_index = std::nullopt) {
        if (modulus.size() < 2 || modulus.back() != 1)
            fail("InvalidArgument", "modulus must be monic of degree >= 1");
        const int r = static_cast<int>(modulus.size()) - 1;
        check_params(p, r);
        if (!detail::is_irreducible(modulus, p)) fail("NotIrreducible", "modulus is reducible");
        FqField f;
        f.p_ = p;
        f.r_ = r;
        f.q_ = 1;
        for (int i = 0; i < r; ++i) f.q_ *= p;
        f.modulus_ = modulus;

        const std::int64_t order = f.q_ - 1;
        const auto factors = detail::prime_factors(order);
        auto is_primitive = [&](std::int64_t idx) {
            if (idx == 0) return false;
            for (auto l : factors)
                if (f.slow_pow(idx, order / l) == 1) return false;
            return f.slow_pow(idx, order) == 1;
        };
        if (generator_index) {
            if (!is_primitive(*generator_index)) fail("NotPrimitive", "given element is not primitive");
            f.generator_ = *generator_index;
        } else {
            for (std::int64_t idx = 1; idx < f.q_; ++idx)
                if (is_primitive(idx)) {
                    f.generator_ = idx;
                    break;
                }
        }

        f.exp_.resize(static_cast<std::size_t>(order));
        f.log_.assign(static_cast<std::size_t>(f.q_), -1);
        std::int64_t cur = 1;
        for (std::int64_t t = 0; t < order; ++t) {
            f.exp_[static_cast<std::size_t>(t)] = cur;
            f.log_[static_cast<std::size_t>(cur)] = t;
            cur = f.slow_mul(cur, f.generator_);
        }
        f.trace_.resize(static_cast<std::size_t>(f.q_));
        for (std::int64_t a = 0; a < f.q_; ++a) {
            std::int64_t s = 0, conj = a;
            for (int i = 0; i < r; ++i) {
                s = f.add(s, conj);
                conj = f.pow(conj, p);
            }
            if (s >= p) fail("InternalError", "trace left the prime field");
            f.trace_[static_cast<std::size_t>(a)] = static_cast<int>(s);
        }
        return f;
    }

    int p() const noexcept { return p_; }
    int r() const noexcept { return r_; }
    std::int64_t q() const noexcept { return q_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }
    std::int64_t generator_index() const noexcept { return generator_; }
    FqElement generator() const { return element(generator_); }

    // Elements are indexed by the base-p integer of their coefficients; the
    // prime field F_p is exactly the indices 0..p-1.
    FqElement element(std::int64_t index) const {
        FqElement e;
        e.coeffs.resize(static_cast<std::size_t>(r_));
        for (auto& c : e.coeffs) {
            c = static_cast<int>(index % p_);
            index /= p_;
        }
        return e;
    }
    std::int64_t index(const FqElement& e) const {
        if (e.coeffs.size() != static_cast<std::size_t>(r_))
            fail("DimensionMismatch", "element has wrong number of coefficients");
        std::int64_t idx = 0;
        for (std::size_t i = e.coeffs.size(); i-- > 0;) {
            if (e.coeffs[i] < 0 || e.coeffs[i] >= p_) fail("InvalidArgument", "coefficient out of range");
            idx = idx * p_ + e.coeffs[i];
        }
        return idx;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t out = 0, place = 1;
        for (int i = 0; i < r_; ++i) {
            out += ((a % p_ + b % p_) % p_) * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return out;
    }
    std::int64_t neg(std::int64_t a) const {
        std::int64_t out = 0, place = 1;
        for (int i = 0; i < r_; ++i) {
            out += ((p_ - a % p_) % p_) * place;
            a /= p_;
            place *= p_;
        }
        return out;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<std::size_t>((log_[static_cast<std::size_t>(a)] +
                                              log_[static_cast<std::size_t>(b)]) % (q_ - 1))];
    }
    std::int64_t pow(std::int64_t a, std::int64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        const std::int64_t t = mod_floor(log_[static_cast<std::size_t>(a)] * (e % (q_ - 1)), q_ - 1);
        return exp_[static_cast<std::size_t>(t)];
    }
    std::int64_t inv(std::int64_t a) const {
        if (a == 0) fail("ZeroElement", "zero has no inverse");
        return pow(a, q_ - 2);
    }
    /// g^t.
    std::int64_t exp(std::int64_t t) const { return exp_[static_cast<std::size_t>(mod_floor(t, q_ - 1))]; }
    /// Discrete log base g of a nonzero element.
    std::int64_t log(std::int64_t a) const {
        if (a == 0) fail("ZeroElement", "log of zero");
        return log_[static_cast<std::size_t>(a)];
    }
    /// Representative in {0..p-1} of a + a^p + ... + a^(p^(r-1)).
    int trace(std::int64_t a) const { return trace_[static_cast<std::size_t>(a)]; }
    bool in_prime_field(std::int64_t a) const { return a < p_; }

  private:
    FqField() = default;

    static void check_params(int p, int r) {
        if (!is_prime(p)) fail("InvalidPrime", std::to_string(p) + " is not prime");
        if (p == 2) fail("EvenPrime", "p must be an odd prime");
        if (r < 1) fail("InvalidArgument", "extension degree must be >= 1");
    }

    std::int64_t slow_mul(std::int64_t a, std::int64_t b) const {
        FqElement x = element(a), y = element(b);
        std::vector<int> prod(static_cast<std::size_t>(2 * r_ - 1), 0);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    (prod[static_cast<std::size_t>(i + j)] + x.coeffs[static_cast<std::size_t>(i)] *
                                                                 y.coeffs[static_cast<std::size_t>(j)]) % p_;
        FqElement out{detail::poly_mod(prod, modulus_, p_)};
        return index(out);
    }
    std::int64_t slow_pow(std::int64_t a, std::int64_t e) const {
        std::int64_t result = 1, base = a;
        while (e > 0) {
            if (e & 1) result = slow_mul(result, base);
            base = slow_mul(base, base);
            e >>= 1;
        }
        return result;
    }

    int p_ = 0;
    int r_ = 0;
    std::int64_t q_ = 0;
    std::vector<int> modulus_;
    std::int64_t generator_ = 0;
    std::vector<std::int64_t> exp_;
    std::vector<std::int64_t> log_;
    std::vector<int> trace_;
};

inline FqField make_field(int p, int r) { return FqField::make(p, r); }

inline int trace(const FqField& f, const FqElement& a) { return f.trace(f.index(a)); }

}  // namespace hstar
