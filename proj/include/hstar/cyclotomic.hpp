// Exact arithmetic in the cyclotomic field Q(zeta_m), elements written in the
// power basis 1, zeta, ..., zeta^(phi(m)-1) modulo the m-th cyclotomic polynomial.

#pragma once

#include "hstar/bigint.hpp"
#include "hstar/error.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hstar {

using IntPoly = std::vector<std::int64_t>;  // low-to-high coefficients

namespace detail {

/// Exact quotient of a by monic b.
inline IntPoly poly_divide_exact(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const std::int64_t c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) fail("InternalError", "cyclotomic division left a remainder");
    return q;
}

inline IntPoly cyclotomic_polynomial_memo(std::int64_t m, std::map<std::int64_t, IntPoly>& memo) {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    IntPoly num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num.back() = 1;
    for (std::int64_t d = 1; d < m; ++d)
        if (m % d == 0) num = poly_divide_exact(num, cyclotomic_polynomial_memo(d, memo));
    memo[m] = num;
    return num;
}

}  // namespace detail

/// Phi_m by dividing x^m - 1 by Phi_d for every proper divisor d.
inline IntPoly cyclotomic_polynomial(std::int64_t m) {
    if (m < 1) fail("InvalidArgument", "cyclotomic index must be >= 1");
    std::map<std::int64_t, IntPoly> memo;
    return detail::cyclotomic_polynomial_memo(m, memo);
}

/// Reduction data for Q(zeta_m): the power-basis image of zeta^e, 0 <= e < m.
class CyclotomicContext {
  public:
    static std::shared_ptr<const CyclotomicContext> make(std::int64_t m) {
        auto ctx = std::shared_ptr<CyclotomicContext>(new CyclotomicContext());
        ctx->m_ = m;
        ctx->phi_poly_ = cyclotomic_polynomial(m);
        ctx->degree_ = ctx->phi_poly_.size() - 1;
        const std::size_t deg = ctx->degree_;
        std::vector<std::int64_t> cur(deg, 0);
        cur[0] = 1;
        if (deg == 1) cur[0] = 1;
        for (std::int64_t e = 0; e < m; ++e) {
            ctx->powers_.push_back(cur);
            // Multiply by zeta and reduce with zeta^deg = -sum phi_i zeta^i.
            const std::int64_t top = cur[deg - 1];
            for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1] - top * ctx->phi_poly_[i];
            cur[0] = -top * ctx->phi_poly_[0];
        }
        return ctx;
    }

    std::int64_t conductor() const noexcept { return m_; }
    std::size_t degree() const noexcept { return degree_; }
    const IntPoly& modulus() const noexcept { return phi_poly_; }
    const std::vector<std::int64_t>& power(std::int64_t e) const {
        return powers_[static_cast<std::size_t>(mod_floor(e, m_))];
    }

  private:
    CyclotomicContext() = default;
    std::int64_t m_ = 1;
    std::size_t degree_ = 1;
    IntPoly phi_poly_;
    std::vector<std::vector<std::int64_t>> powers_;
};

class CyclotomicNumber {
  public:
    explicit CyclotomicNumber(std::shared_ptr<const CyclotomicContext> ctx)
        : ctx_(std::move(ctx)), coeffs_(ctx_->degree()) {}

    CyclotomicNumber(std::shared_ptr<const CyclotomicContext> ctx, std::vector<Rational> coeffs)
        : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != ctx_->degree())
            fail("DimensionMismatch", "expected " + std::to_string(ctx_->degree()) + " coefficients");
    }

    static CyclotomicNumber rational(std::shared_ptr<const CyclotomicContext> ctx, const Rational& q) {
        CyclotomicNumber x(std::move(ctx));
        x.coeffs_[0] = q;
        return x;
    }

    /// zeta^e.
    static CyclotomicNumber zeta(std::shared_ptr<const CyclotomicContext> ctx, std::int64_t e) {
        CyclotomicNumber x(ctx);
        const auto& pw = ctx->power(e);
        for (std::size_t i = 0; i < pw.size(); ++i) x.coeffs_[i] = pw[i];
        return x;
    }

    /// sum_e weights[e] * zeta^e / denom for a length-m integer weight vector.
    static CyclotomicNumber from_exponent_weights(std::shared_ptr<const CyclotomicContext> ctx,
                                                  const std::vector<std::int64_t>& weights,
                                                  const BigInt& denom) {
        std::vector<BigInt> acc(ctx->degree());
        for (std::size_t e = 0; e < weights.size(); ++e) {
            if (weights[e] == 0) continue;
            const auto& pw = ctx->power(static_cast<std::int64_t>(e));
            for (std::size_t i = 0; i < pw.size(); ++i) acc[i] += BigInt(weights[e]) * pw[i];
        }
        CyclotomicNumber x(std::move(ctx));
        for (std::size_t i = 0; i < acc.size(); ++i) x.coeffs_[i] = Rational(acc[i], denom);
        return x;
    }

    std::int64_t conductor() const noexcept { return ctx_->conductor(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const std::shared_ptr<const CyclotomicContext>& context() const noexcept { return ctx_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    /// Complex conjugation zeta -> zeta^(-1).
    CyclotomicNumber conj() const {
        CyclotomicNumber out(ctx_);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            const auto& pw = ctx_->power(-static_cast<std::int64_t>(k));
            for (std::size_t i = 0; i < pw.size(); ++i)
                if (pw[i] != 0) out.coeffs_[i] += coeffs_[k] * pw[i];
        }
        return out;
    }

    CyclotomicNumber& operator+=(const CyclotomicNumber& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CyclotomicNumber& operator-=(const CyclotomicNumber& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    CyclotomicNumber& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }

    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        a.check_same(b);
        const std::size_t deg = a.coeffs_.size();
        std::vector<Rational> prod(2 * deg - 1);
        for (std::size_t i = 0; i < deg; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < deg; ++j)
                if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        CyclotomicNumber out(a.ctx_);
        for (std::size_t e = 0; e < prod.size(); ++e) {
            if (prod[e] == 0) continue;
            if (e < deg) {
                out.coeffs_[e] += prod[e];
                continue;
            }
            const auto& pw = a.ctx_->power(static_cast<std::int64_t>(e));
            for (std::size_t i = 0; i < deg; ++i)
                if (pw[i] != 0) out.coeffs_[i] += prod[e] * pw[i];
        }
        return out;
    }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
    }

  private:
    void check_same(const CyclotomicNumber& o) const {
        if (o.conductor() != conductor())
            fail("DimensionMismatch", "cyclotomic numbers from different fields");
    }

    std::shared_ptr<const CyclotomicContext> ctx_;
    std::vector<Rational> coeffs_;
};

/// B * conj(B).
inline CyclotomicNumber norm_square(const CyclotomicNumber& b) { return b * b.conj(); }

inline std::string to_string(const CyclotomicNumber& x) {
    std::string out;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        const auto& c = x.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (i > 0) out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace hstar
