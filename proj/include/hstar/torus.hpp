// Finite subgroups of the torus (R/Z)^n and the simplex <-> group correspondence.
//
// A group is stored as an explicit sorted element list of numerator vectors
// over a common denominator equal to the group exponent.

#pragma once

#include "hstar/bigint.hpp"
#include "hstar/caps.hpp"
#include "hstar/error.hpp"
#include "hstar/int_matrix.hpp"
#include "hstar/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hstar {

using Numerators = std::vector<std::int64_t>;

namespace detail {

/// Upper-triangular Hermite basis (rows) of the lattice spanned by
/// denominator * e_i and the given numerator vectors, i.e. of
/// denominator * pi^{-1}(group).
inline IntMatrix preimage_hermite_basis(std::size_t n, std::int64_t denominator,
                                        const std::vector<Numerators>& elements) {
    const BigInt big_n = denominator;
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) b(i, i) = big_n;
    auto reduce_tail = [&](std::vector<BigInt>& v, std::size_t from) {
        for (std::size_t j = from; j < n; ++j) {
            v[j] %= big_n;
            if (v[j] < 0) v[j] += big_n;
        }
    };
    for (const auto& e : elements) {
        std::vector<BigInt> v(e.begin(), e.end());
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            // Extended gcd of the pivot and v[i].
            BigInt a0 = b(i, i), b0 = v[i];
            BigInt old_r = a0, r = b0, old_s = 1, s = 0, old_t = 0, t = 1;
            while (r != 0) {
                BigInt q = old_r / r;
                BigInt tmp = old_r - q * r;
                old_r = r;
                r = tmp;
                tmp = old_s - q * s;
                old_s = s;
                s = tmp;
                tmp = old_t - q * t;
                old_t = t;
                t = tmp;
            }
            if (old_r < 0) {
                old_r = -old_r;
                old_s = -old_s;
                old_t = -old_t;
            }
            const BigInt g = old_r;
            std::vector<BigInt> row = b.row(i);
            std::vector<BigInt> new_row(n), new_v(n);
            for (std::size_t j = 0; j < n; ++j) {
                new_row[j] = old_s * row[j] + old_t * v[j];
                new_v[j] = (a0 / g) * v[j] - (b0 / g) * row[j];
            }
            reduce_tail(new_row, i + 1);
            reduce_tail(new_v, i + 1);
            for (std::size_t j = 0; j < n; ++j) b(i, j) = new_row[j];
            v = std::move(new_v);
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t r = 0; r < i; ++r) {
            BigInt q = floor_div(b(r, i), b(i, i));
            if (q != 0) b.add_row(r, i, -q);
        }
    return b;
}

inline BigInt span_order(const IntMatrix& basis, std::int64_t denominator) {
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        num *= denominator;
        den *= basis(i, i);
    }
    return num / den;
}

}  // namespace detail

class TorusSubgroup {
  public:
    /// Builds and validates a subgroup from numerators over `denominator`.
    /// Entries are reduced mod 1, duplicates dropped, zero added, and the
    /// denominator lowered to the group exponent.
    TorusSubgroup(std::size_t ambient, std::int64_t denominator, std::vector<Numerators> elements)
        : ambient_(ambient), denominator_(denominator) {
        if (ambient == 0) fail("InvalidArgument", "ambient dimension must be positive");
        if (denominator <= 0) fail("InvalidArgument", "denominator must be positive");
        elements.emplace_back(ambient, 0);
        std::int64_t g = denominator;
        for (auto& e : elements) {
            if (e.size() != ambient)
                fail("DimensionMismatch", "group element has wrong length");
            for (auto& v : e) {
                v = mod_floor(v, denominator);
                g = gcd64(g, v);
            }
        }
        denominator_ = denominator / g;
        for (auto& e : elements)
            for (auto& v : e) v /= g;
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        elements_ = std::move(elements);

        // A finite subset containing 0 is a subgroup iff it equals its span.
        IntMatrix basis = detail::preimage_hermite_basis(ambient_, denominator_, elements_);
        if (detail::span_order(basis, denominator_) != BigInt(elements_.size()))
            fail("NotAGroup", "element list is not closed under addition");
    }

    std::size_t ambient() const noexcept { return ambient_; }
    std::int64_t denominator() const noexcept { return denominator_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Numerators>& elements() const noexcept { return elements_; }

    Rational coordinate(std::size_t element, std::size_t i) const {
        return Rational(elements_.at(element).at(i), denominator_);
    }

    /// Sum of fractional parts, exact.
    Rational age(std::size_t element) const {
        std::int64_t s = 0;
        for (auto v : elements_.at(element)) s += v;
        return Rational(s, denominator_);
    }

    friend bool operator==(const TorusSubgroup&, const TorusSubgroup&) = default;

  private:
    friend TorusSubgroup lambda_of(const LatticeSimplex&, const ResourceCaps&);
    struct Trusted {};
    TorusSubgroup(Trusted, std::size_t ambient, std::int64_t denominator, std::vector<Numerators> e)
        : ambient_(ambient), denominator_(denominator), elements_(std::move(e)) {}

    std::size_t ambient_ = 0;
    std::int64_t denominator_ = 1;
    std::vector<Numerators> elements_;
};

/// Builds a subgroup from exact rational coordinates.
inline TorusSubgroup make_torus_subgroup(std::size_t ambient,
                                         const std::vector<std::vector<Rational>>& elements) {
    BigInt den = 1;
    for (const auto& e : elements)
        for (const auto& x : e) den = lcm(den, denominator(x));
    const std::int64_t n = to_int64(den);
    std::vector<Numerators> nums;
    for (const auto& e : elements) {
        if (e.size() != ambient) fail("DimensionMismatch", "group element has wrong length");
        Numerators row;
        for (const auto& x : e) {
            Rational frac = fractional_part(x);
            row.push_back(to_int64(numerator(frac) * (den / denominator(frac))));
        }
        nums.push_back(std::move(row));
    }
    return TorusSubgroup(ambient, n, std::move(nums));
}

/// Lambda_Delta: coefficient vectors of the lattice points of the
/// fundamental parallelepiped.
inline TorusSubgroup lambda_of(const LatticeSimplex& s, const ResourceCaps& caps = {}) {
    auto pts = fundamental_parallelepiped(s, caps);
    return TorusSubgroup(TorusSubgroup::Trusted{}, s.dim() + 1, pts.denominator,
                         std::move(pts.numerators));
}

/// h_k = #{x in L : sum x_i = k}.
inline HStarPolynomial hstar_from_lambda(const TorusSubgroup& group) {
    std::vector<BigInt> h(group.ambient());
    for (const auto& e : group.elements()) {
        std::int64_t s = 0;
        for (auto v : e) s += v;
        if (s % group.denominator() != 0)
            fail("NonIntegerAge", "element with age " + to_string(Rational(s, group.denominator())) +
                                      " is not in a simplex group");
        h.at(static_cast<std::size_t>(s / group.denominator())) += 1;
    }
    return HStarPolynomial(std::move(h));
}

/// Coordinates i with x_i = 0 for every element.
inline std::vector<std::size_t> pyramid_coordinates(const TorusSubgroup& group) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < group.ambient(); ++i) {
        bool zero = true;
        for (const auto& e : group.elements()) zero = zero && e[i] == 0;
        if (zero) out.push_back(i);
    }
    return out;
}

/// The apex coordinate when the corresponding simplex is a pyramid.
inline std::optional<std::size_t> is_pyramid(const TorusSubgroup& group) {
    auto coords = pyramid_coordinates(group);
    if (coords.empty()) return std::nullopt;
    return coords.front();
}

/// Delta_Lambda = conv(e_1, ..., e_n) in the affine lattice aff(e_i) ∩ pi^{-1}(L),
/// written in coordinates from the Hermite basis of pi^{-1}(L) and translated
/// so the first vertex is the origin. Vertex i is e_{i+1}.
///
/// Groups containing elements of non-integral age realize the subgroup of
/// integral-age elements: only lattice points of integral height enter the
/// cone over the simplex.
inline LatticeSimplex simplex_of(const TorusSubgroup& group) {
    const std::size_t n = group.ambient();
    if (n < 2) fail("InvalidArgument", "ambient dimension must be at least 2");
    const std::int64_t den = group.denominator();
    const IntMatrix basis = detail::preimage_hermite_basis(n, den, group.elements());

    // Coordinates c_i of den * e_i in the basis: c_i * basis = den * e_i.
    std::vector<std::vector<BigInt>> coords(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            BigInt t = (i == j) ? BigInt(den) : BigInt(0);
            for (std::size_t r = 0; r < j; ++r) t -= coords[i][r] * basis(r, j);
            coords[i][j] = t / basis(j, j);
        }
    }

    // The height functional sum(x) in basis coordinates is z . f / den.
    std::vector<BigInt> f(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) f[r] += basis(r, j);

    // Unimodular Q with (z Q)_0 proportional to z . f.
    IntMatrix q = IntMatrix::identity(n);
    for (;;) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i)
            if (f[i] != 0 && (pivot == n || abs(f[i]) < abs(f[pivot]))) pivot = i;
        bool reduced = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == pivot || f[i] == 0) continue;
            BigInt k = f[i] / f[pivot];
            f[i] -= k * f[pivot];
            q.add_col(pivot, i, k);
            if (f[i] != 0) reduced = false;
        }
        if (reduced) {
            q.swap_cols(0, pivot);
            std::swap(f[0], f[pivot]);
            break;
        }
    }

    std::vector<IntVector> verts;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector w(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r) w[j] += coords[i][r] * q(r, j);
        verts.emplace_back(w.begin() + 1, w.end());
    }
    const IntVector origin = verts.front();
    for (auto& v : verts)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= origin[j];
    return LatticeSimplex(std::move(verts));
}

/// Permutation perm with y_{perm[i]} = x_i mapping `a` onto `b`, if one exists.
inline std::optional<std::vector<std::size_t>> iso_groups(const TorusSubgroup& a,
                                                          const TorusSubgroup& b,
                                                          const ResourceCaps& caps = {}) {
    const std::size_t n = a.ambient();
    if (n != b.ambient() || a.order() != b.order() || a.denominator() != b.denominator())
        return std::nullopt;

    auto signature = [](const TorusSubgroup& g, std::size_t col) {
        Numerators s;
        for (const auto& e : g.elements()) s.push_back(e[col]);
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<Numerators> sig_a(n), sig_b(n);
    for (std::size_t i = 0; i < n; ++i) {
        sig_a[i] = signature(a, i);
        sig_b[i] = signature(b, i);
    }
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sig_a[x] < sig_a[y]; });

    std::vector<std::size_t> perm(n, n);
    std::vector<bool> used(n, false);
    std::int64_t nodes = 0;

    auto projections_match = [&](std::size_t depth) {
        std::vector<Numerators> pa, pb;
        pa.reserve(a.order());
        pb.reserve(b.order());
        for (const auto& e : a.elements()) {
            Numerators t(depth);
            for (std::size_t k = 0; k < depth; ++k) t[k] = e[order[k]];
            pa.push_back(std::move(t));
        }
        for (const auto& e : b.elements()) {
            Numerators t(depth);
            for (std::size_t k = 0; k < depth; ++k) t[k] = e[perm[order[k]]];
            pb.push_back(std::move(t));
        }
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        return pa == pb;
    };

    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) return true;
        if (++nodes > caps.max_search_nodes)
            throw ResourceLimit("isomorphism search exceeded " +
                                std::to_string(caps.max_search_nodes) + " nodes");
        const std::size_t i = order[depth];
        std::vector<std::size_t> candidates;
        if (!used[i] && sig_b[i] == sig_a[i]) candidates.push_back(i);
        for (std::size_t c = 0; c < n; ++c)
            if (c != i && !used[c] && sig_b[c] == sig_a[i]) candidates.push_back(c);
        for (auto c : candidates) {
            perm[i] = c;
            used[c] = true;
            if (projections_match(depth + 1) && self(self, depth + 1)) return true;
            used[c] = false;
        }
        perm[i] = n;
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return perm;
}

/// Vertex correspondence perm (vertex i of s1 <-> vertex perm[i] of s2) of
/// a lattice isomorphism, if the simplices are isomorphic.
inline std::optional<std::vector<std::size_t>> iso_simplices(const LatticeSimplex& s1,
                                                             const LatticeSimplex& s2,
                                                             const ResourceCaps& caps = {}) {
    if (s1.dim() != s2.dim())
        fail("DimensionMismatch", "simplices of different dimension");
    if (s1.volume() != s2.volume()) return std::nullopt;
    return iso_groups(lambda_of(s1, caps), lambda_of(s2, caps), caps);
}

}  // namespace hstar
