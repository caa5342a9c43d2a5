// Lattice simplices and polytopes, integral volume, and h*-polynomials.
//
// h* is available through two independent routes:
//   * hstar()          grades the lattice points of the fundamental
//                      parallelepiped, enumerated through the quotient group
//                      (Z^d + Z) / span{(v_i, 1)} from a Smith normal form;
//   * hstar_via_ehrhart() counts lattice points of the dilates kP by brute
//                      force and inverts Ehr(t) * (1 - t)^(d+1).

#pragma once

#include "hstar/bigint.hpp"
#include "hstar/caps.hpp"
#include "hstar/error.hpp"
#include "hstar/int_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hstar {

using IntVector = std::vector<BigInt>;

namespace detail {

inline IntMatrix homogenized(const std::vector<IntVector>& points) {
    const std::size_t n = points.size();
    const std::size_t d = points.front().size();
    IntMatrix m(n, d + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) m(i, j) = points[i][j];
        m(i, d) = 1;
    }
    return m;
}

inline std::size_t affine_dimension(const std::vector<IntVector>& points) {
    if (points.size() <= 1) return 0;
    const std::size_t d = points.front().size();
    IntMatrix diffs(points.size() - 1, d);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) diffs(i - 1, j) = points[i][j] - points[0][j];
    return rank(diffs);
}

inline void check_rectangular(const std::vector<IntVector>& points, std::size_t d) {
    for (const auto& v : points)
        if (v.size() != d)
            fail("DimensionMismatch", "every vertex must have " + std::to_string(d) + " coordinates");
}

}  // namespace detail

/// A d-simplex in Z^d with an ordered vertex list.
class LatticeSimplex {
  public:
    explicit LatticeSimplex(std::vector<IntVector> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.size() < 2) fail("DegenerateSimplex", "a simplex needs at least two vertices");
        dim_ = vertices_.size() - 1;
        detail::check_rectangular(vertices_, dim_);
        volume_ = abs(determinant(detail::homogenized(vertices_)));
        if (volume_ == 0) fail("DegenerateSimplex", "vertex differences are linearly dependent");
    }

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
    const IntVector& vertex(std::size_t i) const { return vertices_.at(i); }
    const BigInt& volume() const noexcept { return volume_; }

    friend bool operator==(const LatticeSimplex& a, const LatticeSimplex& b) {
        return a.vertices_ == b.vertices_;
    }

  private:
    std::size_t dim_ = 0;
    std::vector<IntVector> vertices_;
    BigInt volume_;
};

/// Full-dimensional lattice polytope given by its vertices (duplicates dropped,
/// order kept).
class LatticePolytope {
  public:
    explicit LatticePolytope(std::vector<IntVector> points) {
        if (points.empty()) fail("DegenerateInput", "polytope needs at least one vertex");
        dim_ = points.front().size();
        detail::check_rectangular(points, dim_);
        std::set<IntVector> seen;
        for (auto& p : points)
            if (seen.insert(p).second) vertices_.push_back(std::move(p));
        if (detail::affine_dimension(vertices_) != dim_)
            fail("DegenerateInput", "affine hull of the vertices is not " + std::to_string(dim_) +
                                        "-dimensional");
    }

    explicit LatticePolytope(const LatticeSimplex& s) : LatticePolytope(s.vertices()) {}

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<IntVector>& vertices() const noexcept { return vertices_; }

  private:
    std::size_t dim_ = 0;
    std::vector<IntVector> vertices_;
};

/// h*_0 .. h*_d.
class HStarPolynomial {
  public:
    HStarPolynomial() = default;
    explicit HStarPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty() || coeffs_.front() != 1)
            fail("InvalidHStar", "h*_0 must equal 1");
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] < 0)
                fail("NegativeCoefficient", "h*_" + std::to_string(k) + " = " + coeffs_[k].str());
    }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    const BigInt& operator[](std::size_t k) const { return coeffs_.at(k); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    std::size_t degree() const {
        std::size_t deg = 0;
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) deg = k;
        return deg;
    }

    BigInt at_one() const {
        BigInt s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    /// k when the polynomial is 1 + h_k t^k with h_k != 0 and k >= 1.
    std::optional<std::size_t> binomial_degree() const {
        std::optional<std::size_t> k;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (k) return std::nullopt;
            k = i;
        }
        return k;
    }

    friend bool operator==(const HStarPolynomial&, const HStarPolynomial&) = default;

  private:
    std::vector<BigInt> coeffs_;
};

inline std::string to_string(const HStarPolynomial& h) {
    std::string out;
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (h[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += h[k].str();
        } else {
            if (h[k] != 1) out += h[k].str();
            out += k == 1 ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

inline LatticeSimplex make_simplex(std::vector<IntVector> vertices) {
    return LatticeSimplex(std::move(vertices));
}

inline LatticeSimplex make_simplex(const std::vector<std::vector<std::int64_t>>& vertices) {
    std::vector<IntVector> v;
    for (const auto& row : vertices) v.emplace_back(row.begin(), row.end());
    return LatticeSimplex(std::move(v));
}

inline LatticePolytope make_polytope(const std::vector<std::vector<std::int64_t>>& vertices) {
    std::vector<IntVector> v;
    for (const auto& row : vertices) v.emplace_back(row.begin(), row.end());
    return LatticePolytope(std::move(v));
}

/// Normalized volume |det(v_1 - v_0, ..., v_d - v_0)|.
inline BigInt volume(const LatticeSimplex& s) { return s.volume(); }

// ---------------------------------------------------------------------------
// Brute-force Ehrhart counting.

namespace detail {

/// Halfspaces  sum_j normal[j] * x_j <= offset_per_dilate * k  describing kP.
struct Halfspaces {
    std::vector<IntVector> normals;
    std::vector<BigInt> offsets;
};

inline Halfspaces simplex_halfspaces(const LatticeSimplex& s) {
    // lambda = (x, k) * adj(V) / det(V); x is in kS iff every lambda_i >= 0.
    const std::size_t n = s.dim() + 1;
    IntMatrix v = homogenized(s.vertices());
    BigInt det = determinant(v);
    Halfspaces h;
    for (std::size_t i = 0; i < n; ++i) {
        // Column i of adj(V): cofactors C_{i j} of V (adj = C^T).
        IntVector col(n);
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc++) = v(r, c);
                }
                ++mr;
            }
            BigInt cof = determinant(minor);
            col[j] = ((i + j) % 2 == 0) ? cof : BigInt(-cof);
        }
        // sign(det) * ((x, k) . col) >= 0   <=>   -sign*col[0..d) . x <= sign*col[d] * k
        const int sign = det > 0 ? 1 : -1;
        IntVector normal(n - 1);
        for (std::size_t j = 0; j + 1 < n; ++j) normal[j] = -sign * col[j];
        h.normals.push_back(std::move(normal));
        h.offsets.push_back(sign * col[n - 1]);
    }
    return h;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Facets of a full-dimensional polytope by scanning affinely independent
/// d-subsets of vertices and keeping supporting hyperplanes.
inline Halfspaces polytope_halfspaces(const LatticePolytope& p) {
    const std::size_t d = p.dim();
    const auto& verts = p.vertices();
    std::set<std::pair<IntVector, BigInt>> facets;
    for_each_subset(verts.size(), d, [&](const std::vector<std::size_t>& idx) {
        IntVector normal(d);
        for (std::size_t c = 0; c < d; ++c) {
            IntMatrix minor(d - 1, d - 1);
            for (std::size_t r = 1; r < d; ++r)
                for (std::size_t cc = 0, mc = 0; cc < d; ++cc) {
                    if (cc == c) continue;
                    minor(r - 1, mc++) = verts[idx[r]][cc] - verts[idx[0]][cc];
                }
            BigInt m = d == 1 ? BigInt(1) : determinant(minor);
            normal[c] = (c % 2 == 0) ? m : BigInt(-m);
        }
        BigInt g = 0;
        for (const auto& a : normal) g = gcd(g, abs(a));
        if (g == 0) return;
        for (auto& a : normal) a /= g;
        auto dot = [&](const IntVector& x) {
            BigInt s = 0;
            for (std::size_t j = 0; j < d; ++j) s += normal[j] * x[j];
            return s;
        };
        BigInt b = dot(verts[idx[0]]);
        bool below = true, above = true;
        for (const auto& v : verts) {
            BigInt t = dot(v);
            if (t > b) below = false;
            if (t < b) above = false;
        }
        if (below) {
            facets.emplace(normal, b);
        } else if (above) {
            for (auto& a : normal) a = -a;
            facets.emplace(normal, -b);
        }
    });
    Halfspaces h;
    for (const auto& [n, b] : facets) {
        h.normals.push_back(n);
        h.offsets.push_back(b);
    }
    return h;
}

inline BigInt count_points(const std::vector<IntVector>& vertices, const Halfspaces& h,
                           std::int64_t k, const ResourceCaps& caps) {
    if (k < 0) fail("InvalidArgument", "dilation factor must be nonnegative");
    const std::size_t d = vertices.front().size();
    std::vector<std::int64_t> lo(d), hi(d);
    BigInt box = 1;
    for (std::size_t j = 0; j < d; ++j) {
        BigInt mn = vertices[0][j], mx = vertices[0][j];
        for (const auto& v : vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        BigInt l = mn * k, u = mx * k;
        box *= (u - l + 1);
        if (box > caps.max_box_points)
            throw ResourceLimit("bounding box of dilate " + std::to_string(k) + " exceeds " +
                                std::to_string(caps.max_box_points) + " points");
        lo[j] = to_int64(l);
        hi[j] = to_int64(u);
    }

    const std::size_t f = h.normals.size();
    std::vector<std::vector<std::int64_t>> a(f, std::vector<std::int64_t>(d));
    std::vector<__int128> bound(f), value(f);
    for (std::size_t i = 0; i < f; ++i) {
        for (std::size_t j = 0; j < d; ++j) a[i][j] = to_int64(h.normals[i][j]);
        bound[i] = static_cast<__int128>(to_int64(h.offsets[i])) * k;
        value[i] = 0;
        for (std::size_t j = 0; j < d; ++j) value[i] += static_cast<__int128>(a[i][j]) * lo[j];
    }

    std::vector<std::int64_t> x = lo;
    std::int64_t count = 0;
    for (;;) {
        bool inside = true;
        for (std::size_t i = 0; i < f && inside; ++i) inside = value[i] <= bound[i];
        if (inside) ++count;
        // Odometer step with incremental update of the linear forms.
        std::size_t j = d;
        while (j > 0) {
            --j;
            if (x[j] < hi[j]) {
                ++x[j];
                for (std::size_t i = 0; i < f; ++i) value[i] += a[i][j];
                break;
            }
            for (std::size_t i = 0; i < f; ++i)
                value[i] -= static_cast<__int128>(a[i][j]) * (hi[j] - lo[j]);
            x[j] = lo[j];
            if (j == 0) return count;
        }
        if (d == 0) return count;
    }
}

}  // namespace detail

/// |kS ∩ Z^d| by bounding-box enumeration and exact membership.
inline BigInt ehrhart_count(const LatticeSimplex& s, std::int64_t k, const ResourceCaps& caps = {}) {
    return detail::count_points(s.vertices(), detail::simplex_halfspaces(s), k, caps);
}

inline BigInt ehrhart_count(const LatticePolytope& p, std::int64_t k, const ResourceCaps& caps = {}) {
    return detail::count_points(p.vertices(), detail::polytope_halfspaces(p), k, caps);
}

/// L(0), ..., L(d).
template <class Polytope>
std::vector<BigInt> ehrhart_counts(const Polytope& p, const ResourceCaps& caps = {}) {
    std::vector<BigInt> out;
    for (std::size_t k = 0; k <= p.dim(); ++k)
        out.push_back(ehrhart_count(p, static_cast<std::int64_t>(k), caps));
    return out;
}

/// h_k = sum_{j<=k} (-1)^j C(d+1, j) L(k - j).
inline HStarPolynomial hstar_from_counts(const std::vector<BigInt>& counts, std::size_t d) {
    if (counts.size() != d + 1)
        fail("InvalidArgument", "expected " + std::to_string(d + 1) + " counts L(0..d)");
    if (counts[0] != 1) fail("InvalidArgument", "L(0) must be 1");
    std::vector<BigInt> h(d + 1);
    for (std::size_t k = 0; k <= d; ++k)
        for (std::size_t j = 0; j <= k; ++j) {
            BigInt term = binomial(static_cast<std::int64_t>(d + 1), static_cast<std::int64_t>(j)) *
                          counts[k - j];
            h[k] += (j % 2 == 0) ? term : BigInt(-term);
        }
    return HStarPolynomial(std::move(h));
}

template <class Polytope>
HStarPolynomial hstar_via_ehrhart(const Polytope& p, const ResourceCaps& caps = {}) {
    return hstar_from_counts(ehrhart_counts(p, caps), p.dim());
}

// ---------------------------------------------------------------------------
// Fundamental parallelepiped.

/// Coefficient vectors x in [0,1)^(d+1) with sum x_i (v_i, 1) integral, stored
/// as integer numerators over a common denominator (the group exponent).
struct ParallelepipedPoints {
    std::int64_t denominator = 1;
    std::vector<std::vector<std::int64_t>> numerators;  // sorted, includes zero
};

inline ParallelepipedPoints fundamental_parallelepiped(const LatticeSimplex& s,
                                                       const ResourceCaps& caps = {}) {
    if (s.volume() > caps.max_volume)
        throw ResourceLimit("volume " + s.volume().str() + " exceeds cap " +
                            std::to_string(caps.max_volume));
    const std::size_t n = s.dim() + 1;
    // x V in Z^n  <=>  x = z D^{-1} U (mod 1) with U V W = D.
    SmithForm snf = smith_normal_form(detail::homogenized(s.vertices()));
    const std::int64_t exponent = to_int64(snf.diagonal.back());

    std::vector<std::int64_t> radix;
    std::vector<std::vector<std::int64_t>> gens;
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
        const std::int64_t di = to_int64(snf.diagonal[i]);
        if (di == 1) continue;
        std::vector<std::int64_t> g(n);
        for (std::size_t j = 0; j < n; ++j) {
            BigInt val = snf.left(i, j) * (exponent / di);
            BigInt r = val % exponent;
            if (r < 0) r += exponent;
            g[j] = static_cast<std::int64_t>(r);
        }
        radix.push_back(di);
        gens.push_back(std::move(g));
    }

    ParallelepipedPoints out;
    out.denominator = exponent;
    std::vector<std::int64_t> z(radix.size(), 0);
    std::vector<std::int64_t> cur(n, 0);
    for (;;) {
        out.numerators.push_back(cur);
        std::size_t i = 0;
        for (; i < radix.size(); ++i) {
            if (++z[i] < radix[i]) {
                for (std::size_t j = 0; j < n; ++j) cur[j] = (cur[j] + gens[i][j]) % exponent;
                break;
            }
            z[i] = 0;
            for (std::size_t j = 0; j < n; ++j)
                cur[j] = mod_floor(cur[j] - (radix[i] - 1) * gens[i][j], exponent);
        }
        if (i == radix.size()) break;
    }
    std::sort(out.numerators.begin(), out.numerators.end());
    return out;
}

/// h_k = number of parallelepiped points at height k.
inline HStarPolynomial hstar(const LatticeSimplex& s, const ResourceCaps& caps = {}) {
    const auto pts = fundamental_parallelepiped(s, caps);
    std::vector<BigInt> h(s.dim() + 1);
    for (const auto& x : pts.numerators) {
        std::int64_t sum = 0;
        for (auto v : x) sum += v;
        h.at(static_cast<std::size_t>(sum / pts.denominator)) += 1;
    }
    return HStarPolynomial(std::move(h));
}

// ---------------------------------------------------------------------------
// Constructions.

/// conv(P x {0}, (0, 1)); the apex is appended as the last vertex.
inline LatticeSimplex pyramid(const LatticeSimplex& s) {
    std::vector<IntVector> v;
    for (auto p : s.vertices()) {
        p.push_back(0);
        v.push_back(std::move(p));
    }
    IntVector apex(s.dim() + 1, 0);
    apex.back() = 1;
    v.push_back(std::move(apex));
    return LatticeSimplex(std::move(v));
}

inline LatticePolytope pyramid(const LatticePolytope& p) {
    std::vector<IntVector> v;
    for (auto q : p.vertices()) {
        q.push_back(0);
        v.push_back(std::move(q));
    }
    IntVector apex(p.dim() + 1, 0);
    apex.back() = 1;
    v.push_back(std::move(apex));
    return LatticePolytope(std::move(v));
}

/// Cayley polytope of the segments [0, h_1], ..., [0, h_n] realized in Z^n:
/// the i-th segment sits over e_{i-1} of Z^(n-1) (over the origin for i = 1)
/// and extends along the last axis.
inline LatticePolytope lawrence_prism(const std::vector<std::int64_t>& heights) {
    const std::size_t n = heights.size();
    if (n == 0) fail("DegenerateInput", "Lawrence prism needs at least one height");
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < n; ++i) {
        if (heights[i] < 0) fail("DegenerateInput", "heights must be nonnegative");
        IntVector base(n, 0);
        if (i > 0) base[i - 1] = 1;
        pts.push_back(base);
        base[n - 1] = heights[i];
        pts.push_back(base);
    }
    return LatticePolytope(std::move(pts));
}

/// (n-2)-fold pyramid over 2 * conv(0, e_1, e_2).
inline LatticeSimplex exceptional_simplex(std::size_t n) {
    if (n < 2) fail("InvalidArgument", "exceptional simplex needs n >= 2");
    LatticeSimplex s = make_simplex(std::vector<std::vector<std::int64_t>>{{0, 0}, {2, 0}, {0, 2}});
    for (std::size_t i = 2; i < n; ++i) s = pyramid(s);
    return s;
}

/// Cayley polytope of the empty segments [0, u_1], ..., [0, u_k] in Z^k.
/// Vertex order: 0, u_1 over the first Cayley vertex, then (e_{i-1}, 0),
/// (e_{i-1}, u_i) for i = 2..k; the result lives in Z^(k-1) x Z^k.
inline LatticeSimplex cayley_empty_segments(const std::vector<IntVector>& directions) {
    const std::size_t k = directions.size();
    if (k == 0) fail("InvalidArgument", "need at least one segment");
    for (const auto& u : directions) {
        if (u.size() != k)
            fail("DimensionMismatch", "segment directions must lie in Z^" + std::to_string(k));
        BigInt g = 0;
        for (const auto& c : u) g = gcd(g, abs(c));
        if (g != 1)
            fail("NonEmptySegment", "segment direction is not primitive (gcd " + g.str() + ")");
    }
    const std::size_t dim = 2 * k - 1;
    std::vector<IntVector> v;
    for (std::size_t i = 0; i < k; ++i) {
        IntVector base(dim, 0);
        if (i > 0) base[i - 1] = 1;
        v.push_back(base);
        for (std::size_t j = 0; j < k; ++j) base[k - 1 + j] = directions[i][j];
        v.push_back(base);
    }
    return LatticeSimplex(std::move(v));
}

}  // namespace hstar
