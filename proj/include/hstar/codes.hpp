// Linear codes over F_p: weight and age, simplex codes, monomial equivalence,
// the Bonisoli replication decomposition and the (A, -A) pair decomposition
// of constant-age codes, plus the bridge to lattice simplices.

#pragma once

#include "hstar/bigint.hpp"
#include "hstar/caps.hpp"
#include "hstar/error.hpp"
#include "hstar/lattice.hpp"
#include "hstar/torus.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace hstar {

using Codeword = std::vector<int>;
using FpMatrix = std::vector<Codeword>;  // row-major, entries in [0, p)

// ---------------------------------------------------------------------------
// F_p helpers.

namespace fp {

inline int reduce(std::int64_t a, int p) { return static_cast<int>(mod_floor(a, p)); }

inline int inverse(int a, int p) {
    std::int64_t r = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

inline Codeword column(const FpMatrix& m, std::size_t j) {
    Codeword c;
    c.reserve(m.size());
    for (const auto& row : m) c.push_back(row[j]);
    return c;
}

inline FpMatrix from_columns(const std::vector<Codeword>& cols, std::size_t rows) {
    FpMatrix m(rows, Codeword(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
    return m;
}

/// Reduced row echelon form with zero rows removed.
inline FpMatrix rref(FpMatrix m, int p) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        const int inv = inverse(m[r][c], p);
        for (auto& x : m[r]) x = static_cast<int>(static_cast<std::int64_t>(x) * inv % p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const int f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = reduce(m[i][j] - static_cast<std::int64_t>(f) * m[r][j], p);
        }
        ++r;
    }
    m.resize(r);
    return m;
}

inline std::size_t rank(const FpMatrix& m, int p) { return rref(m, p).size(); }

/// Inverse of an invertible square matrix, or nullopt.
inline std::optional<FpMatrix> invert(const FpMatrix& a, int p) {
    const std::size_t n = a.size();
    FpMatrix aug(n, Codeword(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    FpMatrix red = rref(aug, p);
    if (red.size() < n) return std::nullopt;
    FpMatrix inv(n, Codeword(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (red[i][i] != 1) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = red[i][n + j];
    }
    return inv;
}

inline FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, int p) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b.front().size();
    FpMatrix c(a.size(), Codeword(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                c[i][j] = static_cast<int>((c[i][j] + static_cast<std::int64_t>(a[i][k]) * b[k][j]) % p);
        }
    return c;
}

/// Scales a nonzero vector so its first nonzero entry is 1; returns the
/// scalar that was divided out (0 for the zero vector).
inline int normalize(Codeword& v, int p) {
    auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (it == v.end()) return 0;
    const int lead = *it;
    const int inv = inverse(lead, p);
    for (auto& x : v) x = static_cast<int>(static_cast<std::int64_t>(x) * inv % p);
    return lead;
}

inline Codeword negate(const Codeword& v, int p) {
    Codeword out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] == 0 ? 0 : p - v[i];
    return out;
}

}  // namespace fp

// ---------------------------------------------------------------------------
// Codes.

/// Row space of an r x n generator matrix with independent rows over F_p.
class LinearCode {
  public:
    LinearCode(int p, std::size_t n, FpMatrix generators) : p_(p), n_(n), gen_(std::move(generators)) {
        if (!is_prime(p)) fail("InvalidPrime", std::to_string(p) + " is not prime");
        if (n == 0) fail("InvalidArgument", "block length must be positive");
        for (const auto& row : gen_) {
            if (row.size() != n) fail("DimensionMismatch", "generator row has wrong length");
            for (int x : row)
                if (x < 0 || x >= p)
                    fail("InvalidArgument", "generator entry " + std::to_string(x) + " not in 0.." +
                                                std::to_string(p - 1));
        }
        if (fp::rank(gen_, p) != gen_.size())
            fail("DependentGenerators", "generator rows are linearly dependent");
    }

    int p() const noexcept { return p_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return gen_.size(); }
    const FpMatrix& generators() const noexcept { return gen_; }
    Codeword column(std::size_t j) const { return fp::column(gen_, j); }

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

  private:
    int p_;
    std::size_t n_;
    FpMatrix gen_;
};

/// Builds a code from an arbitrary spanning matrix (rows reduced to a basis).
inline LinearCode code_from_spanning_rows(int p, std::size_t n, const FpMatrix& rows) {
    if (!is_prime(p)) fail("InvalidPrime", std::to_string(p) + " is not prime");
    FpMatrix m = rows;
    for (auto& row : m)
        for (auto& x : row) x = fp::reduce(x, p);
    return LinearCode(p, n, fp::rref(std::move(m), p));
}

/// Same row space.
inline bool same_code(const LinearCode& a, const LinearCode& b) {
    return a.p() == b.p() && a.length() == b.length() &&
           fp::rref(a.generators(), a.p()) == fp::rref(b.generators(), b.p());
}

inline std::int64_t weight(const Codeword& v) {
    return std::count_if(v.begin(), v.end(), [](int x) { return x != 0; });
}

/// Sum of the representatives in {0, ..., p-1}.
inline std::int64_t age(const Codeword& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

/// Indices (0-based) of nonzero coordinates.
inline std::vector<std::size_t> support(const Codeword& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

inline void check_codeword_cap(const LinearCode& code, const ResourceCaps& caps) {
    BigInt count = ipow(BigInt(code.p()), static_cast<unsigned>(code.dimension()));
    if (count > caps.max_codewords)
        throw ResourceLimit("code has " + count.str() + " codewords, cap is " +
                            std::to_string(caps.max_codewords));
}

/// Visits every codeword, zero first.
inline void for_each_codeword(const LinearCode& code, const std::function<void(const Codeword&)>& fn,
                              const ResourceCaps& caps = {}) {
    check_codeword_cap(code, caps);
    const int p = code.p();
    const std::size_t r = code.dimension();
    const auto& g = code.generators();
    std::vector<int> digits(r, 0);
    Codeword cur(code.length(), 0);
    for (;;) {
        fn(cur);
        // Incrementing digit i adds row i; wrapping p -> 0 also adds row i.
        std::size_t i = 0;
        for (; i < r; ++i) {
            for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = (cur[j] + g[i][j]) % p;
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == r) return;
    }
}

inline std::vector<Codeword> codewords(const LinearCode& code, const ResourceCaps& caps = {}) {
    std::vector<Codeword> out;
    for_each_codeword(code, [&](const Codeword& c) { out.push_back(c); }, caps);
    return out;
}

namespace detail {
inline std::optional<std::int64_t> constant_value(const LinearCode& code,
                                                  std::int64_t (*measure)(const Codeword&),
                                                  const ResourceCaps& caps) {
    std::optional<std::int64_t> value;
    bool constant = true;
    bool first = true;
    for_each_codeword(code, [&](const Codeword& c) {
        if (first) {  // zero codeword
            first = false;
            return;
        }
        const std::int64_t m = measure(c);
        if (!value) value = m;
        else if (*value != m) constant = false;
    }, caps);
    if (!constant) return std::nullopt;
    return value;
}
}  // namespace detail

/// Common weight of all nonzero codewords.
inline std::optional<std::int64_t> constant_weight(const LinearCode& code, const ResourceCaps& caps = {}) {
    return detail::constant_value(code, &weight, caps);
}

/// Common age of all nonzero codewords.
inline std::optional<std::int64_t> constant_age(const LinearCode& code, const ResourceCaps& caps = {}) {
    return detail::constant_value(code, &age, caps);
}

// ---------------------------------------------------------------------------
// Simplex codes and constructions.

/// One column per point of P^(r-1)(F_p), first nonzero entry 1, columns in
/// lexicographic order.
inline FpMatrix simplex_code_matrix(int p, std::size_t r) {
    if (!is_prime(p)) fail("InvalidPrime", std::to_string(p) + " is not prime");
    if (r == 0) fail("InvalidArgument", "simplex code dimension must be >= 1");
    std::vector<Codeword> cols;
    // Points with leading 1 at position lead, then free entries after it.
    Codeword v(r, 0);
    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
        if (pos == r) {
            cols.push_back(v);
            return;
        }
        for (int x = 0; x < p; ++x) {
            v[pos] = x;
            fill(pos + 1);
        }
        v[pos] = 0;
    };
    for (std::size_t lead = r; lead-- > 0;) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        fill(lead + 1);
    }
    std::sort(cols.begin(), cols.end());
    return fp::from_columns(cols, r);
}

inline LinearCode simplex_code(int p, std::size_t r) {
    FpMatrix m = simplex_code_matrix(p, r);
    const std::size_t n = m.front().size();
    return LinearCode(p, n, std::move(m));
}

/// True when the columns of `m` are exactly one representative of each
/// projective point of P^(r-1)(F_p).
inline bool is_simplex_code_matrix(const FpMatrix& m, int p) {
    if (m.empty()) return false;
    const std::size_t r = m.size();
    std::vector<Codeword> cols;
    for (std::size_t j = 0; j < m.front().size(); ++j) {
        Codeword c = fp::column(m, j);
        if (fp::normalize(c, p) == 0) return false;
        cols.push_back(std::move(c));
    }
    std::sort(cols.begin(), cols.end());
    FpMatrix canonical = simplex_code_matrix(p, r);
    return cols == std::vector<Codeword>([&] {
               std::vector<Codeword> c;
               for (std::size_t j = 0; j < canonical.front().size(); ++j)
                   c.push_back(fp::column(canonical, j));
               return c;
           }());
}

/// Generator matrix (A, A, ..., A), m copies.
inline LinearCode replicate(const LinearCode& code, std::size_t m) {
    if (m == 0) fail("InvalidArgument", "replication count must be >= 1");
    FpMatrix g = code.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
        Codeword row;
        for (std::size_t k = 0; k < m; ++k)
            row.insert(row.end(), code.generators()[i].begin(), code.generators()[i].end());
        g[i] = std::move(row);
    }
    return LinearCode(code.p(), code.length() * m, std::move(g));
}

/// Code generated by (A_1, -A_1, ..., A_s, -A_s).
inline LinearCode pair_construct(int p, const std::vector<FpMatrix>& blocks) {
    if (blocks.empty()) fail("InvalidArgument", "need at least one simplex-code block");
    const std::size_t r = blocks.front().size();
    for (const auto& b : blocks) {
        if (b.size() != r) fail("MixedParameters", "blocks have different dimensions");
        if (!is_simplex_code_matrix(b, p))
            fail("MixedParameters", "block is not a simplex-code generator matrix over F_" +
                                        std::to_string(p));
    }
    FpMatrix g(r);
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < r; ++i) {
            g[i].insert(g[i].end(), b[i].begin(), b[i].end());
            Codeword neg = fp::negate(b[i], p);
            g[i].insert(g[i].end(), neg.begin(), neg.end());
        }
    const std::size_t n = g.front().size();
    return LinearCode(p, n, std::move(g));
}

// ---------------------------------------------------------------------------
// Monomial transforms: f(x)_i = tau_i * x_{sigma(i)} (0-based indices).

struct MonomialTransform {
    std::vector<std::size_t> sigma;
    std::vector<int> tau;

    static MonomialTransform identity(std::size_t n) {
        MonomialTransform f;
        f.sigma.resize(n);
        std::iota(f.sigma.begin(), f.sigma.end(), 0);
        f.tau.assign(n, 1);
        return f;
    }

    std::size_t size() const noexcept { return sigma.size(); }

    void validate(int p) const {
        const std::size_t n = sigma.size();
        if (tau.size() != n) fail("InvalidTransform", "sigma and tau lengths differ");
        std::vector<bool> seen(n, false);
        for (auto s : sigma) {
            if (s >= n || seen[s]) fail("InvalidTransform", "sigma is not a permutation");
            seen[s] = true;
        }
        for (int t : tau)
            if (t <= 0 || t >= p) fail("InvalidTransform", "tau entries must be nonzero in F_p");
    }

    Codeword apply(const Codeword& x, int p) const {
        Codeword y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            y[i] = static_cast<int>(static_cast<std::int64_t>(tau[i]) * x[sigma[i]] % p);
        return y;
    }

    friend bool operator==(const MonomialTransform&, const MonomialTransform&) = default;
};

/// g ∘ f (f applied first).
inline MonomialTransform compose(const MonomialTransform& g, const MonomialTransform& f, int p) {
    const std::size_t n = f.size();
    MonomialTransform h;
    h.sigma.resize(n);
    h.tau.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.sigma[i] = f.sigma[g.sigma[i]];
        h.tau[i] = static_cast<int>(static_cast<std::int64_t>(g.tau[i]) * f.tau[g.sigma[i]] % p);
    }
    return h;
}

inline MonomialTransform inverse(const MonomialTransform& f, int p) {
    const std::size_t n = f.size();
    MonomialTransform g;
    g.sigma.resize(n);
    g.tau.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.sigma[f.sigma[i]] = i;
        g.tau[f.sigma[i]] = fp::inverse(f.tau[i], p);
    }
    return g;
}

/// Column i of the new generator matrix is tau_i * (old column sigma(i)).
inline LinearCode apply_monomial(const MonomialTransform& f, const LinearCode& code) {
    if (f.size() != code.length()) fail("DimensionMismatch", "transform length differs from code length");
    f.validate(code.p());
    FpMatrix g;
    for (const auto& row : code.generators()) g.push_back(f.apply(row, code.p()));
    return LinearCode(code.p(), code.length(), std::move(g));
}

template <class Rng>
MonomialTransform random_monomial(std::size_t n, int p, Rng& rng) {
    MonomialTransform f = MonomialTransform::identity(n);
    for (std::size_t i = n; i > 1; --i) std::swap(f.sigma[i - 1], f.sigma[rng() % i]);
    for (auto& t : f.tau) t = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(p - 1));
    return f;
}

/// Simplex-code matrix with random nonzero representatives and shuffled columns.
template <class Rng>
FpMatrix random_simplex_code_matrix(int p, std::size_t r, Rng& rng) {
    FpMatrix base = simplex_code_matrix(p, r);
    const std::size_t m = base.front().size();
    MonomialTransform f = random_monomial(m, p, rng);
    FpMatrix out;
    for (const auto& row : base) out.push_back(f.apply(row, p));
    return out;
}

// ---------------------------------------------------------------------------
// Canonical form under monomial equivalence.

struct CanonicalForm {
    FpMatrix matrix;              // canonical generator matrix
    MonomialTransform transform;  // apply_monomial(transform, code) has the same row space
};

/// Deterministic representative of the monomial-equivalence class.
///
/// For every ordered choice of r independent columns (and every rescaling of
/// all but the first), the row basis B is chosen so those columns become
/// e_1..e_r; the columns of B*G are then normalized (first nonzero entry 1)
/// and sorted lexicographically with zero columns last. The smallest
/// resulting matrix is the canonical form. The candidate set does not depend
/// on the generator rows or on any monomial transform, so neither does the
/// minimum.
inline CanonicalForm canonical_form(const LinearCode& code, const ResourceCaps& caps = {}) {
    const int p = code.p();
    const std::size_t n = code.length();
    const std::size_t r = code.dimension();
    const FpMatrix& g = code.generators();

    struct Candidate {
        std::vector<std::pair<bool, Codeword>> key;  // (is_zero, normalized column)
        std::vector<std::size_t> order;
        std::vector<int> scale;
    };
    auto evaluate = [&](const FpMatrix& b) {
        FpMatrix bg = fp::multiply(b, g, p);
        std::vector<std::pair<bool, Codeword>> cols(n);
        std::vector<int> lead(n);
        for (std::size_t j = 0; j < n; ++j) {
            Codeword c = fp::column(bg, j);
            lead[j] = fp::normalize(c, p);
            cols[j] = {lead[j] == 0, std::move(c)};
        }
        Candidate cand;
        cand.order.resize(n);
        std::iota(cand.order.begin(), cand.order.end(), 0);
        std::stable_sort(cand.order.begin(), cand.order.end(),
                         [&](std::size_t a, std::size_t b2) { return cols[a] < cols[b2]; });
        for (auto j : cand.order) {
            cand.key.push_back(cols[j]);
            cand.scale.push_back(lead[j] == 0 ? 1 : fp::inverse(lead[j], p));
        }
        return cand;
    };

    std::optional<Candidate> best;
    if (r == 0) {
        best = evaluate(FpMatrix{});
    } else {
        std::vector<Codeword> columns(n);
        for (std::size_t j = 0; j < n; ++j) columns[j] = fp::column(g, j);
        std::int64_t nodes = 0;
        std::vector<std::size_t> chosen;
        std::vector<int> scalars(r, 1);
        std::function<void(std::size_t)> choose = [&](std::size_t depth) {
            if (depth == r) {
                // Try every scaling of the chosen columns with the first fixed to 1.
                std::function<void(std::size_t)> scale = [&](std::size_t k) {
                    if (k == r) {
                        if (++nodes > caps.max_search_nodes)
                            throw ResourceLimit("canonical form search exceeded " +
                                                std::to_string(caps.max_search_nodes) + " nodes");
                        FpMatrix d(r, Codeword(r));
                        for (std::size_t c = 0; c < r; ++c)
                            for (std::size_t i = 0; i < r; ++i)
                                d[i][c] = static_cast<int>(
                                    static_cast<std::int64_t>(scalars[c]) * columns[chosen[c]][i] % p);
                        auto b = fp::invert(d, p);
                        if (!b) return;
                        Candidate cand = evaluate(*b);
                        if (!best || cand.key < best->key) best = std::move(cand);
                        return;
                    }
                    for (int s = 1; s < p; ++s) {
                        scalars[k] = s;
                        scale(k + 1);
                        if (k == 0) break;
                    }
                    scalars[k] = 1;
                };
                scale(0);
                return;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
                chosen.push_back(j);
                // Prune dependent prefixes early.
                FpMatrix prefix;
                for (auto c : chosen) prefix.push_back(columns[c]);
                if (fp::rank(prefix, p) == chosen.size()) choose(depth + 1);
                chosen.pop_back();
            }
        };
        choose(0);
    }

    CanonicalForm out;
    std::vector<Codeword> cols;
    for (const auto& [zero, c] : best->key) cols.push_back(c.empty() ? Codeword(r, 0) : c);
    out.matrix = fp::from_columns(cols, r);
    out.transform.sigma = best->order;
    out.transform.tau = best->scale;
    return out;
}

/// A monomial transform f with f(a) = b, if the codes are equivalent.
inline std::optional<MonomialTransform> equivalence_witness(const LinearCode& a, const LinearCode& b,
                                                            const ResourceCaps& caps = {}) {
    if (a.p() != b.p() || a.length() != b.length() || a.dimension() != b.dimension())
        return std::nullopt;
    CanonicalForm ca = canonical_form(a, caps);
    CanonicalForm cb = canonical_form(b, caps);
    if (ca.matrix != cb.matrix) return std::nullopt;
    MonomialTransform w = compose(inverse(cb.transform, a.p()), ca.transform, a.p());
    if (!same_code(apply_monomial(w, a), b))
        fail("InternalError", "canonical forms agree but the composed witness does not map the codes");
    return w;
}

// ---------------------------------------------------------------------------
// Bonisoli and pair decompositions.

namespace detail {

/// Column indices grouped by projective point (points in lexicographic order
/// of their normalized representative), each with the scalar lambda such that
/// column = lambda * representative.
struct ProjectiveColumns {
    std::map<Codeword, std::vector<std::pair<std::size_t, int>>> points;
    bool has_zero_column = false;
};

inline ProjectiveColumns group_columns(const LinearCode& code) {
    ProjectiveColumns out;
    for (std::size_t j = 0; j < code.length(); ++j) {
        Codeword c = code.column(j);
        const int lead = fp::normalize(c, code.p());
        if (lead == 0) {
            out.has_zero_column = true;
            continue;
        }
        out.points[c].emplace_back(j, lead);
    }
    return out;
}

inline std::size_t projective_point_count(int p, std::size_t r) {
    return static_cast<std::size_t>((ipow(BigInt(p), static_cast<unsigned>(r)) - 1) / (p - 1));
}

}  // namespace detail

/// Splits the columns of a constant-weight code without zero coordinates into
/// m blocks, each covering P^(r-1)(F_p) exactly once. Block b takes the b-th
/// column (in index order) of every projective point; within a block, columns
/// follow the lexicographic order of the points.
inline std::vector<std::vector<std::size_t>> bonisoli_decompose(const LinearCode& code,
                                                                const ResourceCaps& caps = {}) {
    if (!constant_weight(code, caps)) fail("NotConstantWeight", "code does not have constant weight");
    auto grouped = detail::group_columns(code);
    if (grouped.has_zero_column)
        fail("ZeroCoordinate", "some coordinate vanishes on every codeword");
    const std::size_t points = detail::projective_point_count(code.p(), code.dimension());
    if (code.length() % points != 0 || grouped.points.size() != points)
        fail("CoverageFailure", "columns do not cover the projective space uniformly");
    const std::size_t m = code.length() / points;
    for (const auto& [pt, cols] : grouped.points)
        if (cols.size() != m)
            fail("CoverageFailure", "projective point with multiplicity " +
                                        std::to_string(cols.size()) + ", expected " + std::to_string(m));
    std::vector<std::vector<std::size_t>> blocks(m);
    for (const auto& [pt, cols] : grouped.points)
        for (std::size_t b = 0; b < m; ++b) blocks[b].push_back(cols[b].first);
    return blocks;
}

struct PairBlock {
    std::vector<std::size_t> plus;   // columns of A_i
    std::vector<std::size_t> minus;  // columns of -A_i, aligned with plus
};

struct PairDecomposition {
    int p = 0;
    std::size_t r = 0;
    std::size_t s = 0;
    std::int64_t age = 0;
    std::vector<PairBlock> pairs;
    std::vector<std::vector<std::size_t>> bonisoli_blocks;
    bool p2_unpaired = false;        // p = 2 with an odd replication count
    MonomialTransform normalizing;   // column order (A_1, -A_1, ..., A_s, -A_s)
};

/// Columns of a constant-age code grouped into s pairs (A_i, -A_i) of
/// simplex-code blocks.
inline PairDecomposition pair_decompose(const LinearCode& code, const ResourceCaps& caps = {}) {
    const int p = code.p();
    auto a = constant_age(code, caps);
    if (!a) fail("NotConstantAge", "code does not have constant age");
    PairDecomposition out;
    out.p = p;
    out.r = code.dimension();
    out.age = *a;
    out.bonisoli_blocks = bonisoli_decompose(code, caps);
    const std::size_t m = out.bonisoli_blocks.size();

    if (p == 2 && m % 2 == 1) {
        out.p2_unpaired = true;
        std::vector<std::size_t> order;
        for (const auto& b : out.bonisoli_blocks) order.insert(order.end(), b.begin(), b.end());
        out.normalizing = MonomialTransform::identity(code.length());
        out.normalizing.sigma = order;
        return out;
    }
    if (m % 2 == 1) fail("OddBlockCount", "constant-age code with an odd replication count");
    out.s = m / 2;
    out.pairs.resize(out.s);

    auto grouped = detail::group_columns(code);
    for (const auto& [pt, cols] : grouped.points) {
        std::vector<bool> used(cols.size(), false);
        std::vector<std::pair<std::size_t, std::size_t>> matched;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (used[i]) continue;
            const int want = (p - cols[i].second) % p;
            std::size_t partner = cols.size();
            for (std::size_t k = i + 1; k < cols.size(); ++k)
                if (!used[k] && cols[k].second == want) {
                    partner = k;
                    break;
                }
            if (partner == cols.size())
                fail("PairingFailure", "column " + std::to_string(cols[i].first) +
                                           " has no unmatched negated partner");
            used[i] = used[partner] = true;
            matched.emplace_back(cols[i].first, cols[partner].first);
        }
        for (std::size_t b = 0; b < out.s; ++b) {
            out.pairs[b].plus.push_back(matched[b].first);
            out.pairs[b].minus.push_back(matched[b].second);
        }
    }
    std::vector<std::size_t> order;
    for (const auto& pb : out.pairs) {
        order.insert(order.end(), pb.plus.begin(), pb.plus.end());
        order.insert(order.end(), pb.minus.begin(), pb.minus.end());
    }
    out.normalizing = MonomialTransform::identity(code.length());
    out.normalizing.sigma = order;
    return out;
}

// ---------------------------------------------------------------------------
// Simplices with binomial h* and their codes.

/// 2k(p^r - 1) = (d + 1)(p - 1)p^(r-1).
inline bool param_check(std::int64_t p, std::int64_t r, std::int64_t k, std::int64_t d) {
    if (!is_prime(p) || r < 1 || k < 1 || d < 1) return false;
    const BigInt q = ipow(BigInt(p), static_cast<unsigned>(r));
    const BigInt q1 = ipow(BigInt(p), static_cast<unsigned>(r - 1));
    return BigInt(2 * k) * (q - 1) == BigInt(d + 1) * (p - 1) * q1;
}

struct SimplexCode {
    int p = 0;
    LinearCode code;
    std::size_t k = 0;  // degree of the h*-binomial
};

/// L_Delta for a non-pyramid simplex with h* = 1 + h_k t^k, 1 < k < (d+1)/2.
inline SimplexCode code_of_simplex(const LatticeSimplex& s, const ResourceCaps& caps = {}) {
    const HStarPolynomial h = hstar(s, caps);
    const auto k = h.binomial_degree();
    if (!k) fail("NotBinomial", "h* = " + to_string(h) + " is not a binomial");
    if (!(*k > 1 && 2 * *k < s.dim() + 1))
        fail("DegreeOutOfRange", "binomial degree " + std::to_string(*k) +
                                     " is outside 1 < k < (d+1)/2 for d = " + std::to_string(s.dim()));
    const TorusSubgroup group = lambda_of(s, caps);
    if (auto apex = is_pyramid(group))
        fail("IsPyramid", "simplex is a pyramid with apex vertex " + std::to_string(*apex));
    const std::int64_t n = group.denominator();
    if (!is_prime(n))
        fail("NonPrimeExponent", "group exponent " + std::to_string(n) + " is not prime");
    const int p = static_cast<int>(n);
    FpMatrix rows;
    for (const auto& e : group.elements()) rows.emplace_back(e.begin(), e.end());
    LinearCode code = code_from_spanning_rows(p, group.ambient(), rows);
    if (ipow(BigInt(p), static_cast<unsigned>(code.dimension())) != BigInt(group.order()))
        fail("InternalError", "group order is not p^r");
    return {p, std::move(code), *k};
}

/// Delta_Lambda for Lambda = (1/p) L.
inline LatticeSimplex simplex_of_code(const LinearCode& code, const ResourceCaps& caps = {}) {
    std::vector<Numerators> elems;
    for_each_codeword(code, [&](const Codeword& c) { elems.emplace_back(c.begin(), c.end()); }, caps);
    if (code.length() < 2) fail("InvalidArgument", "block length must be at least 2");
    return simplex_of(TorusSubgroup(code.length(), code.p(), std::move(elems)));
}

}  // namespace hstar
