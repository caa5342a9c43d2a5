// Acceptance checks shared by `hstar verify-all` and the acceptance binary.
// Each check returns a result record instead of throwing, so one failure
// never hides the others.

#pragma once

#include "hstar/bernoulli.hpp"
#include "hstar/codes.hpp"
#include "hstar/finite_field.hpp"
#include "hstar/lattice.hpp"
#include "hstar/torus.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hstar::verify {

enum class Scale { Small, Full };

enum class Status { Pass, Fail, Skip };

struct CriterionResult {
    int id = 0;
    std::string title;
    Status status = Status::Fail;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;

    bool passed() const { return status != Status::Fail; }
};

inline const char* status_label(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skip: return "SKIP";
    }
    return "FAIL";
}

namespace detail {

// Runs `body`, which fills in status/detail; exceptions become failures and
// overrunning the time budget fails the check as well.
inline CriterionResult timed(int id, std::string title, double budget,
                             const std::function<void(CriterionResult&)>& body) {
    CriterionResult res;
    res.id = id;
    res.title = std::move(title);
    res.budget_seconds = budget;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(res);
    } catch (const Error& e) {
        res.status = Status::Fail;
        res.detail = "unexpected " + e.code() + ": " + e.what();
    } catch (const std::exception& e) {
        res.status = Status::Fail;
        res.detail = std::string("unexpected exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.status == Status::Pass && res.seconds > budget) {
        res.status = Status::Fail;
        res.detail += " (exceeded " + std::to_string(budget) + " s budget)";
    }
    return res;
}

inline void conclude(CriterionResult& res, bool ok, const std::string& detail) {
    res.status = ok ? Status::Pass : Status::Fail;
    res.detail = detail;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Deterministic random simplex corpus.

/// Box half-width for random vertex coordinates. Shrinks with dimension so
/// the Ehrhart-route bounding boxes stay small.
inline std::int64_t corpus_box(std::size_t d) {
    static constexpr std::int64_t widths[] = {0, 6, 4, 3, 2, 1};
    return widths[d];
}

/// `count` full-dimensional simplices with 1 <= d <= 5 and volume <= max_volume,
/// dimensions cycling 1..5; vertex 0 is always the origin.
inline std::vector<LatticeSimplex> random_corpus(std::size_t count = 250, std::uint64_t seed = 0x5eedULL,
                                                 std::int64_t max_volume = 200) {
    std::mt19937_64 rng(seed);
    std::vector<LatticeSimplex> out;
    while (out.size() < count) {
        const std::size_t d = 1 + out.size() % 5;
        const std::int64_t b = corpus_box(d);
        std::vector<IntVector> verts(1, IntVector(d, 0));
        for (std::size_t i = 0; i < d; ++i) {
            IntVector v(d);
            for (auto& x : v) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * b + 1)) - b;
            verts.push_back(std::move(v));
        }
        try {
            LatticeSimplex s(std::move(verts));
            if (s.volume() <= max_volume) out.push_back(std::move(s));
        } catch (const Error&) {
            // degenerate draw, try again
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Criteria.

inline CriterionResult check_worked_example() {
    return detail::timed(1, "hstar(2*Delta_2) = 1 + 3t", 1.0, [](CriterionResult& res) {
        const auto s = make_simplex(std::vector<std::vector<std::int64_t>>{{0, 0}, {2, 0}, {0, 2}});
        const auto h = hstar(s);
        const auto h2 = hstar_via_ehrhart(s);
        const HStarPolynomial want(std::vector<BigInt>{1, 3, 0});
        detail::conclude(res, h == want && h2 == want,
                         "parallelepiped " + to_string(h) + ", Ehrhart " + to_string(h2));
    });
}

/// Criteria 2 and 8 share one pass over the corpus.
inline std::vector<CriterionResult> check_corpus_agreement(const std::vector<LatticeSimplex>& corpus) {
    std::size_t mismatches = 0, bad_volume = 0, binomials = 0, bound_violations = 0;
    std::string first_problem;
    auto c2 = detail::timed(2, "parallelepiped h* == Ehrhart h*, h*(1) == volume", 120.0, [&](CriterionResult& res) {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& s = corpus[i];
            const auto a = hstar(s);
            const auto b = hstar_via_ehrhart(s);
            if (a != b) {
                ++mismatches;
                if (first_problem.empty())
                    first_problem = "simplex " + std::to_string(i) + ": " + to_string(a) + " vs " + to_string(b);
            }
            if (a.at_one() != s.volume()) ++bad_volume;
            if (auto k = a.binomial_degree(); k && *k > 1) {
                ++binomials;
                if (2 * *k > s.dim() + 1) ++bound_violations;
            }
        }
        std::ostringstream os;
        os << corpus.size() << " simplices, " << mismatches << " mismatches, " << bad_volume
           << " volume errors";
        if (!first_problem.empty()) os << "; first: " << first_problem;
        detail::conclude(res, corpus.size() >= 200 && mismatches == 0 && bad_volume == 0, os.str());
    });
    auto c8 = detail::timed(8, "binomial h* of degree k > 1 has k <= (d+1)/2", 120.0, [&](CriterionResult& res) {
        if (c2.status == Status::Fail && c2.detail.rfind("unexpected", 0) == 0) {
            detail::conclude(res, false, "corpus pass did not complete");
            return;
        }
        std::ostringstream os;
        os << binomials << " binomial h* of degree > 1 in the corpus, " << bound_violations << " violations";
        detail::conclude(res, bound_violations == 0, os.str());
    });
    return {c2, c8};
}

inline CriterionResult check_round_trip(const std::vector<LatticeSimplex>& corpus) {
    return detail::timed(3, "iso(s, simplex_of(lambda_of(s)))", 120.0, [&](CriterionResult& res) {
        std::size_t failures = 0;
        std::string first;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto back = simplex_of(lambda_of(corpus[i]));
            if (!iso_simplices(corpus[i], back)) {
                if (first.empty()) first = "simplex " + std::to_string(i);
                ++failures;
            }
        }
        detail::conclude(res, failures == 0,
                         std::to_string(corpus.size()) + " round trips, " + std::to_string(failures) + " failed" +
                             (first.empty() ? "" : "; first: " + first));
    });
}

inline CriterionResult check_simplex_code_weights() {
    return detail::timed(4, "simplex codes have constant weight p^(r-1)", 30.0, [](CriterionResult& res) {
        std::ostringstream os;
        bool ok = true;
        for (int p : {2, 3, 5, 7})
            for (std::size_t r = 1; r <= 3; ++r) {
                const auto w = constant_weight(simplex_code(p, r));
                const std::int64_t want = to_int64(ipow(BigInt(p), static_cast<unsigned>(r - 1)));
                if (!w || *w != want) {
                    ok = false;
                    os << "p=" << p << " r=" << r << " failed; ";
                }
            }
        os << "12 (p, r) pairs enumerated";
        detail::conclude(res, ok, os.str());
    });
}

namespace detail {

inline FpMatrix column_submatrix(const LinearCode& code, const std::vector<std::size_t>& cols) {
    std::vector<Codeword> c;
    for (auto j : cols) c.push_back(code.column(j));
    return fp::from_columns(c, code.dimension());
}

/// Checks one pair decomposition against the structure it promises.
inline std::string audit_pairs(const LinearCode& code, const PairDecomposition& d, std::size_t s) {
    const int p = code.p();
    if (d.pairs.size() != s) return "expected " + std::to_string(s) + " pairs, got " + std::to_string(d.pairs.size());
    std::set<std::size_t> seen;
    for (const auto& pb : d.pairs) {
        if (pb.plus.size() != pb.minus.size()) return "unaligned pair";
        for (std::size_t i = 0; i < pb.plus.size(); ++i)
            if (code.column(pb.minus[i]) != fp::negate(code.column(pb.plus[i]), p))
                return "column " + std::to_string(pb.minus[i]) + " is not the negation of " +
                       std::to_string(pb.plus[i]);
        if (!is_simplex_code_matrix(column_submatrix(code, pb.plus), p)) return "plus block is not a simplex code";
        seen.insert(pb.plus.begin(), pb.plus.end());
        seen.insert(pb.minus.begin(), pb.minus.end());
    }
    if (seen.size() != code.length()) return "pairs do not partition the coordinates";
    const LinearCode normalized = apply_monomial(d.normalizing, code);
    std::vector<FpMatrix> blocks;
    for (const auto& pb : d.pairs) blocks.push_back(column_submatrix(code, pb.plus));
    if (!same_code(normalized, pair_construct(p, blocks))) return "normalizing transform does not give (A, -A, ...)";
    return {};
}

}  // namespace detail

/// Random coordinate permutation combined with one random scalar per pair of
/// columns (c, -c) of a pair_construct output. A general monomial transform
/// does not preserve age, this restricted one does.
template <class Rng>
MonomialTransform random_age_preserving_monomial(const LinearCode& built, std::size_t s, Rng& rng) {
    const int p = built.p();
    const std::size_t n = built.length();
    const std::size_t m = n / (2 * s);
    std::vector<int> lambda(n, 1);
    for (std::size_t b = 0; b < s; ++b)
        for (std::size_t c = 0; c < m; ++c) {
            const int l = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(p - 1));
            lambda[2 * b * m + c] = l;
            lambda[(2 * b + 1) * m + c] = l;
        }
    MonomialTransform f = random_monomial(n, p, rng);
    for (std::size_t i = 0; i < n; ++i) f.tau[i] = lambda[f.sigma[i]];
    return f;
}

inline CriterionResult check_pair_recovery(std::uint64_t seed = 0xC0DEULL) {
    return detail::timed(5, "pair_decompose recovers (A_1, -A_1, ..., A_s, -A_s)", 60.0, [seed](CriterionResult& res) {
        std::mt19937_64 rng(seed);
        std::ostringstream os;
        bool ok = true;
        const std::vector<std::tuple<int, std::size_t, std::size_t>> cases = {{3, 2, 1}, {3, 2, 2}, {5, 2, 1}, {3, 3, 1}};
        for (auto [p, r, s] : cases) {
            std::vector<FpMatrix> blocks;
            for (std::size_t i = 0; i < s; ++i) blocks.push_back(random_simplex_code_matrix(p, r, rng));
            const LinearCode built = pair_construct(p, blocks);
            const LinearCode code = apply_monomial(random_age_preserving_monomial(built, s, rng), built);
            const auto d = pair_decompose(code);
            std::string problem = detail::audit_pairs(code, d, s);
            const std::int64_t q = to_int64(ipow(BigInt(p), static_cast<unsigned>(r)));
            const std::int64_t age = static_cast<std::int64_t>(s) * q;
            if (problem.empty() && d.age != age) problem = "age " + std::to_string(d.age) + " != s*p^r";
            const std::int64_t k = age / p;
            const std::int64_t dim = static_cast<std::int64_t>(code.length()) - 1;
            if (problem.empty() && !param_check(p, static_cast<std::int64_t>(r), k, dim))
                problem = "param_check fails for k=" + std::to_string(k) + " d=" + std::to_string(dim);
            os << "(" << p << "," << r << "," << s << ") " << (problem.empty() ? "ok" : problem) << "; ";
            ok = ok && problem.empty();
        }
        detail::conclude(res, ok, os.str());
    });
}

/// Every 2-dimensional subspace of F_3^8 with constant age 9 and no zero
/// coordinate, each visited once through its reduced row echelon generator matrix.
inline CriterionResult check_micro_oracle(Scale scale) {
    return detail::timed(6, "exhaustive F_3^8 constant-age-9 codes pair-decompose", 600.0, [scale](CriterionResult& res) {
        if (scale == Scale::Small) {
            res.status = Status::Skip;
            res.detail = "runs at full scale only";
            return;
        }
        constexpr int p = 3;
        constexpr std::size_t n = 8;
        std::size_t subspaces = 0, survivors = 0, failures = 0;
        std::string first;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                // free entries: row 0 after i except j, row 1 after j
                std::vector<std::pair<std::size_t, std::size_t>> slots;
                for (std::size_t c = i + 1; c < n; ++c)
                    if (c != j) slots.emplace_back(0, c);
                for (std::size_t c = j + 1; c < n; ++c) slots.emplace_back(1, c);
                std::size_t total = 1;
                for (std::size_t t = 0; t < slots.size(); ++t) total *= p;
                for (std::size_t code_idx = 0; code_idx < total; ++code_idx) {
                    FpMatrix g(2, Codeword(n, 0));
                    g[0][i] = 1;
                    g[1][j] = 1;
                    std::size_t c = code_idx;
                    for (auto [row, col] : slots) {
                        g[row][col] = static_cast<int>(c % p);
                        c /= p;
                    }
                    ++subspaces;
                    bool zero_col = false;
                    for (std::size_t col = 0; col < n; ++col) zero_col = zero_col || (g[0][col] == 0 && g[1][col] == 0);
                    if (zero_col) continue;
                    const LinearCode code(p, n, g);
                    const auto a = constant_age(code);
                    if (!a || *a != 9) continue;
                    ++survivors;
                    std::string problem;
                    try {
                        problem = detail::audit_pairs(code, pair_decompose(code), 1);
                    } catch (const Error& e) {
                        problem = e.code();
                    }
                    if (!problem.empty()) {
                        ++failures;
                        if (first.empty()) first = problem;
                    }
                }
            }
        std::ostringstream os;
        os << subspaces << " subspaces, " << survivors << " with constant age 9, " << failures << " failed";
        if (!first.empty()) os << "; first: " << first;
        detail::conclude(res, subspaces == 896260 && survivors > 0 && failures == 0, os.str());
    });
}

inline CriterionResult check_bridge() {
    return detail::timed(7, "simplex_of_code(pair_construct(A_1)) over F_3", 10.0, [](CriterionResult& res) {
        const LinearCode code = pair_construct(3, {simplex_code_matrix(3, 2)});
        const LatticeSimplex s = simplex_of_code(code);
        const auto h = hstar(s);
        const HStarPolynomial want(std::vector<BigInt>{1, 0, 0, 8, 0, 0, 0, 0});
        const bool pyramid = is_pyramid(lambda_of(s)).has_value();
        const SimplexCode back = code_of_simplex(s);
        const bool equivalent = equivalence_witness(back.code, code).has_value();
        std::ostringstream os;
        os << "d=" << s.dim() << " volume=" << s.volume() << " h*=" << to_string(h) << " pyramid=" << pyramid
           << " p=" << back.p << " k=" << back.k << " r=" << back.code.dimension() << " equivalent=" << equivalent;
        detail::conclude(res,
                         s.dim() == 7 && s.volume() == 9 && h == want && !pyramid && back.p == 3 && back.k == 3 &&
                             back.code.dimension() == 2 && equivalent,
                         os.str());
    });
}

inline std::vector<std::pair<int, int>> sweep_fields(Scale scale) {
    std::vector<std::pair<int, int>> f = {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}};
    if (scale == Scale::Full) f.emplace_back(3, 4);
    return f;
}

inline CriterionResult check_nonvanishing(Scale scale) {
    const double budget = scale == Scale::Small ? 60.0 : 600.0;
    return detail::timed(9, "odd-character B_1,chi never vanish", budget, [scale](CriterionResult& res) {
        std::ostringstream os;
        bool ok = true;
        for (auto [p, r] : sweep_fields(scale)) {
            const FqField f = make_field(p, r);
            std::size_t zeros = 0, odd = 0;
            try {
                const auto rep = nonvanishing_sweep(f);
                zeros = rep.odd_zero_count();
                for (const auto& c : rep.characters) odd += c.odd;
            } catch (const Error& e) {
                if (e.code() != "TheoremViolation") throw;
                zeros = 1;
            }
            os << "q=" << f.q() << ": " << odd << " odd, " << zeros << " zero; ";
            ok = ok && zeros == 0 && odd == static_cast<std::size_t>((f.q() - 1) / 2);
        }
        detail::conclude(res, ok, os.str());
    });
}

inline CriterionResult check_trace_sums() {
    return detail::timed(10, "trace-pair sums split on c in F_p", 60.0, [](CriterionResult& res) {
        std::ostringstream os;
        bool ok = true;
        for (auto [p, r] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {3, 3}}) {
            const FqField f = make_field(p, r);
            std::size_t bad = 0, zero_cases = 0;
            for (std::int64_t c = 1; c < f.q(); ++c) {
                const Rational direct = trace_pair_sum(f, c);
                if (direct != trace_pair_sum_predicted(f, c)) ++bad;
                if (!f.in_prime_field(c)) zero_cases += direct == 0;
            }
            os << "q=" << f.q() << ": " << bad << " mismatches, " << zero_cases << " zero sums off F_p; ";
            ok = ok && bad == 0 && zero_cases == static_cast<std::size_t>(f.q() - f.p());
        }
        detail::conclude(res, ok, os.str());
    });
}

inline CriterionResult check_norm_identity() {
    return detail::timed(11, "|B_1,chi|^2 = p^(r-1) |B_1,chi|F_p|^2", 60.0, [](CriterionResult& res) {
        std::ostringstream os;
        bool ok = true;
        for (auto [p, r] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
            const FqField f = make_field(p, r);
            const auto ctx = character_context(f);
            std::size_t bad = 0, trivial_restrictions = 0;
            for (std::int64_t j = 1; j < f.q() - 1; j += 2) {
                if (!norm_identity_check(f, j, ctx)) ++bad;
                trivial_restrictions += restriction_is_trivial(f, j);
            }
            os << "q=" << f.q() << ": " << bad << " failures; ";
            ok = ok && bad == 0 && trivial_restrictions == 0;
        }
        detail::conclude(res, ok, os.str());
    });
}

namespace detail {

inline std::vector<IntVector> primitive_directions(std::size_t k, std::int64_t bound) {
    std::vector<IntVector> out;
    IntVector v(k, -bound);
    while (true) {
        BigInt g = 0;
        for (const auto& c : v) g = gcd(g, abs(c));
        if (g == 1) out.push_back(v);
        std::size_t i = 0;
        while (i < k && v[i] == bound) v[i++] = -bound;
        if (i == k) break;
        v[i] += 1;
    }
    return out;
}

}  // namespace detail

inline CriterionResult check_named_families() {
    return detail::timed(12, "Lawrence prisms, exceptional and Cayley simplices", 60.0, [](CriterionResult& res) {
        std::ostringstream os;
        bool ok = true;

        std::size_t prisms = 0, prism_bad = 0;
        for (std::size_t n = 1; n <= 4; ++n) {
            std::vector<std::int64_t> h(n, 1);
            while (true) {
                ++prisms;
                if (hstar_via_ehrhart(lawrence_prism(h)).degree() > 1) ++prism_bad;
                std::size_t i = 0;
                while (i < n && h[i] == 3) h[i++] = 1;
                if (i == n) break;
                h[i] += 1;
            }
        }
        os << prisms << " Lawrence prisms (" << prism_bad << " bad); ";
        ok = ok && prism_bad == 0;

        std::size_t exc_bad = 0;
        for (std::size_t n = 2; n <= 4; ++n) {
            const auto s = exceptional_simplex(n);
            if (hstar(s).degree() > 1 || hstar(s) != hstar_via_ehrhart(s)) ++exc_bad;
        }
        os << "3 exceptional simplices (" << exc_bad << " bad); ";
        ok = ok && exc_bad == 0;

        // All choices of k primitive directions with entries in [-1, 1] (k = 3)
        // or [-2, 2] (k = 2), skipping linearly dependent choices.
        for (std::size_t k : {2, 3}) {
            const auto dirs = detail::primitive_directions(k, k == 2 ? 2 : 1);
            std::size_t tried = 0, pyramids = 0, bad = 0;
            std::string counterexample;
            std::vector<std::size_t> idx(k, 0);
            while (true) {
                std::vector<IntVector> choice;
                for (auto i : idx) choice.push_back(dirs[i]);
                std::optional<LatticeSimplex> s;
                try {
                    s = cayley_empty_segments(choice);
                } catch (const Error& e) {
                    if (e.code() != "DegenerateSimplex") throw;
                }
                if (s) {
                    ++tried;
                    if (is_pyramid(lambda_of(*s))) {
                        ++pyramids;
                    } else {
                        const auto bd = hstar(*s).binomial_degree();
                        if (!bd || *bd != k) {
                            if (bad++ == 0) {
                                std::ostringstream ex;
                                for (const auto& u : choice) {
                                    ex << "(";
                                    for (std::size_t t = 0; t < u.size(); ++t) ex << (t ? "," : "") << u[t];
                                    ex << ")";
                                }
                                counterexample = ex.str() + " gives h* = " + to_string(hstar(*s));
                            }
                        }
                    }
                }
                std::size_t i = 0;
                while (i < k && idx[i] + 1 == dirs.size()) idx[i++] = 0;
                if (i == k) break;
                idx[i] += 1;
            }
            os << "k=" << k << ": " << tried << " Cayley simplices, " << pyramids << " pyramids, " << bad
               << " without binomial h* of degree k";
            if (!counterexample.empty()) os << " (first: " << counterexample << ")";
            os << "; ";
            ok = ok && bad == 0 && tried > pyramids;
        }
        detail::conclude(res, ok, os.str());
    });
}

/// Criteria 1..12 in order.
inline std::vector<CriterionResult> run_all(Scale scale) {
    std::vector<CriterionResult> out;
    out.push_back(check_worked_example());
    const auto corpus = random_corpus();
    auto agreement = check_corpus_agreement(corpus);
    out.push_back(agreement[0]);
    out.push_back(check_round_trip(corpus));
    out.push_back(check_simplex_code_weights());
    out.push_back(check_pair_recovery());
    out.push_back(check_micro_oracle(scale));
    out.push_back(check_bridge());
    out.push_back(agreement[1]);
    out.push_back(check_nonvanishing(scale));
    out.push_back(check_trace_sums());
    out.push_back(check_norm_identity());
    out.push_back(check_named_families());
    return out;
}

inline std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << "[" << status_label(r.status) << "] criterion " << r.id << ": " << r.title << " -- " << r.detail << " ("
       << std::fixed;
    os.precision(2);
    os << r.seconds << " s)";
    return os.str();
}

}  // namespace hstar::verify
