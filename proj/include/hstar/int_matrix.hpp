// Dense integer matrices with exact determinant and Smith normal form.

#pragma once

#include "hstar/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hstar {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
        if (rows.empty()) return {};
        IntMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<BigInt> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
    }
    // col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
        if (k == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Fraction-free Bareiss elimination.
inline BigInt determinant(IntMatrix a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline std::size_t rank(IntMatrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            BigInt f = a(i, c), g = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
        }
        ++r;
    }
    return r;
}

/// U * A * W = diag(d_0, ..., d_{k-1}, 0, ...), U and W unimodular,
/// d_i > 0 and d_i | d_{i+1}.
struct SmithForm {
    std::vector<BigInt> diagonal;
    IntMatrix left;   // U
    IntMatrix right;  // W
};

inline SmithForm smith_normal_form(IntMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix w = IntMatrix::identity(n);
    std::vector<BigInt> diag;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t pi = t, pj = t;
        BigInt best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < best)) {
                    found = true;
                    best = abs(a(i, j));
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        w.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                BigInt q = a(i, t) / a(t, t);
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a(i, t) != 0) {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                BigInt q = a(t, j) / a(t, t);
                a.add_col(j, t, -q);
                w.add_col(j, t, -q);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Divisibility: fold an offending row into the pivot row and retry.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
        diag.push_back(a(t, t));
    }
    return {std::move(diag), std::move(u), std::move(w)};
}

}  // namespace hstar
