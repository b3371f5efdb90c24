#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace lonely {

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (auto& row : init) {
            if (row.size() != cols_) throw Error("ragged matrix literal");
            for (long x : row) a_.emplace_back(x);
        }
    }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
        IntegerMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<BigInt> row(std::size_t i) const {
        return {a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)};
    }
    std::vector<BigInt> col(std::size_t j) const {
        std::vector<BigInt> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntegerMatrix transpose() const {
        IntegerMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        IntegerMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    std::vector<BigInt> apply(const std::vector<BigInt>& x) const {
        if (x.size() != cols_) throw DimensionMismatch("vector length mismatch");
        std::vector<BigInt> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const BigInt& x) { return x == 0; });
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    void swap_cols(std::size_t p, std::size_t q) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, p), (*this)(i, q));
    }
    void swap_rows(std::size_t p, std::size_t q) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(q, j));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? "; " : "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + (*this)(i, j).get_str();
        }
        return s + "]";
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

// Fraction-free elimination.
inline std::size_t rank(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j));
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

struct ColumnEchelon {
    IntegerMatrix h;          // m * u
    IntegerMatrix u;          // unimodular
    std::size_t rank = 0;     // columns [rank, n) of h are zero
};

// Column-style Hermite reduction by unimodular column operations.
inline ColumnEchelon column_echelon(const IntegerMatrix& m) {
    ColumnEchelon out{m, IntegerMatrix::identity(m.cols()), 0};
    IntegerMatrix& h = out.h;
    IntegerMatrix& u = out.u;
    std::size_t n = m.cols();
    std::size_t p = 0;
    auto combine = [&](IntegerMatrix& x, std::size_t a, std::size_t b, const BigInt& s, const BigInt& t,
                       const BigInt& y, const BigInt& z) {
        // col_a <- s*col_a + t*col_b ; col_b <- y*col_a + z*col_b
        for (std::size_t i = 0; i < x.rows(); ++i) {
            BigInt ca = x(i, a), cb = x(i, b);
            x(i, a) = s * ca + t * cb;
            x(i, b) = y * ca + z * cb;
        }
    };
    for (std::size_t r = 0; r < m.rows() && p < n; ++r) {
        for (std::size_t c = p + 1; c < n; ++c) {
            if (h(r, c) == 0) continue;
            BigInt x = h(r, p), y = h(r, c), g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            BigInt yg = -y / g, xg = x / g;
            combine(h, p, c, s, t, yg, xg);
            combine(u, p, c, s, t, yg, xg);
        }
        if (h(r, p) == 0) continue;
        if (h(r, p) < 0) {
            for (std::size_t i = 0; i < h.rows(); ++i) h(i, p) = -h(i, p);
            for (std::size_t i = 0; i < u.rows(); ++i) u(i, p) = -u(i, p);
        }
        // reduce earlier pivot columns modulo this pivot
        for (std::size_t c = 0; c < p; ++c) {
            BigInt q = floor_div(h(r, c), h(r, p));
            if (q == 0) continue;
            for (std::size_t i = 0; i < h.rows(); ++i) h(i, c) -= q * h(i, p);
            for (std::size_t i = 0; i < u.rows(); ++i) u(i, c) -= q * u(i, p);
        }
        ++p;
    }
    out.rank = p;
    return out;
}

// Row Hermite normal form of the row lattice (zero rows dropped).
inline IntegerMatrix row_hermite(const IntegerMatrix& m) {
    ColumnEchelon e = column_echelon(m.transpose());
    IntegerMatrix h(e.rank, m.cols());
    for (std::size_t i = 0; i < e.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) h(i, j) = e.h(j, i);
    return h;
}

// Rows form a basis of {x in Z^n : m x = 0}; saturated because it comes from a unimodular transform.
inline IntegerMatrix integer_kernel_basis(const IntegerMatrix& m) {
    ColumnEchelon e = column_echelon(m);
    std::size_t n = m.cols();
    IntegerMatrix k(n - e.rank, n);
    for (std::size_t i = e.rank; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i - e.rank, j) = e.u(j, i);
    if (k.rows() == 0) return k;
    return row_hermite(k);
}

// Nonzero invariant factors of the Smith normal form, in divisibility order.
inline std::vector<BigInt> smith_invariants(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    std::vector<BigInt> d;
    std::size_t t = 0;
    while (t < a.rows() && t < a.cols()) {
        // pick the smallest nonzero entry of the trailing block
        std::size_t pi = a.rows(), pj = a.cols();
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j)
                if (a(i, j) != 0 && (pi == a.rows() || ::abs(a(i, j)) < ::abs(a(pi, pj)))) pi = i, pj = j;
        if (pi == a.rows()) break;
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
            BigInt q = floor_div(a(i, t), a(t, t));
            for (std::size_t j = t; j < a.cols(); ++j) a(i, j) -= q * a(t, j);
            if (a(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
            BigInt q = floor_div(a(t, j), a(t, t));
            for (std::size_t i = t; i < a.rows(); ++i) a(i, j) -= q * a(i, t);
            if (a(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        std::size_t bad = a.rows();
        for (std::size_t i = t + 1; i < a.rows() && bad == a.rows(); ++i)
            for (std::size_t j = t + 1; j < a.cols(); ++j)
                if (a(i, j) % a(t, t) != 0) {
                    bad = i;
                    break;
                }
        if (bad != a.rows()) {
            for (std::size_t j = t; j < a.cols(); ++j) a(t, j) += a(bad, j);
            continue;
        }
        d.push_back(::abs(a(t, t)));
        ++t;
    }
    return d;
}

inline BigInt gcd_of(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v) g = big_gcd(g, x);
    return g;
}

// (n-1) x n integer matrix P with P v = 0 and P Z^n = Z^{n-1}.
inline IntegerMatrix lr_projection(const std::vector<BigInt>& v) {
    if (v.empty()) throw Error("empty velocity vector");
    if (gcd_of(v) != 1) throw NonPrimitive("gcd of the velocity vector is not 1");
    IntegerMatrix row(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) row(0, j) = v[j];
    return integer_kernel_basis(row);
}

}  // namespace lonely
