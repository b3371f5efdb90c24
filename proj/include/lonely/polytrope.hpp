#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"
#include "rational.hpp"

namespace lonely {

enum class Mode { Open, Closed };

// {x in R^n / R1 : x_j - x_i <= b(i,j)}.  b(i,j) is the maximum of x_j - x_i once canonical.
template <class T>
class BasicPolytrope {
public:
    BasicPolytrope() = default;
    explicit BasicPolytrope(std::size_t n, const T& fill = T{}) : n_(n), b_(n * n, fill) {
        for (std::size_t i = 0; i < n; ++i) at(i, i) = T{};
    }

    std::size_t dim() const { return n_; }
    const T& operator()(std::size_t i, std::size_t j) const { return b_[i * n_ + j]; }
    T& at(std::size_t i, std::size_t j) {
        canonical_ = false;
        return b_[i * n_ + j];
    }
    bool canonical() const { return canonical_; }

    // add x_j - x_i <= c
    void tighten(std::size_t i, std::size_t j, const T& c) {
        if (c < b_[i * n_ + j]) at(i, j) = c;
    }

    // Floyd-Warshall; false if a negative cycle (empty set) shows up.
    bool close() {
        std::size_t n = n_;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k) continue;
                const T bik = b_[i * n + k];
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == k) continue;
                    T via = bik + b_[k * n + j];
                    if (via < b_[i * n + j]) b_[i * n + j] = via;
                }
                if (b_[i * n + i] < T{}) return false;
            }
        canonical_ = true;
        return true;
    }

    bool full_dimensional() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!(T{} < (*this)(i, j) + (*this)(j, i))) return false;
        return true;
    }

    bool contains(const std::vector<T>& x, bool strict = false) const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (i == j) continue;
                T d = x[j] - x[i];
                if (strict ? !(d < (*this)(i, j)) : (*this)(i, j) < d) return false;
            }
        return true;
    }

    // this ⊆ other; with strict, this lies in the interior of other
    bool inside(const BasicPolytrope& other, bool strict = false) const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (i == j) continue;
                if (strict ? !((*this)(i, j) < other(i, j)) : other(i, j) < (*this)(i, j)) return false;
            }
        return true;
    }

    friend bool operator==(const BasicPolytrope& a, const BasicPolytrope& b) { return a.n_ == b.n_ && a.b_ == b.b_; }

private:
    std::size_t n_ = 0;
    std::vector<T> b_;
    bool canonical_ = false;
};

using Polytrope = BasicPolytrope<Rational>;
using QuotientPoint = std::vector<Rational>;

template <class T>
std::optional<BasicPolytrope<T>> canonicalize(BasicPolytrope<T> p) {
    if (!p.close()) return std::nullopt;
    return p;
}

template <class T>
std::optional<BasicPolytrope<T>> intersect(const BasicPolytrope<T>& a, const BasicPolytrope<T>& b) {
    BasicPolytrope<T> c = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) c.tighten(i, j, b(i, j));
    return canonicalize(std::move(c));
}

template <class T>
std::vector<T> normalized(std::vector<T> x) {
    if (x.empty()) return x;
    T base = x[0];
    for (auto& c : x) c = c - base;
    return x;
}

// Row i read as a point; the i-th coordinate is 0, reported with x_1 = 0.
template <class T>
std::vector<std::vector<T>> min_vertices(const BasicPolytrope<T>& p) {
    if (!p.canonical()) throw NotCanonical("min_vertices needs a canonical polytrope");
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        std::vector<T> x(p.dim());
        for (std::size_t j = 0; j < p.dim(); ++j) x[j] = p(i, j);
        out.push_back(normalized(std::move(x)));
    }
    return out;
}

// Barycenter of the min-vertices, which lies in the relative interior.
template <class T>
std::vector<T> interior_point(const BasicPolytrope<T>& p) {
    std::size_t n = p.dim();
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) x[j] += p(i, j) - p(i, 0);
    for (auto& c : x) c = exact_div(c, static_cast<long>(n));
    return x;
}

// Pieces of y outside t, one per farthest-site region of the constraints of t.
// Only comparisons against (i,l) and (k,j) are imposed, plus a nonnegative violation.
// For a canonical t these imply the comparisons against (k,i), (j,l) and (j,i); against
// pairs (k,l) with four distinct indices they follow when t(i,l) + t(k,j) <= t(i,j) + t(k,l),
// which holds with equality for certificate polytropes. For other t the pieces still
// cover y minus t but may overlap.
template <class T>
std::vector<BasicPolytrope<T>> subtract_certificate(const BasicPolytrope<T>& y, const BasicPolytrope<T>& t, Mode mode) {
    std::size_t n = y.dim();
    if (t.dim() != n) throw DimensionMismatch("polytropes of different dimension");
    std::vector<BasicPolytrope<T>> pieces;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const T& cij = t(i, j);
            // no point of y violates x_j - x_i <= cij (closed mode: none strictly)
            if (y(i, j) < cij || (mode == Mode::Closed && y(i, j) == cij)) continue;
            BasicPolytrope<T> piece = y;
            piece.tighten(j, i, -cij);
            for (std::size_t l = 0; l < n; ++l)
                if (l != i && l != j) piece.tighten(j, l, t(i, l) - cij);
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j) piece.tighten(k, i, t(k, j) - cij);
            if (!piece.close()) continue;
            if (mode == Mode::Closed && !piece.full_dimensional()) continue;
            pieces.push_back(std::move(piece));
        }
    return pieces;
}

template <class T>
std::string debug_string(const BasicPolytrope<T>& p) {
    std::string s = std::to_string(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) {
            if constexpr (std::is_same_v<T, Rational>)
                s += " " + p(i, j).str();
            else
                s += " " + std::to_string(p(i, j).raw);
        }
    return s;
}

}  // namespace lonely
