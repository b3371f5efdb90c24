#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "../errors.hpp"
#include "../integer_matrix.hpp"
#include "../rational.hpp"

namespace lonely::zono {

using IntVector = std::vector<BigInt>;

inline IntVector int_vector(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

inline bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}
inline IntVector operator-(const IntVector& a, const IntVector& b) {
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}
inline IntVector operator-(const IntVector& a) {
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}
inline IntVector operator*(const BigInt& k, const IntVector& a) {
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
    return c;
}
inline BigInt dot(const IntVector& a, const IntVector& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::string vector_str(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

// Labeled multiset of integer vectors in Z^d.
class VectorConfiguration {
public:
    VectorConfiguration() = default;
    VectorConfiguration(std::size_t dim, std::vector<IntVector> vectors, std::vector<std::string> labels = {})
        : dim_(dim), vectors_(std::move(vectors)), labels_(std::move(labels)) {
        for (const auto& v : vectors_)
            if (v.size() != dim_) throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in dimension " + std::to_string(dim_));
        if (labels_.empty())
            for (std::size_t i = 0; i < vectors_.size(); ++i) labels_.push_back(std::to_string(i + 1));
        if (labels_.size() != vectors_.size()) throw Error("label count differs from vector count");
        std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size()) throw Error("labels must be unique");
    }

    static VectorConfiguration from_columns(const IntegerMatrix& m, std::vector<std::string> labels = {}) {
        std::vector<IntVector> vs;
        for (std::size_t j = 0; j < m.cols(); ++j) vs.push_back(m.col(j));
        return {m.rows(), std::move(vs), std::move(labels)};
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const IntVector& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<IntVector>& vectors() const { return vectors_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    std::size_t index_of(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw UnknownLabel("no generator labeled '" + label + "'");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    // d x n, generators as columns
    IntegerMatrix matrix() const {
        IntegerMatrix m(dim_, vectors_.size());
        for (std::size_t j = 0; j < vectors_.size(); ++j)
            for (std::size_t i = 0; i < dim_; ++i) m(i, j) = vectors_[j][i];
        return m;
    }

    std::size_t rank() const { return lonely::rank(matrix()); }
    bool full_rank() const { return rank() == dim_; }

    IntVector sum() const {
        IntVector s(dim_);
        for (const auto& v : vectors_) s = s + v;
        return s;
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < vectors_.size(); ++i) s += (i ? ", " : "") + labels_[i] + ":" + vector_str(vectors_[i]);
        return s + "}";
    }

    friend bool operator==(const VectorConfiguration&, const VectorConfiguration&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> vectors_;
    std::vector<std::string> labels_;
};

// Integer dependences of U as rows; saturated.
inline IntegerMatrix dependence_lattice(const VectorConfiguration& u) { return integer_kernel_basis(u.matrix()); }

// Columns of a saturated dependence basis, keeping labels.
inline VectorConfiguration gale_dual(const VectorConfiguration& u) {
    if (!u.full_rank()) throw RankDeficient("configuration does not span its ambient space");
    IntegerMatrix k = dependence_lattice(u);
    return VectorConfiguration::from_columns(k, u.labels());
}

inline VectorConfiguration deletion(const VectorConfiguration& u, const std::string& label) {
    std::size_t idx = u.index_of(label);
    std::vector<IntVector> vs;
    std::vector<std::string> ls;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (i != idx) vs.push_back(u[i]), ls.push_back(u.label(i));
    return {u.dim(), std::move(vs), std::move(ls)};
}

// Replaces u and v by u + sign*v, placed where u was and labeled "u+v" or "u-v".
inline VectorConfiguration diagonal(const VectorConfiguration& u, const std::string& label_u, const std::string& label_v,
                                   int sign) {
    std::size_t a = u.index_of(label_u), b = u.index_of(label_v);
    if (a == b) throw Error("diagonal needs two distinct generators");
    std::vector<IntVector> vs;
    std::vector<std::string> ls;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i == b) continue;
        if (i == a) {
            vs.push_back(sign > 0 ? u[a] + u[b] : u[a] - u[b]);
            ls.push_back(label_u + (sign > 0 ? "+" : "-") + label_v);
        } else {
            vs.push_back(u[i]);
            ls.push_back(u.label(i));
        }
    }
    return {u.dim(), std::move(vs), std::move(ls)};
}

inline bool is_coloopless(const VectorConfiguration& u) {
    std::size_t d = u.rank();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (deletion(u, u.label(i)).rank() != d) return false;
    return true;
}

inline bool no_zero_vector(const VectorConfiguration& u) {
    return std::none_of(u.vectors().begin(), u.vectors().end(), [](const IntVector& v) { return is_zero(v); });
}

inline bool no_equal_or_opposite(const VectorConfiguration& u) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] == u[j] || u[i] == -u[j]) return false;
    return true;
}

inline bool gale_coloopless(const VectorConfiguration& u) { return no_zero_vector(gale_dual(u)); }

inline bool is_cosimple(const VectorConfiguration& u) {
    if (!u.full_rank()) return false;
    VectorConfiguration g = gale_dual(u);
    return no_zero_vector(g) && no_equal_or_opposite(g);
}

// Hyperplane form: no coloop, and no pair u1, u2 such that the other generators together
// with u1 + u2 or u1 - u2 lie in a linear hyperplane.
inline bool hyperplane_cosimple(const VectorConfiguration& u) {
    std::size_t d = u.dim();
    if (u.rank() != d || !is_coloopless(u)) return false;
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            for (int sign : {1, -1})
                if (diagonal(u, u.label(a), u.label(b), sign).rank() != d) return false;
    return true;
}

}  // namespace lonely::zono
