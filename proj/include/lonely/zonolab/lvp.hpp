#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "configuration.hpp"

namespace lonely::zono {

// Direction of a nonzero vector up to positive scaling.
inline IntVector primitive_ray(const IntVector& v) {
    BigInt g = gcd_of(v);
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

// Direction up to any nonzero scaling: first nonzero coordinate made positive.
inline IntVector primitive_line(const IntVector& v) {
    IntVector r = primitive_ray(v);
    auto it = std::find_if(r.begin(), r.end(), [](const BigInt& x) { return x != 0; });
    if (it != r.end() && *it < 0) r = -r;
    return r;
}

inline bool lex_greater(const IntVector& a, const IntVector& b) { return b < a; }

// 2u for every u, and for every pair u+v and the lexicographically larger of u-v, v-u.
inline VectorConfiguration doubled_config(const VectorConfiguration& s, bool larger_difference = true) {
    std::vector<IntVector> out;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.push_back(BigInt(2) * s[i]);
        labels.push_back("2*" + s.label(i));
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            out.push_back(s[i] + s[j]);
            labels.push_back(s.label(i) + "+" + s.label(j));
            IntVector d = s[i] - s[j];
            bool keep = lex_greater(d, -d) == larger_difference;
            out.push_back(keep ? d : -d);
            labels.push_back(keep ? s.label(i) + "-" + s.label(j) : s.label(j) + "-" + s.label(i));
        }
    return {s.dim(), std::move(out), std::move(labels)};
}

// Some element of the multiset is proportional to no other. The zero vector is a multiple
// of everything, so a zero element makes every element non-lonely once there are two.
inline bool has_lonely_element(const std::vector<IntVector>& elems) {
    if (elems.size() == 1) return !is_zero(elems[0]);
    std::map<IntVector, long> lines;
    for (const auto& e : elems) {
        if (is_zero(e)) return false;
        ++lines[primitive_line(e)];
    }
    return std::any_of(lines.begin(), lines.end(), [](const auto& kv) { return kv.second == 1; });
}

inline bool has_lvp(const VectorConfiguration& s) {
    if (s.size() == 0) return false;
    return has_lonely_element(doubled_config(s).vectors());
}

// Only meaningful when s has no zero vector and no equal or opposite pair.
inline bool admissible_for_symmetric_test(const VectorConfiguration& s) { return no_zero_vector(s) && no_equal_or_opposite(s); }

// Pairwise sums (with repetition) of S, -S and 0; some nonzero sum is a positive multiple of no other sum.
inline bool has_lvp_symmetric(const VectorConfiguration& s) {
    std::vector<IntVector> sym{IntVector(s.dim())};
    for (const auto& u : s.vectors()) sym.push_back(u), sym.push_back(-u);
    std::map<IntVector, long> rays;
    for (std::size_t i = 0; i < sym.size(); ++i)
        for (std::size_t j = i; j < sym.size(); ++j) {
            IntVector z = sym[i] + sym[j];
            if (!is_zero(z)) ++rays[primitive_ray(z)];
        }
    return std::any_of(rays.begin(), rays.end(), [](const auto& kv) { return kv.second == 1; });
}

// Lattice points of [-a,a]x[-b,b] except 0, one of each opposite pair (the lexicographically positive one).
inline VectorConfiguration rectangle_config(long a, long b) {
    if (a < 1 || b < 1) throw Error("rectangle sides must be at least 1");
    std::vector<IntVector> vs;
    for (long x = 0; x <= a; ++x)
        for (long y = -b; y <= b; ++y)
            if (x > 0 || y > 0) vs.push_back(int_vector({x, y}));
    return {2, std::move(vs)};
}

// Closed-form test for rectangles: (2a-1, 2b) or (2a, 2b-1) primitive.
inline bool rectangle_lvp_criterion(long a, long b) { return std::gcd(2 * a - 1, 2 * b) == 1 || std::gcd(2 * a, 2 * b - 1) == 1; }

struct Minor {
    enum Kind { Deletion, PositiveDiagonal, NegativeDiagonal } kind;
    std::string first, second;

    std::string str() const {
        if (kind == Deletion) return "delete " + first;
        return std::string(kind == PositiveDiagonal ? "diagonal+ " : "diagonal- ") + first + "," + second;
    }
};

inline VectorConfiguration apply(const VectorConfiguration& u, const Minor& m) {
    if (m.kind == Minor::Deletion) return deletion(u, m.first);
    return diagonal(u, m.first, m.second, m.kind == Minor::PositiveDiagonal ? 1 : -1);
}

inline std::vector<Minor> single_minors(const VectorConfiguration& u) {
    std::vector<Minor> out;
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back({Minor::Deletion, u.label(i), {}});
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            out.push_back({Minor::PositiveDiagonal, u.label(i), u.label(j)});
            out.push_back({Minor::NegativeDiagonal, u.label(i), u.label(j)});
        }
    return out;
}

// A single deletion or diagonal that keeps full rank and is cosimple.
inline std::optional<Minor> find_cosimple_minor(const VectorConfiguration& u) {
    if (!u.full_rank()) throw RankDeficient("configuration does not span its ambient space");
    for (const auto& m : single_minors(u))
        if (is_cosimple(apply(u, m))) return m;
    return std::nullopt;
}

inline bool cosimple_minor_exists(const VectorConfiguration& u) { return find_cosimple_minor(u).has_value(); }

struct LrReduction {
    std::vector<Minor> steps;
    VectorConfiguration result;
};

// Repeatedly takes the diagonal whose Gale dual is the contraction at u* + v* for the two
// vectors of U* and -U* at the smallest nonzero angle; that contraction has no loops.
inline LrReduction reduce_to_lr(const VectorConfiguration& u_in) {
    if (!u_in.full_rank()) throw RankDeficient("configuration does not span its ambient space");
    if (!is_coloopless(u_in)) throw NotColoopless("configuration has a coloop");
    LrReduction r{{}, u_in};
    VectorConfiguration& u = r.result;
    while (u.size() > u.dim() + 1) {
        VectorConfiguration g = gale_dual(u);
        // compare signed squared cosines exactly
        std::optional<Rational> best;
        std::size_t bi = 0, bj = 0;
        int bsign = 1;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                BigInt ab = dot(g[i], g[j]);
                Rational cos2(ab * ab, dot(g[i], g[i]) * dot(g[j], g[j]));
                for (int sign : {1, -1}) {
                    Rational c = (ab * sign < 0) ? -cos2 : cos2;
                    if (c == Rational(1) && sign * ab > 0) continue;  // same ray: zero angle
                    if (!best || *best < c) best = c, bi = i, bj = j, bsign = sign;
                }
            }
        // u*_i + v*_j with both from U* contracts to the negative diagonal, otherwise the positive one
        Minor step{bsign > 0 ? Minor::NegativeDiagonal : Minor::PositiveDiagonal, u.label(bi), u.label(bj)};
        VectorConfiguration next = apply(u, step);
        if (!is_coloopless(next) || !next.full_rank()) throw Error("diagonal step lost colooplessness");
        r.steps.push_back(step);
        u = std::move(next);
    }
    return r;
}

}  // namespace lonely::zono
