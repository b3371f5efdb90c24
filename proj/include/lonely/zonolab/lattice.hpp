#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "configuration.hpp"

namespace lonely::zono {

using RationalVector = std::vector<Rational>;

inline Rational evaluate(const IntVector& g, const RationalVector& x) {
    Rational s(0);
    for (std::size_t i = 0; i < g.size(); ++i) s += Rational(g[i]) * x[i];
    return s;
}

// Solves a x = b over the rationals for square a; nullopt when singular.
inline std::optional<RationalVector> solve(std::vector<RationalVector> a, RationalVector b) {
    std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

// Z^d + (1/q)<w>.
struct LatticeDescription {
    BigInt q = 1;
    IntVector w;

    LatticeDescription() = default;
    LatticeDescription(BigInt q_, IntVector w_) : q(std::move(q_)), w(std::move(w_)) {
        if (q < 1) throw Error("lattice denominator must be at least 1");
    }
    static LatticeDescription integer(std::size_t d) { return {1, IntVector(d)}; }

    std::size_t dim() const { return w.size(); }

    // [Lambda : Z^d]
    BigInt index() const { return q / big_gcd(q, gcd_of(w)); }

    bool contains(const RationalVector& p) const {
        IntVector qp(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            Rational x = Rational(q) * p[i];
            if (!x.is_integer()) return false;
            qp[i] = x.num();
        }
        for (BigInt m = 0; m < q; ++m) {
            bool ok = true;
            for (std::size_t i = 0; i < qp.size() && ok; ++i) {
                BigInt r = qp[i] - m * w[i];
                ok = (r % q) == 0;
            }
            if (ok) return true;
        }
        return false;
    }

    // Distinct classes of Lambda / Z^d as representatives in [0,1)^d.
    std::vector<RationalVector> coset_offsets() const {
        std::set<RationalVector> seen;
        std::vector<RationalVector> out;
        for (BigInt m = 0; m < q; ++m) {
            RationalVector o;
            for (const auto& wi : w) o.push_back(Rational(m * wi, q).frac());
            if (seen.insert(o).second) out.push_back(o);
        }
        return out;
    }

    // An integer functional f takes integer values on Lambda iff f.w = 0 mod q.
    bool dual_contains(const IntVector& f) const { return dot(f, w) % q == 0; }
};

struct BodyConstraint {
    IntVector g;
    Rational lo, hi;
};

// Intersection of slabs lo <= g(x) <= hi, all symmetric about `center`.
class CenteredBody {
public:
    CenteredBody() = default;
    CenteredBody(std::vector<BodyConstraint> constraints, RationalVector center)
        : constraints_(std::move(constraints)), center_(std::move(center)) {
        for (const auto& c : constraints_) {
            if (c.g.size() != center_.size()) throw DimensionMismatch("constraint and center dimensions differ");
            if (!(c.lo < c.hi)) throw Error("empty or flat slab");
            if (evaluate(c.g, center_) * Rational(2) != c.lo + c.hi) throw Error("center is not the midpoint of every slab");
        }
    }

    std::size_t dim() const { return center_.size(); }
    const std::vector<BodyConstraint>& constraints() const { return constraints_; }
    const RationalVector& center() const { return center_; }
    std::size_t inequality_count() const { return 2 * constraints_.size(); }

    bool bounded() const {
        IntegerMatrix m(constraints_.size(), dim());
        for (std::size_t i = 0; i < constraints_.size(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) m(i, j) = constraints_[i].g[j];
        return rank(m) == dim();
    }

    bool contains(const RationalVector& p) const {
        return std::all_of(constraints_.begin(), constraints_.end(), [&](const BodyConstraint& c) {
            Rational x = evaluate(c.g, p);
            return c.lo <= x && x <= c.hi;
        });
    }

    // Smallest lambda with p in center + lambda (K - center).
    Rational gauge(const RationalVector& p) const {
        Rational best(0);
        for (const auto& c : constraints_) {
            Rational half = (c.hi - c.lo) / Rational(2);
            best = max(best, (evaluate(c.g, p) - evaluate(c.g, center_)).abs() / half);
        }
        return best;
    }

    // Vertices by brute force over d-subsets of the 2m bounding hyperplanes.
    std::vector<RationalVector> vertices() const {
        if (!bounded()) throw Unbounded("constraints do not bound the body");
        std::size_t d = dim(), m = constraints_.size();
        std::set<RationalVector> found;
        std::vector<std::size_t> pick(d);
        auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
            if (depth == d) {
                std::vector<RationalVector> a;
                for (std::size_t k : pick) {
                    RationalVector row;
                    for (const auto& x : constraints_[k].g) row.push_back(Rational(x));
                    a.push_back(row);
                }
                for (unsigned mask = 0; mask < (1u << d); ++mask) {
                    RationalVector b;
                    for (std::size_t t = 0; t < d; ++t) b.push_back((mask >> t) & 1 ? constraints_[pick[t]].hi : constraints_[pick[t]].lo);
                    auto x = solve(a, b);
                    if (!x) return;
                    if (contains(*x)) found.insert(*x);
                }
                return;
            }
            for (std::size_t k = start; k < m; ++k) {
                pick[depth] = k;
                self(self, k + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
        return {found.begin(), found.end()};
    }

    std::pair<RationalVector, RationalVector> bounding_box() const {
        auto vs = vertices();
        RationalVector lo = vs.at(0), hi = vs.at(0);
        for (const auto& v : vs)
            for (std::size_t i = 0; i < dim(); ++i) lo[i] = min(lo[i], v[i]), hi[i] = max(hi[i], v[i]);
        return {lo, hi};
    }

private:
    std::vector<BodyConstraint> constraints_;
    RationalVector center_;
};

// Calls fn(p) for every point of the lattice inside the box [lo, hi].
template <class Fn>
void for_each_lattice_point(const LatticeDescription& lat, const RationalVector& lo, const RationalVector& hi, Fn&& fn) {
    std::size_t d = lo.size();
    for (const auto& off : lat.coset_offsets()) {
        std::vector<BigInt> from(d), to(d), z(d);
        bool empty = false;
        for (std::size_t i = 0; i < d; ++i) {
            from[i] = (lo[i] - off[i]).ceil();
            to[i] = (hi[i] - off[i]).floor();
            if (to[i] < from[i]) empty = true;
        }
        if (empty) continue;
        z = from;
        while (true) {
            RationalVector p(d);
            for (std::size_t i = 0; i < d; ++i) p[i] = Rational(z[i]) + off[i];
            fn(p);
            std::size_t i = 0;
            while (i < d && z[i] == to[i]) z[i] = from[i], ++i;
            if (i == d) break;
            ++z[i];
        }
    }
}

// Smallest gauge over lattice points; the box is scaled about the center until it
// contains a point whose gauge is within the scale.
inline Rational first_c_minimum(const CenteredBody& k, const LatticeDescription& lat) {
    if (k.dim() != lat.dim()) throw DimensionMismatch("body and lattice dimensions differ");
    auto [lo, hi] = k.bounding_box();
    const auto& c = k.center();
    for (Rational scale(1);; scale *= Rational(2)) {
        RationalVector a(k.dim()), b(k.dim());
        for (std::size_t i = 0; i < k.dim(); ++i) a[i] = c[i] + scale * (lo[i] - c[i]), b[i] = c[i] + scale * (hi[i] - c[i]);
        std::optional<Rational> best;
        for_each_lattice_point(lat, a, b, [&](const RationalVector& p) {
            Rational g = k.gauge(p);
            if (!best || g < *best) best = g;
        });
        if (best && *best <= scale) return *best;
    }
}

inline BigInt width_with_functional(const VectorConfiguration& u, const IntVector& f) {
    BigInt s = 0;
    for (const auto& x : u.vectors()) s += ::abs(BigInt(dot(f, x)));
    return s;
}

struct LatticeWidth {
    enum Kind { Exactly, GreaterThan } kind = GreaterThan;
    BigInt value = 0;
    IntVector functional;  // a minimizer when Exactly

    std::string str() const { return (kind == Exactly ? "Exactly(" : "GreaterThan(") + value.get_str() + ")"; }
    friend bool operator==(const LatticeWidth& a, const LatticeWidth& b) { return a.kind == b.kind && a.value == b.value; }
};

inline constexpr double width_search_limit = 1e7;

// Minimum width of the zonotope of u over nonzero functionals integral on the lattice, if at most `bound`.
// Such a functional has |f(b)| <= bound on every generator, so it is found by enumerating its
// values on a basis chosen among the generators.
inline LatticeWidth lattice_width_upto(const VectorConfiguration& u, const LatticeDescription& lat, long bound) {
    std::size_t d = u.dim();
    if (lat.dim() != d) throw DimensionMismatch("configuration and lattice dimensions differ");
    if (!u.full_rank()) throw RankDeficient("configuration does not span its ambient space");
    if (bound < 0) throw Error("negative width bound");
    double space = 1;
    for (std::size_t i = 0; i < d; ++i) space *= double(2 * bound + 1);
    if (space > width_search_limit) throw BoundTooLarge("functional enumeration of size " + std::to_string(space));

    // greedy basis among generators
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < u.size() && basis.size() < d; ++i) {
        IntegerMatrix m(d, basis.size() + 1);
        for (std::size_t c = 0; c < basis.size(); ++c)
            for (std::size_t r = 0; r < d; ++r) m(r, c) = u[basis[c]][r];
        for (std::size_t r = 0; r < d; ++r) m(r, basis.size()) = u[i][r];
        if (rank(m) == basis.size() + 1) basis.push_back(i);
    }
    // f B = y  <=>  B^T f = y
    std::vector<RationalVector> bt(d, RationalVector(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) bt[r][c] = Rational(u[basis[r]][c]);

    LatticeWidth best;
    best.value = bound;
    std::vector<long> y(d, -bound);
    while (true) {
        if (std::any_of(y.begin(), y.end(), [](long x) { return x != 0; })) {
            RationalVector rhs(y.begin(), y.end());
            auto f = solve(bt, rhs);
            bool ok = f.has_value();
            IntVector fi(d);
            for (std::size_t i = 0; ok && i < d; ++i) {
                ok = (*f)[i].is_integer();
                if (ok) fi[i] = (*f)[i].num();
            }
            if (ok && lat.dual_contains(fi)) {
                BigInt w = width_with_functional(u, fi);
                if (w <= bound && (best.kind == LatticeWidth::GreaterThan || w < best.value)) {
                    best.kind = LatticeWidth::Exactly;
                    best.value = w;
                    best.functional = fi;
                }
            }
        }
        std::size_t i = 0;
        while (i < d && y[i] == bound) y[i] = -bound, ++i;
        if (i == d) break;
        ++y[i];
    }
    return best;
}

// First two successive minima of the difference body K - K, in Z^2.
// The gauge of K - K at p is max over slabs of |g(p)| / (hi - lo).
inline std::pair<Rational, Rational> successive_minima_2d(const CenteredBody& k) {
    if (k.dim() != 2) throw DimensionMismatch("successive minima are computed in dimension 2 only");
    if (!k.bounded()) throw Unbounded("constraints do not bound the body");
    auto gauge = [&](long x, long y) {
        Rational best(0);
        for (const auto& c : k.constraints()) {
            Rational v(BigInt(c.g[0] * x + c.g[1] * y));
            best = max(best, v.abs() / (c.hi - c.lo));
        }
        return best;
    };
    // Every point with gauge <= t lies in t * box(K - K); grow the search box until the
    // second minimum is certified by it.
    auto [lo, hi] = k.bounding_box();
    Rational wx = hi[0] - lo[0], wy = hi[1] - lo[1];
    for (long r = 1;; r *= 2) {
        std::vector<std::pair<Rational, std::pair<long, long>>> pts;
        for (long x = -r; x <= r; ++x)
            for (long y = -r; y <= r; ++y)
                if (x || y) pts.push_back({gauge(x, y), {x, y}});
        std::sort(pts.begin(), pts.end());
        Rational l1 = pts[0].first;
        std::optional<Rational> l2;
        auto [x1, y1] = pts[0].second;
        for (const auto& [g, p] : pts)
            if (long(p.first) * y1 - long(p.second) * x1 != 0) {
                l2 = g;
                break;
            }
        // the box of half-width r holds every point of gauge <= r / max(width)
        Rational reach = Rational(r) / max(wx, wy);
        if (l2 && *l2 <= reach) return {l1, *l2};
    }
}

}  // namespace lonely::zono
