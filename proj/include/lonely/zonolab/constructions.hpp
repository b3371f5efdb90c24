#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "../runner.hpp"
#include "configuration.hpp"
#include "lattice.hpp"
#include "lvp.hpp"

namespace lonely::zono {

struct LatticeBody {
    CenteredBody body;
    LatticeDescription lattice;
    VectorConfiguration generators;
};

inline long euler_phi(long q) {
    long r = 0;
    for (long a = 1; a <= q; ++a) r += std::gcd(a, q) == 1;
    return r;
}

inline std::vector<long> prime_divisors(long q) {
    std::vector<long> ps;
    for (long p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            ps.push_back(p);
            while (q % p == 0) q /= p;
        }
    if (q > 1) ps.push_back(q);
    return ps;
}

inline bool is_prime(long q) { return q >= 2 && prime_divisors(q) == std::vector<long>{q}; }

inline CenteredBody unit_cube(std::size_t d) {
    std::vector<BodyConstraint> cs;
    for (std::size_t i = 0; i < d; ++i) {
        IntVector g(d);
        g[i] = 1;
        cs.push_back({g, Rational(0), Rational(1)});
    }
    return {std::move(cs), RationalVector(d, Rational(1, 2))};
}

inline VectorConfiguration standard_basis(std::size_t d) {
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d);
        e[i] = 1;
        vs.push_back(e);
    }
    return {d, std::move(vs)};
}

// Unit cube over Z^d + (1/q)<w>. Prime q: w = (1, ..., (q-1)/2). Composite q: one residue
// a < q/2 from each opposite pair of units mod q, then q/p for every prime p dividing q.
inline LatticeBody cusick_parallelepiped(long q) {
    if (q < 3) throw Error("the construction needs q >= 3");
    IntVector w;
    if (is_prime(q)) {
        for (long i = 1; i <= (q - 1) / 2; ++i) w.emplace_back(i);
    } else {
        for (long a = 1; 2 * a < q; ++a)
            if (std::gcd(a, q) == 1) w.emplace_back(a);
        for (long p : prime_divisors(q)) w.emplace_back(q / p);
    }
    std::size_t d = w.size();
    return {unit_cube(d), LatticeDescription(q, w), standard_basis(d)};
}

// d odd prime: e_1..e_{d-1}, -(e_1 + ... + e_{d-1}), e_d over Z^d + (1/d)<(1, 2, ..., d-1, 1)>.
inline LatticeBody almost_coloopless_zonotope(long d) {
    if (d < 3 || !is_prime(d)) throw Error("dimension must be an odd prime");
    std::size_t n = static_cast<std::size_t>(d);
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        IntVector e(n);
        e[i] = 1;
        gens.push_back(e);
    }
    IntVector neg(n);
    for (std::size_t i = 0; i + 1 < n; ++i) neg[i] = -1;
    gens.push_back(neg);
    IntVector y(n);
    y[n - 1] = 1;
    gens.push_back(y);

    std::vector<BodyConstraint> cs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        IntVector g(n);
        g[i] = 1;
        cs.push_back({g, Rational(-1), Rational(1)});
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            IntVector g(n);
            g[i] = 1;
            g[j] = -1;
            cs.push_back({g, Rational(-1), Rational(1)});
        }
    cs.push_back({y, Rational(0), Rational(1)});
    RationalVector center(n);
    center[n - 1] = Rational(1, 2);

    IntVector w;
    for (long i = 1; i < d; ++i) w.emplace_back(i);
    w.emplace_back(1);
    return {CenteredBody(std::move(cs), std::move(center)), LatticeDescription(d, w), VectorConfiguration(n, std::move(gens))};
}

struct LrZonotope {
    VectorConfiguration generators;
    CenteredBody body;
};

// Projection of [0,1]^n along v. The facet pair for {i, j} comes from the functional
// v_j x_i - v_i x_j, which vanishes on v and so factors through the projection.
inline LrZonotope lr_zonotope(const VelocityVector& v) {
    std::size_t n = v.size();
    if (n < 2) throw Error("need at least two velocities");
    IntegerMatrix p = lr_projection(v.big());
    std::size_t d = n - 1;
    VectorConfiguration gens = VectorConfiguration::from_columns(p);

    // columns of p spanning R^d, to solve h^T p = g
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n && cols.size() < d; ++j) {
        IntegerMatrix m(d, cols.size() + 1);
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < d; ++r) m(r, c) = p(r, cols[c]);
        for (std::size_t r = 0; r < d; ++r) m(r, cols.size()) = p(r, j);
        if (rank(m) == cols.size() + 1) cols.push_back(j);
    }
    std::vector<RationalVector> pt(d, RationalVector(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) pt[r][c] = Rational(p(c, cols[r]));

    RationalVector center(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t j = 0; j < n; ++j) center[r] += Rational(p(r, j)) / Rational(2);

    std::vector<BodyConstraint> cs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            long gg = std::gcd(v[i], v[j]);
            std::vector<BigInt> g(n);
            g[i] = v[j] / gg;
            g[j] = -v[i] / gg;
            RationalVector rhs;
            for (std::size_t c : cols) rhs.push_back(Rational(g[c]));
            RationalVector h = *solve(pt, rhs);
            IntVector hi;
            for (const auto& x : h) {
                if (!x.is_integer()) throw Error("facet functional is not integral");
                hi.push_back(x.num());
            }
            cs.push_back({hi, Rational(-v[i] / gg), Rational(v[j] / gg)});
        }
    return {std::move(gens), CenteredBody(std::move(cs), std::move(center))};
}

// Sum over nonempty subsets of the gcd of the chosen velocities.
inline BigInt lattice_point_count_formula(const VelocityVector& v) {
    std::size_t n = v.size();
    if (n > 30) throw Error("too many velocities for subset enumeration");
    if (v.gcd() != 1) throw NonPrimitive("gcd of the velocity vector is not 1");
    BigInt total = 0;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        long g = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) g = std::gcd(g, v[i]);
        total += g;
    }
    return total;
}

inline BigInt count_integer_points(const CenteredBody& k) {
    auto [lo, hi] = k.bounding_box();
    BigInt count = 0;
    for_each_lattice_point(LatticeDescription::integer(k.dim()), lo, hi, [&](const RationalVector& p) {
        if (k.contains(p)) ++count;
    });
    return count;
}

inline BigInt lattice_point_count_enumerated(const VelocityVector& v) { return count_integer_points(lr_zonotope(v).body); }

// A dependence with nonzero coefficients of pairwise distinct absolute value, read off as
// the values of a small functional on the Gale dual.
inline std::optional<IntVector> cosimple_dependence(const VectorConfiguration& u, long max_entry = 6) {
    if (!is_cosimple(u)) return std::nullopt;
    VectorConfiguration g = gale_dual(u);
    std::size_t k = g.dim();
    for (long r = 1; r <= max_entry; ++r) {
        std::vector<long> f(k, -r);
        while (true) {
            IntVector fv(f.begin(), f.end());
            IntVector lambda;
            for (const auto& x : g.vectors()) lambda.push_back(dot(fv, x));
            std::vector<BigInt> mags;
            for (const auto& x : lambda) mags.push_back(::abs(x));
            std::sort(mags.begin(), mags.end());
            bool ok = mags.front() != 0 && std::adjacent_find(mags.begin(), mags.end()) == mags.end();
            if (ok) return lambda;
            std::size_t i = 0;
            while (i < k && f[i] == r) f[i] = -r, ++i;
            if (i == k) break;
            ++f[i];
        }
    }
    return std::nullopt;
}

// Negative diagonal at the two generators with the largest coefficients, after flipping
// generators with negative coefficients.
inline VectorConfiguration width3_diagonal(const VectorConfiguration& u, const IntVector& dependence) {
    if (dependence.size() != u.size()) throw DimensionMismatch("dependence length differs from configuration size");
    IntVector total(u.dim());
    for (std::size_t i = 0; i < u.size(); ++i) total = total + dependence[i] * u[i];
    if (!is_zero(total)) throw Error("not a linear dependence of the configuration");
    std::vector<std::size_t> order(u.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ::abs(dependence[a]) < ::abs(dependence[b]); });
    for (std::size_t k = 0; k < order.size(); ++k) {
        BigInt m = ::abs(dependence[order[k]]);
        if (m == 0 || (k && m == ::abs(dependence[order[k - 1]])))
            throw NotSorted("dependence coefficients must be nonzero with distinct absolute values");
    }
    if (u.size() < 2) throw NotSorted("need at least two generators");
    std::size_t a = order[order.size() - 2], b = order.back();
    auto oriented = [&](std::size_t i) { return dependence[i] < 0 ? -u[i] : u[i]; };
    std::vector<IntVector> vs;
    std::vector<std::string> ls;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i == b) continue;
        if (i == a) {
            vs.push_back(oriented(a) - oriented(b));
            ls.push_back(u.label(a) + "-" + u.label(b));
        } else {
            vs.push_back(u[i]);
            ls.push_back(u.label(i));
        }
    }
    return {u.dim(), std::move(vs), std::move(ls)};
}

inline constexpr std::size_t max_containment_dim = 4;

// Is Z(inner) + shift contained in Z(outer)? Support values are compared on every facet
// normal of the outer zonotope, each normal spanning the kernel of d-1 outer generators.
inline bool zonotope_contains(const VectorConfiguration& inner, const IntVector& shift, const VectorConfiguration& outer) {
    std::size_t d = outer.dim();
    if (inner.dim() != d || shift.size() != d) throw DimensionMismatch("zonotopes of different dimension");
    if (d > max_containment_dim) throw Error("facet enumeration limited to dimension " + std::to_string(max_containment_dim));
    if (!outer.full_rank()) throw RankDeficient("outer zonotope is not full-dimensional");
    IntVector two_c_out = outer.sum();
    IntVector two_c_in = inner.sum() + BigInt(2) * shift;
    auto width = [](const VectorConfiguration& z, const IntVector& f) { return width_with_functional(z, f); };
    auto fits = [&](const IntVector& f) {
        // 2 h(f) = 2 f(c) + sum |f(u)|, in both directions
        BigInt wo = width(outer, f), wi = width(inner, f);
        BigInt co = dot(f, two_c_out), ci = dot(f, two_c_in);
        return ci + wi <= co + wo && -ci + wi <= -co + wo;
    };
    if (d == 1) return fits(IntVector{1});
    std::vector<std::size_t> pick(d - 1);
    bool ok = true;
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (!ok) return;
        if (depth == d - 1) {
            IntegerMatrix m(d - 1, d);
            for (std::size_t r = 0; r < d - 1; ++r)
                for (std::size_t c = 0; c < d; ++c) m(r, c) = outer[pick[r]][c];
            IntegerMatrix k = integer_kernel_basis(m);
            if (k.rows() != 1) return;
            if (!fits(k.row(0))) ok = false;
            return;
        }
        for (std::size_t i = start; i < outer.size(); ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return ok;
}

// Shift making a diagonal zonotope sit inside the original with the same center: the
// negative diagonal at (u, v) is recentered by adding v.
inline IntVector diagonal_shift(const VectorConfiguration& u, const std::string& label_v, int sign) {
    if (sign > 0) return IntVector(u.dim());
    return u[u.index_of(label_v)];
}

enum class SearchFamily { Rectangle, Triangular };

// Rotation by 60 degrees in the basis (1,0), (1/2, sqrt(3)/2) of the triangular lattice.
inline std::pair<long, long> rotate60(std::pair<long, long> p) { return {-p.second, p.first + p.second}; }

// Orbits of the hexagonal symmetry group on triangular lattice points with norm
// a^2 + ab + b^2 in (0, max_norm], in order of norm.
inline std::vector<std::vector<std::pair<long, long>>> hexagonal_orbits(long max_norm) {
    std::map<std::pair<long, long>, bool> seen;
    std::vector<std::pair<long, std::vector<std::pair<long, long>>>> orbits;
    for (long a = -max_norm; a <= max_norm; ++a)
        for (long b = -max_norm; b <= max_norm; ++b) {
            long norm = a * a + a * b + b * b;
            if (norm == 0 || norm > max_norm || seen.count({a, b})) continue;
            std::vector<std::pair<long, long>> orbit;
            std::pair<long, long> p{a, b};
            for (int r = 0; r < 6; ++r) {
                for (auto q : {p, std::pair<long, long>{p.second, p.first}})
                    if (!seen.count(q)) seen[q] = true, orbit.push_back(q);
                p = rotate60(p);
            }
            std::sort(orbit.begin(), orbit.end());
            orbits.push_back({norm, orbit});
        }
    std::stable_sort(orbits.begin(), orbits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::vector<std::pair<long, long>>> out;
    for (auto& o : orbits) out.push_back(std::move(o.second));
    return out;
}

// One vector out of each opposite pair of a centrally symmetric point set.
inline VectorConfiguration half_of_symmetric(const std::vector<std::pair<long, long>>& pts) {
    std::vector<IntVector> vs;
    for (auto [a, b] : pts)
        if (a > 0 || (a == 0 && b > 0)) vs.push_back(int_vector({a, b}));
    std::sort(vs.begin(), vs.end());
    return {2, std::move(vs)};
}

// Smallest configuration without the lonely vector property within the family, if any has
// at most size_limit vectors. Rectangles are tried by size; triangular candidates are
// unions of hexagonal orbits.
inline std::optional<VectorConfiguration> lvp_counterexample_search(SearchFamily family, std::size_t size_limit) {
    if (family == SearchFamily::Rectangle) {
        std::vector<std::pair<long, long>> sides;
        for (long a = 1; 2 * a + 1 <= 2 * long(size_limit) + 1; ++a)
            for (long b = 1; ((2 * a + 1) * (2 * b + 1) - 1) / 2 <= long(size_limit); ++b) sides.push_back({a, b});
        std::sort(sides.begin(), sides.end(), [](auto x, auto y) {
            auto sx = (2 * x.first + 1) * (2 * x.second + 1), sy = (2 * y.first + 1) * (2 * y.second + 1);
            return sx != sy ? sx < sy : x.first < y.first;
        });
        for (auto [a, b] : sides) {
            VectorConfiguration s = rectangle_config(a, b);
            if (!has_lvp(s)) return s;
        }
        return std::nullopt;
    }
    // each orbit contributes half its points; search unions by total size
    long max_norm = 3 * static_cast<long>(size_limit) + 3;
    auto orbits = hexagonal_orbits(max_norm);
    std::size_t m = orbits.size();
    for (std::size_t target = 1; target <= size_limit; ++target) {
        std::vector<std::size_t> chosen;
        std::optional<VectorConfiguration> found;
        auto rec = [&](auto&& self, std::size_t start, std::size_t have) -> void {
            if (found) return;
            if (have == target) {
                std::vector<std::pair<long, long>> pts;
                for (std::size_t o : chosen) pts.insert(pts.end(), orbits[o].begin(), orbits[o].end());
                VectorConfiguration s = half_of_symmetric(pts);
                if (!has_lvp(s)) found = s;
                return;
            }
            for (std::size_t o = start; o < m; ++o) {
                std::size_t add = orbits[o].size() / 2;
                if (have + add > target) continue;
                chosen.push_back(o);
                self(self, o + 1, have + add);
                chosen.pop_back();
            }
        };
        rec(rec, 0, 0);
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace lonely::zono
