#pragma once

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"
#include "polytrope.hpp"
#include "rational.hpp"
#include "runner.hpp"
#include "stern_brocot.hpp"

namespace lonely {

using RoundVector = std::vector<long>;

enum class Outcome { Less, Equal, Greater };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Less: return "Less";
        case Outcome::Equal: return "Equal";
        case Outcome::Greater: return "Greater";
    }
    return "?";
}

// Outcome compares the shifted gap of v with the queried gamma.
struct Decision {
    Outcome outcome = Outcome::Greater;
    // Less: a point outside every closed certificate. Equal: the point that forced closed certificates.
    std::optional<QuotientPoint> point;
    std::optional<ShiftVector> shift;
    std::vector<RoundVector> log;          // certificates in the order they were used (if requested)
    std::size_t closed_from = 0;           // log entries from here on are closed certificates
    long iterations = 0;
    long certificates = 0;
};

struct DecideOptions {
    long max_iterations = default_max_iterations();
    bool keep_log = false;

    static long default_max_iterations() {
        if (const char* env = std::getenv("LONELY_MAX_ITER")) {
            try {
                long n = std::stol(env);
                if (n > 0) return n;
            } catch (const std::exception&) {
            }
        }
        return 2'000'000'000L;
    }
};

namespace detail {

template <class F>
struct Setup {
    using T = typename F::value_type;
    const F& field;
    const VelocityVector& v;
    T gamma, zero, one;
    std::vector<T> step, rad;  // 1/v_i and gamma/v_i
    std::vector<std::vector<BasicInterval<T>>> lanes;

    Setup(const F& f, const VelocityVector& vel, const Rational& g)
        : field(f), v(vel), gamma(f.from(g)), zero(f.from(Rational(0))), one(f.from(Rational(1))), lanes(vel.size()) {
        for (long vi : vel) {
            step.push_back(f.from(Rational(1, vi)));
            rad.push_back(f.from(g / Rational(vi)));
        }
    }
};

template <class F>
BasicPolytrope<typename F::value_type> initial_domain(const F& field, const VelocityVector& v) {
    using T = typename F::value_type;
    std::size_t n = v.size();
    BasicPolytrope<T> p(n);
    if (n == 1) {
        p.close();
        return p;
    }
    std::vector<T> bound(n);
    for (std::size_t j = 1; j < n; ++j) bound[j] = field.from(Rational(1, v[j]));
    bound[1] = field.from(Rational(BigInt(1), big_lcm(BigInt(v[0]), BigInt(v[1]))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) p.at(i, j) = j == 0 ? T{} : bound[j];
    p.close();
    return p;
}

template <class F>
BasicPolytrope<typename F::value_type> certificate(const Setup<F>& s, const RoundVector& k) {
    using T = typename F::value_type;
    std::size_t n = s.v.size();
    std::vector<T> hi(n), lo(n);
    for (std::size_t i = 0; i < n; ++i) {
        hi[i] = (k[i] + 1) * s.step[i] - s.rad[i];
        lo[i] = k[i] * s.step[i] + s.rad[i];
    }
    BasicPolytrope<T> p(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) p.at(i, j) = hi[i] - lo[j];
    p.close();
    return p;
}

template <class F>
std::optional<RoundVector> find_certificate(Setup<F>& s, const std::vector<typename F::value_type>& x, Mode mode) {
    using T = typename F::value_type;
    std::size_t n = s.v.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto& lane = s.lanes[i];
        lane.clear();
        long m_lo = s.field.floor_mul(s.v[i], s.zero - x[i]) - 1;
        long m_hi = s.field.floor_mul(s.v[i], s.one - x[i]) + 1;
        T c = x[i] + m_lo * s.step[i];
        for (long m = m_lo; m <= m_hi; ++m, c += s.step[i]) lane.push_back({c - s.rad[i], c + s.rad[i]});
    }
    auto cover = cover_lanes(s.lanes, s.zero, s.one, mode == Mode::Open ? Boundary::Closed : Boundary::Open);
    if (cover.covered) return std::nullopt;
    const auto& g = *cover.longest_gap;
    T t = g.lo == g.hi ? g.lo : exact_div(g.lo + g.hi, 2);
    RoundVector k(n);
    for (std::size_t i = 0; i < n; ++i) k[i] = s.field.floor_mul(s.v[i], t - x[i]);
    return k;
}

template <class F>
ShiftVector shift_from_point(const F& field, const VelocityVector& v, const std::vector<typename F::value_type>& x) {
    std::vector<Rational> s;
    for (std::size_t i = 0; i < v.size(); ++i) s.push_back(-(Rational(v[i]) * field.to_rational(x[i])));
    return ShiftVector(std::move(s));
}

template <class F>
Decision decide(const F& field, const VelocityVector& v, const Rational& gamma, const DecideOptions& opt) {
    using T = typename F::value_type;
    using P = BasicPolytrope<T>;
    Setup<F> s(field, v, gamma);
    Decision d;
    std::vector<P> work{initial_domain(field, v)};
    Mode mode = Mode::Open;
    auto to_point = [&](const std::vector<T>& x) {
        QuotientPoint q;
        for (const auto& c : x) q.push_back(field.to_rational(c));
        return q;
    };
    while (!work.empty()) {
        if (++d.iterations > opt.max_iterations)
            throw Diverged("decider exceeded " + std::to_string(opt.max_iterations) + " iterations");
        P y = std::move(work.back());
        work.pop_back();
        if (mode == Mode::Closed && !y.full_dimensional()) continue;
        std::vector<T> x = interior_point(y);
        std::optional<RoundVector> k = find_certificate(s, x, mode);
        if (!k && mode == Mode::Open) {
            k = find_certificate(s, x, Mode::Closed);
            if (k) {
                mode = Mode::Closed;
                d.closed_from = d.log.size();
                d.point = to_point(x);
                d.shift = shift_from_point(field, v, x);
                std::erase_if(work, [](const P& p) { return !p.full_dimensional(); });
                if (!y.full_dimensional()) continue;
            }
        }
        if (!k) {
            d.outcome = Outcome::Less;
            d.point = to_point(x);
            d.shift = shift_from_point(field, v, x);
            return d;
        }
        ++d.certificates;
        if (opt.keep_log) d.log.push_back(*k);
        P t = certificate(s, *k);
        if (y.inside(t, mode == Mode::Open)) continue;
        for (auto& piece : subtract_certificate(y, t, mode)) work.push_back(std::move(piece));
    }
    d.outcome = mode == Mode::Open ? Outcome::Greater : Outcome::Equal;
    return d;
}

// Every value the decider touches lies on this grid: domain and certificate bounds have
// denominators dividing q*lcm(v), barycenters add a factor n and midpoints a factor 2.
inline BigInt decider_grid_scale(const VelocityVector& v, const Rational& gamma) {
    return 2 * BigInt(static_cast<long>(v.size())) * gamma.den() * v.lcm();
}

}  // namespace detail

inline Polytrope initial_domain(const VelocityVector& v) { return detail::initial_domain(RationalField{}, v); }

inline Polytrope certificate_polytrope(const RoundVector& k, const VelocityVector& v, const Rational& gamma) {
    if (k.size() != v.size()) throw DimensionMismatch("round vector length differs from velocity length");
    RationalField f;
    detail::Setup<RationalField> s(f, v, gamma);
    return detail::certificate(s, k);
}

inline std::optional<RoundVector> find_certificate(const QuotientPoint& x, const VelocityVector& v, const Rational& gamma,
                                                   Mode mode) {
    if (x.size() != v.size()) throw DimensionMismatch("point length differs from velocity length");
    RationalField f;
    detail::Setup<RationalField> s(f, v, gamma);
    return detail::find_certificate(s, x, mode);
}

inline Decision decide(const VelocityVector& v, const Rational& gamma, const DecideOptions& opt = {}) {
    if (!(Rational(0) < gamma && gamma < Rational(1, 2))) throw Error("gamma must lie in (0, 1/2)");
    try {
        GridField grid(detail::decider_grid_scale(v, gamma));
        return detail::decide(grid, v, gamma, opt);
    } catch (const OverflowError&) {
        return detail::decide(RationalField{}, v, gamma, opt);
    }
}

// Re-derives a cover from a certificate log alone: every logged certificate is removed
// from every remaining piece. An empty remainder means the log covers the domain.
inline std::size_t replay_cover(const VelocityVector& v, const Rational& gamma, const std::vector<RoundVector>& log,
                                Mode mode) {
    std::vector<Polytrope> work{initial_domain(v)};
    if (mode == Mode::Closed && !work[0].full_dimensional()) work.clear();
    for (const auto& k : log) {
        Polytrope t = certificate_polytrope(k, v, gamma);
        std::vector<Polytrope> next;
        for (const auto& y : work) {
            if (y.inside(t, mode == Mode::Open)) continue;
            if (!intersect(y, t)) {
                next.push_back(y);
                continue;
            }
            for (auto& piece : subtract_certificate(y, t, mode)) next.push_back(std::move(piece));
        }
        work = std::move(next);
    }
    return work.size();
}

inline BigInt default_max_denominator(const VelocityVector& v) {
    BigInt p = v.product();
    return 16 * p * p;
}

struct GapReport {
    SearchResult gap;
    std::optional<ShiftVector> witness;  // shift attaining the gap, in the order of the input v
    long decisions = 0;
};

inline GapReport shifted_gap_report(const VelocityVector& v_in, BigInt max_denominator = 0) {
    VelocityVector v = v_in.normalized();
    GapReport r;
    if (v.size() == 1) {
        r.gap = Rational(1, 2);
        r.witness = ShiftVector::zero(1);
        return r;
    }
    if (max_denominator == 0) max_denominator = default_max_denominator(v);
    SearchStats stats;
    r.gap = stern_brocot_search(
        [&](const Rational& g) {
            Decision d = decide(v, g);
            if (d.outcome == Outcome::Equal) r.witness = d.shift;
            return d.outcome == Outcome::Greater ? Ordering::Greater
                   : d.outcome == Outcome::Less  ? Ordering::Less
                                                 : Ordering::Equal;
        },
        max_denominator, &stats);
    r.decisions = stats.oracle_calls;
    if (!is_exact(r.gap)) r.witness.reset();
    return r;
}

inline SearchResult shifted_gap(const VelocityVector& v, BigInt max_denominator = 0) {
    return shifted_gap_report(v, std::move(max_denominator)).gap;
}

}  // namespace lonely
