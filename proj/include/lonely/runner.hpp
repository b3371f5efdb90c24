#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"
#include "rational.hpp"

namespace lonely {

class VelocityVector {
public:
    VelocityVector() = default;
    VelocityVector(std::initializer_list<long> v) : v_(v) { check(); }
    explicit VelocityVector(std::vector<long> v) : v_(std::move(v)) { check(); }

    std::size_t size() const { return v_.size(); }
    long operator[](std::size_t i) const { return v_[i]; }
    const std::vector<long>& values() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    long gcd() const {
        long g = 0;
        for (long x : v_) g = std::gcd(g, x);
        return g;
    }
    VelocityVector normalized() const {
        long g = gcd();
        std::vector<long> w(v_);
        for (auto& x : w) x /= g;
        return VelocityVector(std::move(w));
    }
    BigInt lcm() const {
        BigInt l = 1;
        for (long x : v_) l = big_lcm(l, BigInt(x));
        return l;
    }
    BigInt product() const {
        BigInt p = 1;
        for (long x : v_) p *= x;
        return p;
    }
    long sum() const { return std::accumulate(v_.begin(), v_.end(), 0L); }
    std::vector<BigInt> big() const { return {v_.begin(), v_.end()}; }

    std::string str(const char* sep = " ") const {
        std::string s;
        for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? sep : "") + std::to_string(v_[i]);
        return s;
    }

    friend bool operator==(const VelocityVector&, const VelocityVector&) = default;
    friend auto operator<=>(const VelocityVector&, const VelocityVector&) = default;

private:
    void check() const {
        if (v_.empty()) throw Error("velocity vector must be nonempty");
        for (long x : v_)
            if (x <= 0) throw Error("velocities must be positive integers");
    }
    std::vector<long> v_;
};

class ShiftVector {
public:
    ShiftVector() = default;
    explicit ShiftVector(std::vector<Rational> s) : s_(std::move(s)) {
        for (auto& x : s_) x = x.frac();
    }
    static ShiftVector zero(std::size_t n) { return ShiftVector(std::vector<Rational>(n)); }

    std::size_t size() const { return s_.size(); }
    const Rational& operator[](std::size_t i) const { return s_[i]; }
    const std::vector<Rational>& values() const { return s_; }

    std::string str(const char* sep = " ") const {
        std::string out;
        for (std::size_t i = 0; i < s_.size(); ++i) out += (i ? sep : "") + s_[i].str();
        return out;
    }
    friend bool operator==(const ShiftVector&, const ShiftVector&) = default;

private:
    std::vector<Rational> s_;
};

template <class T>
struct BasicInterval {
    T lo, hi;
    friend bool operator==(const BasicInterval&, const BasicInterval&) = default;
};

using ClosedInterval = BasicInterval<Rational>;

// Whether the intervals fed to a cover are closed [lo,hi] or open (lo,hi).
enum class Boundary { Closed, Open };

template <class T>
struct BasicCover {
    bool covered = true;
    std::optional<BasicInterval<T>> longest_gap;  // uncovered part of the target, endpoints as limits
};

using CoverResult = BasicCover<Rational>;

// Intervals grouped in lanes; each lane must be sorted by lo. The cover merges the lanes
// with a heap holding one entry per lane and reports the longest uncovered stretch
// (leftmost among equals). With open intervals a single uncovered point is reported as
// a zero-length gap.
template <class T>
BasicCover<T> cover_lanes(const std::vector<std::vector<BasicInterval<T>>>& lanes, const T& a, const T& b,
                          Boundary kind = Boundary::Closed) {
    struct Head {
        const BasicInterval<T>* iv;
        std::size_t lane, idx;
    };
    auto later = [](const Head& x, const Head& y) { return y.iv->lo < x.iv->lo; };
    std::priority_queue<Head, std::vector<Head>, decltype(later)> heap(later);
    for (std::size_t l = 0; l < lanes.size(); ++l)
        if (!lanes[l].empty()) heap.push({&lanes[l][0], l, 0});

    BasicCover<T> out;
    T reach = a;
    bool reach_covered = false;  // closed intervals only: is the point `reach` itself covered
    auto gap = [&](const T& lo, const T& hi) {
        out.covered = false;
        if (!out.longest_gap || out.longest_gap->hi - out.longest_gap->lo < hi - lo) out.longest_gap = BasicInterval<T>{lo, hi};
    };
    while (!heap.empty() && reach <= b) {
        Head h = heap.top();
        heap.pop();
        if (h.idx + 1 < lanes[h.lane].size()) heap.push({&lanes[h.lane][h.idx + 1], h.lane, h.idx + 1});
        const T& lo = h.iv->lo;
        const T& hi = h.iv->hi;
        if (kind == Boundary::Closed) {
            if (lo <= reach) {
                if (reach <= hi) {
                    reach = hi;
                    reach_covered = true;
                }
            } else {
                T end = std::min(lo, b);
                if (reach < end || !reach_covered) gap(reach, end);
                reach = hi;
                reach_covered = true;
            }
        } else {
            if (lo < reach) {
                if (reach < hi) reach = hi;
            } else {
                gap(reach, std::min(lo, b));
                reach = hi;
            }
        }
    }
    if (kind == Boundary::Closed) {
        if (reach < b || (reach == b && !reach_covered)) gap(reach, b);
    } else if (reach <= b) {
        gap(reach, b);
    }
    return out;
}

// Closed intervals, arbitrary order.
inline CoverResult greedy_interval_cover(std::vector<ClosedInterval> intervals, const ClosedInterval& target) {
    for (auto& iv : intervals)
        if (iv.hi < iv.lo) throw Error("interval with hi < lo");
    std::sort(intervals.begin(), intervals.end(), [](const ClosedInterval& x, const ClosedInterval& y) { return x.lo < y.lo; });
    return cover_lanes(std::vector<std::vector<ClosedInterval>>{std::move(intervals)}, target.lo, target.hi, Boundary::Closed);
}

// Times t in [0,1] with dist(s_i + v_i t, Z) <= radius, one sorted lane per runner.
inline std::vector<std::vector<ClosedInterval>> danger_intervals(const VelocityVector& v, const ShiftVector& s,
                                                                 const Rational& radius) {
    if (v.size() != s.size()) throw DimensionMismatch("velocity and shift lengths differ");
    std::vector<std::vector<ClosedInterval>> lanes(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational vi(v[i]);
        // s_i + v_i t = m  <=>  t = (m - s_i)/v_i; m ranges over integers near [s_i, s_i + v_i]
        for (long m = 0; m <= v[i] + 1; ++m) {
            Rational c = (Rational(m) - s[i]) / vi;
            Rational r = radius / vi;
            Rational lo = c - r, hi = c + r;
            if (hi < 0 || lo > 1) continue;
            lanes[i].push_back({lo, hi});
        }
    }
    return lanes;
}

inline bool verify_gap_upper_bound(const VelocityVector& v, const ShiftVector& s, const Rational& gamma) {
    return cover_lanes(danger_intervals(v, s, gamma), Rational(0), Rational(1), Boundary::Closed).covered;
}

inline Rational min_distance_at(const VelocityVector& v, const ShiftVector& s, const Rational& t) {
    Rational best(1);
    for (std::size_t i = 0; i < v.size(); ++i) best = min(best, dist_to_integers(s[i] + Rational(v[i]) * t));
    return best;
}

// sup_t min_i dist(s_i + v_i t, Z): the maximum sits at an apex of one sawtooth or where two of them
// agree, i.e. s_i + v_i t = +-(s_j + v_j t) mod 1.
inline Rational gamma_at(const VelocityVector& v, const ShiftVector& s) {
    if (v.size() != s.size()) throw DimensionMismatch("velocity and shift lengths differ");
    std::vector<Rational> candidates;
    auto solve = [&](long a, const Rational& c) {  // a t = c mod 1, a > 0, t in [0,1)
        Rational base = c.frac();
        for (long m = 0; m < a; ++m) candidates.push_back((base + Rational(m)) / Rational(a));
    };
    Rational half(1, 2);
    for (std::size_t i = 0; i < v.size(); ++i) solve(v[i], half - s[i]);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            long d = v[i] - v[j];
            if (d > 0) solve(d, s[j] - s[i]);
            if (d < 0) solve(-d, s[i] - s[j]);
            solve(v[i] + v[j], -(s[i] + s[j]));
        }
    Rational best(0);
    for (const auto& t : candidates) best = max(best, min_distance_at(v, s, t));
    return best;
}

}  // namespace lonely
