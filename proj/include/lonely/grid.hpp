#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace lonely {

// A rational with a fixed, run-wide denominator; only the numerator is stored.
// All arithmetic is overflow-checked and throws instead of wrapping.
struct GridValue {
    long raw = 0;

    friend GridValue operator+(GridValue a, GridValue b) {
        long r;
        if (__builtin_add_overflow(a.raw, b.raw, &r)) throw OverflowError("grid addition overflow");
        return {r};
    }
    friend GridValue operator-(GridValue a, GridValue b) {
        long r;
        if (__builtin_sub_overflow(a.raw, b.raw, &r)) throw OverflowError("grid subtraction overflow");
        return {r};
    }
    friend GridValue operator-(GridValue a) { return GridValue{} - a; }
    friend GridValue operator*(long k, GridValue a) {
        long r;
        if (__builtin_mul_overflow(k, a.raw, &r)) throw OverflowError("grid multiplication overflow");
        return {r};
    }
    GridValue& operator+=(GridValue o) { return *this = *this + o; }
    GridValue& operator-=(GridValue o) { return *this = *this - o; }
    friend bool operator==(GridValue, GridValue) = default;
    friend auto operator<=>(GridValue, GridValue) = default;
};

inline GridValue exact_div(GridValue a, long k) {
    if (a.raw % k != 0) throw OverflowError("grid value not divisible by " + std::to_string(k));
    return {a.raw / k};
}

inline Rational exact_div(const Rational& a, long k) { return a / Rational(k); }

inline long floor_div_long(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Arithmetic context for the grid 1/scale * Z.
class GridField {
public:
    using value_type = GridValue;

    explicit GridField(const BigInt& scale) {
        // keep headroom so that sums of a few hundred bounded values stay representable
        if (scale <= 0 || scale > BigInt("1000000000000000")) throw OverflowError("grid scale too large: " + scale.get_str());
        scale_ = scale.get_si();
    }

    long scale() const { return scale_; }

    GridValue from(const Rational& r) const {
        BigInt n = r.num() * scale_;
        if (n % r.den() != 0) throw OverflowError("value " + r.str() + " is off the grid");
        BigInt q = n / r.den();
        if (!q.fits_slong_p()) throw OverflowError("grid value overflow");
        return {q.get_si()};
    }
    Rational to_rational(GridValue g) const { return Rational(BigInt(g.raw), BigInt(scale_)); }

    // floor(k * x)
    long floor_mul(long k, GridValue x) const { return floor_div_long((k * x).raw, scale_); }

private:
    long scale_ = 1;
};

class RationalField {
public:
    using value_type = Rational;
    const Rational& from(const Rational& r) const { return r; }
    const Rational& to_rational(const Rational& r) const { return r; }
    long floor_mul(long k, const Rational& x) const { return to_long((Rational(k) * x).floor()); }
};

}  // namespace lonely
