#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace lonely {

using BigInt = mpz_class;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// floor(a / b) for b != 0
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool fits_long(const BigInt& a) { return a.fits_slong_p(); }

inline long to_long(const BigInt& a) {
    if (!a.fits_slong_p()) throw OverflowError("integer does not fit in 64 bits: " + a.get_str());
    return a.get_si();
}

inline BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw ParseError("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw ParseError("not an integer: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

// Exact fraction in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I n) : q_(static_cast<long>(n)) {}
    Rational(const BigInt& n) : q_(n) {}
    // unevaluated integer expressions such as a + b would otherwise be ambiguous
    template <class E>
    Rational(const __gmp_expr<mpz_t, E>& e) : q_(BigInt(e)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw Error("zero denominator");
        q_.get_num() = num;
        q_.get_den() = den;
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) {}

    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_bigint(text));
        BigInt num = parse_bigint(text.substr(0, slash));
        std::string_view d = text.substr(slash + 1);
        if (!d.empty() && (d[0] == '-' || d[0] == '+')) throw ParseError("signed denominator: '" + std::string(text) + "'");
        BigInt den = parse_bigint(d);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        return Rational(num, den);
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigInt floor() const { return floor_div(q_.get_num(), q_.get_den()); }
    BigInt ceil() const { return -floor_div(-q_.get_num(), q_.get_den()); }
    // representative in [0, 1)
    Rational frac() const { return *this - Rational(floor()); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    std::string str() const { return q_.get_str(); }

    // Decimal rendering with `digits` significant digits, rounded half away from zero.
    std::string decimal(int digits = 15) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.q_ == 0) throw Error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline std::string Rational::decimal(int digits) const {
    if (q_ == 0) return "0";
    BigInt n = ::abs(q_.get_num());
    BigInt d = q_.get_den();
    // exponent e with 10^e <= n/d < 10^(e+1)
    long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) - static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
    auto pow10 = [](long k) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
        return p;
    };
    auto ge_pow = [&](long k) {  // n/d >= 10^k
        return k >= 0 ? n >= d * pow10(k) : n * pow10(-k) >= d;
    };
    while (ge_pow(e + 1)) ++e;
    while (!ge_pow(e)) --e;
    long shift = digits - 1 - e;  // scaled = round(n/d * 10^shift)
    BigInt num = shift >= 0 ? n * pow10(shift) : n;
    BigInt den = shift >= 0 ? d : d * pow10(-shift);
    BigInt scaled = floor_div(2 * num + den, 2 * den);
    if (scaled >= pow10(digits)) {
        ++e;
        --shift;
        num = shift >= 0 ? n * pow10(shift) : n;
        den = shift >= 0 ? d : d * pow10(-shift);
        scaled = floor_div(2 * num + den, 2 * den);
    }
    std::string s = scaled.get_str();
    std::string out;
    if (shift <= 0) {
        out = s + std::string(static_cast<std::size_t>(-shift), '0');
    } else if (static_cast<std::size_t>(shift) >= s.size()) {
        out = "0." + std::string(static_cast<std::size_t>(shift) - s.size(), '0') + s;
    } else {
        out = s.substr(0, s.size() - shift) + "." + s.substr(s.size() - shift);
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return (sgn(q_) < 0 ? "-" : "") + out;
}

// min over integers z of |q - z|, in [0, 1/2]
inline Rational dist_to_integers(const Rational& q) {
    Rational f = q.frac();
    Rational g = Rational(1) - f;
    return g < f ? g : f;
}

}  // namespace lonely

template <>
struct std::hash<lonely::Rational> {
    std::size_t operator()(const lonely::Rational& r) const {
        return std::hash<std::string>{}(r.str());
    }
};
