#pragma once

#include <functional>
#include <variant>

#include "errors.hpp"
#include "rational.hpp"

namespace lonely {

// Position of the hidden value relative to a query.
enum class Ordering { Less, Equal, Greater };

struct Interval {
    Rational lo, hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

using SearchResult = std::variant<Rational, Interval>;

inline bool is_exact(const SearchResult& r) { return std::holds_alternative<Rational>(r); }

struct SearchStats {
    long oracle_calls = 0;
};

// Descends the Stern-Brocot tree below the fractions 0/1 and 1/2.
template <class Oracle>
SearchResult stern_brocot_search(Oracle&& oracle, const BigInt& max_denominator, SearchStats* stats = nullptr) {
    if (max_denominator < 2) throw Error("max_denominator must be at least 2");
    BigInt lp = 0, lq = 1, hp = 1, hq = 2;
    bool lo_queried = false, hi_queried = false;
    auto ask = [&](const Rational& q) {
        if (stats) ++stats->oracle_calls;
        return oracle(q);
    };
    while (true) {
        BigInt mp = lp + hp, mq = lq + hq;
        if (mq > max_denominator) break;
        Rational m(mp, mq);
        switch (ask(m)) {
            case Ordering::Equal:
                return m;
            case Ordering::Greater:
                lp = mp, lq = mq, lo_queried = true;
                break;
            case Ordering::Less:
                hp = mp, hq = mq, hi_queried = true;
                break;
        }
    }
    // Re-ask the bracketing answers: a changed answer means the oracle is not a fixed monotone comparison.
    Rational lo(lp, lq), hi(hp, hq);
    if (lo_queried && ask(lo) != Ordering::Greater)
        throw InconsistentOracle("oracle changed its answer at " + lo.str());
    if (hi_queried && ask(hi) != Ordering::Less)
        throw InconsistentOracle("oracle changed its answer at " + hi.str());
    return Interval{lo, hi};
}

}  // namespace lonely
