#include <gtest/gtest.h>

#include <random>

#include "lonely/lonely.hpp"
#include "oracles.hpp"

using namespace lonely;

namespace {
Rational R(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }
}  // namespace

TEST(RationalTest, StoredInLowestTerms) {
    Rational r = R(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(r.str(), "-3/4");
    EXPECT_EQ(R(4, 2).str(), "2");
}

TEST(RationalTest, ParseAcceptsFractionsAndIntegers) {
    EXPECT_EQ(Rational::parse("15/94"), R(15, 94));
    EXPECT_EQ(Rational::parse("-3"), R(-3));
    EXPECT_EQ(Rational::parse("46/94"), R(23, 47));
}

TEST(RationalTest, ParseRejectsMalformedText) {
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("1/-2"), ParseError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("1/2/3"), ParseError);
}

TEST(RationalTest, FloorAndFracOfNegatives) {
    EXPECT_EQ(R(-1, 3).floor(), -1);
    EXPECT_EQ(R(-1, 3).frac(), R(2, 3));
    EXPECT_EQ(R(7, 2).ceil(), 4);
}

TEST(RationalTest, DecimalRendering) {
    EXPECT_EQ(R(94, 15).decimal(15), "6.26666666666667");
    EXPECT_EQ(R(1, 3).decimal(5), "0.33333");
    EXPECT_EQ(R(1).decimal(), "1");
    EXPECT_EQ(R(-1, 8).decimal(), "-0.125");
    EXPECT_EQ(R(999999, 1000000).decimal(3), "1");
}

TEST(DistToIntegersTest, Examples) {
    EXPECT_EQ(dist_to_integers(R(0)), R(0));
    EXPECT_EQ(dist_to_integers(R(1, 2)), R(1, 2));
    EXPECT_EQ(dist_to_integers(R(72, 94)), R(22, 94));
}

TEST(DistToIntegersTest, PeriodicAndSymmetric) {
    std::mt19937 rng(1);
    for (int i = 0; i < 500; ++i) {
        Rational q = R(long(rng() % 2001) - 1000, long(rng() % 97) + 1);
        Rational d = dist_to_integers(q);
        EXPECT_EQ(d, dist_to_integers(q + R(1)));
        EXPECT_EQ(d, dist_to_integers(-q));
        EXPECT_LE(R(0), d);
        EXPECT_LE(d, R(1, 2));
    }
}

namespace {
auto comparator(const Rational& hidden) {
    return [hidden](const Rational& q) {
        return hidden < q ? Ordering::Less : hidden == q ? Ordering::Equal : Ordering::Greater;
    };
}
}  // namespace

TEST(SternBrocotTest, RecoversKnownRationals) {
    EXPECT_EQ(std::get<Rational>(stern_brocot_search(comparator(R(1, 4)), 100)), R(1, 4));
    EXPECT_EQ(std::get<Rational>(stern_brocot_search(comparator(R(15, 94)), 1000000)), R(15, 94));
}

TEST(SternBrocotTest, SmallCapGivesInterval) {
    auto r = stern_brocot_search(comparator(R(1, 3)), 2);
    ASSERT_FALSE(is_exact(r));
    auto iv = std::get<Interval>(r);
    EXPECT_LT(iv.lo, R(1, 3));
    EXPECT_LT(R(1, 3), iv.hi);
    EXPECT_LE(iv.lo.den(), 2);
    EXPECT_LE(iv.hi.den(), 2);
}

TEST(SternBrocotTest, IrrationalLikeTargetStaysBracketed) {
    // hidden value strictly between 5/17 and every fraction with denominator <= 50 other than it
    Rational hidden = R(5, 17) + R(1, 100000);
    auto r = stern_brocot_search(comparator(hidden), 50);
    ASSERT_FALSE(is_exact(r));
    auto iv = std::get<Interval>(r);
    EXPECT_LT(iv.lo, hidden);
    EXPECT_LT(hidden, iv.hi);
}

TEST(SternBrocotTest, CallCountBoundedByPathLength) {
    for (long q = 3; q <= 60; ++q)
        for (long p = 1; 2 * p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            SearchStats stats;
            auto r = stern_brocot_search(comparator(R(p, q)), q, &stats);
            ASSERT_TRUE(is_exact(r));
            EXPECT_EQ(std::get<Rational>(r), R(p, q));
            EXPECT_LE(stats.oracle_calls, p + q);
        }
}

TEST(SternBrocotTest, DetectsInconsistentOracle) {
    // answers Greater the first time a query is seen and Less afterwards
    std::map<std::string, int> seen;
    auto flaky = [&](const Rational& q) { return seen[q.str()]++ == 0 ? Ordering::Greater : Ordering::Less; };
    EXPECT_THROW(stern_brocot_search(flaky, 10), InconsistentOracle);
}

TEST(SternBrocotTest, RejectsTinyCap) { EXPECT_THROW(stern_brocot_search(comparator(R(1, 3)), 1), Error); }

TEST(IntegerMatrixTest, KernelOfSingleRow) {
    IntegerMatrix m{{1, 2, 3}};
    IntegerMatrix k = integer_kernel_basis(m);
    ASSERT_EQ(k.rows(), 2u);
    EXPECT_TRUE((m * k.transpose()).is_zero());
    EXPECT_EQ(oracle::determinantal_divisor(k, 2), 1);
    // (2,-1,0) and (3,0,-1) are integer combinations of the basis: the stacked matrix keeps divisor 1
    for (auto row : {std::vector<long>{2, -1, 0}, std::vector<long>{3, 0, -1}}) {
        IntegerMatrix s(3, 3);
        for (std::size_t j = 0; j < 3; ++j) s(0, j) = k(0, j), s(1, j) = k(1, j), s(2, j) = row[j];
        EXPECT_EQ(rank(s), 2u);
    }
}

TEST(IntegerMatrixTest, KernelOfIdentityIsEmpty) { EXPECT_EQ(integer_kernel_basis(IntegerMatrix::identity(2)).rows(), 0u); }

TEST(IntegerMatrixTest, KernelWithZeroRow) {
    IntegerMatrix k = integer_kernel_basis(IntegerMatrix{{1, 1}, {0, 0}});
    ASSERT_EQ(k.rows(), 1u);
    EXPECT_EQ(abs(k(0, 0)), 1);
    EXPECT_EQ(k(0, 0), -k(0, 1));
}

TEST(IntegerMatrixTest, RandomKernelsAreSaturatedAndComplete) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> e(-5, 5);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = 1 + rng() % 3, c = r + rng() % 3;
        IntegerMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
        IntegerMatrix k = integer_kernel_basis(m);
        std::size_t rk = rank(m);
        ASSERT_EQ(k.rows(), c - rk);
        EXPECT_TRUE((m * k.transpose()).is_zero());
        if (k.rows() == 0) continue;
        EXPECT_EQ(rank(k), k.rows());
        EXPECT_EQ(oracle::determinantal_divisor(k, k.rows()), 1) << m.str();
    }
}

TEST(IntegerMatrixTest, SmithInvariantsMatchDeterminantalDivisors) {
    IntegerMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto inv = smith_invariants(m);
    ASSERT_EQ(inv.size(), 3u);
    BigInt prod = 1;
    for (std::size_t k = 0; k < 3; ++k) {
        prod *= inv[k];
        EXPECT_EQ(prod, oracle::determinantal_divisor(m, k + 1));
    }
}

TEST(LrProjectionTest, Examples) {
    for (auto v : {std::vector<long>{1, 1}, std::vector<long>{1, 2, 3}, std::vector<long>{2, 3}, std::vector<long>{6, 10, 15}}) {
        std::vector<BigInt> bv(v.begin(), v.end());
        IntegerMatrix p = lr_projection(bv);
        ASSERT_EQ(p.rows(), v.size() - 1);
        EXPECT_TRUE(p.apply(bv) == std::vector<BigInt>(v.size() - 1, BigInt(0)));
        for (const auto& d : smith_invariants(p)) EXPECT_EQ(d, 1);
        EXPECT_EQ(oracle::determinantal_divisor(p, p.rows()), 1);
    }
}

TEST(LrProjectionTest, NonPrimitiveRejected) { EXPECT_THROW(lr_projection({BigInt(2), BigInt(4)}), NonPrimitive); }

TEST(GridTest, OverflowIsAnErrorNotAWrap) {
    GridValue big{std::numeric_limits<long>::max() - 1};
    EXPECT_THROW(big + GridValue{5}, OverflowError);
    EXPECT_THROW(3 * big, OverflowError);
    EXPECT_THROW(exact_div(GridValue{7}, 2), OverflowError);
    GridField f(BigInt(12));
    EXPECT_THROW(f.from(R(1, 5)), OverflowError);
    EXPECT_EQ(f.to_rational(f.from(R(5, 6))), R(5, 6));
    EXPECT_EQ(f.floor_mul(3, f.from(R(-1, 4))), -1);
}
