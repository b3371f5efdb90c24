#include <gtest/gtest.h>

#include <random>

#include "lonely/lonely.hpp"
#include "oracles.hpp"

using namespace lonely;

namespace {
Rational R(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

ShiftVector over(std::vector<long> nums, long den) {
    std::vector<Rational> s;
    for (long x : nums) s.push_back(R(x, den));
    return ShiftVector(s);
}

// Parameter point with s_i = -v_i x_i, taking x_i = -s_i / v_i.
QuotientPoint point_from_shift(const VelocityVector& v, const ShiftVector& s) {
    QuotientPoint x;
    for (std::size_t i = 0; i < v.size(); ++i) x.push_back(-s[i] / R(v[i]));
    return x;
}
}  // namespace

TEST(InitialDomainTest, TwoRunnersGiveHalfSegment) {
    Polytrope p = initial_domain({1, 2});
    EXPECT_EQ(p(0, 1) + p(1, 0), R(1, 2));
}

TEST(InitialDomainTest, SecondBoundUsesLcm) {
    Polytrope p = initial_domain({2, 3, 5});
    EXPECT_EQ(p(0, 1), R(1, 6));
    EXPECT_EQ(p(0, 2), R(1, 5));
}

TEST(InitialDomainTest, BoxBoundsForFiveRunners) {
    Polytrope p = initial_domain({1, 2, 3, 4, 5});
    std::vector<Rational> want{R(1, 2), R(1, 3), R(1, 4), R(1, 5)};
    for (std::size_t j = 1; j < 5; ++j) {
        EXPECT_EQ(p(0, j), want[j - 1]);
        EXPECT_EQ(p(j, 0), R(0));
    }
}

TEST(CertificateTest, TwoRunnerBounds) {
    Polytrope t = certificate_polytrope({0, 0}, {1, 2}, R(1, 4));
    EXPECT_EQ(t(0, 1), R(5, 8));
    EXPECT_EQ(t(1, 0), R(1, 8));
}

TEST(CertificateTest, IntegerTimeShiftGivesTheSameRegion) {
    VelocityVector v{1, 2, 3};
    std::mt19937 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        RoundVector k{long(rng() % 3) - 1, long(rng() % 3) - 1, long(rng() % 4) - 1};
        RoundVector shifted = k;
        for (std::size_t i = 0; i < 3; ++i) shifted[i] += v[i];
        EXPECT_EQ(certificate_polytrope(k, v, R(1, 5)), certificate_polytrope(shifted, v, R(1, 5)));
    }
}

TEST(CertificateTest, StaysFullDimensionalNearOneHalf) {
    Polytrope t = certificate_polytrope({0, 1, 2}, {1, 2, 3}, R(1, 2) - R(1, 1000000));
    EXPECT_TRUE(t.full_dimensional());
}

// The defining property: x is in the open certificate polytrope for k exactly when some t puts
// every runner strictly inside round k_i, i.e. v_i (t - x_i) in (k_i + gamma, k_i + 1 - gamma).
TEST(CertificateTest, MembershipMatchesLonelyTime) {
    VelocityVector v{1, 2, 3};
    Rational gamma = R(1, 5);
    std::mt19937 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        RoundVector k{long(rng() % 2) - 1, long(rng() % 3) - 1, long(rng() % 4) - 1};
        QuotientPoint x{R(0), R(long(rng() % 31), 60), R(long(rng() % 21), 60)};
        Polytrope t = certificate_polytrope(k, v, gamma);
        // interval of admissible t for each runner, intersected
        Rational lo(-1000), hi(1000);
        for (std::size_t i = 0; i < 3; ++i) {
            lo = max(lo, x[i] + (R(k[i]) + gamma) / R(v[i]));
            hi = min(hi, x[i] + (R(k[i] + 1) - gamma) / R(v[i]));
        }
        EXPECT_EQ(t.contains(x, true), lo < hi);
    }
}

TEST(FindCertificateTest, SingleRunnerHasFreeTime) {
    auto k = find_certificate({R(0)}, {1}, R(1, 4), Mode::Open);
    ASSERT_TRUE(k);
    EXPECT_EQ(*k, RoundVector{0});
}

TEST(FindCertificateTest, WitnessPointHasNoOpenCertificate) {
    VelocityVector v{1, 2, 3, 4, 5};
    QuotientPoint x = point_from_shift(v, over({0, 46, 38, 47, 72}, 94));
    EXPECT_FALSE(find_certificate(x, v, R(15, 94), Mode::Open));
    auto k = find_certificate(x, v, R(1, 7), Mode::Open);
    ASSERT_TRUE(k);
    EXPECT_TRUE(certificate_polytrope(*k, v, R(1, 7)).contains(x, true));
}

TEST(FindCertificateTest, ReturnedRegionContainsThePoint) {
    VelocityVector v{1, 3, 4, 7};
    Polytrope domain = initial_domain(v);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        // the loop bounds below only hold for points of the starting domain
        QuotientPoint x{R(0)};
        for (int i = 1; i < 4; ++i) x.push_back(R(long(rng() % 51), 50 * v[i]));
        if (!domain.contains(x, false)) continue;
        for (Rational g : {R(1, 10), R(1, 6), R(1, 5)}) {
            auto k = find_certificate(x, v, g, Mode::Open);
            if (k) {
                EXPECT_TRUE(certificate_polytrope(*k, v, g).contains(x, true));
                for (std::size_t i = 0; i < v.size(); ++i) {
                    EXPECT_GE((*k)[i], -1);
                    EXPECT_LE((*k)[i], v[i] - 1);
                }
            }
        }
    }
}

TEST(DecideTest, Examples) {
    EXPECT_EQ(decide({1, 2, 3}, R(1, 5)).outcome, Outcome::Greater);
    EXPECT_EQ(decide({1, 2, 3}, R(1, 4)).outcome, Outcome::Equal);
    EXPECT_EQ(decide({1, 2, 3}, R(2, 7)).outcome, Outcome::Less);
}

TEST(DecideTest, LessCarriesAVerifyingWitness) {
    VelocityVector v{1, 2, 3, 4, 5};
    Decision d = decide(v, R(1, 6));
    ASSERT_EQ(d.outcome, Outcome::Less);
    ASSERT_TRUE(d.shift);
    EXPECT_TRUE(verify_gap_upper_bound(v, *d.shift, R(1, 6)));
    EXPECT_LE(gamma_at(v, *d.shift), R(1, 6));
}

TEST(DecideTest, EqualWitnessAttainsGamma) {
    VelocityVector v{1, 2, 3, 4};
    Decision d = decide(v, R(1, 5));
    ASSERT_EQ(d.outcome, Outcome::Equal);
    ASSERT_TRUE(d.shift);
    EXPECT_EQ(gamma_at(v, *d.shift), R(1, 5));
}

TEST(DecideTest, RejectsGammaOutsideRange) {
    EXPECT_THROW(decide({1, 2}, R(0)), Error);
    EXPECT_THROW(decide({1, 2}, R(1, 2)), Error);
}

TEST(DecideTest, IterationCapRaisesDiverged) {
    DecideOptions opt;
    opt.max_iterations = 3;
    EXPECT_THROW(decide({1, 2, 3, 4, 5}, R(1, 7), opt), Diverged);
}

TEST(DecideTest, GreaterLogReplaysToEmptyCover) {
    VelocityVector v{1, 2, 3, 4};
    DecideOptions opt;
    opt.keep_log = true;
    Decision d = decide(v, R(1, 6), opt);
    ASSERT_EQ(d.outcome, Outcome::Greater);
    ASSERT_FALSE(d.log.empty());
    EXPECT_EQ(replay_cover(v, R(1, 6), d.log, Mode::Open), 0u);
    EXPECT_GT(replay_cover(v, R(1, 6), {}, Mode::Open), 0u);
    // above the gap no family of open certificates can cover, so the same log must fail there
    EXPECT_GT(replay_cover(v, R(2, 9), d.log, Mode::Open), 0u);
}

TEST(DecideTest, EqualLogReplaysInClosedMode) {
    VelocityVector v{1, 2, 3};
    DecideOptions opt;
    opt.keep_log = true;
    Decision d = decide(v, R(1, 4), opt);
    ASSERT_EQ(d.outcome, Outcome::Equal);
    std::vector<RoundVector> all = d.log;
    EXPECT_EQ(replay_cover(v, R(1, 4), all, Mode::Closed), 0u);
}

TEST(DecideTest, PermutationAndScalingInvariance) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<long> v;
        while (v.size() < 3) {
            long x = 1 + long(rng() % 7);
            if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
        }
        Rational g = R(1 + long(rng() % 5), 5 + long(rng() % 20));
        if (!(g < R(1, 2))) continue;
        Outcome base = decide(VelocityVector(v), g).outcome;
        std::vector<long> perm = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(decide(VelocityVector(perm), g).outcome, base);
        std::vector<long> scaled = v;
        for (auto& x : scaled) x *= 3;
        EXPECT_EQ(shifted_gap(VelocityVector(scaled)), shifted_gap(VelocityVector(v)));
    }
}

TEST(DecideTest, MonotoneInGamma) {
    std::mt19937 rng(5);
    auto rank = [](Outcome o) { return o == Outcome::Greater ? 0 : o == Outcome::Equal ? 1 : 2; };
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<long> v{1 + long(rng() % 3), 4 + long(rng() % 3), 7 + long(rng() % 4)};
        Rational g1 = R(1 + long(rng() % 20), 60), g2 = R(1 + long(rng() % 29), 60);
        if (g2 < g1) std::swap(g1, g2);
        if (g1 == g2) continue;
        EXPECT_LE(rank(decide(VelocityVector(v), g1).outcome), rank(decide(VelocityVector(v), g2).outcome));
    }
}

TEST(ShiftedGapTest, SmallTableValues) {
    EXPECT_EQ(std::get<Rational>(shifted_gap({1})), R(1, 2));
    EXPECT_EQ(std::get<Rational>(shifted_gap({1, 2})), R(1, 3));
    EXPECT_EQ(std::get<Rational>(shifted_gap({1, 2, 3})), R(1, 4));
    EXPECT_EQ(std::get<Rational>(shifted_gap({1, 2, 3, 4})), R(1, 5));
}

TEST(ShiftedGapTest, FiveRunnersBelowBound) {
    GapReport r = shifted_gap_report({1, 2, 3, 4, 5});
    ASSERT_TRUE(is_exact(r.gap));
    EXPECT_EQ(std::get<Rational>(r.gap), R(15, 94));
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(gamma_at({1, 2, 3, 4, 5}, *r.witness), R(15, 94));
}

TEST(ShiftedGapTest, WitnessFollowsInputOrder) {
    VelocityVector v{3, 1, 2};
    GapReport r = shifted_gap_report(v);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(gamma_at(v, *r.witness), R(1, 4));
}

TEST(ShiftedGapTest, NeverAboveUnshiftedGap) {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<long> v{1 + long(rng() % 4), 5 + long(rng() % 4)};
        VelocityVector vv(v);
        auto g = shifted_gap(vv);
        ASSERT_TRUE(is_exact(g));
        EXPECT_LE(std::get<Rational>(g), gamma_at(vv.normalized(), ShiftVector::zero(2)));
    }
}

TEST(ShiftedGapTest, TinyCapReturnsBracket) {
    auto g = shifted_gap({1, 2, 3, 4, 5}, BigInt(10));
    ASSERT_FALSE(is_exact(g));
    auto iv = std::get<Interval>(g);
    EXPECT_LT(iv.lo, R(15, 94));
    EXPECT_LT(R(15, 94), iv.hi);
}
