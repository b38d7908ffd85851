#include <gtest/gtest.h>

#include <random>

#include "fpcurves/curve.hpp"
#include "oracles.hpp"

using fpc::CurveEquation;
using fpc::PrimeField;
using fpc::Residue;

namespace {

// Coefficient vector number `idx` of length n, a_1 most significant.
std::vector<Residue> unrank(std::uint64_t idx, std::size_t n, std::uint32_t p) {
    std::vector<Residue> a(n);
    for (std::size_t i = n; i-- > 0;) {
        a[i] = static_cast<Residue>(idx % p);
        idx /= p;
    }
    return a;
}

std::uint64_t power(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST(CurveEquation, Validation) {
    const PrimeField f5(5);
    EXPECT_THROW(CurveEquation(f5, 0, {}), std::invalid_argument);
    EXPECT_THROW(CurveEquation(f5, 1, {0, 0}), std::invalid_argument);
    EXPECT_THROW(CurveEquation(f5, 1, {0, 5, 0}), std::invalid_argument);
    const CurveEquation c(f5, 1, {0, 0, 1});
    EXPECT_EQ(c.degree(), 3);
    EXPECT_EQ(c.polynomial(), fpc::FieldPoly({1, 0, 0, 1}));
}

TEST(PointCount, Examples) {
    const PrimeField f5(5);
    const auto cusp = fpc::affine_point_count(CurveEquation(f5, 1, {0, 0, 0}));
    EXPECT_EQ(cusp.count, 5u);
    EXPECT_TRUE(cusp.weil_ok);

    const PrimeField f3(3);
    const CurveEquation pointless(f3, 2, {0, 1, 0, 1, 2});
    EXPECT_EQ(fpc::affine_point_count(pointless).count, 0u);
    EXPECT_FALSE(fpc::has_affine_point(pointless));
    EXPECT_TRUE(pointless.is_squarefree());

    EXPECT_EQ(fpc::affine_point_count(CurveEquation(f3, 1, {0, 1, 0})).count, 3u);
}

TEST(PointCount, MatchesPairOracleExhaustively) {
    // every monic f of degree 3 and 5 for p <= 7
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const PrimeField f(p);
        for (int g = 1; g <= 2; ++g) {
            const std::size_t n = 2 * g + 1;
            const std::uint64_t total = power(p, n);
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                const auto a = unrank(idx, n, p);
                const CurveEquation c(f, g, a);
                const auto r = fpc::affine_point_count(c);
                ASSERT_EQ(r.count, oracle::pair_count(oracle::monic(a), p)) << "p=" << p << " idx=" << idx;
                ASSERT_EQ(fpc::has_affine_point(c), r.count > 0);
            }
        }
    }
}

TEST(PointCount, WeilBoundExhaustiveGenusOne) {
    for (std::uint32_t p : fpc::primes_in_range(3, 13)) {
        const PrimeField f(p);
        for (std::uint64_t idx = 0; idx < power(p, 3); ++idx) {
            const CurveEquation c(f, 1, unrank(idx, 3, p));
            if (!c.is_squarefree()) continue;
            const auto r = fpc::affine_point_count(c);
            const std::int64_t dev = static_cast<std::int64_t>(r.count) - p;
            ASSERT_TRUE(r.weil_ok);
            ASSERT_LE(dev * dev, 4 * static_cast<std::int64_t>(p));
        }
    }
}

TEST(PointCount, WeilBoundSampled) {
    std::mt19937_64 rng(99);
    const auto primes = fpc::primes_in_range(3, 400);
    int checked = 0;
    while (checked < 3000) {
        const std::uint32_t p = primes[rng() % primes.size()];
        const int g = 1 + static_cast<int>(rng() % 4);
        const PrimeField f(p);
        std::vector<Residue> a(2 * g + 1);
        for (auto& v : a) v = static_cast<Residue>(rng() % p);
        const CurveEquation c(f, g, a);
        if (!c.is_squarefree()) continue;
        const auto r = fpc::affine_point_count(c);
        ASSERT_TRUE(r.weil_ok) << "p=" << p << " g=" << g << " count=" << r.count;
        ASSERT_LE(r.count, 2u * p);
        ++checked;
    }
}

TEST(PointCount, TranslationInvariant) {
    // f(x + t) has the same number of points as f(x)
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint32_t p = std::vector<std::uint32_t>{5, 7, 11, 13}[rng() % 4];
        const int g = 1 + static_cast<int>(rng() % 3);
        const PrimeField f(p);
        std::vector<Residue> a(2 * g + 1);
        for (auto& v : a) v = static_cast<Residue>(rng() % p);
        const Residue t = static_cast<Residue>(rng() % p);
        const CurveEquation c(f, g, a);

        // shifted values via the oracle's naive evaluator
        std::uint64_t shifted = 0;
        for (std::uint64_t x = 0; x < p; ++x) {
            const auto v = oracle::naive_eval(oracle::monic(a), (x + t) % p, p);
            shifted += v == 0 ? 1 : (oracle::euler_legendre(v, p) == 1 ? 2 : 0);
        }
        ASSERT_EQ(fpc::affine_point_count(c).count, shifted);
    }
}

TEST(HasAffinePoint, AgreesWithCount) {
    std::mt19937_64 rng(11);
    const auto primes = fpc::primes_in_range(3, 60);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::uint32_t p = primes[rng() % primes.size()];
        const int g = 1 + static_cast<int>(rng() % 3);
        const PrimeField f(p);
        std::vector<Residue> a(2 * g + 1);
        for (auto& v : a) v = static_cast<Residue>(rng() % p);
        const CurveEquation c(f, g, a);
        const bool has = fpc::affine_point_count(c).count > 0;
        ASSERT_EQ(fpc::has_affine_point(c), has);
        ASSERT_EQ(fpc::has_affine_point(c.coeffs(), f), has);
    }
}

TEST(Thresholds, Weil) {
    EXPECT_EQ(fpc::weil_guarantee_threshold(1), 5u);
    EXPECT_EQ(fpc::weil_guarantee_threshold(2), 17u);
    EXPECT_EQ(fpc::weil_guarantee_threshold(3), 37u);
    EXPECT_EQ(fpc::weil_guarantee_threshold(4), 67u);
    for (int g = 1; g <= 10; ++g) {
        const std::uint32_t t = fpc::weil_guarantee_threshold(g);
        EXPECT_GT(t, 4u * g * g);
        EXPECT_TRUE(oracle::trial_division_prime(t));
        for (std::uint32_t q = 4 * g * g + 1; q < t; ++q) EXPECT_FALSE(oracle::trial_division_prime(q));
    }
    EXPECT_THROW(fpc::weil_guarantee_threshold(0), std::invalid_argument);
}

TEST(Thresholds, Mitkin) {
    EXPECT_EQ(fpc::mitkin_threshold(1), 5u);
    EXPECT_EQ(fpc::mitkin_threshold(2), 17u);
    EXPECT_EQ(fpc::mitkin_threshold(3), 31u);
    EXPECT_EQ(fpc::mitkin_threshold(4), 53u);
    EXPECT_FALSE(fpc::mitkin_threshold(5).has_value());
    EXPECT_THROW(fpc::mitkin_threshold(0), std::invalid_argument);
}

TEST(PointCount, EveryCurveHasPointsBeyondWeilThresholdGenusOne) {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        const PrimeField f(p);
        for (std::uint64_t idx = 0; idx < power(p, 3); ++idx) {
            const CurveEquation c(f, 1, unrank(idx, 3, p));
            if (c.is_squarefree()) ASSERT_TRUE(fpc::has_affine_point(c));
        }
    }
}
