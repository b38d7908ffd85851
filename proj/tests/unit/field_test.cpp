#include <gtest/gtest.h>

#include <random>

#include "fpcurves/field.hpp"
#include "oracles.hpp"

using fpc::FieldPoly;
using fpc::PrimeField;
using fpc::Residue;

TEST(PrimeField, QuadraticCharacterTableMod5) {
    const PrimeField f(5);
    const auto qr = f.qr_table();
    ASSERT_EQ(qr.size(), 5u);
    EXPECT_EQ(qr[0], 0);
    EXPECT_EQ(qr[1], 1);
    EXPECT_EQ(qr[2], -1);
    EXPECT_EQ(qr[3], -1);
    EXPECT_EQ(qr[4], 1);
}

TEST(PrimeField, InverseTableMod3) {
    const PrimeField f(3);
    EXPECT_EQ(f.inv(1), 1u);
    EXPECT_EQ(f.inv(2), 2u);
}

TEST(PrimeField, RejectsBadModuli) {
    EXPECT_THROW(PrimeField(9), std::invalid_argument);
    EXPECT_THROW(PrimeField(2), std::invalid_argument);
    EXPECT_THROW(PrimeField(4), std::invalid_argument);
    EXPECT_THROW(PrimeField(1), std::invalid_argument);
    EXPECT_THROW(PrimeField(-7), std::invalid_argument);
    try {
        PrimeField bad(91);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("91"), std::string::npos);
    }
}

TEST(PrimeField, TableInvariants) {
    for (std::uint32_t p : fpc::primes_in_range(3, 200)) {
        const PrimeField f(p);
        int plus = 0;
        for (Residue a = 1; a < p; ++a) {
            EXPECT_EQ(static_cast<std::uint64_t>(f.inv(a)) * a % p, 1u) << "p=" << p << " a=" << a;
            plus += f.legendre(a) == 1;
        }
        EXPECT_EQ(plus, static_cast<int>((p - 1) / 2));
    }
}

TEST(Legendre, Examples) {
    const PrimeField f(7);
    EXPECT_EQ(f.legendre(0), 0);
    EXPECT_EQ(f.legendre(4), 1);
    EXPECT_EQ(f.legendre(3), -1);
}

TEST(Legendre, MatchesEulerCriterionAndSumsToZero) {
    for (std::uint32_t p : fpc::primes_in_range(3, 200)) {
        const PrimeField f(p);
        int sum = 0;
        for (Residue a = 0; a < p; ++a) {
            ASSERT_EQ(f.legendre(a), oracle::euler_legendre(a, p)) << "p=" << p << " a=" << a;
            sum += f.legendre(a);
        }
        EXPECT_EQ(sum, 0) << "p=" << p;
    }
}

TEST(Legendre, Multiplicative) {
    for (std::uint32_t p : fpc::primes_in_range(3, 100)) {
        const PrimeField f(p);
        for (Residue a = 1; a < p; ++a)
            for (Residue b = 1; b < p; ++b) ASSERT_EQ(f.legendre(f.mul(a, b)), f.legendre(a) * f.legendre(b));
    }
}

TEST(Horner, Examples) {
    EXPECT_EQ(fpc::horner_eval(FieldPoly({1, 0, 1, 0}), 2, PrimeField(3)), 1u);
    EXPECT_EQ(fpc::horner_eval(FieldPoly({1, 0, 0, 0, 0, 0}), 0, PrimeField(13)), 0u);
    EXPECT_EQ(fpc::horner_eval(FieldPoly({1, 0, 1, 0, 1, 2}), 1, PrimeField(3)), 2u);
}

TEST(Horner, AgreesWithPowerSummation) {
    std::mt19937_64 rng(20240611);
    const auto primes = fpc::primes_in_range(3, 1000);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint32_t p = primes[rng() % primes.size()];
        const PrimeField f(p);
        std::vector<Residue> c(1 + rng() % 10);
        for (auto& v : c) v = static_cast<Residue>(rng() % p);
        const Residue x = static_cast<Residue>(rng() % p);
        ASSERT_EQ(fpc::horner_eval(FieldPoly(c), x, f), oracle::naive_eval(c, x, p));
    }
}

TEST(PolyGcd, Examples) {
    const PrimeField f5(5);
    const FieldPoly g({2, 3, 1});  // 2x^2 + 3x + 1
    EXPECT_EQ(fpc::poly_gcd(g, g, f5), fpc::make_monic(g, f5));

    // gcd(x^2 - 1, x - 1) = x + 4 over F_5
    EXPECT_EQ(fpc::poly_gcd(FieldPoly({1, 0, 4}), FieldPoly({1, 4}), f5), FieldPoly({1, 4}));

    // f = x^5 + x^3 + x + 2, f' = 5x^4 + 3x^2 + 1 = 2x^4 + 1 over F_3
    const PrimeField f3(3);
    const FieldPoly f({1, 0, 1, 0, 1, 2});
    EXPECT_EQ(fpc::derivative(f, f3), FieldPoly({2, 0, 0, 0, 1}));
    EXPECT_EQ(fpc::poly_gcd(f, FieldPoly({2, 0, 0, 0, 1}), f3), FieldPoly({1}));
}

TEST(PolyGcd, ZeroHandling) {
    const PrimeField f7(7);
    EXPECT_THROW(fpc::poly_gcd(FieldPoly(), FieldPoly(), f7), std::invalid_argument);
    EXPECT_EQ(fpc::poly_gcd(FieldPoly({3, 6}), FieldPoly(), f7), FieldPoly({1, 2}));
}

TEST(Squarefree, Examples) {
    EXPECT_TRUE(fpc::is_squarefree(FieldPoly({1, 0, 1, 0, 1, 2}), PrimeField(3)));
    EXPECT_FALSE(fpc::is_squarefree(FieldPoly({1, 3, 1}), PrimeField(5)));  // (x - 1)^2 = x^2 - 2x + 1
    EXPECT_FALSE(fpc::is_squarefree(FieldPoly({1, 0, 0, 0, 0, 0}), PrimeField(5)));  // derivative vanishes
}

TEST(Squarefree, RejectsConstants) {
    const PrimeField f5(5);
    EXPECT_THROW(fpc::is_squarefree(FieldPoly({3}), f5), std::invalid_argument);
    EXPECT_THROW(fpc::is_squarefree(FieldPoly(), f5), std::invalid_argument);
}

TEST(Squarefree, AgreesWithTrialDivisionOracle) {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        const PrimeField f(p);
        const auto irreducibles = oracle::small_irreducibles(p);
        for (int trial = 0; trial < 3000; ++trial) {
            const int degree = 1 + static_cast<int>(rng() % 7);
            std::vector<Residue> c(degree + 1);
            for (auto& v : c) v = static_cast<Residue>(rng() % p);
            if (c[0] == 0) c[0] = 1;
            // every third trial plants a repeated linear factor: f = h * (x - r)^2
            if (trial % 3 == 0 && degree >= 3) {
                oracle::Poly h(static_cast<std::size_t>(degree - 1));
                for (auto& v : h) v = static_cast<std::int64_t>(rng() % p);
                h.back() = 1 + static_cast<std::int64_t>(rng() % (p - 1));
                const std::int64_t r = static_cast<std::int64_t>(rng() % p);
                const oracle::Poly linear{(p - r) % p, 1};
                const oracle::Poly prod = oracle::mul(h, oracle::mul(linear, linear, p), p);
                c.assign(prod.rbegin(), prod.rend());
            }
            ASSERT_EQ(fpc::is_squarefree(FieldPoly(c), f), oracle::squarefree_by_trial_division(c, p, irreducibles))
                << "p=" << p << " trial=" << trial;
        }
    }
}

TEST(Squarefree, ExhaustiveMonicQuinticsOverF3) {
    const PrimeField f(3);
    const auto irreducibles = oracle::small_irreducibles(3);
    for (int idx = 0; idx < 243; ++idx) {
        std::vector<Residue> c{1};
        int rest = idx;
        for (int i = 0; i < 5; ++i) {
            c.push_back(static_cast<Residue>(rest % 3));
            rest /= 3;
        }
        ASSERT_EQ(fpc::is_squarefree(FieldPoly(c), f), oracle::squarefree_by_trial_division(c, 3, irreducibles));
    }
}

TEST(PrimesInRange, Examples) {
    EXPECT_EQ(fpc::primes_in_range(3, 13), (std::vector<std::uint32_t>{3, 5, 7, 11, 13}));
    EXPECT_TRUE(fpc::primes_in_range(14, 16).empty());
    EXPECT_EQ(fpc::primes_in_range(2, 100).size(), 25u);
    EXPECT_TRUE(fpc::primes_in_range(20, 10).empty());
}

TEST(PrimesInRange, MatchesTrialDivision) {
    const auto primes = fpc::primes_in_range(2, 5000);
    std::vector<std::uint32_t> expected;
    for (std::uint32_t n = 2; n <= 5000; ++n)
        if (oracle::trial_division_prime(n)) expected.push_back(n);
    EXPECT_EQ(primes, expected);
}
