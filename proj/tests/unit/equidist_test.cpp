#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fpcurves/equidist.hpp"
#include "fpcurves/kloosterman.hpp"
#include "oracles.hpp"

using std::numbers::pi;

namespace {

std::vector<double> quantile_sample(int n) {
    std::vector<double> s;
    for (int i = 1; i <= n; ++i) s.push_back(oracle::st_quantile((i - 0.5) / n));
    return s;
}

std::vector<double> vertical_angles(std::uint32_t p) {
    std::vector<double> out;
    for (const auto& s : fpc::vertical_family(p)) out.push_back(s.theta);
    return out;
}

}  // namespace

TEST(SatoTateCdf, Examples) {
    EXPECT_EQ(fpc::sato_tate_cdf(0.0), 0.0);
    EXPECT_NEAR(fpc::sato_tate_cdf(pi), 1.0, 1e-15);
    EXPECT_NEAR(fpc::sato_tate_cdf(pi / 2), 0.5, 1e-15);
    EXPECT_THROW(fpc::sato_tate_cdf(-0.1), std::domain_error);
    EXPECT_THROW(fpc::sato_tate_cdf(3.2), std::domain_error);
}

TEST(SatoTateCdf, MonotoneWithSineSquaredDensity) {
    const int n = 10000;
    double prev = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double a = pi * (i - 1) / n, b = pi * i / n;
        const double fb = fpc::sato_tate_cdf(b);
        ASSERT_GE(fb, prev);
        const double mid = 0.5 * (a + b);
        const double slope = (fb - fpc::sato_tate_cdf(a)) / (b - a);
        ASSERT_NEAR(slope, 2 / pi * std::sin(mid) * std::sin(mid), 1e-6);
        prev = fb;
    }
}

TEST(SatoTateQuantile, InvertsCdf) {
    for (int k = 0; k <= 1000; ++k) {
        const double q = k / 1000.0;
        const double t = fpc::sato_tate_quantile(q);
        ASSERT_NEAR(fpc::sato_tate_cdf(t), q, 1e-11);
        // the density vanishes at both ends, so the inverse is only well conditioned inside
        if (k > 0 && k < 1000) ASSERT_NEAR(t, oracle::st_quantile(q), 1e-9);
    }
    EXPECT_THROW(fpc::sato_tate_quantile(1.5), std::domain_error);
}

TEST(KsStatistic, Examples) {
    EXPECT_NEAR(fpc::ks_statistic(std::vector<double>{pi / 2}), 0.5, 1e-15);
    EXPECT_NEAR(fpc::ks_statistic(quantile_sample(10)), 0.05, 1e-12);
    EXPECT_NEAR(fpc::ks_statistic(std::vector<double>(7, 0.0)), 1.0, 1e-15);
    EXPECT_THROW(fpc::ks_statistic(std::vector<double>{}), std::invalid_argument);
    EXPECT_THROW(fpc::ks_statistic(std::vector<double>{1.0, 4.0}), std::domain_error);
}

TEST(KsStatistic, PermutationInvariantAndMatchesGridOracle) {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> angle(0.0, pi);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 100;
        std::vector<double> s(n);
        for (auto& v : s) v = angle(rng);
        if (trial % 5 == 0) s[0] = pi;  // endpoints
        if (trial % 7 == 0) s[n - 1] = 0.0;
        const double d = fpc::ks_statistic(s);
        ASSERT_GE(d, 0.0);
        ASSERT_LE(d, 1.0);
        ASSERT_NEAR(d, oracle::ks_grid(s, 2000), 1e-9);
        std::shuffle(s.begin(), s.end(), rng);
        ASSERT_EQ(fpc::ks_statistic(s), d);
    }
}

TEST(ChiSquare, BinEdgesAreEqualProbability) {
    for (int bins : {2, 3, 10, 64, 100}) {
        const auto edges = fpc::sato_tate_bin_edges(bins);
        ASSERT_EQ(edges.size(), static_cast<std::size_t>(bins + 1));
        EXPECT_EQ(edges.front(), 0.0);
        EXPECT_EQ(edges.back(), pi);
        for (int k = 0; k <= bins; ++k) ASSERT_NEAR(fpc::sato_tate_cdf(edges[k]), static_cast<double>(k) / bins, 1e-10);
    }
}

TEST(ChiSquare, OnePerBinGivesZero) {
    // one sample at the centre of each of N bins; below the checked floor, so use the raw statistic
    const int n = 40;
    const auto s = quantile_sample(n);
    const auto counts = fpc::bin_counts(s, fpc::sato_tate_bin_edges(n));
    EXPECT_TRUE(std::all_of(counts.begin(), counts.end(), [](auto c) { return c == 1; }));
    EXPECT_EQ(fpc::chi_square_statistic(counts), 0.0);

    // the checked entry point with five per bin
    std::vector<double> five;
    for (double v : quantile_sample(n)) five.insert(five.end(), 5, v);
    const auto r = fpc::chi_square(five, n);
    EXPECT_EQ(r.statistic, 0.0);
    EXPECT_EQ(r.dof, n - 1);
}

TEST(ChiSquare, AllInOneBin) {
    for (int n : {10, 37, 200}) {
        const auto r = fpc::chi_square(std::vector<double>(n, 0.1), 2);
        EXPECT_NEAR(r.statistic, n, 1e-9);
        EXPECT_EQ(r.observed, (std::vector<std::uint64_t>{static_cast<std::uint64_t>(n), 0}));
    }
}

TEST(ChiSquare, PiFallsInLastBin) {
    const auto counts = fpc::bin_counts(std::vector<double>{pi, 0.0}, fpc::sato_tate_bin_edges(4));
    EXPECT_EQ(counts, (std::vector<std::uint64_t>{1, 0, 0, 1}));
}

TEST(ChiSquare, FloorAndBinsValidated) {
    try {
        fpc::chi_square(std::vector<double>(50, 1.0), 64);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("320"), std::string::npos) << e.what();
    }
    EXPECT_THROW(fpc::chi_square(std::vector<double>(50, 1.0), 1), std::invalid_argument);
    EXPECT_EQ(fpc::chi_square_min_samples(64), 320u);
}

TEST(ChiSquare, VerticalFamilyIsOfOrderDof) {
    const auto r = fpc::chi_square(vertical_angles(10007), 64);
    EXPECT_EQ(r.dof, 63);
    EXPECT_LT(r.statistic, 3.0 * 63);
}

TEST(Moments, VerticalFamilies) {
    for (std::uint32_t p : {1009u, 10007u}) {
        const auto angles = vertical_angles(p);
        const auto m = fpc::cosine_moments(angles);
        const double tol = 5.0 / std::sqrt(static_cast<double>(angles.size()));
        EXPECT_LE(std::abs(m.mean_cos - m.expected_cos), tol) << p;
        EXPECT_LE(std::abs(m.mean_cos2 - m.expected_cos2), tol) << p;
    }
}

TEST(Moments, ExactForConstantSample) {
    const auto m = fpc::cosine_moments(std::vector<double>{0.0, pi});
    EXPECT_NEAR(m.mean_cos, 0.0, 1e-15);
    EXPECT_NEAR(m.mean_cos2, 1.0, 1e-15);
}

TEST(CompareFamilies, IdenticalInputsGiveUnitRatio) {
    const auto angles = vertical_angles(1009);
    const auto g = fpc::goodness_of_fit("vertical p=1009", angles, 16);
    EXPECT_EQ(g.sample_size, angles.size());
    EXPECT_NEAR(g.ks_normalized, g.ks * std::sqrt(1008.0), 1e-12);
    const auto c = fpc::compare_families(g, g);
    EXPECT_EQ(c.ratio, 1.0);
    EXPECT_EQ(c.verdict.find("sample too small"), std::string::npos);
}

TEST(CompareFamilies, SmallSampleFlagged) {
    const auto v = fpc::goodness_of_fit("vertical", vertical_angles(1009), 16);
    const auto h = fpc::goodness_of_fit("horizontal", quantile_sample(20), 2);
    EXPECT_NE(fpc::compare_families(v, h).verdict.find("sample too small"), std::string::npos);
}

TEST(ThinEvenly, PicksFloorIndices) {
    const std::vector<double> v{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    EXPECT_EQ(fpc::thin_evenly(v, 5), (std::vector<double>{0, 2, 4, 6, 8}));
    EXPECT_EQ(fpc::thin_evenly(v, 3), (std::vector<double>{0, 3, 6}));
    EXPECT_EQ(fpc::thin_evenly(v, 10), v);
    EXPECT_EQ(fpc::thin_evenly(v, 20), v);
}
