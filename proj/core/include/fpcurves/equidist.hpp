#ifndef FPCURVES_EQUIDIST_HPP
#define FPCURVES_EQUIDIST_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fpc {

/// Sato-Tate distribution function, the integral of (2/pi) sin^2 t over [0, theta]:
/// (theta - sin(theta) cos(theta)) / pi. Throws std::domain_error outside [0, pi].
double sato_tate_cdf(double theta);

/// Inverse of sato_tate_cdf by bisection on [0, pi] to a bracket width of 1e-12.
/// Throws std::domain_error for q outside [0, 1].
double sato_tate_quantile(double q);

/// Kolmogorov-Smirnov distance between the sample and the Sato-Tate law,
/// max_i max(i/N - F(theta_(i)), F(theta_(i)) - (i-1)/N) over the sorted sample.
/// Input order does not matter. Throws std::invalid_argument on an empty sample
/// and std::domain_error for angles outside [0, pi].
double ks_statistic(std::span<const double> angles);

struct Chi2Result {
    double statistic = 0.0;
    int bins = 0;
    int dof = 0;
    std::vector<double> edges;            ///< bins + 1 edges, F(edge_k) = k / bins
    std::vector<std::uint64_t> observed;  ///< counts per bin
};

/// Equal-probability bin edges under Sato-Tate: edge_0 = 0, edge_bins = pi.
std::vector<double> sato_tate_bin_edges(int bins);

/// Counts per bin; bin k holds [edge_k, edge_(k+1)), and pi falls into the last bin.
std::vector<std::uint64_t> bin_counts(std::span<const double> angles, std::span<const double> edges);

/// sum_k (O_k - E)^2 / E with E = N / bins. No minimum-count check.
double chi_square_statistic(std::span<const std::uint64_t> observed);

/// Minimum sample size accepted by chi_square for a bin count.
inline std::uint64_t chi_square_min_samples(int bins) noexcept { return 5ull * static_cast<std::uint64_t>(bins); }

/// Pearson chi-square against equal-probability Sato-Tate bins, dof = bins - 1.
/// Throws std::invalid_argument when bins < 2 or N < 5 * bins (the message names the minimal N).
Chi2Result chi_square(std::span<const double> angles, int bins);

/// Sample moments of cos(theta); Sato-Tate expects 0 and 1/4.
struct MomentCheck {
    double mean_cos = 0.0;
    double mean_cos2 = 0.0;
    static constexpr double expected_cos = 0.0;
    static constexpr double expected_cos2 = 0.25;
};

MomentCheck cosine_moments(std::span<const double> angles);

struct GofReport {
    std::string family;
    std::uint64_t sample_size = 0;
    double ks = 0.0;
    double ks_normalized = 0.0;  ///< ks * sqrt(N)
    Chi2Result chi2;
    MomentCheck moments;
};

/// KS, chi-square and moments in one pass. Throws like ks_statistic and chi_square.
GofReport goodness_of_fit(std::string family, std::span<const double> angles, int bins);

/// Below this many samples a comparison verdict is flagged as unreliable.
inline constexpr std::uint64_t kMinComparableSample = 30;

struct FamilyComparison {
    GofReport vertical;
    GofReport horizontal;
    double ratio = 0.0;  ///< horizontal.ks_normalized / vertical.ks_normalized
    std::string verdict;
};

/// Side-by-side report of two families. The verdict only restates the numbers.
FamilyComparison compare_families(const GofReport& vertical, const GofReport& horizontal);

/// Evenly spaced deterministic thinning to `target` elements (index floor(k * N / target)).
std::vector<double> thin_evenly(std::span<const double> values, std::size_t target);

}  // namespace fpc

#endif
