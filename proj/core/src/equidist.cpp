#include "fpcurves/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace fpc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_angles(std::span<const double> angles) {
    for (double a : angles) {
        if (!(a >= 0.0 && a <= kPi)) {
            throw std::domain_error("angle " + std::to_string(a) + " lies outside [0, pi]");
        }
    }
}

}  // namespace

double sato_tate_cdf(double theta) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw std::domain_error("sato_tate_cdf: theta " + std::to_string(theta) + " outside [0, pi]");
    }
    if (theta == kPi) return 1.0;
    return (theta - std::sin(theta) * std::cos(theta)) / kPi;
}

double sato_tate_quantile(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("sato_tate_quantile: q outside [0, 1]");
    if (q == 0.0) return 0.0;
    if (q == 1.0) return kPi;
    double lo = 0.0;
    double hi = kPi;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (sato_tate_cdf(mid) < q) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double ks_statistic(std::span<const double> angles) {
    if (angles.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    require_angles(angles);
    std::vector<double> sorted(angles.begin(), angles.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = sato_tate_cdf(sorted[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

std::vector<double> sato_tate_bin_edges(int bins) {
    if (bins < 1) throw std::invalid_argument("bin count must be positive");
    std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
    for (int k = 0; k <= bins; ++k) edges[k] = sato_tate_quantile(static_cast<double>(k) / bins);
    edges.front() = 0.0;
    edges.back() = kPi;
    return edges;
}

std::vector<std::uint64_t> bin_counts(std::span<const double> angles, std::span<const double> edges) {
    const std::size_t bins = edges.size() - 1;
    std::vector<std::uint64_t> counts(bins, 0);
    for (double a : angles) {
        const auto it = std::upper_bound(edges.begin(), edges.end(), a);
        std::size_t k = static_cast<std::size_t>(it - edges.begin());
        k = k == 0 ? 0 : k - 1;
        ++counts[std::min(k, bins - 1)];
    }
    return counts;
}

double chi_square_statistic(std::span<const std::uint64_t> observed) {
    std::uint64_t n = 0;
    for (auto o : observed) n += o;
    const double expected = static_cast<double>(n) / static_cast<double>(observed.size());
    double stat = 0.0;
    for (auto o : observed) {
        const double diff = static_cast<double>(o) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

Chi2Result chi_square(std::span<const double> angles, int bins) {
    if (bins < 2) throw std::invalid_argument("chi_square: need at least 2 bins, got " + std::to_string(bins));
    if (angles.size() < chi_square_min_samples(bins)) {
        throw std::invalid_argument("chi_square: " + std::to_string(bins) + " bins need at least " +
                                    std::to_string(chi_square_min_samples(bins)) + " samples, got " +
                                    std::to_string(angles.size()));
    }
    require_angles(angles);
    Chi2Result r;
    r.bins = bins;
    r.dof = bins - 1;
    r.edges = sato_tate_bin_edges(bins);
    r.observed = bin_counts(angles, r.edges);
    r.statistic = chi_square_statistic(r.observed);
    return r;
}

MomentCheck cosine_moments(std::span<const double> angles) {
    MomentCheck m;
    if (angles.empty()) return m;
    double s1 = 0.0;
    double s2 = 0.0;
    for (double a : angles) {
        const double c = std::cos(a);
        s1 += c;
        s2 += c * c;
    }
    m.mean_cos = s1 / static_cast<double>(angles.size());
    m.mean_cos2 = s2 / static_cast<double>(angles.size());
    return m;
}

GofReport goodness_of_fit(std::string family, std::span<const double> angles, int bins) {
    GofReport r;
    r.family = std::move(family);
    r.sample_size = angles.size();
    r.ks = ks_statistic(angles);
    r.ks_normalized = r.ks * std::sqrt(static_cast<double>(angles.size()));
    r.chi2 = chi_square(angles, bins);
    r.moments = cosine_moments(angles);
    return r;
}

FamilyComparison compare_families(const GofReport& vertical, const GofReport& horizontal) {
    FamilyComparison cmp;
    cmp.vertical = vertical;
    cmp.horizontal = horizontal;
    cmp.ratio = vertical.ks_normalized > 0.0 ? horizontal.ks_normalized / vertical.ks_normalized
                                             : (horizontal.ks_normalized > 0.0 ? INFINITY : 1.0);

    std::ostringstream v;
    v.precision(6);
    if (vertical.sample_size < kMinComparableSample || horizontal.sample_size < kMinComparableSample) {
        v << "sample too small (N < " << kMinComparableSample << "); ";
    }
    v << "normalized KS: horizontal " << horizontal.ks_normalized << " vs vertical " << vertical.ks_normalized;
    if (cmp.ratio > 1.0) {
        v << "; horizontal deviates more from Sato-Tate (ratio " << cmp.ratio << ")";
    } else if (cmp.ratio < 1.0) {
        v << "; horizontal deviates less from Sato-Tate (ratio " << cmp.ratio << ")";
    } else {
        v << "; equal deviation (ratio 1)";
    }
    cmp.verdict = v.str();
    return cmp;
}

std::vector<double> thin_evenly(std::span<const double> values, std::size_t target) {
    if (target >= values.size()) return {values.begin(), values.end()};
    std::vector<double> out;
    out.reserve(target);
    for (std::size_t k = 0; k < target; ++k) out.push_back(values[k * values.size() / target]);
    return out;
}

}  // namespace fpc
