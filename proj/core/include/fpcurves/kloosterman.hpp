#ifndef FPCURVES_KLOOSTERMAN_HPP
#define FPCURVES_KLOOSTERMAN_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fpcurves/field.hpp"

namespace fpc {

/// One Kloosterman observation, T_p(c,d) = 2 sqrt(p) cos(theta).
struct AngleSample {
    std::uint32_t p = 0;
    std::uint64_t c = 0;
    std::uint64_t d = 0;
    double t_value = 0.0;
    double theta = 0.0;  ///< in [0, pi]

    friend bool operator==(const AngleSample&, const AngleSample&) = default;
};

struct KloostermanValue {
    double real = 0.0;
    double imag = 0.0;  ///< should vanish; kept as a summation health check
};

/// Evaluates T_p(c, d) = sum_{x=1}^{p-1} e(2 pi i (c x + d / x) / p) for a fixed prime.
///
/// Each term is a lookup into a table of p-th roots of unity indexed by the
/// exact residue c x + d x^-1 mod p; terms are accumulated in ascending x with
/// Neumaier compensation.
class KloostermanEvaluator {
public:
    explicit KloostermanEvaluator(const PrimeField& field);

    std::uint32_t p() const noexcept { return field_->modulus(); }

    /// Throws std::invalid_argument if c or d is 0 mod p or not reduced.
    KloostermanValue evaluate(Residue c, Residue d) const;

    /// Real part; throws std::logic_error if the imaginary part exceeds 1e-6 sqrt(p).
    double sum(Residue c, Residue d) const;

private:
    const PrimeField* field_;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

double kloosterman_sum(const PrimeField& field, Residue c, Residue d);

/// Summation slack allowed beyond the Weil bound 2 sqrt(p).
inline double weil_allowance(std::uint32_t p) noexcept { return 1e-6 * p; }

/// arccos(clamp(t / (2 sqrt p), -1, 1)). Throws std::domain_error when |t|
/// exceeds 2 sqrt(p) by more than weil_allowance(p).
double angle_of(double t_value, std::uint32_t p);

/// Case a): p fixed, one sample T_p(1, a) for each a in 1..p-1.
///
/// T_p(c,d) depends only on c*d, so the (p-1)^2 grid takes each of these
/// values exactly p-1 times and the diagonal has the same empirical
/// distribution. `full_grid` emits the whole grid instead, in (c, d) order.
std::vector<AngleSample> vertical_family(std::uint32_t p, unsigned workers = 1, bool full_grid = false);

struct HorizontalFamily {
    std::vector<AngleSample> samples;
    std::uint64_t skipped_primes = 0;  ///< primes in range dividing c*d
};

/// Case b): (c, d) fixed, one sample per prime p in [p_min, p_max] with p not
/// dividing c or d. Primes below 3 are never included.
HorizontalFamily horizontal_family(std::uint64_t c, std::uint64_t d, std::uint32_t p_min, std::uint32_t p_max,
                                   unsigned workers = 1);

/// Writes the `p,c,d,t_value,theta` header and one row per sample, reals to 12 significant digits.
void write_angle_csv(std::ostream& out, const std::vector<AngleSample>& samples);

/// Parses the format written by write_angle_csv. Throws std::runtime_error
/// naming the line number on malformed input.
std::vector<AngleSample> read_angle_csv(std::istream& in);

}  // namespace fpc

#endif
