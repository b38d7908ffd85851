#ifndef FPCURVES_CURVE_HPP
#define FPCURVES_CURVE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fpcurves/field.hpp"

namespace fpc {

/// y^2 = f(x) with f(x) = x^(2g+1) + a_1 x^(2g) + ... + a_(2g+1) monic over F_p.
///
/// Holds a reference to its field; the PrimeField must outlive the equation.
class CurveEquation {
public:
    /// Throws std::invalid_argument unless genus >= 1, coeffs.size() == 2g+1 and every coefficient is < p.
    CurveEquation(const PrimeField& field, int genus, std::vector<Residue> coeffs);

    int genus() const noexcept { return genus_; }
    int degree() const noexcept { return 2 * genus_ + 1; }
    const PrimeField& field() const noexcept { return *field_; }
    /// (a_1, ..., a_(2g+1)); the leading 1 is implicit.
    std::span<const Residue> coeffs() const noexcept { return coeffs_; }

    FieldPoly polynomial() const;
    Residue eval(Residue x) const noexcept;
    bool is_squarefree() const;

private:
    const PrimeField* field_;
    int genus_;
    std::vector<Residue> coeffs_;
};

struct CountResult {
    std::uint64_t count = 0;  ///< affine points, 0 <= count <= 2p
    bool weil_ok = false;     ///< (count - p)^2 <= 4 g^2 p
    int genus = 0;
    std::uint32_t p = 0;
};

CountResult affine_point_count(const CurveEquation& curve);

/// Stops at the first x with f(x) zero or a nonzero square.
bool has_affine_point(const CurveEquation& curve) noexcept;

/// Raw form used by the search kernels: monic f with the given non-leading coefficients.
bool has_affine_point(std::span<const Residue> coeffs, const PrimeField& field) noexcept;

/// Least prime strictly greater than 4g^2; every curve has an affine point from there on.
std::uint32_t weil_guarantee_threshold(int genus);

/// Point-existence threshold of the Mit'kin bound, known only for g = 1..4 (5, 17, 31, 53).
std::optional<std::uint32_t> mitkin_threshold(int genus);

}  // namespace fpc

#endif
