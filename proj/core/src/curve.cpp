#include "fpcurves/curve.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fpc {

CurveEquation::CurveEquation(const PrimeField& field, int genus, std::vector<Residue> coeffs)
    : field_(&field), genus_(genus), coeffs_(std::move(coeffs)) {
    if (genus_ < 1) throw std::invalid_argument("genus must be >= 1, got " + std::to_string(genus_));
    if (coeffs_.size() != static_cast<std::size_t>(2 * genus_ + 1)) {
        throw std::invalid_argument("genus " + std::to_string(genus_) + " needs " + std::to_string(2 * genus_ + 1) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
    }
    for (Residue c : coeffs_) {
        if (c >= field.modulus()) {
            throw std::invalid_argument("coefficient " + std::to_string(c) + " is not reduced mod " +
                                        std::to_string(field.modulus()));
        }
    }
}

FieldPoly CurveEquation::polynomial() const {
    std::vector<Residue> c;
    c.reserve(coeffs_.size() + 1);
    c.push_back(1);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return FieldPoly(std::move(c));
}

Residue CurveEquation::eval(Residue x) const noexcept {
    Residue acc = 1;
    for (Residue c : coeffs_) acc = field_->add(field_->mul(acc, x), c);
    return acc;
}

bool CurveEquation::is_squarefree() const { return fpc::is_squarefree(polynomial(), *field_); }

CountResult affine_point_count(const CurveEquation& curve) {
    const PrimeField& f = curve.field();
    const std::uint32_t p = f.modulus();
    std::uint64_t count = 0;
    for (Residue x = 0; x < p; ++x) {
        count += static_cast<std::uint64_t>(1 + f.legendre(curve.eval(x)));
    }
    const std::int64_t dev = static_cast<std::int64_t>(count) - static_cast<std::int64_t>(p);
    const std::int64_t g = curve.genus();
    CountResult r;
    r.count = count;
    r.weil_ok = dev * dev <= 4 * g * g * static_cast<std::int64_t>(p);
    r.genus = curve.genus();
    r.p = p;
    return r;
}

bool has_affine_point(std::span<const Residue> coeffs, const PrimeField& field) noexcept {
    const std::uint32_t p = field.modulus();
    for (Residue x = 0; x < p; ++x) {
        Residue acc = 1;
        for (Residue c : coeffs) acc = field.add(field.mul(acc, x), c);
        if (field.is_square_or_zero(acc)) return true;
    }
    return false;
}

bool has_affine_point(const CurveEquation& curve) noexcept { return has_affine_point(curve.coeffs(), curve.field()); }

std::uint32_t weil_guarantee_threshold(int genus) {
    if (genus < 1) throw std::invalid_argument("genus must be >= 1");
    std::int64_t n = 4LL * genus * genus + 1;
    while (!is_prime(n)) ++n;
    return static_cast<std::uint32_t>(n);
}

std::optional<std::uint32_t> mitkin_threshold(int genus) {
    switch (genus) {
        case 1: return 5;
        case 2: return 17;
        case 3: return 31;
        case 4: return 53;
        default:
            if (genus < 1) throw std::invalid_argument("genus must be >= 1");
            return std::nullopt;
    }
}

}  // namespace fpc
