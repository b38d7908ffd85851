#ifndef FPCURVES_FIELD_HPP
#define FPCURVES_FIELD_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace fpc {

/// A residue modulo the field prime, always kept in [0, p).
using Residue = std::uint32_t;

/// Largest modulus accepted by PrimeField. Tables are O(p), so this caps memory at ~1.6 GB.
inline constexpr std::uint32_t kMaxModulus = (1u << 28);

bool is_prime(std::int64_t n) noexcept;

/// Arithmetic context for F_p with p an odd prime.
///
/// The quadratic-character and inverse tables are built eagerly at construction,
/// so the hot loops of the searches reduce to table lookups. Immutable after
/// construction and safe to share between threads.
class PrimeField {
public:
    /// Throws std::invalid_argument if p is even, composite, < 3 or > kMaxModulus.
    explicit PrimeField(std::int64_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    /// Quadratic character: 0 for a = 0, +1 for nonzero squares, -1 otherwise.
    int legendre(Residue a) const noexcept { return qr_[a]; }
    bool is_square_or_zero(Residue a) const noexcept { return qr_[a] >= 0; }

    /// Multiplicative inverse of a nonzero residue; inv(0) is 0.
    Residue inv(Residue a) const noexcept { return inv_[a]; }

    Residue reduce(std::int64_t a) const noexcept {
        const std::int64_t r = a % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const noexcept {
        const Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Residue pow(Residue a, std::uint64_t e) const noexcept;

    std::span<const std::int8_t> qr_table() const noexcept { return qr_; }
    std::span<const Residue> inv_table() const noexcept { return inv_; }

private:
    std::uint32_t p_;
    std::vector<std::int8_t> qr_;
    std::vector<Residue> inv_;
};

/// Same as the PrimeField constructor; kept as a free function for call sites that read better that way.
inline PrimeField make_field(std::int64_t p) { return PrimeField(p); }

/// All primes in [lo, hi], ascending (sieve of Eratosthenes). Empty when lo > hi.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

/// Dense polynomial over F_p, coefficients highest degree first.
///
/// Leading zeros are stripped on construction; the zero polynomial has no
/// coefficients and degree -1.
class FieldPoly {
public:
    FieldPoly() = default;
    explicit FieldPoly(std::vector<Residue> coeffs_high_first);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Residue> coeffs() const noexcept { return coeffs_; }
    Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.front(); }

    friend bool operator==(const FieldPoly&, const FieldPoly&) = default;

private:
    std::vector<Residue> coeffs_;
};

Residue horner_eval(const FieldPoly& f, Residue x, const PrimeField& field) noexcept;

/// Scales f so its leading coefficient is 1. The zero polynomial is returned unchanged.
FieldPoly make_monic(const FieldPoly& f, const PrimeField& field);

FieldPoly derivative(const FieldPoly& f, const PrimeField& field);

/// Remainder of a modulo b. Throws std::domain_error if b is zero.
FieldPoly poly_rem(const FieldPoly& a, const FieldPoly& b, const PrimeField& field);

/// Monic gcd by the Euclidean algorithm. Throws std::invalid_argument if both inputs are zero.
FieldPoly poly_gcd(const FieldPoly& f, const FieldPoly& g, const PrimeField& field);

/// True iff f' is not identically zero and gcd(f, f') = 1, i.e. the discriminant of f is nonzero.
/// A vanishing derivative means f is a p-th power and is reported as not squarefree.
/// Throws std::invalid_argument for constant or zero f.
bool is_squarefree(const FieldPoly& f, const PrimeField& field);

}  // namespace fpc

#endif
