#include "fpcurves/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace fpc {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::int64_t p) {
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("field modulus " + std::to_string(p) + " must be an odd prime >= 3");
    }
    if (p > static_cast<std::int64_t>(kMaxModulus)) {
        throw std::invalid_argument("field modulus " + std::to_string(p) + " exceeds the supported maximum " +
                                    std::to_string(kMaxModulus));
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    }
    p_ = static_cast<std::uint32_t>(p);

    qr_.assign(p_, -1);
    qr_[0] = 0;
    for (std::uint64_t x = 1; x <= (p_ - 1) / 2; ++x) {
        qr_[x * x % p_] = 1;
    }

    // inv(i) = -(p / i) * inv(p mod i)
    inv_.assign(p_, 0);
    inv_[1] = 1;
    for (std::uint64_t i = 2; i < p_; ++i) {
        const std::uint64_t t = static_cast<std::uint64_t>(p_ / i) * inv_[p_ % i] % p_;
        inv_[i] = static_cast<Residue>(t == 0 ? 0 : p_ - t);
    }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
    Residue result = 1 % p_;
    Residue base = a % p_;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    if (lo > hi || hi < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (std::uint64_t n = std::max<std::uint32_t>(lo, 2); n <= hi; ++n) {
        if (!composite[n]) out.push_back(static_cast<std::uint32_t>(n));
    }
    return out;
}

FieldPoly::FieldPoly(std::vector<Residue> coeffs_high_first) : coeffs_(std::move(coeffs_high_first)) {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
}

Residue horner_eval(const FieldPoly& f, Residue x, const PrimeField& field) noexcept {
    Residue acc = 0;
    for (Residue c : f.coeffs()) acc = field.add(field.mul(acc, x), c);
    return acc;
}

FieldPoly make_monic(const FieldPoly& f, const PrimeField& field) {
    if (f.is_zero() || f.leading() == 1) return f;
    const Residue scale = field.inv(f.leading());
    std::vector<Residue> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& v : c) v = field.mul(v, scale);
    return FieldPoly(std::move(c));
}

FieldPoly derivative(const FieldPoly& f, const PrimeField& field) {
    if (f.degree() < 1) return {};
    const auto c = f.coeffs();
    const auto n = static_cast<std::size_t>(f.degree());
    std::vector<Residue> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = field.mul(c[i], field.reduce(static_cast<std::int64_t>(n - i)));
    }
    return FieldPoly(std::move(d));
}

FieldPoly poly_rem(const FieldPoly& a, const FieldPoly& b, const PrimeField& field) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return a;

    std::vector<Residue> r(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const Residue lead_inv = field.inv(b.leading());
    const std::size_t shift_count = r.size() - bc.size() + 1;
    for (std::size_t i = 0; i < shift_count; ++i) {
        if (r[i] == 0) continue;
        const Residue q = field.mul(r[i], lead_inv);
        for (std::size_t j = 0; j < bc.size(); ++j) {
            r[i + j] = field.sub(r[i + j], field.mul(q, bc[j]));
        }
    }
    return FieldPoly(std::vector<Residue>(r.begin() + static_cast<std::ptrdiff_t>(shift_count), r.end()));
}

FieldPoly poly_gcd(const FieldPoly& f, const FieldPoly& g, const PrimeField& field) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_gcd: both inputs are zero");
    FieldPoly a = f;
    FieldPoly b = g;
    while (!b.is_zero()) {
        FieldPoly r = poly_rem(a, b, field);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, field);
}

bool is_squarefree(const FieldPoly& f, const PrimeField& field) {
    if (f.degree() < 1) throw std::invalid_argument("is_squarefree: polynomial must have degree >= 1");
    const FieldPoly df = derivative(f, field);
    if (df.is_zero()) return false;
    return poly_gcd(f, df, field).degree() == 0;
}

}  // namespace fpc
