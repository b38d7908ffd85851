#include "fpcurves/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace fpc {

std::string_view to_string(Reduction r) noexcept {
    switch (r) {
        case Reduction::none: return "none";
        case Reduction::translate: return "translate";
        case Reduction::translate_scale: return "translate_scale";
    }
    return "none";
}

std::optional<Reduction> parse_reduction(std::string_view s) noexcept {
    if (s == "none") return Reduction::none;
    if (s == "translate") return Reduction::translate;
    if (s == "translate_scale") return Reduction::translate_scale;
    return std::nullopt;
}

bool reduction_permitted(Reduction r, int genus, std::uint32_t p) noexcept {
    if (r == Reduction::none) return true;
    return (2 * static_cast<std::int64_t>(genus) + 1) % p != 0;
}

namespace {

Residue primitive_root(const PrimeField& field) {
    const std::uint32_t p = field.modulus();
    std::vector<std::uint32_t> factors;
    std::uint32_t m = p - 1;
    for (std::uint32_t q = 2; q * q <= m; ++q) {
        if (m % q != 0) continue;
        factors.push_back(q);
        while (m % q == 0) m /= q;
    }
    if (m > 1) factors.push_back(m);
    for (Residue g = 2; g < p; ++g) {
        const bool generates = std::all_of(factors.begin(), factors.end(),
                                           [&](std::uint32_t q) { return field.pow(g, (p - 1) / q) != 1; });
        if (generates) return g;
    }
    return 1;  // unreachable for prime p
}

}  // namespace

RepresentativeSpace::RepresentativeSpace(const PrimeField& field, int genus, Reduction reduction)
    : field_(&field), genus_(genus), reduction_(reduction) {
    if (genus < 1) throw std::invalid_argument("genus must be >= 1, got " + std::to_string(genus));
    const std::uint32_t p = field.modulus();
    if (!reduction_permitted(reduction, genus, p)) {
        throw std::invalid_argument("reduction '" + std::string(to_string(reduction)) + "' needs p not dividing " +
                                    std::to_string(2 * genus + 1) + ", but p = " + std::to_string(p));
    }
    n_ = static_cast<std::size_t>(2 * genus + 1);
    first_free_ = reduction == Reduction::none ? 0 : 1;

    place_.assign(n_, 1);
    for (std::size_t j = n_ - 1; j-- > 0;) {
        if (place_[j + 1] > std::numeric_limits<std::int64_t>::max() / p) {
            throw std::invalid_argument("coefficient space for genus " + std::to_string(genus) + " over F_" +
                                        std::to_string(p) + " is too large to index");
        }
        place_[j] = place_[j + 1] * p;
    }
    raw_size_ = place_[first_free_] * p;

    square_group_order_ = (p - 1) / 2;
    if (reduction == Reduction::translate_scale) {
        const Residue g = primitive_root(field);
        coset_min_.resize(square_group_order_ + 1);
        for (std::uint32_t m = 2; m <= square_group_order_; ++m) {
            if (square_group_order_ % m != 0) continue;
            const Residue step = field.pow(g, (p - 1) / m);
            std::vector<Residue> subgroup(m);
            subgroup[0] = 1;
            for (std::uint32_t t = 1; t < m; ++t) subgroup[t] = field.mul(subgroup[t - 1], step);
            auto& table = coset_min_[m];
            table.assign(p, 0);
            for (Residue a = 1; a < p; ++a) {
                Residue best = a;
                for (Residue w : subgroup) best = std::min(best, field.mul(a, w));
                table[a] = best;
            }
        }
    }
}

std::vector<Representative> collect_representatives(const PrimeField& field, const EnumerationPlan& plan) {
    std::vector<Representative> out;
    enumerate_representatives(field, plan, [&](std::span<const Residue> c, std::uint64_t orbit) {
        out.push_back({std::vector<Residue>(c.begin(), c.end()), orbit});
    });
    return out;
}

namespace {

// Coefficients (a_1..a_n) of f(x + t) for monic f with coefficients (a_1..a_n).
std::vector<Residue> translated(std::span<const Residue> coeffs, Residue t, const PrimeField& field) {
    // Horner in the polynomial ring: acc = acc * (x + t) + c, acc stored high-first.
    std::vector<Residue> acc{1};
    for (Residue c : coeffs) {
        std::vector<Residue> next(acc.size() + 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] = field.add(next[i], acc[i]);
            next[i + 1] = field.add(next[i + 1], field.mul(acc[i], t));
        }
        next.back() = field.add(next.back(), c);
        acc = std::move(next);
    }
    return {acc.begin() + 1, acc.end()};
}

std::vector<Residue> scaled(std::span<const Residue> coeffs, Residue u, const PrimeField& field) {
    std::vector<Residue> out(coeffs.begin(), coeffs.end());
    Residue power = 1;
    for (auto& a : out) {
        power = field.mul(power, u);
        a = field.mul(a, power);
    }
    return out;
}

}  // namespace

std::vector<std::vector<Residue>> orbit_of(std::span<const Residue> coeffs, const PrimeField& field,
                                           Reduction reduction) {
    const std::uint32_t p = field.modulus();
    std::vector<std::vector<Residue>> out;
    std::vector<Residue> shifts{0};
    std::vector<Residue> scales{1};
    if (reduction != Reduction::none) {
        shifts.clear();
        for (Residue t = 0; t < p; ++t) shifts.push_back(t);
    }
    if (reduction == Reduction::translate_scale) {
        scales.clear();
        for (Residue u = 1; u < p; ++u) {
            if (field.legendre(u) == 1) scales.push_back(u);
        }
    }
    for (Residue t : shifts) {
        const auto moved = translated(coeffs, t, field);
        for (Residue u : scales) out.push_back(scaled(moved, u, field));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace fpc
