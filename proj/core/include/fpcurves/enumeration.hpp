#ifndef FPCURVES_ENUMERATION_HPP
#define FPCURVES_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fpcurves/field.hpp"

namespace fpc {

/// How much of the coefficient space is quotiented away before scanning.
///
/// - none: every monic f of degree 2g+1.
/// - translate: x -> x + t; representatives have a_1 = 0, orbit size p.
/// - translate_scale: additionally a_i -> u^i a_i for u a nonzero square.
///
/// Both actions preserve pointlessness and squarefreeness. The translation
/// needs 2g+1 invertible mod p.
enum class Reduction : std::uint8_t { none, translate, translate_scale };

std::string_view to_string(Reduction r) noexcept;
std::optional<Reduction> parse_reduction(std::string_view s) noexcept;
bool reduction_permitted(Reduction r, int genus, std::uint32_t p) noexcept;

inline constexpr std::uint64_t kDefaultBlockSize = std::uint64_t{1} << 20;

/// One shard of the enumeration. Blocks are contiguous ranges of the raw
/// coefficient index; worker w owns blocks w, w + W, w + 2W, ...
struct EnumerationPlan {
    int genus = 1;
    std::uint32_t p = 3;
    Reduction reduction = Reduction::none;
    std::uint32_t worker_index = 0;
    std::uint32_t worker_count = 1;
    std::uint64_t block_size = kDefaultBlockSize;
};

struct Representative {
    std::vector<Residue> coeffs;
    std::uint64_t orbit_size = 1;

    friend bool operator==(const Representative&, const Representative&) = default;
    friend auto operator<=>(const Representative&, const Representative&) = default;
};

/// The coefficient space of monic degree-(2g+1) polynomials together with the
/// tables needed to walk one canonical representative per orbit.
///
/// The raw index enumerates the free coefficients in lexicographic order
/// (a_1 most significant; a_1 is pinned to 0 under translation). Under
/// translate_scale a vector is canonical when it is the lexicographic minimum
/// of its scaling orbit; this is decided coordinate by coordinate while
/// tracking the stabiliser of the prefix, so whole non-canonical subtrees are
/// skipped.
class RepresentativeSpace {
public:
    /// Throws std::invalid_argument when genus < 1, the reduction is not
    /// permitted for p, or the raw space does not fit in 63 bits.
    RepresentativeSpace(const PrimeField& field, int genus, Reduction reduction);

    int genus() const noexcept { return genus_; }
    Reduction reduction() const noexcept { return reduction_; }
    const PrimeField& field() const noexcept { return *field_; }
    std::size_t coefficient_count() const noexcept { return n_; }

    std::uint64_t raw_size() const noexcept { return raw_size_; }
    std::uint64_t block_count(std::uint64_t block_size) const noexcept {
        return (raw_size_ + block_size - 1) / block_size;
    }

    /// Calls visit(std::span<const Residue> coeffs, std::uint64_t orbit_size)
    /// for every canonical representative whose raw index lies in [begin, end).
    template <class Visitor>
    void scan(std::uint64_t begin, std::uint64_t end, Visitor&& visit) const;

    /// Scans every block owned by plan.worker_index.
    template <class Visitor>
    void scan_plan(const EnumerationPlan& plan, Visitor&& visit) const;

private:
    // Stabiliser order after accepting `value` at position `pos`, given the
    // stabiliser order `stab` of the prefix; 0 if the prefix is not canonical.
    std::uint32_t accept(std::size_t pos, Residue value, std::uint32_t stab) const noexcept;

    const PrimeField* field_;
    int genus_;
    Reduction reduction_;
    std::size_t n_;
    std::size_t first_free_;
    std::uint64_t raw_size_;
    std::vector<std::uint64_t> place_;  // p^(n-1-j)
    std::uint32_t square_group_order_;  // (p-1)/2
    // coset_min_[m][a] = min of a * U_m, U_m the subgroup of order m; filled for m | (p-1)/2.
    std::vector<std::vector<Residue>> coset_min_;
};

/// Streams representatives for one plan. Throws like RepresentativeSpace.
template <class Visitor>
void enumerate_representatives(const PrimeField& field, const EnumerationPlan& plan, Visitor&& visit) {
    RepresentativeSpace space(field, plan.genus, plan.reduction);
    space.scan_plan(plan, visit);
}

std::vector<Representative> collect_representatives(const PrimeField& field, const EnumerationPlan& plan);

/// Every member of the orbit of `coeffs` under the group selected by `reduction`, sorted and deduplicated.
/// Brute force; meant for verification and small p.
std::vector<std::vector<Residue>> orbit_of(std::span<const Residue> coeffs, const PrimeField& field,
                                           Reduction reduction);

// ---------------------------------------------------------------------------

inline std::uint32_t RepresentativeSpace::accept(std::size_t pos, Residue value, std::uint32_t stab) const noexcept {
    if (value == 0) return stab;
    const std::uint32_t exponent = static_cast<std::uint32_t>(pos + 1);
    std::uint32_t a = stab;
    std::uint32_t b = exponent;
    while (b != 0) {
        const std::uint32_t t = a % b;
        a = b;
        b = t;
    }
    const std::uint32_t image_order = stab / a;
    if (image_order > 1 && coset_min_[image_order][value] != value) return 0;
    return a;
}

template <class Visitor>
void RepresentativeSpace::scan(std::uint64_t begin, std::uint64_t end, Visitor&& visit) const {
    if (end > raw_size_) end = raw_size_;
    if (begin >= end) return;

    const std::uint32_t p = field_->modulus();
    const bool scaled = reduction_ == Reduction::translate_scale;
    const std::uint64_t orbit_base = reduction_ == Reduction::none ? 1 : p;

    std::vector<Residue> c(n_, 0);
    std::vector<std::uint32_t> stab(n_, 0);
    {
        std::uint64_t rest = begin;
        for (std::size_t j = first_free_; j < n_; ++j) {
            c[j] = static_cast<Residue>(rest / place_[j]);
            rest %= place_[j];
        }
    }

    std::uint64_t r = begin;
    std::size_t from = first_free_;
    while (r < end) {
        std::size_t advance_at = n_;
        if (scaled) {
            for (std::size_t j = from; j < n_; ++j) {
                const std::uint32_t prev = j == first_free_ ? square_group_order_ : stab[j - 1];
                const std::uint32_t k = accept(j, c[j], prev);
                if (k == 0) {
                    advance_at = j;
                    break;
                }
                stab[j] = k;
            }
        }
        if (advance_at == n_) {
            const std::uint64_t orbit = scaled ? orbit_base * (square_group_order_ / stab[n_ - 1]) : orbit_base;
            visit(std::span<const Residue>(c), orbit);
            advance_at = n_ - 1;
        }

        // Next index whose prefix up to advance_at differs: zero the tail, bump with carry.
        r = (r / place_[advance_at] + 1) * place_[advance_at];
        for (std::size_t j = advance_at + 1; j < n_; ++j) c[j] = 0;
        std::size_t j = advance_at;
        while (++c[j] == p) {
            c[j] = 0;
            if (j == first_free_) break;
            --j;
        }
        from = j;
    }
}

template <class Visitor>
void RepresentativeSpace::scan_plan(const EnumerationPlan& plan, Visitor&& visit) const {
    const std::uint64_t blocks = block_count(plan.block_size);
    for (std::uint64_t b = plan.worker_index; b < blocks; b += plan.worker_count) {
        scan(b * plan.block_size, (b + 1) * plan.block_size, visit);
    }
}

}  // namespace fpc

#endif
