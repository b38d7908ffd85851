#ifndef FPCURVES_SEARCH_HPP
#define FPCURVES_SEARCH_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stop_token>
#include <vector>

#include "fpcurves/curve.hpp"
#include "fpcurves/enumeration.hpp"
#include "fpcurves/field.hpp"

namespace fpc {

/// Running totals of a scan. Merging is a plain sum, so the result does not
/// depend on how blocks were distributed over workers.
struct SearchTallies {
    std::uint64_t representatives = 0;        ///< orbit representatives visited
    std::uint64_t equations = 0;              ///< sum of orbit sizes (p^(2g+1) once complete)
    std::uint64_t pointless_candidates = 0;   ///< representatives with no affine point, any discriminant
    std::uint64_t squarefree_count = 0;       ///< candidates that passed the discriminant test
    std::uint64_t pointless_equations = 0;    ///< sum of orbit sizes over pointless squarefree representatives

    SearchTallies& operator+=(const SearchTallies& o) noexcept {
        representatives += o.representatives;
        equations += o.equations;
        pointless_candidates += o.pointless_candidates;
        squarefree_count += o.squarefree_count;
        pointless_equations += o.pointless_equations;
        return *this;
    }
    friend bool operator==(const SearchTallies&, const SearchTallies&) = default;
};

struct SearchReport {
    int genus = 0;
    std::uint32_t p = 0;
    Reduction reduction = Reduction::none;
    SearchTallies tallies;
    std::vector<Representative> pointless_found;  ///< sorted, canonical representatives
    bool complete = false;
    std::uint64_t block_size = kDefaultBlockSize;
    std::uint64_t block_count = 0;
    std::uint64_t blocks_completed = 0;
    std::uint64_t blocks_resumed = 0;  ///< blocks taken from a checkpoint rather than scanned in this run
    double wall_seconds = 0.0;

    /// A partial scan never claims that all curves have points.
    bool all_have_points() const noexcept { return complete && pointless_found.empty(); }
};

struct SearchOptions {
    Reduction reduction = Reduction::translate_scale;
    unsigned workers = 1;
    std::uint64_t block_size = kDefaultBlockSize;
    /// Loaded when present, rewritten after every completed block.
    std::optional<std::filesystem::path> checkpoint;
    /// Stop after this many blocks have been scanned in this run.
    std::optional<std::uint64_t> max_blocks;
    std::stop_token stop;
};

/// Scans S_{g,p} for squarefree monic f of degree 2g+1 with no affine point on y^2 = f(x).
///
/// Each representative is first tested for pointlessness with an early-exit
/// value scan; only the rare survivors pay for the gcd discriminant test.
/// Throws std::invalid_argument for an invalid genus/prime/reduction and
/// std::runtime_error if a checkpoint file does not match the request.
SearchReport find_pointless(int genus, std::uint32_t p, const SearchOptions& options = {});

/// The reduction to use at a given prime: the preferred one when permitted, otherwise none.
Reduction effective_reduction(Reduction preferred, int genus, std::uint32_t p) noexcept;

/// (#c > 0) for a member of S_{g,p}. Throws std::invalid_argument if f is not squarefree.
bool evaluate_predicate(const CurveEquation& curve);

enum class BoundStatus : std::uint8_t { verified, partial };

struct PrimeVerdict {
    std::uint32_t p = 0;
    Reduction reduction = Reduction::none;
    bool complete = false;
    bool has_pointless = false;
    std::optional<Representative> witness;  ///< smallest pointless representative
    std::uint64_t witness_count = 0;
    SearchTallies tallies;
};

struct PreciseBoundResult {
    int genus = 0;
    std::uint32_t p_max = 0;  ///< scanned primes are those in [3, p_max)
    std::optional<std::uint32_t> mitkin;
    std::vector<PrimeVerdict> verdicts;
    /// Least prime P such that no scanned prime >= P has a pointless curve.
    /// Absent while any scan is incomplete.
    std::optional<std::uint32_t> p0;
    BoundStatus status = BoundStatus::partial;
};

struct BoundOptions {
    SearchOptions search;
    /// Per-prime checkpoints are kept as <dir>/g<genus>_p<prime>.ckpt.
    std::optional<std::filesystem::path> checkpoint_dir;
};

/// Scans every prime in [3, p_max) and infers p0(g).
///
/// p_max defaults to the Mit'kin threshold, so genus >= 5 needs it explicitly
/// (std::invalid_argument otherwise). The status is `verified` only when every
/// scan completed and the scanned range reaches the Mit'kin threshold.
PreciseBoundResult verify_precise_bound(int genus, std::optional<std::uint32_t> p_max = std::nullopt,
                                        const BoundOptions& options = {});

}  // namespace fpc

#endif
