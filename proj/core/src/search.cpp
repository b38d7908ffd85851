#include "fpcurves/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <string>

#include "fpcurves/checkpoint.hpp"
#include "fpcurves/parallel.hpp"

namespace fpc {

namespace {

// Below this modulus a whole evaluation f(x) fits one 64-bit accumulation
// followed by a single reduction.
constexpr std::uint32_t kPowerTableLimit = 1u << 20;

/// Early-exit pointlessness test specialised for one (p, degree).
class PointlessKernel {
public:
    PointlessKernel(const PrimeField& field, std::size_t degree) : field_(field), degree_(degree) {
        const std::uint32_t p = field.modulus();
        if (p < kPowerTableLimit && static_cast<std::uint64_t>(p) * p * (degree + 1) < (std::uint64_t{1} << 63)) {
            stride_ = degree + 1;
            powers_.resize(static_cast<std::size_t>(p) * stride_);
            for (Residue x = 0; x < p; ++x) {
                Residue v = 1;
                for (std::size_t e = 0; e <= degree; ++e) {
                    powers_[x * stride_ + e] = v;
                    v = field.mul(v, x);
                }
            }
        }
    }

    /// True when y^2 = f(x) has no affine point.
    bool pointless(std::span<const Residue> coeffs) const noexcept {
        if (powers_.empty()) return !has_affine_point(coeffs, field_);
        const std::uint32_t p = field_.modulus();
        const std::size_t n = degree_;
        for (Residue x = 0; x < p; ++x) {
            const Residue* pw = &powers_[x * stride_];
            std::uint64_t acc = pw[n];
            for (std::size_t i = 0; i < n; ++i) acc += static_cast<std::uint64_t>(coeffs[i]) * pw[n - 1 - i];
            if (field_.is_square_or_zero(static_cast<Residue>(acc % p))) return false;
        }
        return true;
    }

private:
    const PrimeField& field_;
    std::size_t degree_;
    std::size_t stride_ = 0;
    std::vector<Residue> powers_;
};

bool squarefree_monic(std::span<const Residue> coeffs, const PrimeField& field) {
    std::vector<Residue> full;
    full.reserve(coeffs.size() + 1);
    full.push_back(1);
    full.insert(full.end(), coeffs.begin(), coeffs.end());
    return is_squarefree(FieldPoly(std::move(full)), field);
}

void check_matches(const SearchCheckpoint& cp, int genus, std::uint32_t p, Reduction reduction,
                   std::uint64_t block_size, std::uint64_t block_count) {
    if (cp.genus != genus || cp.p != p || cp.reduction != reduction || cp.block_size != block_size ||
        cp.block_count != block_count) {
        throw std::runtime_error("checkpoint was written for genus " + std::to_string(cp.genus) + ", p = " +
                                 std::to_string(cp.p) + ", reduction " + std::string(to_string(cp.reduction)) +
                                 ", block size " + std::to_string(cp.block_size) + "; it cannot resume this scan");
    }
}

}  // namespace

Reduction effective_reduction(Reduction preferred, int genus, std::uint32_t p) noexcept {
    return reduction_permitted(preferred, genus, p) ? preferred : Reduction::none;
}

SearchReport find_pointless(int genus, std::uint32_t p, const SearchOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    if (options.block_size == 0) throw std::invalid_argument("block size must be positive");

    const PrimeField field(p);
    const RepresentativeSpace space(field, genus, options.reduction);
    const unsigned workers = std::max(1u, options.workers);

    SearchReport report;
    report.genus = genus;
    report.p = p;
    report.reduction = options.reduction;
    report.block_size = options.block_size;
    report.block_count = space.block_count(options.block_size);

    SearchCheckpoint state;
    state.genus = genus;
    state.p = p;
    state.reduction = options.reduction;
    state.worker_count = workers;
    state.block_size = options.block_size;
    state.block_count = report.block_count;

    std::vector<char> done(report.block_count, 0);
    if (options.checkpoint && std::filesystem::exists(*options.checkpoint)) {
        SearchCheckpoint loaded = load_checkpoint(*options.checkpoint);
        check_matches(loaded, genus, p, options.reduction, options.block_size, report.block_count);
        for (auto b : loaded.completed) done[b] = 1;
        state.completed = std::move(loaded.completed);
        state.tallies = loaded.tallies;
        state.witnesses = std::move(loaded.witnesses);
        report.blocks_resumed = state.completed.size();
    }

    const PointlessKernel kernel(field, space.coefficient_count());
    std::mutex merge_mutex;
    std::atomic<std::uint64_t> blocks_started{0};
    std::atomic<bool> halted{false};

    run_workers(workers, [&](unsigned w) {
        for (std::uint64_t b = w; b < report.block_count; b += workers) {
            if (done[b]) continue;
            if (halted.load(std::memory_order_relaxed) || options.stop.stop_requested()) return;
            if (options.max_blocks && blocks_started.fetch_add(1) >= *options.max_blocks) {
                halted = true;
                return;
            }

            SearchTallies local;
            std::vector<Representative> found;
            space.scan(b * options.block_size, (b + 1) * options.block_size,
                       [&](std::span<const Residue> coeffs, std::uint64_t orbit) {
                           ++local.representatives;
                           local.equations += orbit;
                           if (!kernel.pointless(coeffs)) return;
                           ++local.pointless_candidates;
                           if (!squarefree_monic(coeffs, field)) return;
                           ++local.squarefree_count;
                           local.pointless_equations += orbit;
                           found.push_back({std::vector<Residue>(coeffs.begin(), coeffs.end()), orbit});
                       });

            std::lock_guard lock(merge_mutex);
            state.tallies += local;
            state.witnesses.insert(state.witnesses.end(), found.begin(), found.end());
            state.completed.insert(std::lower_bound(state.completed.begin(), state.completed.end(), b), b);
            done[b] = 1;
            if (options.checkpoint) {
                std::sort(state.witnesses.begin(), state.witnesses.end());
                save_checkpoint(*options.checkpoint, state);
            }
        }
    });

    std::sort(state.witnesses.begin(), state.witnesses.end());
    for (const auto& w : state.witnesses) {
        const CurveEquation curve(field, genus, w.coeffs);
        if (affine_point_count(curve).count != 0 || !curve.is_squarefree()) {
            throw std::logic_error("pointless witness failed re-verification");
        }
    }

    report.tallies = state.tallies;
    report.pointless_found = std::move(state.witnesses);
    report.blocks_completed = state.completed.size();
    report.complete = report.blocks_completed == report.block_count;
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

bool evaluate_predicate(const CurveEquation& curve) {
    if (!curve.is_squarefree()) {
        throw std::invalid_argument("curve is not in S_{g,p}: f has a repeated factor");
    }
    return has_affine_point(curve);
}

PreciseBoundResult verify_precise_bound(int genus, std::optional<std::uint32_t> p_max, const BoundOptions& options) {
    if (genus < 1) throw std::invalid_argument("genus must be >= 1");

    PreciseBoundResult result;
    result.genus = genus;
    result.mitkin = mitkin_threshold(genus);
    if (!p_max) {
        if (!result.mitkin) {
            throw std::invalid_argument("no Mit'kin threshold is known for genus " + std::to_string(genus) +
                                        "; pass an explicit maximum prime");
        }
        p_max = *result.mitkin;
    }
    if (*p_max < 4) throw std::invalid_argument("maximum prime must leave at least p = 3 to scan");
    result.p_max = *p_max;

    if (options.checkpoint_dir) std::filesystem::create_directories(*options.checkpoint_dir);

    bool all_complete = true;
    std::optional<std::uint64_t> budget = options.search.max_blocks;
    for (std::uint32_t p : primes_in_range(3, *p_max - 1)) {
        if (options.search.stop.stop_requested() || (budget && *budget == 0)) {
            all_complete = false;
            break;
        }
        SearchOptions opts = options.search;
        opts.reduction = effective_reduction(options.search.reduction, genus, p);
        opts.max_blocks = budget;
        if (options.checkpoint_dir) {
            opts.checkpoint = *options.checkpoint_dir / ("g" + std::to_string(genus) + "_p" + std::to_string(p) + ".ckpt");
        }

        const SearchReport report = find_pointless(genus, p, opts);
        if (budget) *budget -= std::min(*budget, report.blocks_completed - report.blocks_resumed);

        PrimeVerdict v;
        v.p = p;
        v.reduction = opts.reduction;
        v.complete = report.complete;
        v.has_pointless = !report.pointless_found.empty();
        if (v.has_pointless) v.witness = report.pointless_found.front();
        v.witness_count = report.pointless_found.size();
        v.tallies = report.tallies;
        result.verdicts.push_back(std::move(v));

        if (!report.complete) {
            all_complete = false;
            break;
        }
    }

    if (all_complete) {
        std::uint32_t p0 = 3;
        for (const auto& v : result.verdicts) {
            if (!v.has_pointless) continue;
            std::int64_t next = static_cast<std::int64_t>(v.p) + 1;
            while (!is_prime(next)) ++next;
            p0 = static_cast<std::uint32_t>(next);
        }
        result.p0 = p0;
        if (result.mitkin && *p_max >= *result.mitkin) result.status = BoundStatus::verified;
    }
    return result;
}

}  // namespace fpc
