#ifndef FPCURVES_CHECKPOINT_HPP
#define FPCURVES_CHECKPOINT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fpcurves/enumeration.hpp"
#include "fpcurves/search.hpp"

namespace fpc {

/// Resumable state of a pointless-curve scan, stored as `key = value` lines:
///
///     # fpcurves search checkpoint
///     format = 1
///     genus = 2
///     prime = 7
///     reduction = translate_scale
///     worker_count = 4
///     block_size = 1048576
///     block_count = 1
///     completed = 0-3,7
///     representatives = ...
///     ...
///     witness = 7 : 0 1 5 5 5
///
/// Completed blocks are written as sorted, comma-separated ranges. Witness
/// lines carry the orbit size, a colon, then the coefficients a_1..a_(2g+1).
struct SearchCheckpoint {
    int genus = 0;
    std::uint32_t p = 0;
    Reduction reduction = Reduction::none;
    std::uint32_t worker_count = 1;
    std::uint64_t block_size = kDefaultBlockSize;
    std::uint64_t block_count = 0;
    std::vector<std::uint64_t> completed;  ///< ascending, no duplicates
    SearchTallies tallies;
    std::vector<Representative> witnesses;

    friend bool operator==(const SearchCheckpoint&, const SearchCheckpoint&) = default;
};

std::string serialize_checkpoint(const SearchCheckpoint& cp);

/// Throws std::runtime_error naming the offending line on malformed input.
SearchCheckpoint parse_checkpoint(std::string_view text);

SearchCheckpoint load_checkpoint(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void save_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp);

}  // namespace fpc

#endif
