#ifndef FPCURVES_REPORT_HPP
#define FPCURVES_REPORT_HPP

#include <nlohmann/json.hpp>

#include "fpcurves/equidist.hpp"
#include "fpcurves/search.hpp"

namespace fpc {

using Json = nlohmann::ordered_json;

/// JSON documents for the result types. Field order is fixed and nothing
/// run-dependent (timings, worker counts) is included, so equal results
/// serialize to equal bytes.
Json to_json(const Representative& r);
Json to_json(const SearchTallies& t);
Json to_json(const SearchReport& r);
Json to_json(const PrimeVerdict& v);
Json to_json(const PreciseBoundResult& r);
Json to_json(const Chi2Result& c);
Json to_json(const GofReport& r);
Json to_json(const FamilyComparison& c);

std::string_view to_string(BoundStatus s) noexcept;

}  // namespace fpc

#endif
