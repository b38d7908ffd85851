#include "fpcurves/report.hpp"

namespace fpc {

std::string_view to_string(BoundStatus s) noexcept {
    return s == BoundStatus::verified ? "verified" : "partial";
}

Json to_json(const Representative& r) {
    return Json{{"coeffs", r.coeffs}, {"orbit_size", r.orbit_size}};
}

Json to_json(const SearchTallies& t) {
    return Json{{"representatives", t.representatives},
                {"total_equations_examined", t.equations},
                {"pointless_candidates", t.pointless_candidates},
                {"squarefree_count", t.squarefree_count},
                {"pointless_equations", t.pointless_equations}};
}

Json to_json(const SearchReport& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.pointless_found) witnesses.push_back(to_json(w));
    Json j;
    j["genus"] = r.genus;
    j["prime"] = r.p;
    j["reduction"] = to_string(r.reduction);
    j["complete"] = r.complete;
    j["all_have_points"] = r.all_have_points();
    j["counts"] = to_json(r.tallies);
    j["pointless_found"] = std::move(witnesses);
    j["checkpoint"] = Json{{"block_size", r.block_size},
                           {"block_count", r.block_count},
                           {"blocks_completed", r.blocks_completed}};
    return j;
}

Json to_json(const PrimeVerdict& v) {
    Json j;
    j["prime"] = v.p;
    j["reduction"] = to_string(v.reduction);
    j["complete"] = v.complete;
    j["has_pointless"] = v.has_pointless;
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    j["witness_count"] = v.witness_count;
    j["counts"] = to_json(v.tallies);
    return j;
}

Json to_json(const PreciseBoundResult& r) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
    Json j;
    j["genus"] = r.genus;
    j["max_prime_exclusive"] = r.p_max;
    j["mitkin_threshold"] = r.mitkin ? Json(*r.mitkin) : Json("unknown");
    j["p0"] = r.p0 ? Json(*r.p0) : Json(nullptr);
    j["status"] = to_string(r.status);
    j["verdicts"] = std::move(verdicts);
    return j;
}

Json to_json(const Chi2Result& c) {
    return Json{{"statistic", c.statistic}, {"bins", c.bins}, {"dof", c.dof}, {"observed", c.observed}};
}

Json to_json(const GofReport& r) {
    Json j;
    j["family"] = r.family;
    j["N"] = r.sample_size;
    j["ks"] = r.ks;
    j["ks_normalized"] = r.ks_normalized;
    j["chi2"] = to_json(r.chi2);
    j["moments"] = Json{{"mean_cos", r.moments.mean_cos},
                        {"mean_cos2", r.moments.mean_cos2},
                        {"expected_mean_cos", MomentCheck::expected_cos},
                        {"expected_mean_cos2", MomentCheck::expected_cos2}};
    return j;
}

Json to_json(const FamilyComparison& c) {
    Json j;
    j["vertical"] = to_json(c.vertical);
    j["horizontal"] = to_json(c.horizontal);
    j["ks_normalized_ratio"] = c.ratio;
    j["verdict"] = c.verdict;
    return j;
}

}  // namespace fpc
