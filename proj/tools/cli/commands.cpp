#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "fpcurves/equidist.hpp"
#include "fpcurves/kloosterman.hpp"
#include "fpcurves/parallel.hpp"
#include "fpcurves/report.hpp"
#include "fpcurves/search.hpp"
#include "fpcurves/version.hpp"
#include "selftest.hpp"

namespace fpc::cli {

namespace {

struct Common {
    unsigned workers = default_worker_count();
    std::string out;
};

struct SearchArgs {
    int genus = 0;
    std::int64_t prime = 0;
    std::string reduction = "auto";
    std::string checkpoint;
    std::uint64_t block_size = kDefaultBlockSize;
    std::optional<std::uint64_t> max_blocks;
};

struct BoundArgs {
    int genus = 0;
    std::optional<std::int64_t> max_prime;
    std::string reduction = "auto";
    std::string checkpoint_dir;
    std::uint64_t block_size = kDefaultBlockSize;
    std::optional<std::uint64_t> max_blocks;
};

struct KloostermanArgs {
    std::int64_t prime = 0;
    bool full_grid = false;
    std::uint64_t c = 1;
    std::uint64_t d = 1;
    std::int64_t min_prime = 3;
    std::int64_t max_prime = 0;
};

struct EquidistArgs {
    std::string input;
    std::string compare;
    std::vector<std::string> tests{"ks", "chi2", "moments"};
    int bins = 64;
    bool match_n = false;
};

Json header(std::string_view command, Json config) {
    Json j;
    j["tool"] = "fpcurves";
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = std::move(config);
    return j;
}

Json optional_json(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

/// Writes `body` to --out (plus a run sidecar with the non-reproducible details) or to `out`.
void emit(const Common& common, const std::string& body, std::ostream& out, std::string_view command,
          const std::vector<std::string>& argv, double wall_seconds, int exit_code, Json extra = Json::object()) {
    if (common.out.empty()) {
        out << body;
        return;
    }
    {
        std::ofstream f(common.out, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + common.out);
        f << body;
    }
    Json meta;
    meta["tool"] = "fpcurves";
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["argv"] = argv;
    meta["workers"] = common.workers;
    meta["wall_seconds"] = wall_seconds;
    meta["exit_code"] = exit_code;
    for (auto& [k, v] : extra.items()) meta[k] = v;
    std::ofstream f(common.out + ".meta.json", std::ios::binary | std::ios::trunc);
    f << meta.dump(2) << '\n';
}

std::optional<Reduction> resolve_reduction(const std::string& requested, int genus, std::uint32_t p,
                                           std::ostream& err) {
    if (requested == "auto") return effective_reduction(Reduction::translate_scale, genus, p);
    const auto r = parse_reduction(requested);
    if (!r) {
        err << "error: unknown reduction '" << requested << "' (auto, none, translate, translate_scale)\n";
        return std::nullopt;
    }
    if (!reduction_permitted(*r, genus, p)) {
        err << "error: reduction '" << requested << "' needs p not dividing 2g+1 = " << 2 * genus + 1 << '\n';
        return std::nullopt;
    }
    return r;
}

bool check_prime(std::int64_t p, std::ostream& err) {
    if (p < 3 || !is_prime(p) || p > static_cast<std::int64_t>(kMaxModulus)) {
        err << "error: " << p << " is not an odd prime in the supported range\n";
        return false;
    }
    return true;
}

int cmd_search(const Common& common, const SearchArgs& a, std::ostream& out, std::ostream& err,
               const std::vector<std::string>& argv, std::stop_token stop) {
    const auto started = std::chrono::steady_clock::now();
    if (a.genus < 1) {
        err << "error: genus must be >= 1\n";
        return kExitInvalid;
    }
    if (!check_prime(a.prime, err)) return kExitInvalid;
    const auto p = static_cast<std::uint32_t>(a.prime);
    const auto reduction = resolve_reduction(a.reduction, a.genus, p, err);
    if (!reduction) return kExitInvalid;

    SearchOptions opts;
    opts.reduction = *reduction;
    opts.workers = common.workers;
    opts.block_size = a.block_size;
    opts.max_blocks = a.max_blocks;
    opts.stop = stop;
    if (!a.checkpoint.empty()) opts.checkpoint = a.checkpoint;

    const SearchReport report = find_pointless(a.genus, p, opts);

    Json doc = header("search-pointless", Json{{"genus", a.genus},
                                               {"prime", p},
                                               {"reduction", a.reduction},
                                               {"block_size", a.block_size},
                                               {"max_blocks", optional_json(a.max_blocks)}});
    doc["result"] = to_json(report);
    const int code = report.complete ? kExitOk : kExitPartial;
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    emit(common, doc.dump(2) + "\n", out, "search-pointless", argv, wall, code,
         Json{{"checkpoint", a.checkpoint.empty() ? Json(nullptr) : Json(a.checkpoint)},
              {"blocks_resumed", report.blocks_resumed}});
    if (!report.complete) err << "scan incomplete: " << report.blocks_completed << " of " << report.block_count
                              << " blocks done\n";
    return code;
}

int cmd_bound(const Common& common, const BoundArgs& a, std::ostream& out, std::ostream& err,
              const std::vector<std::string>& argv, std::stop_token stop) {
    const auto started = std::chrono::steady_clock::now();
    if (a.genus < 1) {
        err << "error: genus must be >= 1\n";
        return kExitInvalid;
    }
    if (!a.max_prime && !mitkin_threshold(a.genus)) {
        err << "error: genus " << a.genus << " has no known Mit'kin threshold; pass --max-prime\n";
        return kExitInvalid;
    }
    if (a.max_prime && (*a.max_prime < 4 || *a.max_prime > static_cast<std::int64_t>(kMaxModulus))) {
        err << "error: --max-prime must be in [4, " << kMaxModulus << "]\n";
        return kExitInvalid;
    }
    Reduction preferred = Reduction::translate_scale;
    if (a.reduction != "auto") {
        const auto r = parse_reduction(a.reduction);
        if (!r) {
            err << "error: unknown reduction '" << a.reduction << "'\n";
            return kExitInvalid;
        }
        preferred = *r;
    }

    BoundOptions opts;
    opts.search.reduction = preferred;
    opts.search.workers = common.workers;
    opts.search.block_size = a.block_size;
    opts.search.max_blocks = a.max_blocks;
    opts.search.stop = stop;
    if (!a.checkpoint_dir.empty()) opts.checkpoint_dir = a.checkpoint_dir;

    std::optional<std::uint32_t> p_max;
    if (a.max_prime) p_max = static_cast<std::uint32_t>(*a.max_prime);
    const PreciseBoundResult result = verify_precise_bound(a.genus, p_max, opts);

    Json doc = header("verify-precise-bound",
                      Json{{"genus", a.genus},
                           {"max_prime", a.max_prime ? Json(*a.max_prime) : Json(nullptr)},
                           {"reduction", a.reduction},
                           {"block_size", a.block_size},
                           {"max_blocks", optional_json(a.max_blocks)}});
    doc["result"] = to_json(result);

    const bool complete = result.p0.has_value();
    const int code = complete ? kExitOk : kExitPartial;
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    emit(common, doc.dump(2) + "\n", out, "verify-precise-bound", argv, wall, code,
         Json{{"checkpoint_dir", a.checkpoint_dir.empty() ? Json(nullptr) : Json(a.checkpoint_dir)}});
    if (!complete) err << "scan incomplete; p0 not asserted\n";
    return code;
}

int cmd_kloosterman(const Common& common, bool vertical, const KloostermanArgs& a, std::ostream& out,
                    std::ostream& err, const std::vector<std::string>& argv) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<AngleSample> samples;
    Json extra = Json::object();
    if (vertical) {
        if (!check_prime(a.prime, err)) return kExitInvalid;
        samples = vertical_family(static_cast<std::uint32_t>(a.prime), common.workers, a.full_grid);
        extra["family"] = Json{{"kind", "vertical"}, {"prime", a.prime}, {"full_grid", a.full_grid}};
    } else {
        if (a.c == 0 || a.d == 0) {
            err << "error: --c and --d must be >= 1\n";
            return kExitInvalid;
        }
        if (a.max_prime < a.min_prime || a.max_prime > static_cast<std::int64_t>(kMaxModulus) || a.min_prime < 2) {
            err << "error: need 2 <= --min-prime <= --max-prime <= " << kMaxModulus << '\n';
            return kExitInvalid;
        }
        const auto fam = horizontal_family(a.c, a.d, static_cast<std::uint32_t>(a.min_prime),
                                           static_cast<std::uint32_t>(a.max_prime), common.workers);
        samples = fam.samples;
        extra["family"] = Json{{"kind", "horizontal"},
                               {"c", a.c},
                               {"d", a.d},
                               {"min_prime", a.min_prime},
                               {"max_prime", a.max_prime},
                               {"skipped_primes", fam.skipped_primes}};
    }
    std::ostringstream csv;
    write_angle_csv(csv, samples);
    extra["rows"] = samples.size();
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    emit(common, csv.str(), out, vertical ? "kloosterman vertical" : "kloosterman horizontal", argv, wall, kExitOk,
         std::move(extra));
    return kExitOk;
}

struct LoadedSample {
    std::vector<double> angles;
    std::string family;
    std::uint64_t weil_violations = 0;
};

std::optional<LoadedSample> load_sample(const std::string& path, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open " << path << '\n';
        return std::nullopt;
    }
    std::vector<AngleSample> rows;
    try {
        rows = read_angle_csv(in);
    } catch (const std::exception& e) {
        err << "error: " << path << ": " << e.what() << '\n';
        return std::nullopt;
    }
    if (rows.empty()) {
        err << "error: " << path << ": empty sample\n";
        return std::nullopt;
    }
    LoadedSample s;
    std::set<std::uint32_t> primes;
    std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (const auto& r : rows) {
        s.angles.push_back(r.theta);
        primes.insert(r.p);
        pairs.insert({r.c, r.d});
        if (std::abs(r.t_value) > 2.0 * std::sqrt(static_cast<double>(r.p)) + weil_allowance(r.p)) {
            ++s.weil_violations;
        }
    }
    std::ostringstream fam;
    if (primes.size() == 1) {
        fam << "vertical p=" << *primes.begin();
    } else if (pairs.size() == 1) {
        fam << "horizontal c=" << pairs.begin()->first << " d=" << pairs.begin()->second << " p=["
            << *primes.begin() << "," << *primes.rbegin() << "]";
    } else {
        fam << "mixed";
    }
    s.family = fam.str();
    return s;
}

Json gof_json(const LoadedSample& s, std::span<const double> angles, const std::set<std::string>& tests, int bins) {
    GofReport r;
    r.family = s.family;
    r.sample_size = angles.size();
    r.ks = ks_statistic(angles);
    r.ks_normalized = r.ks * std::sqrt(static_cast<double>(angles.size()));
    r.moments = cosine_moments(angles);
    if (tests.contains("chi2")) r.chi2 = chi_square(angles, bins);
    Json j = to_json(r);
    if (!tests.contains("ks")) {
        j["ks"] = nullptr;
        j["ks_normalized"] = nullptr;
    }
    if (!tests.contains("chi2")) j["chi2"] = nullptr;
    if (!tests.contains("moments")) j["moments"] = nullptr;
    j["weil_violations"] = s.weil_violations;
    return j;
}

int cmd_equidist(const Common& common, const EquidistArgs& a, std::ostream& out, std::ostream& err,
                 const std::vector<std::string>& argv) {
    const auto started = std::chrono::steady_clock::now();
    const std::set<std::string> tests(a.tests.begin(), a.tests.end());
    for (const auto& t : tests) {
        if (t != "ks" && t != "chi2" && t != "moments") {
            err << "error: unknown test '" << t << "' (ks, chi2, moments)\n";
            return kExitInvalid;
        }
    }
    if (a.bins < 2) {
        err << "error: --bins must be >= 2\n";
        return kExitInvalid;
    }
    const auto primary = load_sample(a.input, err);
    if (!primary) return kExitInvalid;
    std::optional<LoadedSample> other;
    if (!a.compare.empty()) {
        other = load_sample(a.compare, err);
        if (!other) return kExitInvalid;
    }

    std::vector<double> first = primary->angles;
    std::vector<double> second = other ? other->angles : std::vector<double>{};
    if (other && a.match_n) {
        const std::size_t n = std::min(first.size(), second.size());
        first = thin_evenly(first, n);
        second = thin_evenly(second, n);
    }
    const bool want_chi2 = tests.contains("chi2");
    for (const auto* sample : {&first, &second}) {
        if (sample->empty() || !want_chi2) continue;
        if (sample->size() < chi_square_min_samples(a.bins)) {
            err << "error: chi-square with " << a.bins << " bins needs at least " << chi_square_min_samples(a.bins)
                << " samples, got " << sample->size() << '\n';
            return kExitInvalid;
        }
    }

    Json doc = header("equidist", Json{{"input", a.input},
                                       {"compare", a.compare.empty() ? Json(nullptr) : Json(a.compare)},
                                       {"tests", std::vector<std::string>(tests.begin(), tests.end())},
                                       {"bins", a.bins},
                                       {"match_n", a.match_n}});
    if (!other) {
        doc["result"] = gof_json(*primary, first, tests, a.bins);
    } else {
        GofReport v;
        v.family = primary->family;
        v.sample_size = first.size();
        v.ks = ks_statistic(first);
        v.ks_normalized = v.ks * std::sqrt(static_cast<double>(first.size()));
        GofReport h;
        h.family = other->family;
        h.sample_size = second.size();
        h.ks = ks_statistic(second);
        h.ks_normalized = h.ks * std::sqrt(static_cast<double>(second.size()));
        const FamilyComparison cmp = compare_families(v, h);
        Json result;
        result["vertical"] = gof_json(*primary, first, tests, a.bins);
        result["horizontal"] = gof_json(*other, second, tests, a.bins);
        result["ks_normalized_ratio"] = cmp.ratio;
        result["weil_bound_held"] = primary->weil_violations == 0 && other->weil_violations == 0;
        result["verdict"] = cmp.verdict;
        doc["result"] = std::move(result);
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    emit(common, doc.dump(2) + "\n", out, "equidist", argv, wall, kExitOk);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::stop_token stop) {
    CLI::App app{"Pointless hyperelliptic curves and Kloosterman angle statistics over prime fields", "fpcurves"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--workers", common.workers, "Worker threads (default: hardware concurrency)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", common.out, "Output file (default: stdout)");
    };

    SearchArgs search;
    auto* s = app.add_subcommand("search-pointless", "Find pointless squarefree curves of one genus over F_p");
    s->add_option("--genus", search.genus, "Genus g (deg f = 2g+1)")->required();
    s->add_option("--prime", search.prime, "Field prime p")->required();
    s->add_option("--reduction", search.reduction, "auto | none | translate | translate_scale");
    s->add_option("--checkpoint", search.checkpoint, "Checkpoint file (resumed when present)");
    s->add_option("--block-size", search.block_size, "Coefficient vectors per checkpoint block")
        ->check(CLI::PositiveNumber);
    s->add_option("--max-blocks", search.max_blocks, "Stop after scanning this many blocks");
    add_common(s);

    BoundArgs bound;
    auto* b = app.add_subcommand("verify-precise-bound", "Scan every prime below the Mit'kin threshold and infer p0");
    b->add_option("--genus", bound.genus, "Genus g")->required();
    b->add_option("--max-prime", bound.max_prime, "Scan primes below this bound (default: Mit'kin threshold)");
    b->add_option("--reduction", bound.reduction, "Preferred reduction: auto | none | translate | translate_scale");
    b->add_option("--checkpoint", bound.checkpoint_dir, "Directory for per-prime checkpoints");
    b->add_option("--block-size", bound.block_size, "Coefficient vectors per checkpoint block")
        ->check(CLI::PositiveNumber);
    b->add_option("--max-blocks", bound.max_blocks, "Stop after scanning this many blocks in total");
    add_common(b);

    KloostermanArgs kl;
    auto* k = app.add_subcommand("kloosterman", "Kloosterman sums and Weil angles as CSV");
    k->require_subcommand(1);
    auto* kv = k->add_subcommand("vertical", "p fixed, T_p(1, a) for a = 1..p-1");
    kv->add_option("--prime", kl.prime, "Field prime p")->required();
    kv->add_flag("--full-grid", kl.full_grid, "Emit all (c, d) pairs instead of the diagonal");
    add_common(kv);
    auto* kh = k->add_subcommand("horizontal", "(c, d) fixed, p over primes not dividing c*d");
    kh->add_option("--c", kl.c, "c >= 1");
    kh->add_option("--d", kl.d, "d >= 1");
    kh->add_option("--min-prime", kl.min_prime, "Smallest prime considered (default 3)");
    kh->add_option("--max-prime", kl.max_prime, "Largest prime considered")->required();
    add_common(kh);

    EquidistArgs eq;
    auto* e = app.add_subcommand("equidist", "Goodness of fit of an angle CSV against Sato-Tate");
    e->add_option("--input", eq.input, "Angle CSV")->required();
    e->add_option("--compare", eq.compare, "Second angle CSV (horizontal family) to compare against --input");
    e->add_option("--tests", eq.tests, "Any of ks, chi2, moments")->delimiter(',');
    e->add_option("--bins", eq.bins, "Chi-square bins (default 64)");
    e->add_flag("--match-n", eq.match_n, "Thin the larger sample evenly to the smaller size before comparing");
    add_common(e);

    auto* st = app.add_subcommand("selftest", "Check the hand-verified example table");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (s->parsed()) return cmd_search(common, search, out, err, args, stop);
        if (b->parsed()) return cmd_bound(common, bound, out, err, args, stop);
        if (kv->parsed()) return cmd_kloosterman(common, true, kl, out, err, args);
        if (kh->parsed()) return cmd_kloosterman(common, false, kl, out, err, args);
        if (e->parsed()) return cmd_equidist(common, eq, out, err, args);
        if (st->parsed()) return run_selftest(out) ? kExitOk : kExitInvalid;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace fpc::cli
