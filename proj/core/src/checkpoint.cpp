#include "fpcurves/checkpoint.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace fpc {

namespace {

constexpr std::string_view kHeader = "# fpcurves search checkpoint";
constexpr int kFormat = 1;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("checkpoint line " + std::to_string(line) + ": " + what);
}

template <class Int>
Int parse_int(std::string_view s, std::size_t line) {
    s = trim(s);
    Int value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        fail(line, "expected an integer, got '" + std::string(s) + "'");
    }
    return value;
}

std::vector<Residue> parse_residues(std::string_view s, std::size_t line) {
    std::vector<Residue> out;
    s = trim(s);
    while (!s.empty()) {
        const auto space = s.find(' ');
        out.push_back(parse_int<Residue>(s.substr(0, space), line));
        if (space == std::string_view::npos) break;
        s = trim(s.substr(space + 1));
    }
    return out;
}

void write_ranges(std::ostream& out, const std::vector<std::uint64_t>& blocks) {
    for (std::size_t i = 0; i < blocks.size();) {
        std::size_t j = i;
        while (j + 1 < blocks.size() && blocks[j + 1] == blocks[j] + 1) ++j;
        if (i != 0) out << ',';
        out << blocks[i];
        if (j > i) out << '-' << blocks[j];
        i = j + 1;
    }
}

std::vector<std::uint64_t> parse_ranges(std::string_view s, std::size_t line) {
    std::vector<std::uint64_t> out;
    s = trim(s);
    if (s.empty()) return out;
    while (true) {
        const auto comma = s.find(',');
        const auto item = s.substr(0, comma);
        const auto dash = item.find('-');
        const auto lo = parse_int<std::uint64_t>(item.substr(0, dash), line);
        const auto hi = dash == std::string_view::npos ? lo : parse_int<std::uint64_t>(item.substr(dash + 1), line);
        if (hi < lo || (!out.empty() && lo <= out.back())) fail(line, "block ranges must be ascending and disjoint");
        for (std::uint64_t b = lo; b <= hi; ++b) out.push_back(b);
        if (comma == std::string_view::npos) break;
        s = s.substr(comma + 1);
    }
    return out;
}

}  // namespace

std::string serialize_checkpoint(const SearchCheckpoint& cp) {
    std::ostringstream out;
    out << kHeader << '\n';
    out << "format = " << kFormat << '\n';
    out << "genus = " << cp.genus << '\n';
    out << "prime = " << cp.p << '\n';
    out << "reduction = " << to_string(cp.reduction) << '\n';
    out << "worker_count = " << cp.worker_count << '\n';
    out << "block_size = " << cp.block_size << '\n';
    out << "block_count = " << cp.block_count << '\n';
    out << "completed = ";
    write_ranges(out, cp.completed);
    out << '\n';
    out << "representatives = " << cp.tallies.representatives << '\n';
    out << "equations = " << cp.tallies.equations << '\n';
    out << "pointless_candidates = " << cp.tallies.pointless_candidates << '\n';
    out << "squarefree_count = " << cp.tallies.squarefree_count << '\n';
    out << "pointless_equations = " << cp.tallies.pointless_equations << '\n';
    for (const auto& w : cp.witnesses) {
        out << "witness = " << w.orbit_size << " :";
        for (Residue c : w.coeffs) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

SearchCheckpoint parse_checkpoint(std::string_view text) {
    SearchCheckpoint cp;
    std::map<std::string, bool, std::less<>> seen;
    std::size_t line_no = 0;
    bool header_ok = false;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        const auto line = trim(raw);
        if (line_no == 1) {
            if (line != kHeader) fail(line_no, "missing checkpoint header");
            header_ok = true;
            continue;
        }
        if (line.empty() || line.front() == '#') continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));

        if (key != "witness") {
            if (seen.contains(key)) fail(line_no, "duplicate key '" + key + "'");
            seen[key] = true;
        }

        if (key == "format") {
            if (parse_int<int>(value, line_no) != kFormat) fail(line_no, "unsupported checkpoint format");
        } else if (key == "genus") {
            cp.genus = parse_int<int>(value, line_no);
        } else if (key == "prime") {
            cp.p = parse_int<std::uint32_t>(value, line_no);
        } else if (key == "reduction") {
            const auto r = parse_reduction(value);
            if (!r) fail(line_no, "unknown reduction '" + std::string(value) + "'");
            cp.reduction = *r;
        } else if (key == "worker_count") {
            cp.worker_count = parse_int<std::uint32_t>(value, line_no);
        } else if (key == "block_size") {
            cp.block_size = parse_int<std::uint64_t>(value, line_no);
        } else if (key == "block_count") {
            cp.block_count = parse_int<std::uint64_t>(value, line_no);
        } else if (key == "completed") {
            cp.completed = parse_ranges(value, line_no);
        } else if (key == "representatives") {
            cp.tallies.representatives = parse_int<std::uint64_t>(value, line_no);
        } else if (key == "equations") {
            cp.tallies.equations = parse_int<std::uint64_t>(value, line_no);
        } else if (key == "pointless_candidates") {
            cp.tallies.pointless_candidates = parse_int<std::uint64_t>(value, line_no);
        } else if (key == "squarefree_count") {
            cp.tallies.squarefree_count = parse_int<std::uint64_t>(value, line_no);
        } else if (key == "pointless_equations") {
            cp.tallies.pointless_equations = parse_int<std::uint64_t>(value, line_no);
        } else if (key == "witness") {
            const auto colon = value.find(':');
            if (colon == std::string_view::npos) fail(line_no, "witness needs '<orbit size> : <coefficients>'");
            Representative w;
            w.orbit_size = parse_int<std::uint64_t>(value.substr(0, colon), line_no);
            w.coeffs = parse_residues(value.substr(colon + 1), line_no);
            cp.witnesses.push_back(std::move(w));
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }

    if (!header_ok) throw std::runtime_error("checkpoint is empty");
    for (const char* required : {"format", "genus", "prime", "reduction", "block_size", "block_count", "completed"}) {
        if (!seen.contains(required)) {
            throw std::runtime_error(std::string("checkpoint is missing key '") + required + "'");
        }
    }
    if (!cp.completed.empty() && cp.completed.back() >= cp.block_count) {
        throw std::runtime_error("checkpoint lists a block beyond block_count");
    }
    for (const auto& w : cp.witnesses) {
        if (w.coeffs.size() != static_cast<std::size_t>(2 * cp.genus + 1)) {
            throw std::runtime_error("checkpoint witness has the wrong number of coefficients");
        }
    }
    return cp;
}

SearchCheckpoint load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open checkpoint " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_checkpoint(buf.str());
}

void save_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
        out << serialize_checkpoint(cp);
        if (!out.flush()) throw std::runtime_error("failed writing checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace fpc
