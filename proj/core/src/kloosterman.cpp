#include "fpcurves/kloosterman.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "fpcurves/parallel.hpp"

namespace fpc {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace

KloostermanEvaluator::KloostermanEvaluator(const PrimeField& field) : field_(&field) {
    const std::uint32_t p = field.modulus();
    cos_.resize(p);
    sin_.resize(p);
    // cos(2 pi k / p) for k and p - k coincide; computing only k <= p/2 keeps the arguments small.
    for (std::uint32_t k = 0; k <= p / 2; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
        cos_[k] = std::cos(angle);
        sin_[k] = std::sin(angle);
        if (k != 0) {
            cos_[p - k] = cos_[k];
            sin_[p - k] = -sin_[k];
        }
    }
}

KloostermanValue KloostermanEvaluator::evaluate(Residue c, Residue d) const {
    const std::uint32_t p = field_->modulus();
    if (c == 0 || d == 0 || c >= p || d >= p) {
        throw std::invalid_argument("Kloosterman sum needs c, d in 1.." + std::to_string(p - 1) + ", got c = " +
                                    std::to_string(c) + ", d = " + std::to_string(d));
    }
    CompensatedSum re;
    CompensatedSum im;
    for (Residue x = 1; x < p; ++x) {
        const Residue k = field_->add(field_->mul(c, x), field_->mul(d, field_->inv(x)));
        re.add(cos_[k]);
        im.add(sin_[k]);
    }
    return {re.value(), im.value()};
}

double KloostermanEvaluator::sum(Residue c, Residue d) const {
    const KloostermanValue v = evaluate(c, d);
    if (std::abs(v.imag) >= 1e-6 * std::sqrt(static_cast<double>(p()))) {
        throw std::logic_error("Kloosterman sum has a non-negligible imaginary part");
    }
    return v.real;
}

double kloosterman_sum(const PrimeField& field, Residue c, Residue d) {
    return KloostermanEvaluator(field).sum(c, d);
}

double angle_of(double t_value, std::uint32_t p) {
    const double bound = 2.0 * std::sqrt(static_cast<double>(p));
    if (!(std::abs(t_value) <= bound + weil_allowance(p))) {
        throw std::domain_error("value " + std::to_string(t_value) + " exceeds the Weil bound 2 sqrt(" +
                                std::to_string(p) + ")");
    }
    return std::acos(std::clamp(t_value / bound, -1.0, 1.0));
}

std::vector<AngleSample> vertical_family(std::uint32_t p, unsigned workers, bool full_grid) {
    const PrimeField field(p);
    const KloostermanEvaluator eval(field);

    std::vector<double> by_product(p, 0.0);
    parallel_for_index(p - 1, workers, [&](std::size_t i) {
        by_product[i + 1] = eval.sum(1, static_cast<Residue>(i + 1));
    });

    std::vector<AngleSample> out;
    auto emit = [&](Residue c, Residue d, double t) { out.push_back({p, c, d, t, angle_of(t, p)}); };
    if (!full_grid) {
        out.reserve(p - 1);
        for (Residue a = 1; a < p; ++a) emit(1, a, by_product[a]);
    } else {
        out.reserve(static_cast<std::size_t>(p - 1) * (p - 1));
        for (Residue c = 1; c < p; ++c) {
            for (Residue d = 1; d < p; ++d) emit(c, d, by_product[field.mul(c, d)]);
        }
    }
    return out;
}

HorizontalFamily horizontal_family(std::uint64_t c, std::uint64_t d, std::uint32_t p_min, std::uint32_t p_max,
                                   unsigned workers) {
    if (c == 0 || d == 0) throw std::invalid_argument("horizontal family needs c, d >= 1");
    HorizontalFamily fam;
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p : primes_in_range(std::max<std::uint32_t>(p_min, 3), p_max)) {
        if (c % p == 0 || d % p == 0) {
            ++fam.skipped_primes;
        } else {
            primes.push_back(p);
        }
    }
    fam.samples.resize(primes.size());
    parallel_for_index(primes.size(), workers, [&](std::size_t i) {
        const std::uint32_t p = primes[i];
        const PrimeField field(p);
        const double t = kloosterman_sum(field, static_cast<Residue>(c % p), static_cast<Residue>(d % p));
        fam.samples[i] = {p, c, d, t, angle_of(t, p)};
    });
    return fam;
}

void write_angle_csv(std::ostream& out, const std::vector<AngleSample>& samples) {
    out << "p,c,d,t_value,theta\n";
    char buf[64];
    auto put = [&](double v) {
        const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
        out.write(buf, res.ptr - buf);
    };
    for (const auto& s : samples) {
        out << s.p << ',' << s.c << ',' << s.d << ',';
        put(s.t_value);
        out << ',';
        put(s.theta);
        out << '\n';
    }
}

namespace {

template <class T>
T parse_field(std::string_view s, std::size_t line, const char* name) {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::runtime_error("line " + std::to_string(line) + ": bad " + name + " '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::vector<AngleSample> read_angle_csv(std::istream& in) {
    std::vector<AngleSample> out;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "p,c,d,t_value,theta") {
                throw std::runtime_error("line " + std::to_string(line_no) + ": expected header 'p,c,d,t_value,theta'");
            }
            header_seen = true;
            continue;
        }
        std::string_view rest(line);
        std::string_view cells[5];
        for (int i = 0; i < 5; ++i) {
            const auto comma = rest.find(',');
            if ((i < 4) == (comma == std::string_view::npos)) {
                throw std::runtime_error("line " + std::to_string(line_no) + ": expected 5 comma-separated fields");
            }
            cells[i] = rest.substr(0, comma);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        AngleSample s;
        s.p = parse_field<std::uint32_t>(cells[0], line_no, "p");
        s.c = parse_field<std::uint64_t>(cells[1], line_no, "c");
        s.d = parse_field<std::uint64_t>(cells[2], line_no, "d");
        s.t_value = parse_field<double>(cells[3], line_no, "t_value");
        s.theta = parse_field<double>(cells[4], line_no, "theta");
        // 12-digit rounding can push an angle at pi just past it.
        if (!(s.theta >= 0.0 && s.theta <= std::numbers::pi + 1e-10)) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": theta outside [0, pi]");
        }
        s.theta = std::min(s.theta, std::numbers::pi);
        out.push_back(s);
    }
    return out;
}

}  // namespace fpc
