#include "selftest.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "fpcurves/curve.hpp"
#include "fpcurves/equidist.hpp"
#include "fpcurves/field.hpp"
#include "fpcurves/kloosterman.hpp"

namespace fpc::cli {

namespace {

// Upper bounds on the Kolmogorov-Smirnov distance of the vertical family,
// frozen from a calibration run (observed 0.01732 at p = 1009, 0.00427 at p = 10007).
constexpr double kVerticalKs1009 = 0.05;
constexpr double kVerticalKs10007 = 0.02;

double ks_of_vertical(std::uint32_t p) {
    std::vector<double> angles;
    for (const auto& s : vertical_family(p)) angles.push_back(s.theta);
    return ks_statistic(angles);
}

}  // namespace

std::vector<SelftestCase> selftest_cases() {
    std::vector<SelftestCase> cases;
    auto exact = [&](std::string name, double expected, double actual) {
        cases.push_back({std::move(name), expected, actual, 0.0, expected == actual});
    };
    auto near = [&](std::string name, double expected, double actual, double tol) {
        cases.push_back({std::move(name), expected, actual, tol, std::abs(expected - actual) <= tol});
    };
    auto at_most = [&](std::string name, double bound, double actual) {
        cases.push_back({std::move(name), bound, actual, 0.0, actual <= bound});
    };

    const PrimeField f3(3);
    const PrimeField f5(5);
    const PrimeField f7(7);

    exact("legendre(3 mod 7)", -1, f7.legendre(3));
    exact("legendre(4 mod 7)", 1, f7.legendre(4));
    exact("inverse of 2 mod 3", 2, f3.inv(2));
    exact("x^3 + x at x = 2 over F_3", 1, horner_eval(FieldPoly({1, 0, 1, 0}), 2, f3));
    exact("x^5 + x^3 + x + 2 at x = 1 over F_3", 2, horner_eval(FieldPoly({1, 0, 1, 0, 1, 2}), 1, f3));
    exact("x^5 + x^3 + x + 2 squarefree over F_3", 1, is_squarefree(FieldPoly({1, 0, 1, 0, 1, 2}), f3));
    exact("x^5 not squarefree over F_5", 0, is_squarefree(FieldPoly({1, 0, 0, 0, 0, 0}), f5));

    exact("#C: y^2 = x^3 over F_5", 5, affine_point_count(CurveEquation(f5, 1, {0, 0, 0})).count);
    exact("#C: y^2 = x^5 + x^3 + x + 2 over F_3", 0, affine_point_count(CurveEquation(f3, 2, {0, 1, 0, 1, 2})).count);
    exact("#C: y^2 = x^3 + x over F_3", 3, affine_point_count(CurveEquation(f3, 1, {0, 1, 0})).count);

    exact("Weil threshold g = 1", 5, weil_guarantee_threshold(1));
    exact("Weil threshold g = 2", 17, weil_guarantee_threshold(2));
    exact("Weil threshold g = 3", 37, weil_guarantee_threshold(3));
    exact("Mit'kin threshold g = 3", 31, *mitkin_threshold(3));
    exact("Mit'kin threshold g = 4", 53, *mitkin_threshold(4));

    near("T_3(1,1)", -1.0, kloosterman_sum(f3, 1, 1), 1e-6);
    near("T_5(1,1)", 0.3819660, kloosterman_sum(f5, 1, 1), 1e-6);
    near("T_7(1,6)", 1.1099162, kloosterman_sum(f7, 1, 6), 1e-6);
    near("T_7(2,3)", 1.1099162, kloosterman_sum(f7, 2, 3), 1e-6);
    const double vertical5[] = {0.381966, -3.236068, 1.236068, 2.618034};
    for (Residue a = 1; a <= 4; ++a) {
        near("T_5(1," + std::to_string(a) + ")", vertical5[a - 1], kloosterman_sum(f5, 1, a), 1e-6);
    }
    near("angle of T_5(1,1)", 1.4853, angle_of(0.3819660, 5), 1e-4);
    near("Sato-Tate CDF at pi/2", 0.5, sato_tate_cdf(std::numbers::pi / 2), 1e-15);

    at_most("KS of vertical family p = 1009", kVerticalKs1009, ks_of_vertical(1009));
    at_most("KS of vertical family p = 10007", kVerticalKs10007, ks_of_vertical(10007));
    return cases;
}

bool run_selftest(std::ostream& out) {
    bool all = true;
    const auto cases = selftest_cases();
    for (const auto& c : cases) {
        out << (c.passed ? "ok    " : "FAIL  ") << c.name << ": got " << std::setprecision(10) << c.actual
            << ", expected " << c.expected;
        if (c.tolerance > 0) out << " +/- " << c.tolerance;
        out << '\n';
        all = all && c.passed;
    }
    out << (all ? "selftest passed" : "selftest FAILED") << " (" << cases.size() << " cases)\n";
    return all;
}

}  // namespace fpc::cli
