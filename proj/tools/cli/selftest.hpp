#ifndef FPCURVES_CLI_SELFTEST_HPP
#define FPCURVES_CLI_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fpc::cli {

struct SelftestCase {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Evaluates the hand-verified example table.
std::vector<SelftestCase> selftest_cases();

/// Prints one line per case; true when all pass.
bool run_selftest(std::ostream& out);

}  // namespace fpc::cli

#endif
