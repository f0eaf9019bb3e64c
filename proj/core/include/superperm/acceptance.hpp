#ifndef SUPERPERM_ACCEPTANCE_HPP
#define SUPERPERM_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

// End-to-end verification battery: every check pins its tolerances in code
// and reports one pass/fail line. Used both by the `acceptance` CLI
// subcommand and by the ctest acceptance binary.

namespace spm::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs all criteria in order; progress lines go to `out` as each criterion
// finishes (pass "ok 3 - graph golden tests ..." / fail "FAIL 3 - ...").
std::vector<CriterionResult> run_all(std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace spm::acceptance

#endif
