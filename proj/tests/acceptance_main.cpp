#include <iostream>

#include "superperm/acceptance.hpp"

int main() {
    const auto results = spm::acceptance::run_all(std::cout);
    int passed = 0;
    for (const auto& r : results)
        if (r.pass) ++passed;
    const bool ok = spm::acceptance::all_passed(results);
    std::cout << (ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << passed << "/"
              << results.size() << " criteria)\n";
    return ok ? 0 : 1;
}
