#include <cstdio>

#include "nrpi/reproduce.hpp"

// Prints one verdict line per reproduction check and fails the process if
// any of them fail. This is the release gate: every number the library is
// documented to reproduce is re-derived here from scratch.
int main() {
    const std::vector<nrpi::CheckResult> results = nrpi::run_reproduction_suite();
    int passed = 0;
    for (const nrpi::CheckResult& r : results) {
        std::printf("%s %2d  %-24s %s\n", r.pass ? "PASS" : "FAIL", r.number, r.id.c_str(),
                    r.detail.c_str());
        if (r.pass) ++passed;
    }
    std::printf("%d/%d acceptance checks passed\n", passed, static_cast<int>(results.size()));
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
