#pragma once

#include <string>
#include <vector>

namespace nrpi {

// One check of the reproduction suite: a published number or verdict the
// toolkit must reproduce, with a pass flag and a computed-vs-expected detail
// line.
struct CheckResult {
    int number = 0;
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Ids of all suite checks, in execution order.
std::vector<std::string> reproduction_ids();

// Run the whole suite, or only the checks whose id is listed.
std::vector<CheckResult> run_reproduction_suite(const std::vector<std::string>& only_ids = {});

}  // namespace nrpi
