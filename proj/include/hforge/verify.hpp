#pragma once

#include <string>
#include <vector>

namespace hforge {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// Named suites: genus0, genus1, genus2, series, tables, all.
// Every check is an exact identity; there are no tolerances.
// When cache_file is nonempty, the tables suite also validates that file.
std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const std::string& cache_file = "");

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace hforge
