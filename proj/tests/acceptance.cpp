// Acceptance suite: every check is an exact rational identity (tolerance
// zero). Prints one PASS/FAIL line per criterion and exits nonzero if any
// fails.
#include <iostream>
#include <map>
#include <vector>

#include "hforge/verify.hpp"

int main() {
    using hforge::CheckResult;
    const std::vector<std::pair<int, std::string>> order = {
        {1, "genus0-agreement"},  {2, "genus1-agreement"}, {3, "genus2-extraction"},
        {4, "witten-initials"},   {5, "lambda-g-structure"}, {6, "degree-window"},
        {7, "k1-vanishing"},      {8, "one-point-series"}, {9, "alpha-recursion"},
        {10, "oracle-consistency"},
    };

    std::map<std::string, CheckResult> by_name;
    for (const auto& r : hforge::run_verify_suite("all")) by_name[r.name] = r;

    bool ok = true;
    for (const auto& [num, name] : order) {
        auto it = by_name.find(name);
        if (it == by_name.end()) {
            std::cout << "FAIL criterion " << num << " (" << name << "): check missing\n";
            ok = false;
            continue;
        }
        const CheckResult& r = it->second;
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << num << " (" << name
                  << "): " << r.detail << "\n";
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
