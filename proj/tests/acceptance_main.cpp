// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Also runnable through the CLI verify subcommand in batches.

#include <cstdio>

#include "boostlab/verify.hpp"

int main() {
    const auto results = boostlab::run_all_criteria();
    bool all = true;
    int idx = 0;
    for (const auto& r : results) {
        ++idx;
        std::printf("[%2d/%zu] %s  %s%s%s%s\n", idx, results.size(),
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.empty() ? "" : "  (",
                    r.detail.c_str(), r.detail.empty() ? "" : ")");
        all = all && r.passed;
    }
    if (!all) {
        std::printf("acceptance: FAILURES present\n");
        return 1;
    }
    std::printf("acceptance: all %zu criteria passed\n", results.size());
    return 0;
}
