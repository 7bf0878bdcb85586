// Acceptance run: one line per criterion; exits non-zero on any failure that is not a recorded deviation.
#include "su2ab/paper_checks.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <vector>

using namespace su2ab;

int main() {
    std::vector<CriterionResult> results;
    try {
        GridOptions opt;
        opt.witnesses = true;
        GridRun grid = run_grid(opt);
        results.push_back(criterion_sweeps());
        results.push_back(criterion_dual_path(grid));
        results.push_back(criterion_fixtures());
        results.push_back(criterion_intervals());
        results.push_back(criterion_homology());
        results.push_back(criterion_witnesses(grid));
        results.push_back(criterion_oracle());
        results.push_back(criterion_invariance());
        results.push_back(criterion_class4());
    } catch (const std::exception& e) {
        std::printf("acceptance aborted: %s\n", e.what());
        return 3;
    }
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

    bool ok = true;
    for (const auto& c : results) {
        const char* status = c.pass ? "PASS" : c.documented_deviation ? "FAIL (documented deviation)" : "FAIL";
        std::printf("criterion %d: %s - %s [%.1fs]\n    %s\n", c.id, status, c.title.c_str(), c.seconds, c.detail.c_str());
        ok = ok && (c.pass || c.documented_deviation);
    }
    std::printf("acceptance: %s\n", ok ? "all criteria pass or are recorded deviations" : "FAILED");
    return ok ? 0 : 1;
}
