// Runs every acceptance criterion at the default configuration and prints one
// pass/fail line per criterion.
#include "ramf/report.hpp"

#include <cstdio>

int main() {
    ramf::report::PipelineConfig cfg;  // N = 30, 40 digits, basepoint 2i, cmax = 100
    auto checks = ramf::report::run_acceptance(cfg);
    bool all = true;
    for (const auto& c : checks) {
        all = all && c.pass;
        std::printf("[%s] %2s %s%s%s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(), c.name.c_str(),
                    c.detail.empty() ? "" : " -- ", c.detail.c_str());
    }
    std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES above");
    return all ? 0 : 1;
}
