// Acceptance suite: one line per criterion, exact zero tolerance everywhere.
// Exit status is nonzero if any criterion fails or overruns its time budget.

#include "kappa/scenarios.hpp"

#include <chrono>
#include <cstdio>
#include <exception>

using namespace kappa;

int main() {
    const uint64_t seed = 20240817;
    int failures = 0;
    double total = 0;
    for (auto& c : scenarios::acceptance_criteria()) {
        auto t0 = std::chrono::steady_clock::now();
        size_t checks = 0, bad = 0;
        std::string first_bad;
        bool threw = false;
        std::string what;
        try {
            CheckReport rep = c.run(seed);
            checks = rep.entries.size();
            for (auto& e : rep.entries)
                if (!e.pass) {
                    ++bad;
                    if (first_bad.empty())
                        first_bad = e.id + " " + e.subjects +
                                    (e.residual_text.empty() ? "" : " : " + e.residual_text);
                }
        } catch (const std::exception& e) {
            threw = true;
            what = e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total += dt;
        bool over_budget = c.budget_seconds > 0 && dt > c.budget_seconds;
        bool pass = !threw && bad == 0 && !over_budget;
        failures += !pass;
        std::printf("[%s] %2d. %-48s  %4zu checks  %6.2fs", pass ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), checks, dt);
        if (c.budget_seconds > 0) std::printf("  (budget %.0fs)", c.budget_seconds);
        std::printf("\n");
        if (threw) std::printf("        exception: %s\n", what.c_str());
        if (bad) std::printf("        %zu failing, first: %s\n", bad, first_bad.c_str());
        if (over_budget) std::printf("        over time budget\n");
    }
    std::printf("%s  12 criteria, %.2fs total\n", failures ? "FAIL" : "PASS", total);
    return failures ? 1 : 0;
}
