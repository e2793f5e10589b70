// Acceptance suite: runs every criterion over the default instance matrix
// and prints one pass/fail line per criterion.
#include <cstdio>
#include <chrono>
#include <thread>

#include "qrmat/verify.hpp"

using namespace qrmat;

namespace {

struct Criterion {
    int number;
    const char* name;
    const char* suite;
    double budget_seconds;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "representation relations and Serre instances", "representation", 10},
        {2, "finite R-matrix suite", "finite", 120},
        {3, "factorization suite", "factorization", 60},
        {4, "pairing oracle suite", "pairings", 120},
        {5, "affine suite", "affine", 300},
        {6, "decomposition suite", "decomp", 60},
        {7, "rational limit", "rational", 30},
    };
    std::vector<InstanceSpec> instances = default_instances();
    VerifyOptions opt;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs > 8) jobs = 8;

    bool all_pass = true;
    for (const auto& cr : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::vector<Report> reports = run_suites(instances, {cr.suite}, opt, jobs);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        size_t checks = 0;
        bool pass = true;
        for (const auto& r : reports) {
            checks += r.checks.size();
            for (const auto& c : r.checks)
                if (!c.pass) {
                    pass = false;
                    std::printf("  [detail] %s %s: %s\n", r.instance.c_str(), c.id.c_str(),
                                c.residual.c_str());
                }
        }
        bool in_budget = secs < cr.budget_seconds;
        if (!in_budget)
            std::printf("  [detail] runtime %.1f s exceeds the %.0f s budget\n", secs,
                        cr.budget_seconds);
        bool ok = pass && in_budget;
        all_pass = all_pass && ok;
        std::printf("criterion %d [%s]: %s (%zu checks over %zu instances, %.1f s)\n",
                    cr.number, cr.name, ok ? "PASS" : "FAIL", checks, instances.size(), secs);
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
