#pragma once

#include <string>
#include <vector>

namespace qrmat {

/// One verified identity: `id` is machine-stable, `rule` says what was
/// checked in words, `residual` localizes the first offending entry on
/// failure.
struct Check {
    std::string id;
    std::string rule;
    bool pass = false;
    std::string residual;

    static Check ok(std::string id, std::string rule) {
        return Check{std::move(id), std::move(rule), true, ""};
    }
    static Check fail(std::string id, std::string rule, std::string residual) {
        return Check{std::move(id), std::move(rule), false, std::move(residual)};
    }
    static Check of(std::string id, std::string rule, bool pass, std::string residual = "") {
        return Check{std::move(id), std::move(rule), pass, pass ? "" : std::move(residual)};
    }
};

struct Report {
    std::string instance;
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void append(std::vector<Check> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    }
};

}  // namespace qrmat
