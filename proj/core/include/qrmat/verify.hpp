#pragma once

#include <vector>

#include "qrmat/instances.hpp"
#include "qrmat/report.hpp"

namespace qrmat {

struct VerifyOptions {
    // constant YBE is symbolic up to this N, specialized beyond
    int symbolic_constant_threshold = 5;
    // spectral YBE is symbolic up to this N
    int symbolic_spectral_threshold = 4;
    int points = 5;  // number of exact specializations
    unsigned long seed = 20240801;
    bool force_specialize = false;  // never run the symbolic route
    bool inject_sign_flip = false;  // deliberately corrupt R0 (negative-path hook)
};

Report suite_representation(const InstanceSpec& spec);
Report suite_finite(const InstanceSpec& spec, const VerifyOptions& opt);
Report suite_factorization(const InstanceSpec& spec);
Report suite_pairings(const InstanceSpec& spec);
Report suite_affine(const InstanceSpec& spec, const VerifyOptions& opt);
Report suite_decomp(const InstanceSpec& spec);
Report suite_rational(const InstanceSpec& spec);

/// All suite names, in the order `verify all` runs them.
const std::vector<std::string>& suite_names();

Report run_suite(const std::string& name, const InstanceSpec& spec, const VerifyOptions& opt);

/// Run the selected suites over all instances, optionally in parallel;
/// reports come back in (instance, suite) order regardless of scheduling.
std::vector<Report> run_suites(const std::vector<InstanceSpec>& instances,
                               const std::vector<std::string>& suites,
                               const VerifyOptions& opt, int jobs);

}  // namespace qrmat
