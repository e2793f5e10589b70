#include "qrmat/verify.hpp"

#include <chrono>
#include <random>
#include <thread>

#include "qrmat/decomp.hpp"
#include "qrmat/pbw.hpp"
#include "qrmat/raffine.hpp"
#include "qrmat/rfinite.hpp"

namespace qrmat {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

Rational random_t_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(2, 9), den(1, 5);
    while (true) {
        Rational t(num(rng), den(rng));
        t.canonicalize();
        if (t != 1) return t;
    }
}

std::vector<Rational> t_points(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<Rational> pts;
    while (static_cast<int>(pts.size()) < opt.points) {
        Rational t = random_t_point(rng);
        if (std::find(pts.begin(), pts.end(), t) == pts.end()) pts.push_back(t);
    }
    return pts;
}

std::vector<std::array<Rational, 3>> spectral_points(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<long> num(2, 9), den(1, 5);
    std::vector<std::array<Rational, 3>> pts;
    while (static_cast<int>(pts.size()) < opt.points) {
        Rational t = random_t_point(rng);
        Rational z1(num(rng), den(rng)), z2(num(rng), den(rng));
        z1.canonicalize();
        z2.canonicalize();
        pts.push_back({t, z1, z2});
    }
    return pts;
}

}  // namespace

Report suite_representation(const InstanceSpec& spec) {
    Timer timer;
    Report rep{spec.label(), "representation", {}, 0};
    SuperData sd = spec.build();
    FinRep fr = build_finrep(sd);
    rep.append(check_relations(fr));
    rep.append(verify_serre(fr));
    rep.append(check_highest_weight_uniqueness(fr));
    AffineRep ar = build_affine_rep(fr);
    rep.append(check_affine_relations(ar));
    rep.append(verify_affine_serre(ar));
    rep.seconds = timer.seconds();
    return rep;
}

Report suite_finite(const InstanceSpec& spec, const VerifyOptions& opt) {
    Timer timer;
    Report rep{spec.label(), "finite", {}, 0};
    SuperData sd = spec.build();
    FinRep fr = build_finrep(sd);
    FiniteRMatrices rm = build_finite(sd);
    rep.append(check_intertwining(rm.R0, fr, "r0"));
    rep.append(check_intertwining(rm.Rinf, fr, "rinf"));
    rep.append(check_finite_structure(rm, sd));
    HighestVectors hv = highest_vectors(fr);
    rep.append(eigen_check(tau_matrix<QLaurent>(sd) * rm.R0, hv, sd));
    if (!opt.force_specialize && sd.N <= opt.symbolic_constant_threshold)
        rep.append(check_constant_ybe(rm.R0, "r0"));
    else
        rep.append(check_constant_ybe_specialized(rm.R0, "r0", t_points(opt)));
    if (opt.inject_sign_flip) {
        QMat broken = rm.R0;
        const int r = 0 * sd.N + 1, c = 1 * sd.N + 0;
        broken.set(r, c, -broken.at(r, c));
        rep.append(check_intertwining(broken, fr, "injected"));
    }
    rep.seconds = timer.seconds();
    return rep;
}

Report suite_factorization(const InstanceSpec& spec) {
    Timer timer;
    Report rep{spec.label(), "factorization", {}, 0};
    SuperData sd = spec.build();
    FinRep fr = build_finrep(sd);
    rep.append(check_dominant_structure(sd));
    rep.append(check_theta_suite(sd, fr));
    rep.seconds = timer.seconds();
    return rep;
}

Report suite_pairings(const InstanceSpec& spec) {
    Timer timer;
    Report rep{spec.label(), "pairings", {}, 0};
    SuperData sd = spec.build();
    rep.append(check_pairing_suite(sd));
    rep.seconds = timer.seconds();
    return rep;
}

Report suite_affine(const InstanceSpec& spec, const VerifyOptions& opt) {
    Timer timer;
    Report rep{spec.label(), "affine", {}, 0};
    SuperData sd = spec.build();
    FinRep fr = build_finrep(sd);
    AffineRep ar = build_affine_rep(fr);
    rep.append(check_baxterization(sd));
    rep.append(check_affine_intertwining(ar));
    if (!opt.force_specialize && sd.N <= opt.symbolic_spectral_threshold)
        rep.append(check_spectral_ybe(sd));
    else
        rep.append(check_spectral_ybe_specialized(sd, spectral_points(opt)));
    rep.seconds = timer.seconds();
    return rep;
}

Report suite_decomp(const InstanceSpec& spec) {
    Timer timer;
    Report rep{spec.label(), "decomp", {}, 0};
    SuperData sd = spec.build();
    FinRep fr = build_finrep(sd);
    TensorSquareDecomp dec = build_bases(sd, fr);
    rep.append(check_stability(sd, fr, dec));
    rep.append(check_sum_structure(sd, fr, dec));
    rep.append(check_lambda_action(sd, dec));
    rep.append(check_generating(sd, fr));
    rep.append(check_classical_limit(sd, fr));
    rep.seconds = timer.seconds();
    return rep;
}

Report suite_rational(const InstanceSpec& spec) {
    Timer timer;
    Report rep{spec.label(), "rational", {}, 0};
    SuperData sd = spec.build();
    rep.append(check_rational_limit(sd));
    rep.seconds = timer.seconds();
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "representation", "finite", "factorization", "pairings",
        "affine",         "decomp", "rational"};
    return names;
}

Report run_suite(const std::string& name, const InstanceSpec& spec, const VerifyOptions& opt) {
    if (name == "representation") return suite_representation(spec);
    if (name == "finite") return suite_finite(spec, opt);
    if (name == "factorization") return suite_factorization(spec);
    if (name == "pairings") return suite_pairings(spec);
    if (name == "affine") return suite_affine(spec, opt);
    if (name == "decomp") return suite_decomp(spec);
    if (name == "rational") return suite_rational(spec);
    throw Error("unknown suite " + name);
}

std::vector<Report> run_suites(const std::vector<InstanceSpec>& instances,
                               const std::vector<std::string>& suites,
                               const VerifyOptions& opt, int jobs) {
    struct Task {
        size_t slot;
        const InstanceSpec* spec;
        const std::string* suite;
    };
    std::vector<Task> tasks;
    for (size_t i = 0; i < instances.size(); ++i)
        for (const auto& s : suites) tasks.push_back({tasks.size(), &instances[i], &s});
    std::vector<Report> out(tasks.size());
    if (jobs < 1) jobs = 1;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            try {
                out[tasks[k].slot] = run_suite(*tasks[k].suite, *tasks[k].spec, opt);
            } catch (const std::exception& e) {
                Report r{tasks[k].spec->label(), *tasks[k].suite, {}, 0};
                r.checks.push_back(Check::fail("exception", "suite ran to completion", e.what()));
                out[tasks[k].slot] = std::move(r);
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace qrmat
