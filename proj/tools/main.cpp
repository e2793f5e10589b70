#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qrmat/decomp.hpp"
#include "qrmat/json_io.hpp"
#include "qrmat/pbw.hpp"
#include "qrmat/raffine.hpp"
#include "qrmat/rfinite.hpp"
#include "qrmat/verify.hpp"

using namespace qrmat;

namespace {

struct CommonFlags {
    std::string family = "osp";
    int m = 1, n = 2;
    std::string parity = "1";
    std::string theta;
    std::string format = "json";
    std::string out;
    std::string eval_q, eval_t;
};

void add_instance_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--family", f.family, "osp or glA")->check(CLI::IsMember({"osp", "glA"}));
    cmd->add_option("--m", f.m, "number of even basis vectors");
    cmd->add_option("--n", f.n, "number of odd basis vectors");
    cmd->add_option("--parity", f.parity, "parity sequence, e.g. 101");
    cmd->add_option("--theta", f.theta, "sign sequence over {+,-}, default all +");
}

InstanceSpec to_spec(const CommonFlags& f) {
    InstanceSpec s;
    s.family = f.family == "osp" ? Family::Osp : Family::GlA;
    s.m = f.m;
    s.n = f.n;
    s.parity = f.parity;
    s.theta = f.theta;
    return s;
}

void emit(const CommonFlags& f, const std::string& text) {
    if (f.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(f.out);
        os << text << "\n";
    }
}

template <typename T>
void emit_matrix(const CommonFlags& f, const SuperData& sd, const GradedMatrix<T>& m) {
    if (f.format == "csv") {
        if (sd.N > 5) throw Error("dense CSV export is limited to N <= 5");
        emit(f, matrix_to_csv(m));
    } else {
        emit(f, matrix_to_json(m).dump(2));
    }
}

/// Exact specialization: --eval-t sets t = q^{1/4} directly; --eval-q sets
/// q and requires every exponent to be an integer power of q.
GradedMatrix<Rational> specialize(const QMat& m, const std::string& eval_q,
                                  const std::string& eval_t) {
    if (!eval_t.empty()) {
        Rational t0 = parse_rational(eval_t);
        return m.map_entries([&](const QLaurent& x) { return x.eval(t0); });
    }
    Rational q0 = parse_rational(eval_q);
    return m.map_entries([&](const QLaurent& x) {
        Rational acc(0);
        for (const auto& [k, c] : x.terms()) {
            if (k % 4 != 0)
                throw Error("entry carries a fractional power of q; use --eval-t");
            Rational p(1);
            for (int e = 0; e < std::abs(k) / 4; ++e) p *= q0;
            if (k < 0) p = Rational(1) / p;
            acc += c * p;
        }
        return acc;
    });
}

int report_exit(const std::vector<Report>& reports, const std::string& out_path, bool quiet) {
    bool all = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
        if (!r.all_pass()) all = false;
        if (!quiet) {
            for (const auto& c : r.checks)
                if (!c.pass)
                    std::cout << "[FAIL] " << r.instance << " " << c.id << ": " << c.residual
                              << "\n";
            std::cout << (r.all_pass() ? "[PASS] " : "[FAIL] ") << r.instance << " ("
                      << r.suite << ", " << r.checks.size() << " checks, " << r.seconds
                      << " s)\n";
        }
    }
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        os << Json{{"reports", arr}, {"pass", all}}.dump(2) << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact R-matrices of orthosymplectic and A-type quantum supergroups"};
    app.require_subcommand(1);

    // ---- rmat ----
    auto* rmat = app.add_subcommand("rmat", "build and export R-matrices");
    rmat->require_subcommand(1);
    CommonFlags fin;
    std::string which = "r0";
    auto* rmat_finite = rmat->add_subcommand("finite", "finite R-matrices on V (x) V");
    add_instance_flags(rmat_finite, fin);
    rmat_finite->add_option("--which", which, "r0, rinf or rj")
        ->check(CLI::IsMember({"r0", "rinf", "rj"}));
    rmat_finite->add_option("--eval-q", fin.eval_q, "exact rational value of q");
    rmat_finite->add_option("--eval-t", fin.eval_t, "exact rational value of t = q^{1/4}");
    rmat_finite->add_option("--format", fin.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    rmat_finite->add_option("--out", fin.out, "output file (stdout when absent)");

    CommonFlags faf;
    std::string zval = "symbolic";
    auto* rmat_affine = rmat->add_subcommand("affine", "spectral R-matrix R(z)");
    add_instance_flags(rmat_affine, faf);
    rmat_affine->add_option("--z", zval, "symbolic or an exact rational");
    rmat_affine->add_option("--format", faf.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    rmat_affine->add_option("--out", faf.out, "output file");

    // ---- rep dump ----
    auto* rep_cmd = app.add_subcommand("rep", "representation matrices");
    rep_cmd->require_subcommand(1);
    CommonFlags frep;
    auto* rep_dump = rep_cmd->add_subcommand("dump", "export all generator matrices");
    add_instance_flags(rep_dump, frep);
    rep_dump->add_option("--out", frep.out, "output file");

    // ---- lyndon / list ----
    auto* lyndon_cmd = app.add_subcommand("lyndon", "Lyndon word machinery");
    CommonFlags flyn;
    auto* lyndon_list = lyndon_cmd->add_subcommand("list", "dominant Lyndon words with degrees");
    add_instance_flags(lyndon_list, flyn);

    CommonFlags flist;
    std::string what = "roots";
    auto* list_cmd = app.add_subcommand("list", "print root and pairing data");
    add_instance_flags(list_cmd, flist);
    list_cmd->add_option("what", what, "roots, lyndon or pairings")
        ->check(CLI::IsMember({"roots", "lyndon", "pairings"}));

    // ---- theta build ----
    auto* theta_cmd = app.add_subcommand("theta", "factorization of the canonical tensor");
    CommonFlags fth;
    std::string theta_checks = "closed,rmatrix";
    auto* theta_build = theta_cmd->add_subcommand("build", "build and verify the factorization");
    add_instance_flags(theta_build, fth);
    theta_build->add_option("--check", theta_checks, "comma list from {closed,rmatrix}");
    theta_build->add_option("--out", fth.out, "report output file");
    std::string theta_matrix_out;
    theta_build->add_option("--matrix-out", theta_matrix_out,
                            "also export the assembled operator as sparse JSON");

    // ---- decomp verify ----
    auto* decomp_cmd = app.add_subcommand("decomp", "tensor-square decomposition");
    CommonFlags fdec;
    auto* decomp_verify = decomp_cmd->add_subcommand("verify", "run the decomposition checks");
    add_instance_flags(decomp_verify, fdec);
    decomp_verify->add_option("--out", fdec.out, "report output file");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string suites_arg = "all";
    std::string batch, verify_out, ybe_mode = "auto";
    CommonFlags fver;
    int points = 5, jobs = 0;
    unsigned long seed = 20240801;
    bool inject = false, single = false;
    verify_cmd->add_option("suite", suites_arg,
                           "one of representation|finite|factorization|pairings|affine|decomp|"
                           "rational|all");
    verify_cmd->add_option("--batch", batch, "JSON batch file of instances");
    verify_cmd->add_flag("--single", single, "verify only the instance given by the flags");
    add_instance_flags(verify_cmd, fver);
    verify_cmd->add_option("--ybe-mode", ybe_mode, "auto, symbolic or specialize")
        ->check(CLI::IsMember({"auto", "symbolic", "specialize"}));
    verify_cmd->add_option("--points", points, "number of exact specializations");
    verify_cmd->add_option("--seed", seed, "seed for specialization points");
    verify_cmd->add_option("--jobs", jobs, "parallel workers (default: RMAT_JOBS or 1)");
    verify_cmd->add_flag("--inject-sign-flip", inject,
                         "corrupt one entry of R0 to exercise the failure path");
    verify_cmd->add_option("--out", verify_out, "machine-readable report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rmat_finite->parsed()) {
            SuperData sd = to_spec(fin).build();
            QMat m = which == "r0" ? build_R0(sd)
                     : which == "rinf" ? build_Rinf(sd)
                                       : build_RJ(sd).first;
            if (!fin.eval_q.empty() || !fin.eval_t.empty())
                emit_matrix(fin, sd, specialize(m, fin.eval_q, fin.eval_t));
            else
                emit_matrix(fin, sd, m);
            return 0;
        }
        if (rmat_affine->parsed()) {
            SuperData sd = to_spec(faf).build();
            SpectralR sr = build_Rz(sd);
            if (zval == "symbolic") {
                emit_matrix(faf, sd, sr.rz);
            } else {
                Rational z0 = parse_rational(zval);
                GradedMatrix<QRat> at(sd, 2);
                for (const auto& [i, row] : sr.rz.rows())
                    for (const auto& [j, v] : row) {
                        ZPoly znum = v.num(), zden = v.den();
                        QRat nv, dv;
                        for (int k = znum.degree(); k >= 0; --k)
                            nv = nv * QRat(QLaurent(z0)) + znum.coeff(k);
                        for (int k = zden.degree(); k >= 0; --k)
                            dv = dv * QRat(QLaurent(z0)) + zden.coeff(k);
                        at.add(i, j, nv / dv);
                    }
                emit_matrix(faf, sd, at);
            }
            return 0;
        }
        if (rep_dump->parsed()) {
            SuperData sd = to_spec(frep).build();
            FinRep fr = build_finrep(sd);
            Json j;
            j["data"] = to_json(sd);
            for (int i = 0; i < sd.s; ++i) {
                std::string suffix = std::to_string(i + 1);
                j["e" + suffix] = matrix_to_json(fr.e[i]);
                j["f" + suffix] = matrix_to_json(fr.f[i]);
                j["hhalf" + suffix] = matrix_to_json(fr.hhalf[i]);
            }
            AffineRep ar = build_affine_rep(fr);
            j["e0"] = matrix_to_json(ar.e0);
            j["f0"] = matrix_to_json(ar.f0);
            j["hhalf0"] = matrix_to_json(ar.h0half);
            emit(frep, j.dump(2));
            return 0;
        }
        if (lyndon_list->parsed() || (list_cmd->parsed() && what == "lyndon")) {
            SuperData sd = to_spec(lyndon_list->parsed() ? flyn : flist).build();
            for (const auto& dw : dominant_lyndon(sd))
                std::cout << dw.word.str() << "  degree " << dw.degree.str() << "\n";
            return 0;
        }
        if (list_cmd->parsed() && what == "roots") {
            SuperData sd = to_spec(flist).build();
            for (const auto& dw : dominant_lyndon(sd)) std::cout << dw.degree.str() << "\n";
            return 0;
        }
        if (list_cmd->parsed() && what == "pairings") {
            SuperData sd = to_spec(flist).build();
            FinRep fr = build_finrep(sd);
            for (const auto& rv : root_vectors(sd, fr))
                std::cout << rv.gamma.str() << "  " << rv.lyndon.str() << "  "
                          << rv.pairing1.str() << "\n";
            return 0;
        }
        if (theta_build->parsed()) {
            SuperData sd = to_spec(fth).build();
            FinRep fr = build_finrep(sd);
            if (!theta_matrix_out.empty()) {
                std::ofstream os(theta_matrix_out);
                os << matrix_to_json(theta_factorized(sd, fr)).dump(2) << "\n";
            }
            Report r{sd.label(), "factorization", check_theta_suite(sd, fr), 0};
            bool want_closed = theta_checks.find("closed") != std::string::npos;
            bool want_rmatrix = theta_checks.find("rmatrix") != std::string::npos;
            std::vector<Check> kept;
            for (auto& c : r.checks) {
                bool is_rmatrix = c.id == "theta.rmatrix";
                if ((is_rmatrix && want_rmatrix) || (!is_rmatrix && want_closed))
                    kept.push_back(c);
            }
            r.checks = kept;
            return report_exit({r}, fth.out, false);
        }
        if (decomp_verify->parsed()) {
            return report_exit({suite_decomp(to_spec(fdec))}, fdec.out, false);
        }
        if (verify_cmd->parsed()) {
            VerifyOptions opt;
            opt.points = points;
            opt.seed = seed;
            opt.inject_sign_flip = inject;
            if (ybe_mode == "specialize") opt.force_specialize = true;
            if (ybe_mode == "symbolic") {
                opt.symbolic_constant_threshold = 99;
                opt.symbolic_spectral_threshold = 99;
            }
            if (jobs <= 0) {
                if (const char* env = std::getenv("RMAT_JOBS")) jobs = std::atoi(env);
                if (jobs <= 0) jobs = 1;
            }
            std::vector<InstanceSpec> instances;
            if (!batch.empty())
                instances = load_batch(batch);
            else if (single)
                instances = {to_spec(fver)};
            else
                instances = default_instances();
            std::vector<std::string> suites;
            if (suites_arg == "all")
                suites = suite_names();
            else
                suites = {suites_arg};
            auto reports = run_suites(instances, suites, opt, jobs);
            return report_exit(reports, verify_out, false);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand executed\n";
    return 2;
}
