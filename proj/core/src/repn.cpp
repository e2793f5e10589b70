#include "qrmat/repn.hpp"

#include <sstream>

#include "qrmat/fieldlinalg.hpp"

namespace qrmat {

QMat x_element(const SuperData& sd, int i, int j) {
    QMat r(sd, 1);
    r.add(i - 1, j - 1, QLaurent(1));
    int sign = (sd.bar(i) * ((sd.bar(i) + sd.bar(j)) % 2)) % 2 ? -1 : 1;
    QLaurent c(Rational(-sign * sd.theta_of(i) * sd.theta_of(j)));
    r.add(sd.prime(j) - 1, sd.prime(i) - 1, c);
    return r;
}

std::vector<int> classical_h_diag(const SuperData& sd, int i) {
    std::vector<int> d(sd.N, 0);
    auto add_x = [&](int a, int coeff) {
        // coeff * X_{aa} = coeff * (E_{aa} - E_{a'a'}); vanishes when a = a'.
        d[a - 1] += coeff;
        d[sd.prime(a) - 1] -= coeff;
    };
    if (sd.family == Family::GlA) {
        d[i - 1] += sd.sign(i);
        d[i] -= sd.sign(i + 1);
        return d;
    }
    if (i < sd.s || sd.case_tag == CaseTag::OddM) {
        add_x(i, sd.sign(i));
        add_x(i + 1, -sd.sign(i + 1));
    } else if (sd.case_tag == CaseTag::EvenM_sEven) {
        add_x(sd.s - 1, sd.sign(sd.s - 1));
        add_x(sd.s + 1, -sd.sign(sd.s + 1));
    } else {
        add_x(sd.s, -2);
    }
    return d;
}

FinRep build_finrep(const SuperData& sd) {
    FinRep rep;
    rep.sd = &sd;
    const int s = sd.s;
    for (int i = 1; i <= s; ++i) {
        QMat ei(sd, 1), fi(sd, 1);
        QLaurent kappa(1);
        if (sd.family == Family::GlA) {
            ei = GradedMatrix<QLaurent>::unit(sd, i, i + 1);
            fi = GradedMatrix<QLaurent>::unit(sd, i + 1, i).scaled(QLaurent(Rational(sd.sign(i))));
        } else if (i < s || sd.case_tag == CaseTag::OddM) {
            ei = x_element(sd, i, i + 1);
            fi = x_element(sd, i + 1, i).scaled(QLaurent(Rational(sd.sign(i))));
        } else if (sd.case_tag == CaseTag::EvenM_sEven) {
            ei = x_element(sd, s - 1, s + 1);
            fi = x_element(sd, s + 1, s - 1).scaled(QLaurent(Rational(sd.sign(s - 1))));
        } else {  // EvenM_sOdd, i = s
            ei = GradedMatrix<QLaurent>::unit(sd, s, s + 1);
            fi = GradedMatrix<QLaurent>::unit(sd, s + 1, s).scaled(QLaurent(Rational(-2)));
            // kappa_s = (q + q^{-1}) / 2
            kappa = QLaurent::monomial(Rational(1, 2), 4) + QLaurent::monomial(Rational(1, 2), -4);
        }
        rep.e.push_back(ei);
        rep.f.push_back(fi.scaled(kappa));
        rep.kappa.push_back(kappa);

        QMat h(sd, 1);
        std::vector<int> diag = classical_h_diag(sd, i);
        for (int j = 0; j < sd.N; ++j) h.set(j, j, QLaurent::t_power(2 * diag[j]));
        rep.hhalf.push_back(h);
    }
    return rep;
}

QMat generator_matrix(const FinRep& rep, const GenRef& g) {
    switch (g.kind) {
        case 'e':
            return rep.e[g.i];
        case 'f':
            return rep.f[g.i];
        case '+':
            return rep.hhalf[g.i];
        case '-':
            return rep.hhalf_inv(g.i);
    }
    throw UnknownGenerator(std::string(1, g.kind));
}

Weight generator_weight(const FinRep& rep, const GenRef& g) {
    const SuperData& sd = rep.data();
    switch (g.kind) {
        case 'e':
            return sd.roots.simple[g.i];
        case 'f':
            return -sd.roots.simple[g.i];
        case '+':
        case '-':
            return Weight(sd.weight_rank());
    }
    throw UnknownGenerator(std::string(1, g.kind));
}

int generator_parity(const FinRep& rep, const GenRef& g) {
    if (g.kind == 'e' || g.kind == 'f') return rep.gen_parity(g.i);
    if (g.kind == '+' || g.kind == '-') return 0;
    throw UnknownGenerator(std::string(1, g.kind));
}

QMat coproduct_action(const FinRep& rep, const GenRef& g, CoVariant variant) {
    const SuperData& sd = rep.data();
    QMat result(sd, 2);
    const bool jantzen = variant == CoVariant::DeltaJ || variant == CoVariant::DeltaJOp;
    switch (g.kind) {
        case 'e': {
            const QMat& ei = rep.e[g.i];
            if (jantzen)
                result = kron_graded(rep.hfull(g.i), ei) +
                         kron_graded(ei, QMat::identity(sd, 1));
            else
                result = kron_graded(rep.hhalf[g.i], ei) + kron_graded(ei, rep.hhalf_inv(g.i));
            break;
        }
        case 'f': {
            const QMat& fi = rep.f[g.i];
            if (jantzen)
                result = kron_graded(QMat::identity(sd, 1), fi) +
                         kron_graded(fi, diagonal_inverse(rep.hfull(g.i)));
            else
                result = kron_graded(rep.hhalf[g.i], fi) + kron_graded(fi, rep.hhalf_inv(g.i));
            break;
        }
        case '+': {
            result = kron_graded(rep.hhalf[g.i], rep.hhalf[g.i]);
            break;
        }
        case '-': {
            QMat inv = rep.hhalf_inv(g.i);
            result = kron_graded(inv, inv);
            break;
        }
        default:
            throw UnknownGenerator(std::string(1, g.kind));
    }
    if (variant == CoVariant::DeltaOp || variant == CoVariant::DeltaJOp) {
        QMat tau = tau_matrix<QLaurent>(sd);
        result = tau * result * tau;
    }
    return result;
}

QMat ftilde_half(const SuperData& sd) {
    QMat r(sd, 2);
    for (int i = 1; i <= sd.N; ++i)
        for (int j = 1; j <= sd.N; ++j) {
            int idx = (i - 1) * sd.N + (j - 1);
            r.set(idx, idx, QLaurent::t_power(-2 * sd.eps_pair(i, j)));
        }
    return r;
}

namespace {

/// Weight of a basis vector of V (x) V.
Weight tensor_weight(const SuperData& sd, int composite) {
    int i = composite / sd.N + 1, j = composite % sd.N + 1;
    return sd.eps(i) + sd.eps(j);
}

void verify_highest(const FinRep& rep, const QVec& w, const Weight& mu, const std::string& name) {
    const SuperData& sd = rep.data();
    for (int a = 0; a < sd.s; ++a) {
        QVec image = mat_vec(coproduct_action(rep, GenRef{'e', a}, CoVariant::Delta), w);
        if (!image.empty())
            throw AnnihilationFailure(name + " not annihilated by e_" + std::to_string(a + 1));
        QMat dh = coproduct_action(rep, GenRef{'+', a}, CoVariant::Delta);
        QLaurent expect = QLaurent::t_power(sd.pair4(sd.roots.simple[a], mu) / 2);
        QVec scaled = vec_scaled(w, expect);
        if (!(mat_vec(dh, w) == scaled))
            throw AnnihilationFailure(name + " has wrong weight under h_" + std::to_string(a + 1));
    }
}

}  // namespace

HighestVectors highest_vectors(const FinRep& rep) {
    const SuperData& sd = rep.data();
    const int N = sd.N;
    HighestVectors hv;
    vec_add(hv.w1, 0, QLaurent(1));

    // w2 = v1 (x) v2 - (-1)^{1(1+2)} q^{(-1)^{1}} v2 (x) v1
    vec_add(hv.w2, 1, QLaurent(1));
    int sgn12 = (sd.bar(1) * ((sd.bar(1) + sd.bar(2)) % 2)) % 2 ? -1 : 1;
    vec_add(hv.w2, N, QLaurent::monomial(Rational(-sgn12), 4 * sd.sign(1)));

    verify_highest(rep, hv.w1, sd.eps(1).scaled(2), "w1");
    verify_highest(rep, hv.w2, sd.eps(1) + sd.eps(2), "w2");

    if (sd.family == Family::GlA) return hv;

    const int s = sd.s;
    std::vector<QLaurent> c(N);
    auto C = [&](int i) -> QLaurent& { return c[i - 1]; };
    C(1) = QLaurent(1);
    for (int a = 1; a < s; ++a)
        C(a + 1) = QLaurent::monomial(Rational(sd.theta_of(a) * sd.theta_of(a + 1)),
                                      2 * (sd.sign(a) + sd.sign(a + 1))) *
                   C(a);
    switch (sd.case_tag) {
        case CaseTag::OddM: {
            QLaurent step = QLaurent::monomial(Rational(sd.theta_of(s) * sd.theta_of(s + 1)),
                                               2 * sd.sign(s));
            C(s + 1) = step * C(s);
            int sg = (sd.bar(s) + sd.parity[s]) % 2 ? -1 : 1;  // parity[s] is that of v_{s+1}
            C(s + 2) = step.scaled(Rational(sg)) * C(s + 1);
            break;
        }
        case CaseTag::EvenM_sEven:
            C(s + 1) = QLaurent::monomial(Rational(sd.theta_of(s - 1) * sd.theta_of(s + 1)),
                                          2 * (sd.sign(s) + sd.sign(s - 1))) *
                       C(s - 1);
            break;
        case CaseTag::EvenM_sOdd:
            C(s + 1) = QLaurent::monomial(Rational(-1), 8 * sd.sign(s)) * C(s);
            break;
        default:
            break;
    }
    for (int a = s - 1; a >= 1; --a) {
        int sg = (sd.bar(a) + sd.bar(a + 1)) % 2 ? -1 : 1;
        c[sd.prime(a) - 1] =
            QLaurent::monomial(Rational(sg * sd.theta_of(a) * sd.theta_of(a + 1)),
                               2 * (sd.sign(a) + sd.sign(a + 1))) *
            c[sd.prime(a + 1) - 1];
    }
    hv.c = c;
    for (int i = 1; i <= N; ++i) vec_add(hv.w3, (i - 1) * N + (sd.prime(i) - 1), c[i - 1]);
    verify_highest(rep, hv.w3, Weight(sd.weight_rank()), "w3");
    return hv;
}

TaggedOp tagged_gen(const FinRep& rep, const GenRef& g) {
    return TaggedOp{generator_matrix(rep, g), generator_parity(rep, g),
                    generator_weight(rep, g), 0};
}

TaggedOp qbracket(const SuperData& sd, const TaggedOp& a, const TaggedOp& b) {
    TaggedOp r;
    int sign = (a.parity * b.parity) % 2 ? -1 : 1;
    QLaurent coeff = QLaurent::monomial(Rational(sign), sd.pair4(a.deg, b.deg));
    r.mat = a.mat * b.mat - (b.mat * a.mat).scaled(coeff);
    r.parity = (a.parity + b.parity) % 2;
    r.deg = a.deg + b.deg;
    r.udeg = a.udeg + b.udeg;
    return r;
}

namespace {

Check matrix_zero_check(const std::string& id, const std::string& rule, const QMat& m) {
    return Check::of(id, rule, m.is_zero(), "residual " + m.residual_summary());
}

}  // namespace

std::vector<Check> check_relations(const FinRep& rep) {
    const SuperData& sd = rep.data();
    std::vector<Check> out;
    const int s = sd.s;
    const QLaurent q = QLaurent::q_power(1), qi = QLaurent::q_power(-1);

    for (int i = 0; i < s; ++i) {
        QMat hh = rep.hhalf[i] * rep.hhalf_inv(i) - QMat::identity(sd, 1);
        out.push_back(matrix_zero_check("rel.hh.inv." + std::to_string(i + 1),
                                        "q^{h/2} q^{-h/2} = 1", hh));
        for (int j = i + 1; j < s; ++j)
            out.push_back(matrix_zero_check(
                "rel.hh." + std::to_string(i + 1) + "." + std::to_string(j + 1),
                "Cartan pieces commute", rep.hhalf[i] * rep.hhalf[j] - rep.hhalf[j] * rep.hhalf[i]));
    }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            int aij = sd.roots.cartan[i][j];
            QMat lhs_e = rep.hhalf[i] * rep.e[j] * rep.hhalf_inv(i) -
                         rep.e[j].scaled(QLaurent::t_power(2 * aij));
            QMat lhs_f = rep.hhalf[i] * rep.f[j] * rep.hhalf_inv(i) -
                         rep.f[j].scaled(QLaurent::t_power(-2 * aij));
            std::string suff = std::to_string(i + 1) + "." + std::to_string(j + 1);
            out.push_back(matrix_zero_check("rel.he." + suff,
                                            "q^{h_i/2} e_j q^{-h_i/2} = q^{a_ij/2} e_j", lhs_e));
            out.push_back(matrix_zero_check("rel.hf." + suff,
                                            "q^{h_i/2} f_j q^{-h_i/2} = q^{-a_ij/2} f_j", lhs_f));
        }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            int sign = (rep.gen_parity(i) * rep.gen_parity(j)) % 2 ? -1 : 1;
            QMat lhs = rep.e[i] * rep.f[j] - (rep.f[j] * rep.e[i]).scaled(QLaurent(Rational(sign)));
            if (i == j) {
                QMat h = rep.hfull(i);
                QMat rhs(sd, 1);
                for (const auto& [r, row] : h.rows())
                    for (const auto& [cidx, v] : row)
                        rhs.set(r, cidx, exact_div(v - inverse_of(v), q - qi));
                lhs -= rhs;
            }
            out.push_back(matrix_zero_check(
                "rel.ef." + std::to_string(i + 1) + "." + std::to_string(j + 1),
                "[e_i, f_j] = delta_ij (q^{h_i} - q^{-h_i}) / (q - q^{-1})", lhs));
        }

    // P-grading compatibility: rho(g) sends the weight space of eps_j into
    // that of deg(g) + eps_j.
    bool graded = true;
    std::string where;
    for (int i = 0; i < s && graded; ++i)
        for (char kind : {'e', 'f', '+', '-'}) {
            GenRef g{kind, i};
            QMat m = generator_matrix(rep, g);
            Weight d = generator_weight(rep, g);
            for (const auto& [r, row] : m.rows())
                for (const auto& [cidx, v] : row) {
                    (void)v;
                    if (!(sd.eps(r + 1) == d + sd.eps(cidx + 1))) {
                        graded = false;
                        where = std::string(1, kind) + "_" + std::to_string(i + 1);
                    }
                }
        }
    out.push_back(Check::of("rel.grading", "generators shift weights by their degree", graded,
                            "violated by " + where));
    return out;
}

std::vector<Check> verify_serre(const FinRep& rep) {
    const SuperData& sd = rep.data();
    std::vector<Check> out;
    const int s = sd.s;

    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j) {
            if (sd.roots.cartan[i][j] != 0) continue;
            TaggedOp ee = qbracket(sd, tagged_gen(rep, {'e', i}), tagged_gen(rep, {'e', j}));
            TaggedOp ff = qbracket(sd, tagged_gen(rep, {'f', i}), tagged_gen(rep, {'f', j}));
            std::string suff = std::to_string(i + 1) + "." + std::to_string(j + 1);
            out.push_back(matrix_zero_check("serre.ee." + suff,
                                            "[[e_i, e_j]] = 0 when a_ij = 0", ee.mat));
            out.push_back(matrix_zero_check("serre.ff." + suff,
                                            "[[f_i, f_j]] = 0 when a_ij = 0", ff.mat));
        }

    if (sd.family == Family::GlA) {
        for (int i = 0; i < s; ++i) {
            bool even = rep.gen_parity(i) == 0;
            for (int j : {i - 1, i + 1}) {
                if (j < 0 || j >= s || !even) continue;
                TaggedOp inner = qbracket(sd, tagged_gen(rep, {'e', i}), tagged_gen(rep, {'e', j}));
                TaggedOp lhs = qbracket(sd, tagged_gen(rep, {'e', i}), inner);
                out.push_back(matrix_zero_check(
                    "serre.eee." + std::to_string(i + 1) + "." + std::to_string(j + 1),
                    "[[e_i, [[e_i, e_j]]]] = 0 for even alpha_i", lhs.mat));
                TaggedOp innerf =
                    qbracket(sd, tagged_gen(rep, {'f', i}), tagged_gen(rep, {'f', j}));
                TaggedOp lhsf = qbracket(sd, tagged_gen(rep, {'f', i}), innerf);
                out.push_back(matrix_zero_check(
                    "serre.fff." + std::to_string(i + 1) + "." + std::to_string(j + 1),
                    "[[f_i, [[f_i, f_j]]]] = 0 for even alpha_i", lhsf.mat));
            }
            if (!even && i >= 1 && i + 1 < s) {
                for (char kind : {'e', 'f'}) {
                    TaggedOp b1 = qbracket(sd, tagged_gen(rep, {kind, i - 1}),
                                           tagged_gen(rep, {kind, i}));
                    TaggedOp b2 = qbracket(sd, b1, tagged_gen(rep, {kind, i + 1}));
                    TaggedOp b3 = qbracket(sd, b2, tagged_gen(rep, {kind, i}));
                    out.push_back(matrix_zero_check(
                        std::string("serre.quartic.") + kind + "." + std::to_string(i + 1),
                        "quartic relation at an odd middle node", b3.mat));
                }
            }
        }
    } else if (sd.N % 2 == 0 && sd.N >= 6 && sd.bar(sd.s - 1) == 1 && sd.bar(sd.s) == 0) {
        // Cubic relation [[e_s, [[e_{s-1}, e_{s-2}]]]] = [[e_{s-1}, [[e_s, e_{s-2}]]]]
        // in the even case with parity pattern (..., 1, 0).
        TaggedOp l = qbracket(
            sd, tagged_gen(rep, {'e', s - 1}),
            qbracket(sd, tagged_gen(rep, {'e', s - 2}), tagged_gen(rep, {'e', s - 3})));
        TaggedOp r = qbracket(
            sd, tagged_gen(rep, {'e', s - 2}),
            qbracket(sd, tagged_gen(rep, {'e', s - 1}), tagged_gen(rep, {'e', s - 3})));
        out.push_back(matrix_zero_check("serre.cubic", "cubic relation at the fork",
                                        l.mat - r.mat));
    }
    return out;
}

std::vector<Check> check_highest_weight_uniqueness(const FinRep& rep) {
    const SuperData& sd = rep.data();
    std::vector<Check> out;
    const int dim = sd.N * sd.N;
    std::vector<Weight> mus = {sd.eps(1).scaled(2), sd.eps(1) + sd.eps(2),
                               Weight(sd.weight_rank())};
    std::vector<std::string> names = {"2eps1", "eps1+eps2", "zero"};
    const int count = sd.family == Family::Osp ? 3 : 2;
    for (int t = 0; t < count; ++t) {
        std::vector<int> space;
        for (int x = 0; x < dim; ++x)
            if (tensor_weight(sd, x) == mus[t]) space.push_back(x);
        // Columns of the stacked e_a-action matrices restricted to the space.
        std::vector<QMat> actions;
        for (int a = 0; a < sd.s; ++a)
            actions.push_back(coproduct_action(rep, GenRef{'e', a}, CoVariant::Delta));
        std::vector<std::vector<QRat>> columns(space.size());
        for (size_t k = 0; k < space.size(); ++k)
            for (const QMat& act : actions)
                for (int r = 0; r < dim; ++r) columns[k].push_back(QRat(act.at(r, space[k])));
        int rank = 0;
        if (!space.empty()) {
            EchelonBasis<QRat> basis(static_cast<int>(columns[0].size()));
            for (auto& col : columns) basis.insert(col);
            rank = basis.rank();
        }
        int kernel = static_cast<int>(space.size()) - rank;
        out.push_back(Check::of("unique.hwv." + names[t],
                                "highest-weight space of weight " + mus[t].str() + " is a line",
                                kernel == 1, "kernel dimension " + std::to_string(kernel)));
    }
    return out;
}

}  // namespace qrmat
