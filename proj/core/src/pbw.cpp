#include "qrmat/pbw.hpp"

#include <algorithm>
#include <map>

#include "qrmat/rfinite.hpp"

namespace qrmat {

namespace {

/// Accumulate coeff * (E_ab (x) E_cd) with its Koszul realization sign.
void add_ee(QMat& m, int a, int b, int c, int d, const QLaurent& coeff) {
    const SuperData& sd = m.sd();
    int sign = ((sd.bar(c) + sd.bar(d)) % 2) * sd.bar(b);
    m.add((a - 1) * sd.N + (c - 1), (b - 1) * sd.N + (d - 1), sign % 2 ? -coeff : coeff);
}

int parity_run(const SuperData& sd, int from, int to) {  // sum of bar(k), k in [from, to]
    int p = 0;
    for (int k = from; k <= to; ++k) p += sd.bar(k);
    return p % 2;
}

}  // namespace

QMat e_small(const SuperData& sd, int i, int j) {
    QMat r(sd, 1);
    r.add(i - 1, j - 1, QLaurent(1));
    int sg = (sd.bar(i) * ((sd.bar(i) + sd.bar(j)) % 2)) % 2 ? -1 : 1;
    int expo = -sd.rho_pair4(sd.eps(i) - sd.eps(j)) + 2 * sd.eps_pair(i, i) +
               2 * sd.eps_pair(j, j);
    r.add(sd.prime(j) - 1, sd.prime(i) - 1,
          QLaurent::monomial(Rational(-sg * sd.theta_of(i) * sd.theta_of(j)), expo));
    return r;
}

QMat f_small(const SuperData& sd, int i, int j) {
    QMat r(sd, 1);
    r.add(j - 1, i - 1, QLaurent(1));
    int sg = (sd.bar(j) * ((sd.bar(i) + sd.bar(j)) % 2)) % 2 ? -1 : 1;
    int expo = sd.rho_pair4(sd.eps(i) - sd.eps(j)) - 2 * sd.eps_pair(i, i) -
               2 * sd.eps_pair(j, j);
    r.add(sd.prime(i) - 1, sd.prime(j) - 1,
          QLaurent::monomial(Rational(-sg * sd.theta_of(i) * sd.theta_of(j)), expo));
    return r;
}

namespace {

/// Shape of a reduced positive root in matrix-label terms.
struct RootShape {
    enum Kind { Diff, Single, Sum, Double } kind;
    int i = 0, j = 0;  // eps_i - eps_j, eps_i, eps_i + eps_j, 2 eps_i
};

RootShape classify(const SuperData& sd, const Weight& gamma) {
    std::vector<int> c(sd.weight_rank());
    for (int k = 0; k < sd.weight_rank(); ++k) c[k] = gamma.half2[k] / 2;
    RootShape r{RootShape::Diff, 0, 0};
    if (sd.family == Family::GlA) {
        for (int k = 1; k <= sd.N; ++k) {
            if (c[k - 1] == 1) r.i = k;
            if (c[k - 1] == -1) r.j = k;
        }
        r.kind = RootShape::Diff;
        return r;
    }
    int plus = 0, minus = 0, twos = 0, i = 0, j = 0;
    for (int k = 1; k <= sd.s; ++k) {
        if (c[k - 1] == 2) {
            i = k;
            ++twos;
        } else if (c[k - 1] == 1) {
            (i == 0 ? i : j) = k;
            ++plus;
        } else if (c[k - 1] == -1) {
            j = k;
            ++minus;
        }
    }
    if (twos == 1) return RootShape{RootShape::Double, i, 0};
    if (minus == 1) return RootShape{RootShape::Diff, i, j};
    if (plus == 1) return RootShape{RootShape::Single, i, 0};
    return RootShape{RootShape::Sum, i, j};
}

/// Closed forms of the root-vector actions, per case.
void closed_form_action(const SuperData& sd, const Weight& gamma, QMat& e_out, QMat& f_out) {
    RootShape sh = classify(sd, gamma);
    const int s = sd.s;
    const QLaurent qplus = QLaurent::q_power(1) + QLaurent::q_power(-1);
    if (sd.family == Family::GlA) {
        e_out = GradedMatrix<QLaurent>::unit(sd, sh.i, sh.j);
        f_out = GradedMatrix<QLaurent>::unit(sd, sh.j, sh.i)
                    .scaled(QLaurent(Rational(parity_run(sd, sh.i, sh.j - 1) ? -1 : 1)));
        return;
    }
    if (sh.kind == RootShape::Diff || sh.kind == RootShape::Single) {
        int jm = sh.kind == RootShape::Diff ? sh.j : s + 1;
        int fsign = parity_run(sd, sh.i, jm - 1) ? -1 : 1;
        e_out = e_small(sd, sh.i, jm);
        f_out = f_small(sd, sh.i, jm).scaled(QLaurent(Rational(fsign)));
        return;
    }
    if (sh.kind == RootShape::Sum) {
        const int i = sh.i, j = sh.j;
        int eprod = 1, fprod = 1;
        for (int k = j; k <= s; ++k) {
            eprod *= -((sd.bar(k) * ((sd.bar(k) + sd.bar(k + 1)) % 2)) % 2 ? -1 : 1);
            fprod *= -((sd.bar(k + 1) * ((sd.bar(k) + sd.bar(k + 1)) % 2)) % 2 ? -1 : 1);
        }
        int fsign = parity_run(sd, i, j - 1) ? -1 : 1;
        if (sd.case_tag == CaseTag::OddM) {
            int th = sd.theta_of(j) * sd.theta_of(s + 1);
            e_out = e_small(sd, i, sd.prime(j)).scaled(QLaurent(Rational(th * eprod)));
            f_out = f_small(sd, i, sd.prime(j)).scaled(QLaurent(Rational(fsign * th * fprod)));
        } else if (sd.case_tag == CaseTag::EvenM_sEven) {
            int th = sd.theta_of(j) * sd.theta_of(s);
            e_out = e_small(sd, i, sd.prime(j)).scaled(QLaurent(Rational(-th * eprod)));
            f_out = f_small(sd, i, sd.prime(j)).scaled(QLaurent(Rational(-fsign * th * fprod)));
        } else {
            int th = sd.theta_of(j) * sd.theta_of(s);
            e_out = e_small(sd, i, sd.prime(j)).scaled(QLaurent(Rational(-th * eprod)));
            f_out = f_small(sd, i, sd.prime(j))
                        .scaled(qplus.scaled(Rational(fsign * th * fprod)));
        }
        return;
    }
    // Double: 2 eps_i with bar(i) = 1
    const int i = sh.i;
    int th = sd.theta_of(i) * sd.theta_of(s);
    QLaurent ecoeff = QLaurent::monomial(Rational(th), -sd.rho_pair4(sd.eps(i))) *
                      (QLaurent(1) + QLaurent::q_power(-2));
    QLaurent fcoeff = QLaurent::monomial(Rational(-th), sd.rho_pair4(sd.eps(i))) *
                      (QLaurent(1) + QLaurent::q_power(2));
    if (sd.case_tag == CaseTag::EvenM_sOdd) fcoeff *= qplus;
    e_out = GradedMatrix<QLaurent>::unit(sd, i, sd.prime(i)).scaled(ecoeff);
    f_out = GradedMatrix<QLaurent>::unit(sd, sd.prime(i), i).scaled(fcoeff);
}

}  // namespace

QRat pairing_table_value(const SuperData& sd, const Weight& gamma) {
    RootShape sh = classify(sd, gamma);
    const QLaurent qdm = QLaurent::q_power(-1) - QLaurent::q_power(1);       // q^{-1} - q
    const QLaurent q2dm = QLaurent::q_power(-2) - QLaurent::q_power(2);      // q^{-2} - q^2
    for (const Weight& a : sd.roots.simple)
        if (gamma == a) return QRat(QLaurent(1), qdm);  // generator pairing
    switch (sh.kind) {
        case RootShape::Diff:
        case RootShape::Single: {
            int jm = sh.kind == RootShape::Diff ? sh.j : sd.s + 1;
            int sg = parity_run(sd, sh.i + 1, jm - 1) ? -1 : 1;
            return QRat(QLaurent(Rational(sg)), qdm);
        }
        case RootShape::Sum: {
            int sg = parity_run(sd, sh.i + 1, sh.j) ? -1 : 1;
            if (sd.case_tag == CaseTag::EvenM_sOdd)
                return QRat(q2dm.scaled(Rational(sg)), qdm * qdm);
            return QRat(QLaurent(Rational(sg)), qdm);
        }
        case RootShape::Double: {
            if (sd.case_tag == CaseTag::EvenM_sOdd)
                return QRat(q2dm * q2dm, qdm * qdm * qdm);
            return QRat(q2dm, qdm * qdm);
        }
    }
    throw Error("unreachable");
}

std::vector<RootVectorPair> root_vectors(const SuperData& sd, const FinRep& rep) {
    std::vector<DominantWord> words = dominant_lyndon(sd);
    std::map<Weight, std::pair<QMat, QMat>> memo;
    for (int i = 0; i < sd.s; ++i) memo[sd.roots.simple[i]] = {rep.e[i], rep.f[i]};

    auto build = [&](auto&& self, const Weight& gamma) -> std::pair<QMat, QMat> {
        auto it = memo.find(gamma);
        if (it != memo.end()) return it->second;
        auto [alpha, beta] = costandard_split(sd, gamma);
        auto [ea, fa] = self(self, alpha);
        auto [eb, fb] = self(self, beta);
        int pa = sd.root_parity(alpha), pb = sd.root_parity(beta);
        int sign = (pa * pb) % 2 ? -1 : 1;
        QLaurent qab = QLaurent::monomial(Rational(sign), sd.pair4(alpha, beta));
        QLaurent qab_inv = QLaurent::monomial(Rational(sign), -sd.pair4(alpha, beta));
        QMat e = ea * eb - (eb * ea).scaled(qab);
        QMat f = fb * fa - (fa * fb).scaled(qab_inv);
        memo[gamma] = {e, f};
        return {e, f};
    };

    std::vector<RootVectorPair> out;
    for (const DominantWord& dw : words) {
        RootVectorPair rv;
        rv.gamma = dw.degree;
        rv.lyndon = dw.word;
        rv.parity = sd.root_parity(dw.degree);
        rv.is_simple = dw.word.size() == 1;
        if (!rv.is_simple) rv.split = costandard_split(sd, dw.degree);
        auto [e, f] = build(build, dw.degree);
        rv.e_mat = e;
        rv.f_mat = f;
        if (!rv.is_simple) {
            QMat ec(sd, 1), fc(sd, 1);
            closed_form_action(sd, dw.degree, ec, fc);
            if (!(e == ec))
                throw ClosedFormMismatch("e_gamma for " + dw.degree.str() + " differs at " +
                                         (e - ec).first_entry_str());
            if (!(f == fc))
                throw ClosedFormMismatch("f_gamma for " + dw.degree.str() + " differs at " +
                                         (f - fc).first_entry_str());
        }
        rv.pairing1 = pairing_table_value(sd, dw.degree);
        out.push_back(std::move(rv));
    }
    return out;
}

QRat pair_J_power(const SuperData& sd, const RootVectorPair& rv, int k) {
    if (k == 0) return QRat(1);
    if (k == 1) return rv.pairing1;
    if (rv.parity == 1 && sd.pair4(rv.gamma, rv.gamma) == 0) throw IsotropicPower();
    QLaurent c = power_pairing_factor(sd, rv.gamma, k).bar();
    long half = static_cast<long>(k) * (k - 1) / 2;
    int sign = (half % 2) && rv.parity ? -1 : 1;
    QRat r(c.scaled(Rational(sign)));
    for (int t = 0; t < k; ++t) r *= rv.pairing1;
    return r;
}

namespace {

/// Entrywise exact multiplication of a QLaurent matrix by the inverse of a
/// fraction; the closed forms guarantee the division stays in the Laurent ring.
QMat scale_by_inverse(const QMat& m, const QRat& pairing) {
    QMat r(m.sd(), m.legs());
    for (const auto& [i, row] : m.rows())
        for (const auto& [j, v] : row) r.add(i, j, exact_div(v * pairing.den(), pairing.num()));
    return r;
}

}  // namespace

QMat theta_local(const FinRep& rep, const RootVectorPair& rv) {
    const SuperData& sd = rep.data();
    QMat theta = QMat::identity(sd, 2);
    QMat ek = rv.e_mat, fk = rv.f_mat;
    for (int k = 1; !ek.is_zero() && !fk.is_zero(); ++k) {
        if (k > 4) throw Error("local factor series did not terminate");
        theta += scale_by_inverse(kron_graded(fk, ek), pair_J_power(sd, rv, k));
        ek = ek * rv.e_mat;
        fk = fk * rv.f_mat;
    }
    QMat closed = theta_local_closed_form(sd, rv);
    if (!(theta == closed))
        throw ClosedFormMismatch("Theta_gamma for " + rv.gamma.str() + " differs at " +
                                 (theta - closed).first_entry_str());
    return theta;
}

QMat theta_local_closed_form(const SuperData& sd, const RootVectorPair& rv) {
    RootShape sh = classify(sd, rv.gamma);
    const QLaurent qd = QLaurent::q_power(1) - QLaurent::q_power(-1);
    QMat theta = QMat::identity(sd, 2);
    if (sd.family == Family::GlA) {
        QMat term = kron_graded(GradedMatrix<QLaurent>::unit(sd, sh.j, sh.i),
                                GradedMatrix<QLaurent>::unit(sd, sh.i, sh.j));
        theta -= term.scaled(qd.scaled(Rational(sd.sign(sh.i))));
        return theta;
    }
    switch (sh.kind) {
        case RootShape::Diff:
        case RootShape::Sum:
        case RootShape::Single: {
            int jm = sh.kind == RootShape::Diff ? sh.j
                     : sh.kind == RootShape::Single ? sd.s + 1
                                                    : sd.prime(sh.j);
            QMat term = kron_graded(f_small(sd, sh.i, jm), e_small(sd, sh.i, jm));
            theta -= term.scaled(qd.scaled(Rational(sd.sign(sh.i))));
            if (sh.kind == RootShape::Single) {
                // extra contribution of the square of the odd root vector
                QLaurent extra =
                    qd * (QLaurent(1) -
                          QLaurent::monomial(Rational(sd.sign(sh.i)),
                                             -4 * sd.eps_pair(sh.i, sh.i)));
                QMat ee = kron_graded(GradedMatrix<QLaurent>::unit(sd, sd.prime(sh.i), sh.i),
                                      GradedMatrix<QLaurent>::unit(sd, sh.i, sd.prime(sh.i)));
                theta += ee.scaled(extra);
            }
            return theta;
        }
        case RootShape::Double: {
            QLaurent coeff =
                qd * (QLaurent::q_power(-1) - QLaurent::monomial(Rational(sd.sign(sh.i)),
                                                                 -4 * sd.eps_pair(sh.i, sh.i)));
            QMat ee = kron_graded(GradedMatrix<QLaurent>::unit(sd, sd.prime(sh.i), sh.i),
                                  GradedMatrix<QLaurent>::unit(sd, sh.i, sd.prime(sh.i)));
            theta += ee.scaled(coeff);
            return theta;
        }
    }
    throw Error("unreachable");
}

QMat theta_factorized(const SuperData& sd, const FinRep& rep) {
    std::vector<RootVectorPair> rvs = root_vectors(sd, rep);  // sorted by word
    QMat theta = QMat::identity(sd, 2);
    // decreasing order: largest word leftmost
    for (auto it = rvs.rbegin(); it != rvs.rend(); ++it) theta = theta * theta_local(rep, *it);
    return theta;
}

QMat theta_closed_form(const SuperData& sd) {
    const QLaurent qd = QLaurent::q_power(1) - QLaurent::q_power(-1);
    QMat theta = QMat::identity(sd, 2);
    const int N = sd.N;
    if (sd.family == Family::GlA) {
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                QLaurent c = qd.scaled(Rational(-sd.sign(i)));
                add_ee(theta, j, i, i, j, c);
            }
        return theta;
    }
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) {
            QLaurent base = qd.scaled(Rational(-sd.sign(j)));
            add_ee(theta, i, j, j, i, base * QLaurent::t_power(4 * sd.eps_pair(i, j)));
            int sg = (sd.bar(j) * ((sd.bar(i) + sd.bar(j)) % 2)) % 2 ? -1 : 1;
            int expo = -sd.rho_pair4(sd.eps(i) - sd.eps(j)) - 2 * sd.eps_pair(i, i) -
                       2 * sd.eps_pair(j, j);
            add_ee(theta, i, j, sd.prime(i), sd.prime(j),
                   base * QLaurent::monomial(Rational(-sg * sd.theta_of(i) * sd.theta_of(j)),
                                             expo));
        }
    return theta;
}

QMat theta_grouped_product(const FinRep& rep, const std::vector<RootVectorPair>& rvs, int i) {
    const SuperData& sd = rep.data();
    auto find = [&](const Weight& g) -> const RootVectorPair& {
        for (const auto& rv : rvs)
            if (rv.gamma == g) return rv;
        throw Error("root vector missing for " + g.str());
    };
    QMat acc = QMat::identity(sd, 2);
    if (sd.family == Family::GlA) {
        for (int j = sd.N; j >= i + 1; --j)
            acc = acc * theta_local(rep, find(sd.eps(i) - sd.eps(j)));
        return acc;
    }
    const int s = sd.s;
    for (int j = i + 1; j <= s; ++j) acc = acc * theta_local(rep, find(sd.eps(i) + sd.eps(j)));
    if (sd.case_tag == CaseTag::OddM)
        acc = acc * theta_local(rep, find(sd.eps(i)));
    else if (sd.bar(i) == 1)
        acc = acc * theta_local(rep, find(sd.eps(i).scaled(2)));
    for (int j = s; j >= i + 1; --j) acc = acc * theta_local(rep, find(sd.eps(i) - sd.eps(j)));
    return acc;
}

QMat theta_grouped_closed_form(const SuperData& sd, int i) {
    const QLaurent qd = QLaurent::q_power(1) - QLaurent::q_power(-1);
    QMat theta = QMat::identity(sd, 2);
    if (sd.family == Family::GlA) {
        for (int j = i + 1; j <= sd.N; ++j) {
            QMat term = kron_graded(GradedMatrix<QLaurent>::unit(sd, j, i),
                                    GradedMatrix<QLaurent>::unit(sd, i, j));
            theta -= term.scaled(qd.scaled(Rational(sd.sign(i))));
        }
        return theta;
    }
    for (int j = i + 1; j < sd.prime(i); ++j) {
        QMat term = kron_graded(f_small(sd, i, j), e_small(sd, i, j));
        theta -= term.scaled(qd.scaled(Rational(sd.sign(i))));
    }
    QLaurent coeff = qd * QLaurent::t_power(-4 * sd.eps_pair(i, i)) *
                     (QLaurent::t_power(2 * sd.rho_pair4(sd.eps(i))) -
                      QLaurent(Rational(sd.sign(i))));
    QMat ee = kron_graded(GradedMatrix<QLaurent>::unit(sd, sd.prime(i), i),
                          GradedMatrix<QLaurent>::unit(sd, i, sd.prime(i)));
    theta += ee.scaled(coeff);
    return theta;
}

std::vector<Check> check_theta_suite(const SuperData& sd, const FinRep& rep) {
    std::vector<Check> out;
    std::vector<RootVectorPair> rvs;
    try {
        rvs = root_vectors(sd, rep);
    } catch (const ClosedFormMismatch& e) {
        out.push_back(Check::fail("theta.root_vectors", "root vectors match closed forms",
                                  e.what()));
        return out;
    }
    out.push_back(Check::ok("theta.root_vectors", "root vectors match closed forms"));

    bool locals_ok = true;
    std::string local_err;
    QMat theta = QMat::identity(sd, 2);
    try {
        for (auto it = rvs.rbegin(); it != rvs.rend(); ++it)
            theta = theta * theta_local(rep, *it);
    } catch (const ClosedFormMismatch& e) {
        locals_ok = false;
        local_err = e.what();
    }
    out.push_back(Check::of("theta.local", "every local factor matches its closed form",
                            locals_ok, local_err));
    if (!locals_ok) return out;

    // grouped factors
    bool grouped_ok = true;
    std::string grouped_err;
    int upper = sd.family == Family::GlA ? sd.N - 1 : sd.s;
    QMat regrouped = QMat::identity(sd, 2);
    for (int i = upper; i >= 1; --i) {
        QMat gi = theta_grouped_product(rep, rvs, i);
        QMat gc = theta_grouped_closed_form(sd, i);
        if (!(gi == gc)) {
            grouped_ok = false;
            grouped_err = "factor " + std::to_string(i) + " differs at " +
                          (gi - gc).first_entry_str();
            break;
        }
        regrouped = regrouped * gi;
    }
    out.push_back(Check::of("theta.grouped", "grouped factors match their closed forms",
                            grouped_ok, grouped_err));
    if (grouped_ok)
        out.push_back(Check::of("theta.regrouped", "the grouped product rebuilds Theta",
                                regrouped == theta,
                                "mismatch at " + (regrouped - theta).first_entry_str()));

    QMat closed = theta_closed_form(sd);
    out.push_back(Check::of("theta.closed", "ordered product equals the closed Theta",
                            theta == closed,
                            "mismatch at " + (theta - closed).first_entry_str()));

    QMat tau = tau_matrix<QLaurent>(sd);
    QMat fh = ftilde_half(sd);
    QMat assembled = tau * fh * theta * fh * tau;
    QMat r0 = build_R0(sd);
    out.push_back(Check::of("theta.rmatrix", "R0 = tau f~^{1/2} Theta f~^{1/2} tau",
                            assembled == r0,
                            "mismatch at " + (assembled - r0).first_entry_str()));

    // Intertwining consequence: DeltaJ(x) Theta f~ = Theta f~ DeltaJop(x).
    QMat thetaf = theta * fh * fh;
    bool inter_ok = true;
    std::string inter_err;
    for (int i = 0; i < sd.s && inter_ok; ++i)
        for (char kind : {'e', 'f', '+'}) {
            QMat dj = coproduct_action(rep, {kind, i}, CoVariant::DeltaJ);
            QMat djop = coproduct_action(rep, {kind, i}, CoVariant::DeltaJOp);
            QMat res = dj * thetaf - thetaf * djop;
            if (!res.is_zero()) {
                inter_ok = false;
                inter_err = std::string(1, kind) + std::to_string(i + 1) + " residual at " +
                            res.first_entry_str();
                break;
            }
        }
    out.push_back(Check::of("theta.intertwine", "DeltaJ(x) Theta f~ = Theta f~ DeltaJop(x)",
                            inter_ok, inter_err));
    return out;
}

std::vector<Check> check_pairing_suite(const SuperData& sd, int max_len) {
    std::vector<Check> out;
    const QLaurent qdm = QLaurent::q_power(-1) - QLaurent::q_power(1);
    for (const DominantWord& dw : dominant_lyndon(sd)) {
        if (dw.word.size() > max_len) continue;
        FreeElem r = concat_bracket(sd, dw.word);
        QLaurent ptw = pair_tw(sd, r, r);
        QLaurent closed = pair_tw_closed_form(sd, dw);
        out.push_back(Check::of("pairing.tw." + dw.word.str(),
                                "brute-force twisted pairing matches the closed form",
                                ptw == closed, "value " + ptw.str()));
        // (f,e)_J = (-1)^{ht-1} q^{N} bar(ptw) / (q^{-1}-q)^{ht}
        int ht = root_height(sd, dw.degree);
        PNValue pn = pn_of_root(sd, dw.degree);
        QLaurent num = ptw.bar() * QLaurent::q_power(pn.n);
        if (ht % 2 == 0) num = -num;
        QLaurent den(1);
        for (int k = 0; k < ht; ++k) den *= qdm;
        QRat reconstructed(num, den);
        QRat table = pairing_table_value(sd, dw.degree);
        out.push_back(Check::of("pairing.j." + dw.word.str(),
                                "Hopf pairing reconstructed from the twisted pairing",
                                reconstructed == table,
                                "got " + reconstructed.str() + ", table " + table.str()));
    }
    return out;
}

std::vector<Check> check_dominant_structure(const SuperData& sd) {
    std::vector<Check> out;
    std::vector<DominantWord> words = dominant_lyndon(sd);
    // all words Lyndon and strictly sorted
    bool lyndon_ok = true;
    for (const auto& dw : words)
        if (!is_lyndon(dw.word)) lyndon_ok = false;
    for (size_t k = 1; k < words.size(); ++k)
        if (!(words[k - 1].word < words[k].word)) lyndon_ok = false;
    out.push_back(Check::of("lyndon.words", "dominant words are Lyndon and strictly ordered",
                            lyndon_ok, "list inconsistent"));
    // degree map is a bijection onto the reduced positive system
    std::vector<Weight> degrees;
    for (const auto& dw : words) degrees.push_back(dw.degree);
    std::vector<Weight> reduced = sd.roots.reduced_positive;
    std::sort(degrees.begin(), degrees.end());
    std::sort(reduced.begin(), reduced.end());
    bool bij = degrees == reduced &&
               std::adjacent_find(degrees.begin(), degrees.end()) == degrees.end();
    out.push_back(Check::of("lyndon.bijection",
                            "degrees biject onto the reduced positive roots", bij,
                            std::to_string(degrees.size()) + " words vs " +
                                std::to_string(reduced.size()) + " roots"));
    // costandard tables agree with word factorizations
    bool splits_ok = true;
    std::string split_err;
    for (const auto& dw : words) {
        if (dw.word.size() == 1) continue;
        auto [l1, l2] = costandard_factorization(dw.word);
        auto [a, b] = costandard_split(sd, dw.degree);
        if (!(word_degree(sd, l1) == a && word_degree(sd, l2) == b)) {
            splits_ok = false;
            split_err = dw.word.str();
            break;
        }
    }
    out.push_back(Check::of("lyndon.splits",
                            "costandard word factorization matches the root split tables",
                            splits_ok, split_err));
    return out;
}

}  // namespace qrmat
