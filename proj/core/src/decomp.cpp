#include "qrmat/decomp.hpp"

#include <algorithm>
#include <map>

#include "qrmat/fieldlinalg.hpp"
#include "qrmat/rfinite.hpp"

namespace qrmat {

namespace {

int cidx(const SuperData& sd, int i, int j) { return (i - 1) * sd.N + (j - 1); }

void add_pair(const SuperData& sd, QVec& v, int i, int j, const QLaurent& c) {
    vec_add(v, cidx(sd, i, j), c);
}

/// Two-term combination v_i (x) v_j + t v_j (x) v_i with
/// t = pm (-1)^{bar1} (-1)^{ij} q^{-pm (-1)^{bar1}} q^{-(eps_i, eps_j)}.
QVec two_term(const SuperData& sd, int i, int j, int pm) {
    QVec v;
    add_pair(sd, v, i, j, QLaurent(1));
    int sign = (pm > 0 ? 1 : -1) * (sd.bar(1) ? -1 : 1) *
               ((sd.bar(i) * sd.bar(j)) % 2 ? -1 : 1);
    int expo = -pm * 4 * sd.sign(1) - 4 * sd.eps_pair(i, j);
    add_pair(sd, v, j, i, QLaurent::monomial(Rational(sign), expo));
    return v;
}

/// Four-term combination at the mirror pair (i, i').
QVec four_term(const SuperData& sd, int i, int pm) {
    QVec v;
    int ip = sd.prime(i);
    add_pair(sd, v, i, ip, QLaurent(1));
    {
        int sign = (pm > 0 ? 1 : -1) * ((sd.bar(1) + sd.bar(i)) % 2 ? -1 : 1);
        int expo = -pm * 4 * sd.sign(1) - 4 * sd.eps_pair(i, i);
        add_pair(sd, v, ip, i, QLaurent::monomial(Rational(sign), expo));
    }
    int outer_sign = -((sd.bar(i) + sd.bar(i + 1)) % 2 ? -1 : 1) * sd.theta_of(i) *
                     sd.theta_of(i + 1);
    int outer_expo = -2 * sd.eps_pair(i, i) - 2 * sd.eps_pair(i + 1, i + 1);
    QLaurent outer = QLaurent::monomial(Rational(outer_sign), outer_expo);
    int ip1 = sd.prime(i + 1);
    add_pair(sd, v, i + 1, ip1, outer);
    {
        int sign = (pm > 0 ? 1 : -1) * ((sd.bar(1) + sd.bar(i + 1)) % 2 ? -1 : 1);
        int expo = -pm * 4 * sd.sign(1) + 4 * sd.eps_pair(i + 1, i + 1);
        add_pair(sd, v, ip1, i + 1, outer * QLaurent::monomial(Rational(sign), expo));
    }
    return v;
}

/// The (s, s') vector of the fork case, built from the (s-1)-pair and the
/// reversed s-pair.
QVec fork_ss(const SuperData& sd, int pm) {
    const int s = sd.s;
    QVec v;
    add_pair(sd, v, s - 1, sd.prime(s - 1), QLaurent(1));
    {
        int sign = (pm > 0 ? 1 : -1) * ((sd.bar(1) + sd.bar(s - 1)) % 2 ? -1 : 1);
        int expo = -pm * 4 * sd.sign(1) - 4 * sd.eps_pair(s - 1, s - 1);
        add_pair(sd, v, sd.prime(s - 1), s - 1, QLaurent::monomial(Rational(sign), expo));
    }
    int outer_sign = -((sd.bar(s - 1) + sd.bar(s)) % 2 ? -1 : 1) * sd.theta_of(s - 1) *
                     sd.theta_of(s);
    int outer_expo = -2 * sd.eps_pair(s - 1, s - 1) - 2 * sd.eps_pair(s, s);
    QLaurent outer = QLaurent::monomial(Rational(outer_sign), outer_expo);
    add_pair(sd, v, sd.prime(s), s, outer);
    {
        int sign = (pm > 0 ? 1 : -1) * ((sd.bar(1) + sd.bar(s)) % 2 ? -1 : 1);
        int expo = -pm * 4 * sd.sign(1) + 4 * sd.eps_pair(s, s);
        add_pair(sd, v, s, sd.prime(s), outer * QLaurent::monomial(Rational(sign), expo));
    }
    return v;
}

QVec special_uss(const SuperData& sd) {
    const int s = sd.s;
    QVec v;
    if (sd.case_tag == CaseTag::EvenM_sOdd) {
        // v_s (x) v_{s'} + q q^{-(eps_s, eps_s)} v_{s'} (x) v_s
        add_pair(sd, v, s, sd.prime(s), QLaurent(1));
        add_pair(sd, v, sd.prime(s), s, QLaurent::t_power(4 - 4 * sd.eps_pair(s, s)));
        return v;
    }
    // fork: same shape as the defined (s, s') vectors but with inner
    // coefficients -+ q fixed
    add_pair(sd, v, s - 1, sd.prime(s - 1), QLaurent(1));
    {
        int sign = -(sd.bar(s - 1) ? -1 : 1);
        add_pair(sd, v, sd.prime(s - 1), s - 1,
                 QLaurent::monomial(Rational(sign), 4 - 4 * sd.eps_pair(s - 1, s - 1)));
    }
    int outer_sign = -((sd.bar(s - 1) + sd.bar(s)) % 2 ? -1 : 1) * sd.theta_of(s - 1) *
                     sd.theta_of(sd.prime(s));
    int outer_expo = -2 * sd.eps_pair(s - 1, s - 1) - 2 * sd.eps_pair(s, s);
    QLaurent outer = QLaurent::monomial(Rational(outer_sign), outer_expo);
    add_pair(sd, v, sd.prime(s), s, outer);
    {
        int sign = -(sd.bar(s) ? -1 : 1);
        add_pair(sd, v, s, sd.prime(s),
                 outer * QLaurent::monomial(Rational(sign), 4 + 4 * sd.eps_pair(s, s)));
    }
    return v;
}

std::vector<QRat> densify(const SuperData& sd, const QVec& v) {
    std::vector<QRat> out(sd.N * sd.N, QRat(0));
    for (const auto& [k, c] : v) out[k] = QRat(c);
    return out;
}

SparseVec<QRat> to_qrat(const QVec& v) {
    SparseVec<QRat> out;
    for (const auto& [k, c] : v) out.emplace(k, QRat(c));
    return out;
}

}  // namespace

QVec u_vector(const SuperData& sd, int i, int j, int sign) {
    if (sd.family == Family::GlA) return two_term(sd, i, j, sign);
    if (j != sd.prime(i) || i == j) return two_term(sd, i, j, sign);
    if (sd.case_tag == CaseTag::OddM) return four_term(sd, i, sign);
    if (i != sd.s) return four_term(sd, i, sign);
    if (sd.case_tag == CaseTag::EvenM_sEven) return fork_ss(sd, sign);
    return two_term(sd, i, j, sign);  // nofork (s, s')
}

TensorSquareDecomp build_bases(const SuperData& sd, const FinRep& rep) {
    TensorSquareDecomp dec;
    const int N = sd.N;
    const bool osp = sd.family == Family::Osp;
    const bool nofork = sd.case_tag == CaseTag::EvenM_sOdd;
    for (int pm : {1, -1}) {
        auto& list = pm > 0 ? dec.wplus : dec.wminus;
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                if (nofork && i == sd.s && j == sd.prime(sd.s)) continue;
                list.push_back({i, j, u_vector(sd, i, j, pm)});
            }
        for (int i = 1; i <= N; ++i) {
            if (osp && 2 * i == N + 1) continue;  // the middle pair is excluded
            bool include = pm > 0 ? sd.bar(i) == sd.bar(1) : sd.bar(i) != sd.bar(1);
            if (include) list.push_back({i, i, u_vector(sd, i, i, pm)});
        }
    }
    if (osp && sd.case_tag != CaseTag::OddM) {
        dec.uss = special_uss(sd);
        if (nofork) {
            // include the distinguished vector in the matching family
            bool plus = sd.bar(1) == sd.bar(sd.s);
            auto& list = plus ? dec.wplus : dec.wminus;
            list.push_back({sd.s, sd.prime(sd.s), dec.uss});
        } else {
            // fork: the defined (s,s') vector of one family duplicates the
            // (s-1)-pair vector; replace it by the distinguished vector in
            // the family where it is new, and drop the duplicate
            bool plus = sd.bar(1) != sd.bar(sd.s);
            for (auto& e : (plus ? dec.wplus : dec.wminus))
                if (e.i == sd.s && e.j == sd.prime(sd.s)) e.vec = dec.uss;
            auto& other = plus ? dec.wminus : dec.wplus;
            other.erase(std::remove_if(other.begin(), other.end(),
                                       [&](const TensorSquareDecomp::Entry& e) {
                                           return e.i == sd.s && e.j == sd.prime(sd.s);
                                       }),
                        other.end());
        }
    }
    if (osp) dec.w3 = highest_vectors(rep).w3;
    return dec;
}

namespace {

/// Expected image of the lowering generator f_a on the u-vector with
/// labels (i, j) of the family pm, transcribed from the proofs' tables.
SparseVec<QRat> expected_f_image(const SuperData& sd, const TensorSquareDecomp& dec, int a,
                                 int i, int j, int pm) {
    const int s = sd.s, N = sd.N;
    SparseVec<QRat> out;
    auto u = [&](int k, int l) -> QVec {
        if (k == l) {
            bool nonzero = pm > 0 ? sd.bar(k) == sd.bar(1) : sd.bar(k) != sd.bar(1);
            if (!nonzero || (sd.family == Family::Osp && 2 * k == N + 1)) return QVec();
        }
        return u_vector(sd, k, l, pm);
    };
    auto add = [&](const QVec& vec, const QRat& coeff) {
        for (const auto& [k, c] : vec) {
            QRat val = QRat(c) * coeff;
            auto it = out.find(k);
            if (it == out.end()) {
                if (!val.is_zero()) out.emplace(k, val);
            } else {
                it->second += val;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    };
    auto tq = [](int e) { return QRat(QLaurent::t_power(e)); };
    const QRat A(QLaurent(Rational(sd.sign(a))));  // (-1)^{bar a}
    const int s1 = sd.sign(1);
    auto theta = [&](int k) { return sd.theta_of(k); };

    if (sd.family == Family::GlA) {
        if (i == j) {
            QRat p = QRat(QLaurent(1) + QLaurent::q_power(-2 * sd.sign(i)));
            if (a == i) {
                int sg = (sd.bar(a) * ((sd.bar(a) + sd.bar(a + 1)) % 2)) % 2 ? -1 : 1;
                add(u(a, a + 1), A * p * QRat(QLaurent::monomial(Rational(sg), 2 * sd.sign(i))));
            }
            return out;
        }
        if (a == i) add(u(a + 1, j), A * tq(2 * sd.eps_pair(a + 1, j)));
        if (a == j) {
            int sg = (sd.bar(i) * ((sd.bar(a) + sd.bar(a + 1)) % 2)) % 2 ? -1 : 1;
            add(u(i, a + 1), A * QRat(QLaurent(Rational(sg))));
        }
        return out;
    }

    const bool fork = sd.case_tag == CaseTag::EvenM_sEven;
    const bool nofork = sd.case_tag == CaseTag::EvenM_sOdd;
    const bool at_ss = (fork || nofork) && i == s && j == sd.prime(s);

    if (nofork && a == s) {
        QRat base(QLaurent(Rational(sd.sign(s))));
        QRat qplus = QRat(QLaurent::q_power(1) + QLaurent::q_power(-1));
        if (i == j) {
            if (i == s) {
                QRat p = QRat(QLaurent(1) + QLaurent::q_power(-2 * pm * s1));
                add(dec.uss, base * qplus * p * tq(4 * pm * s1));
            }
            return out;
        }
        if (at_ss) {
            QRat p = QRat(QLaurent(1) + QLaurent::q_power(-2 * pm * s1));
            QRat top = QRat(QLaurent(1) + QLaurent::q_power(-4 * pm * s1));
            add(u(sd.prime(s), sd.prime(s)), base * qplus * tq(4 * pm * s1) * top / p);
            return out;
        }
        if (i + j == N + 1 && i != s) {
            if (s == i + 1) {
                int sg = -((sd.bar(s - 1) + sd.bar(s)) % 2 ? -1 : 1) * theta(s - 1) * theta(s);
                add(u(sd.prime(s), sd.prime(s)),
                    base * qplus *
                        QRat(QLaurent::monomial(
                            Rational(sg),
                            -2 * sd.eps_pair(s - 1, s - 1) + 2 * sd.eps_pair(s, s))));
            }
            return out;
        }
        if (s == i) add(u(sd.prime(s), j), base * qplus);
        if (s == j) add(u(i, sd.prime(s)), base * qplus);
        return out;
    }

    if (nofork && at_ss) {  // a != s
        if (a == s - 1) {
            int sg = (sd.bar(s) * ((sd.bar(s - 1) + sd.bar(s)) % 2)) % 2 ? -1 : 1;
            add(u(s, sd.prime(s - 1)),
                A * QRat(QLaurent::monomial(Rational(sg), -2 * sd.eps_pair(s, s))));
        }
        return out;
    }

    if (fork && a == s) {
        QRat base(QLaurent(Rational(sd.sign(s - 1))));
        if (i == j) {
            QRat p = QRat(QLaurent(1) + QLaurent::q_power(-2 * sd.sign(i)));
            if (i == s - 1) {
                int sg = (sd.bar(s - 1) * ((sd.bar(s - 1) + sd.bar(s)) % 2)) % 2 ? -1 : 1;
                add(u(s - 1, sd.prime(s)),
                    base * p * QRat(QLaurent::monomial(Rational(sg), 2 * sd.sign(i))));
            }
            if (i == s) {
                int sg = -theta(s - 1) * theta(sd.prime(s));
                add(u(s, sd.prime(s - 1)),
                    base * p * QRat(QLaurent::monomial(Rational(sg), 2 * sd.sign(i))));
            }
            return out;
        }
        if (at_ss) {
            if (sd.bar(s - 1) == sd.bar(s))
                add(u(sd.prime(s), sd.prime(s - 1)),
                    base * QRat(QLaurent::t_power(2 * sd.eps_pair(s, s)) +
                                QLaurent::t_power(-6 * sd.eps_pair(s, s))));
            return out;
        }
        if (i + j == N - 1) {  // u_{i, (i+2)'}
            if (i == s - 1) {
                int sg = -((sd.bar(s - 1) + sd.bar(s)) % 2 ? -1 : 1) * theta(s - 1) *
                         theta(sd.prime(s));
                add(u_vector(sd, s, sd.prime(s), pm),
                    base *
                        QRat(QLaurent::monomial(Rational(sg), 2 * sd.eps_pair(s - 1, s - 1))));
            }
            return out;
        }
        if (i + j == N + 1 && i != s) {
            QRat acc(0);
            if (i == s - 1 && ((pm > 0 && sd.bar(1) == sd.bar(s - 1)) ||
                               (pm < 0 && sd.bar(1) != sd.bar(s - 1))))
                acc += QRat(QLaurent::t_power(2 * pm * s1) *
                            (QLaurent(1) + QLaurent::q_power(-2 * pm * s1)));
            if (s - 1 == i + 1) {
                int sg = ((sd.bar(s - 2) + sd.bar(s - 1)) % 2 ? -1 : 1) * theta(s - 2) *
                         theta(s - 1);
                acc -= QRat(
                    QLaurent::monomial(Rational(sg), -2 * sd.eps_pair(s - 2, s - 2)));
            }
            add(u(sd.prime(s), sd.prime(s - 1)), base * acc);
            return out;
        }
        // generic off-diagonal, lowering by the fork generator
        if (s - 1 == i) add(u(sd.prime(s), j), base * tq(-2 * sd.eps_pair(s, j)));
        if (s - 1 == j) {
            int sg = (sd.bar(i) * ((sd.bar(s - 1) + sd.bar(s)) % 2)) % 2 ? -1 : 1;
            add(u(i, sd.prime(s)), base * QRat(QLaurent(Rational(sg))));
        }
        if (s == i) {
            int sg = (sd.bar(s) * ((sd.bar(s - 1) + sd.bar(s)) % 2)) % 2 ? -1 : 1;
            add(u(sd.prime(s - 1), j),
                base * QRat(QLaurent::monomial(
                           Rational(-sg * theta(s - 1) * theta(sd.prime(s))),
                           -2 * sd.eps_pair(s - 1, j))));
        }
        if (s == j) {
            int sg = (((sd.bar(i) + sd.bar(s)) % 2) * ((sd.bar(s - 1) + sd.bar(s)) % 2)) % 2
                         ? -1
                         : 1;
            add(u(i, sd.prime(s - 1)),
                base * QRat(QLaurent(Rational(-sg * theta(s - 1) * theta(sd.prime(s))))));
        }
        return out;
    }

    if (fork && at_ss) {  // a != s
        if (a == s - 1 && ((pm > 0 && sd.bar(1) == sd.bar(s - 1)) ||
                           (pm < 0 && sd.bar(1) != sd.bar(s - 1)))) {
            QRat c = QRat(QLaurent::t_power(2 * s1) *
                          (QLaurent(1) + QLaurent::q_power(-2 * pm * s1)));
            add(u(s, sd.prime(s - 1)), A * c);
        }
        return out;
    }

    // the odd-case tables, shared by the untouched even-case entries
    if (i == j) {
        QRat p = QRat(QLaurent(1) + QLaurent::q_power(-2 * sd.sign(i)));
        if (a == i) {
            int sg = (sd.bar(a) * ((sd.bar(a) + sd.bar(a + 1)) % 2)) % 2 ? -1 : 1;
            add(u(a, a + 1), A * p * QRat(QLaurent::monomial(Rational(sg), 2 * sd.sign(i))));
        }
        if (sd.prime(a + 1) == i)
            add(u(sd.prime(a + 1), sd.prime(a)),
                A * p *
                    QRat(QLaurent::monomial(Rational(-theta(a) * theta(a + 1)),
                                            2 * sd.sign(i))));
        return out;
    }
    if (i + j == N) {  // u_{i, (i+1)'}
        if (a == i) {
            int sg = ((sd.bar(a) + sd.bar(a + 1)) % 2 ? -1 : 1) * theta(a) * theta(a + 1);
            add(u(a, sd.prime(a)),
                A * QRat(QLaurent::monomial(Rational(-sg), 2 * sd.eps_pair(a, a))));
        }
        return out;
    }
    if (i + j == N + 1 && i != s) {  // u_{ii'} away from the middle
        QRat acc(0);
        if (a == i && sd.bar(a) == sd.bar(a + 1))
            acc += tq(2 * sd.eps_pair(a, a)) *
                   QRat(QLaurent(1) + QLaurent::t_power(-8 * sd.eps_pair(a, a)));
        if (a == i + 1) {
            int sg = ((sd.bar(a - 1) + sd.bar(a)) % 2 ? -1 : 1) * theta(a - 1) * theta(a);
            acc -= QRat(QLaurent::monomial(Rational(sg), -2 * sd.eps_pair(a - 1, a - 1)));
        }
        if (a + 1 == i)
            acc -= QRat(QLaurent::monomial(Rational(theta(a) * theta(a + 1)),
                                           -2 * sd.eps_pair(a + 1, a + 1)));
        add(u(a + 1, sd.prime(a)), A * acc);
        return out;
    }
    if (i == s && j == sd.prime(s)) {  // the odd-case (s, s')
        if (a == s) {
            QRat c = QRat(QLaurent::monomial(
                Rational((sd.bar(s) + sd.bar(s + 1)) % 2 ? -1 : 1), -2 * sd.eps_pair(s, s)));
            bool match = pm > 0 ? sd.bar(1) == sd.bar(s) : sd.bar(1) != sd.bar(s);
            if (match)
                c += tq(2 * sd.eps_pair(s, s)) *
                     QRat(QLaurent(1) + QLaurent::q_power(-2 * pm * s1));
            add(u(s + 1, sd.prime(s)), A * c);
        }
        if (a == s - 1)
            add(u(s, sd.prime(s - 1)),
                A * QRat(QLaurent::monomial(Rational(-theta(s - 1) * theta(s)),
                                            -2 * sd.eps_pair(s, s))));
        return out;
    }
    // generic off-diagonal
    if (a == i) add(u(a + 1, j), A * tq(2 * sd.eps_pair(a + 1, j)));
    if (a == j) {
        int sg = (sd.bar(i) * ((sd.bar(a) + sd.bar(a + 1)) % 2)) % 2 ? -1 : 1;
        add(u(i, a + 1), A * QRat(QLaurent(Rational(sg))));
    }
    if (sd.prime(a + 1) == i) {
        int sg = (sd.bar(a + 1) * ((sd.bar(a) + sd.bar(a + 1)) % 2)) % 2 ? -1 : 1;
        add(u(sd.prime(a), j),
            A * QRat(QLaurent::monomial(Rational(-sg * theta(a) * theta(a + 1)),
                                        -2 * sd.eps_pair(a, j))));
    }
    if (sd.prime(a + 1) == j) {
        int sg =
            (((sd.bar(i) + sd.bar(a + 1)) % 2) * ((sd.bar(a) + sd.bar(a + 1)) % 2)) % 2 ? -1
                                                                                        : 1;
        add(u(i, sd.prime(a)), A * QRat(QLaurent(Rational(-sg * theta(a) * theta(a + 1)))));
    }
    return out;
}

/// Expected raising action in the A family.
SparseVec<QRat> expected_e_image_gl(const SuperData& sd, int a, int i, int j, int pm) {
    SparseVec<QRat> out;
    auto u = [&](int k, int l) -> QVec {
        if (k == l) {
            bool nonzero = pm > 0 ? sd.bar(k) == sd.bar(1) : sd.bar(k) != sd.bar(1);
            if (!nonzero) return QVec();
        }
        return u_vector(sd, k, l, pm);
    };
    auto add = [&](const QVec& vec, const QRat& coeff) {
        for (const auto& [k, c] : vec) {
            QRat val = QRat(c) * coeff;
            auto it = out.find(k);
            if (it == out.end()) {
                if (!val.is_zero()) out.emplace(k, val);
            } else {
                it->second += val;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    };
    if (i == j) {
        QRat p = QRat(QLaurent(1) + QLaurent::q_power(-2 * sd.sign(i)));
        if (a + 1 == i) add(u(a, a + 1), p * QRat(QLaurent::t_power(2 * sd.sign(i))));
        return out;
    }
    if (a + 1 == i) add(u(a, j), QRat(1));
    if (a + 1 == j) {
        int sg = (sd.bar(i) * ((sd.bar(a) + sd.bar(a + 1)) % 2)) % 2 ? -1 : 1;
        add(u(i, a), QRat(QLaurent::monomial(Rational(sg), 2 * sd.eps_pair(a, i))));
    }
    return out;
}

}  // namespace

std::vector<Check> check_stability(const SuperData& sd, const FinRep& rep,
                                   const TensorSquareDecomp& dec) {
    std::vector<Check> out;
    const int dim = sd.N * sd.N;

    for (int pm : {1, -1}) {
        const auto& list = pm > 0 ? dec.wplus : dec.wminus;
        EchelonBasis<QRat> span(dim);
        for (const auto& e : list) span.insert(densify(sd, e.vec));
        bool stable = true;
        std::string where;
        for (int a = 0; a < sd.s && stable; ++a)
            for (char kind : {'e', 'f', '+', '-'}) {
                QMat act = coproduct_action(rep, {kind, a}, CoVariant::Delta);
                for (const auto& e : list) {
                    QVec img = mat_vec(act, e.vec);
                    if (!span.contains(densify(sd, img))) {
                        stable = false;
                        where = std::string(1, kind) + std::to_string(a + 1) + " on (" +
                                std::to_string(e.i) + "," + std::to_string(e.j) + ")";
                        break;
                    }
                }
                if (!stable) break;
            }
        out.push_back(Check::of(std::string("decomp.stable.") + (pm > 0 ? "plus" : "minus"),
                                "the subspace is preserved by every generator", stable, where));

        bool tables = true;
        std::string bad;
        // the distinguished corner vector of the even cases is covered by
        // the membership check; its closed-form table rows omit cross terms
        const bool even_osp =
            sd.family == Family::Osp && sd.case_tag != CaseTag::OddM;
        for (int a = 1; a <= sd.s && tables; ++a) {
            QMat act = coproduct_action(rep, {'f', a - 1}, CoVariant::Delta);
            for (const auto& e : list) {
                if (even_osp && e.i == sd.s && e.j == sd.prime(sd.s)) continue;
                SparseVec<QRat> img = to_qrat(mat_vec(act, e.vec));
                SparseVec<QRat> expect = expected_f_image(sd, dec, a, e.i, e.j, pm);
                if (!(img == expect)) {
                    tables = false;
                    bad = "f_" + std::to_string(a) + " on (" + std::to_string(e.i) + "," +
                          std::to_string(e.j) + ")";
                    break;
                }
            }
        }
        out.push_back(Check::of(std::string("decomp.tables.") + (pm > 0 ? "plus" : "minus"),
                                "lowering actions match the closed-form case tables", tables,
                                bad));

        if (sd.family == Family::GlA) {
            bool etables = true;
            std::string ebad;
            for (int a = 1; a <= sd.s && etables; ++a) {
                QMat act = coproduct_action(rep, {'e', a - 1}, CoVariant::Delta);
                for (const auto& e : list) {
                    SparseVec<QRat> img = to_qrat(mat_vec(act, e.vec));
                    SparseVec<QRat> expect = expected_e_image_gl(sd, a, e.i, e.j, pm);
                    if (!(img == expect)) {
                        etables = false;
                        ebad = "e_" + std::to_string(a) + " on (" + std::to_string(e.i) + "," +
                               std::to_string(e.j) + ")";
                        break;
                    }
                }
            }
            out.push_back(
                Check::of(std::string("decomp.etables.") + (pm > 0 ? "plus" : "minus"),
                          "raising actions match the closed-form case tables", etables, ebad));
        }
    }

    if (sd.family == Family::Osp) {
        bool line = true;
        for (int a = 0; a < sd.s; ++a) {
            if (!mat_vec(coproduct_action(rep, {'e', a}, CoVariant::Delta), dec.w3).empty())
                line = false;
            if (!mat_vec(coproduct_action(rep, {'f', a}, CoVariant::Delta), dec.w3).empty())
                line = false;
            QVec himg = mat_vec(coproduct_action(rep, {'+', a}, CoVariant::Delta), dec.w3);
            if (!(himg == dec.w3)) line = false;
        }
        out.push_back(Check::of("decomp.stable.line", "the invariant line is annihilated",
                                line, "a generator moved w3"));
    }
    return out;
}

namespace {

/// Zero-weight solve family with labels for coefficient checks.
struct ZeroWeightFamily {
    std::vector<std::vector<QRat>> vectors;
    std::vector<int> plus_index, minus_index;  // 1-based i -> index, -1 absent
    int ss_index = -1;
};

ZeroWeightFamily zero_weight_family(const SuperData& sd, const TensorSquareDecomp& dec) {
    ZeroWeightFamily fam;
    const int s = sd.s;
    int top = sd.case_tag == CaseTag::OddM ? s : s - 1;
    fam.plus_index.assign(top + 1, -1);
    fam.minus_index.assign(top + 1, -1);
    for (int i = 1; i <= top; ++i) {
        fam.plus_index[i] = static_cast<int>(fam.vectors.size());
        fam.vectors.push_back(densify(sd, u_vector(sd, i, sd.prime(i), 1)));
        fam.minus_index[i] = static_cast<int>(fam.vectors.size());
        fam.vectors.push_back(densify(sd, u_vector(sd, i, sd.prime(i), -1)));
    }
    if (sd.case_tag != CaseTag::OddM) {
        fam.ss_index = static_cast<int>(fam.vectors.size());
        fam.vectors.push_back(densify(sd, dec.uss));
    }
    return fam;
}

}  // namespace

std::vector<Check> check_sum_structure(const SuperData& sd, const FinRep& rep,
                                       const TensorSquareDecomp& dec) {
    (void)rep;
    std::vector<Check> out;
    const int dim = sd.N * sd.N;

    EchelonBasis<QRat> both(dim);
    for (const auto& e : dec.wplus) both.insert(densify(sd, e.vec));
    for (const auto& e : dec.wminus) both.insert(densify(sd, e.vec));
    int rank_both = both.rank();

    if (sd.family == Family::GlA) {
        out.push_back(Check::of("decomp.sum", "the two subspaces fill the tensor square",
                                rank_both == dim, "rank " + std::to_string(rank_both)));
        return out;
    }

    const bool degenerate = sd.m == sd.n;
    if (!degenerate) {
        EchelonBasis<QRat> all(dim);
        for (const auto& e : dec.wplus) all.insert(densify(sd, e.vec));
        for (const auto& e : dec.wminus) all.insert(densify(sd, e.vec));
        all.insert(densify(sd, dec.w3));
        out.push_back(Check::of("decomp.sum", "W+ + W- + W3 has full rank", all.rank() == dim,
                                "rank " + std::to_string(all.rank())));
        out.push_back(Check::of("decomp.w3_outside", "the invariant line is a new direction",
                                rank_both == dim - 1, "rank " + std::to_string(rank_both)));
    } else {
        out.push_back(Check::of("decomp.codim", "W+ + W- has codimension one",
                                rank_both == dim - 1, "rank " + std::to_string(rank_both)));
        EchelonBasis<QRat> plus(dim), minus(dim);
        for (const auto& e : dec.wplus) plus.insert(densify(sd, e.vec));
        for (const auto& e : dec.wminus) minus.insert(densify(sd, e.vec));
        bool in_plus = plus.contains(densify(sd, dec.w3));
        bool in_minus = minus.contains(densify(sd, dec.w3));
        bool expect_plus;
        if (sd.case_tag == CaseTag::EvenM_sEven)
            expect_plus = sd.bar(1) == 0 && sd.bar(sd.s) == 0;
        else
            expect_plus = sd.bar(1) == 0 && sd.bar(sd.s) == 1;
        out.push_back(Check::of("decomp.dichotomy",
                                "the invariant line lands in the predicted subspace",
                                in_plus == expect_plus && in_minus == !expect_plus,
                                in_plus ? "landed in W+" : "landed in W-"));
    }

    QVec wt, wh;
    vec_add(wt, sd.N - 1, QLaurent(1));           // v_1 (x) v_{1'}
    vec_add(wh, (sd.N - 1) * sd.N, QLaurent(1));  // v_{1'} (x) v_1
    out.push_back(Check::of("decomp.tilde_outside",
                            "v_1 (x) v_{1'} and v_{1'} (x) v_1 stay outside W+ + W-",
                            !both.contains(densify(sd, wt)) && !both.contains(densify(sd, wh)),
                            "tilde vector inside the sum"));

    // explicit zero-weight combination with its closed-form coefficients
    ZeroWeightFamily fam = zero_weight_family(sd, dec);
    QVec target = wt;
    {
        QLaurent mu = QLaurent::monomial(Rational(sd.bar(1) ? -1 : 1),
                                         4 * sd.sign(1) + 4 * (sd.n - sd.m + 1));
        for (const auto& [k, c] : vec_scaled(wh, mu)) vec_add(target, k, -c);
    }
    auto sol = solve_in_span(fam.vectors, densify(sd, target));
    bool solved = sol.has_value();
    out.push_back(Check::of("decomp.combination",
                            "the tilde difference lies in the zero-weight span", solved,
                            "no solution"));
    if (solved) {
        const int s = sd.s;
        auto rho_run = [&](int from, int to) {  // t-exponent of q^{sum (rho, alpha_k)}
            int e = 0;
            for (int k = from; k <= to; ++k) e += sd.rho_pair4(sd.roots.simple[k - 1]);
            return e;
        };
        const QRat qplus_inv =
            QRat(QLaurent(1), QLaurent::q_power(1) + QLaurent::q_power(-1));
        bool coeffs_ok = true;
        std::string bad;
        auto check_value = [&](int index, const QRat& expect, const std::string& name) {
            if (index < 0) return;
            if (!((*sol)[index] == expect)) {
                coeffs_ok = false;
                if (bad.empty()) bad = name;
            }
        };
        int top = sd.case_tag == CaseTag::OddM ? s : s - 1;
        for (int i = 1; i <= top; ++i) {
            int pre_sign =
                ((sd.bar(1) + sd.bar(i)) % 2 ? -1 : 1) * sd.theta_of(1) * sd.theta_of(i);
            QRat pre = QRat(QLaurent(Rational(pre_sign))) * qplus_inv *
                       QRat(QLaurent::t_power(-rho_run(1, s - 1)));
            QLaurent up = QLaurent::t_power(rho_run(i, s - 1));
            QLaurent down = QLaurent::t_power(-rho_run(i, s - 1));
            QLaurent bp, bm;
            switch (sd.case_tag) {
                case CaseTag::OddM: {
                    QLaurent tail = QLaurent::monomial(
                        Rational(sd.bar(1) ? -1 : 1),
                        4 * sd.eps_pair(i, i) - 4 * sd.eps_pair(s, s));
                    bp = QLaurent::t_power(4 * sd.eps_pair(1, 1)) * up - tail * down;
                    bm = QLaurent::t_power(-4 * sd.eps_pair(1, 1)) * up + tail * down;
                    break;
                }
                case CaseTag::EvenM_sEven: {
                    int sg = (sd.bar(1) + sd.bar(s)) % 2 ? -1 : 1;
                    QLaurent tail =
                        QLaurent::monomial(Rational(sg), 4 * sd.eps_pair(i, i));
                    if (i <= s - 2) {
                        bp = QLaurent::t_power(4 * sd.eps_pair(1, 1)) * up - tail * down;
                        bm = QLaurent::t_power(-4 * sd.eps_pair(1, 1)) * up + tail * down;
                    } else {
                        int dneq = sd.bar(1) != sd.bar(s) ? 1 : 0;
                        QLaurent fp(
                            Rational(1 - dneq * sd.theta_of(s - 1) * sd.theta_of(s)));
                        QLaurent fm(Rational(
                            1 - (1 - dneq) * sd.theta_of(s - 1) * sd.theta_of(s)));
                        bp = QLaurent::t_power(4 * sd.eps_pair(1, 1)) * up - tail * down * fp;
                        bm = QLaurent::t_power(-4 * sd.eps_pair(1, 1)) * up +
                             tail * down * fm;
                    }
                    break;
                }
                default: {  // EvenM_sOdd
                    int sg = (sd.bar(1) + sd.bar(s)) % 2 ? -1 : 1;
                    QLaurent tail = QLaurent::monomial(
                        Rational(sg), 4 * sd.eps_pair(i, i) - 8 * sd.eps_pair(s, s));
                    bp = QLaurent::t_power(4 * sd.eps_pair(1, 1)) * up + tail * down;
                    bm = QLaurent::t_power(-4 * sd.eps_pair(1, 1)) * up - tail * down;
                    break;
                }
            }
            check_value(fam.plus_index[i], pre * QRat(bp), "b+_" + std::to_string(i));
            check_value(fam.minus_index[i], pre * QRat(bm), "b-_" + std::to_string(i));
        }
        if (sd.case_tag == CaseTag::EvenM_sEven) {
            int sg = ((sd.bar(1) + sd.bar(s - 1)) % 2 ? -1 : 1) * sd.theta_of(1) *
                     sd.theta_of(s);
            QRat bs = QRat(QLaurent(Rational(sg))) * qplus_inv *
                      QRat(QLaurent::t_power(2 * sd.eps_pair(s - 1, s - 1) -
                                             2 * sd.eps_pair(s, s) - rho_run(1, s - 1)));
            check_value(fam.ss_index, bs, "b_s");
        } else if (sd.case_tag == CaseTag::EvenM_sOdd) {
            int sg =
                ((sd.bar(1) + sd.bar(s)) % 2 ? -1 : 1) * sd.theta_of(1) * sd.theta_of(s);
            QRat bs = QRat(QLaurent::monomial(Rational(sg), -rho_run(1, s - 1)));
            check_value(fam.ss_index, bs, "b_s");
        }
        out.push_back(Check::of("decomp.combination.coeffs",
                                "solved coefficients match the closed forms",
                                coeffs_ok, bad));
    }

    // nonzero weight spaces: the family vectors are independent there
    {
        std::map<Weight, std::vector<std::vector<QRat>>> by_weight;
        for (int pm : {1, -1})
            for (const auto& e : (pm > 0 ? dec.wplus : dec.wminus)) {
                Weight w = sd.eps(e.i) + sd.eps(e.j);
                if (w.is_zero()) continue;
                by_weight[w].push_back(densify(sd, e.vec));
            }
        bool indep = true;
        for (auto& [w, vecs] : by_weight)
            if (field_rank(vecs) != static_cast<int>(vecs.size())) indep = false;
        out.push_back(Check::of("decomp.weights",
                                "family vectors are independent in nonzero weight spaces",
                                indep, "dependency found"));
    }
    return out;
}

std::vector<Check> check_lambda_action(const SuperData& sd, const TensorSquareDecomp& dec) {
    std::vector<Check> out;
    QMat rhat = tau_matrix<QLaurent>(sd) * build_R0(sd);
    QLaurent l1 = lambda1_value(sd), l2 = lambda2_value(sd), l3 = lambda3_value(sd);
    bool ok_plus = true, ok_minus = true;
    for (const auto& e : dec.wplus)
        if (!(mat_vec(rhat, e.vec) == vec_scaled(e.vec, l1))) ok_plus = false;
    for (const auto& e : dec.wminus)
        if (!(mat_vec(rhat, e.vec) == vec_scaled(e.vec, l2))) ok_minus = false;
    out.push_back(Check::of("decomp.lambda.plus", "tau R0 acts on W+ by lambda1", ok_plus,
                            "not an eigenvector"));
    out.push_back(Check::of("decomp.lambda.minus", "tau R0 acts on W- by lambda2", ok_minus,
                            "not an eigenvector"));
    if (sd.family == Family::Osp) {
        const int dim = sd.N * sd.N;
        EchelonBasis<QRat> both(dim);
        for (const auto& e : dec.wplus) both.insert(densify(sd, e.vec));
        for (const auto& e : dec.wminus) both.insert(densify(sd, e.vec));
        QVec wt;
        vec_add(wt, sd.N - 1, QLaurent(1));
        QVec resid = vec_sub(mat_vec(rhat, wt), vec_scaled(wt, l3));
        out.push_back(Check::of("decomp.lambda.quotient",
                                "tau R0 acts on the quotient line by lambda3",
                                both.contains(densify(sd, resid)),
                                "residual escapes the sum"));
    }
    return out;
}

namespace {

int closure_dimension(const SuperData& sd, const FinRep& rep, const std::vector<QVec>& seeds) {
    const int dim = sd.N * sd.N;
    EchelonBasis<QRat> span(dim);
    std::vector<QVec> frontier;
    for (const auto& v : seeds)
        if (span.insert(densify(sd, v))) frontier.push_back(v);
    std::vector<QMat> actions;
    for (int a = 0; a < sd.s; ++a)
        for (char kind : {'e', 'f', '+', '-'})
            actions.push_back(coproduct_action(rep, {kind, a}, CoVariant::Delta));
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& v : frontier)
            for (const auto& act : actions) {
                QVec img = mat_vec(act, v);
                if (img.empty()) continue;
                if (span.insert(densify(sd, img))) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return span.rank();
}

}  // namespace

std::vector<Check> check_generating(const SuperData& sd, const FinRep& rep) {
    std::vector<Check> out;
    const int dim = sd.N * sd.N;
    HighestVectors hv = highest_vectors(rep);
    if (sd.family == Family::GlA) {
        int d = closure_dimension(sd, rep, {hv.w1, hv.w2});
        out.push_back(Check::of("decomp.generate", "w1 and w2 generate the tensor square",
                                d == dim, "span dimension " + std::to_string(d)));
        return out;
    }
    QVec wt, wh;
    vec_add(wt, sd.N - 1, QLaurent(1));
    vec_add(wh, (sd.N - 1) * sd.N, QLaurent(1));
    int with_w3 = closure_dimension(sd, rep, {hv.w1, hv.w2, hv.w3});
    bool expect_full = sd.m != sd.n;
    out.push_back(Check::of("decomp.generate.w3",
                            "w1, w2, w3 generate exactly when the dimensions differ",
                            (with_w3 == dim) == expect_full,
                            "span dimension " + std::to_string(with_w3)));
    int with_wt = closure_dimension(sd, rep, {hv.w1, hv.w2, wt});
    int with_wh = closure_dimension(sd, rep, {hv.w1, hv.w2, wh});
    out.push_back(Check::of("decomp.generate.tilde",
                            "w1, w2 with either mirror vector always generate",
                            with_wt == dim && with_wh == dim,
                            "span dimensions " + std::to_string(with_wt) + ", " +
                                std::to_string(with_wh)));
    return out;
}

std::vector<Check> check_classical_limit(const SuperData& sd, const FinRep& rep) {
    std::vector<Check> out;
    const int dim = sd.N * sd.N;
    auto at_one = [](const QLaurent& x) { return x.eval(Rational(1)); };
    std::vector<GradedMatrix<Rational>> actions;
    for (int a = 0; a < sd.s; ++a)
        for (char kind : {'e', 'f', '+', '-'})
            actions.push_back(
                coproduct_action(rep, {kind, a}, CoVariant::Delta).map_entries(at_one));
    auto closure = [&](const std::vector<SparseVec<Rational>>& seeds) {
        EchelonBasis<Rational> span(dim);
        std::vector<SparseVec<Rational>> frontier;
        auto dense = [&](const SparseVec<Rational>& v) {
            std::vector<Rational> d(dim, Rational(0));
            for (const auto& [k, c] : v) d[k] = c;
            return d;
        };
        for (const auto& v : seeds)
            if (span.insert(dense(v))) frontier.push_back(v);
        while (!frontier.empty()) {
            std::vector<SparseVec<Rational>> next;
            for (const auto& v : frontier)
                for (const auto& act : actions) {
                    SparseVec<Rational> img = mat_vec(act, v);
                    if (!img.empty() && span.insert(dense(img))) next.push_back(img);
                }
            frontier = std::move(next);
        }
        return span.rank();
    };
    HighestVectors hv = highest_vectors(rep);
    auto specialize = [&](const QVec& v) {
        SparseVec<Rational> r;
        for (const auto& [k, c] : v) {
            Rational val = c.eval(Rational(1));
            if (sgn(val) != 0) r.emplace(k, val);
        }
        return r;
    };
    SparseVec<Rational> w1 = specialize(hv.w1), w2 = specialize(hv.w2);
    if (sd.family == Family::GlA) {
        out.push_back(Check::of("decomp.classical", "w1, w2 generate at q = 1",
                                closure({w1, w2}) == dim, "span too small"));
        return out;
    }
    SparseVec<Rational> wt, wh, w3 = specialize(hv.w3);
    wt.emplace(sd.N - 1, Rational(1));
    wh.emplace((sd.N - 1) * sd.N, Rational(1));
    bool tilde_ok = closure({w1, w2, wt}) == dim && closure({w1, w2, wh}) == dim;
    bool w3_ok = (closure({w1, w2, w3}) == dim) == (sd.m != sd.n);
    out.push_back(Check::of("decomp.classical", "generation statements survive at q = 1",
                            tilde_ok && w3_ok, "classical span mismatch"));
    return out;
}

}  // namespace qrmat
