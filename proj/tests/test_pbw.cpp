#include "doctest.h"
#include "qrmat/pbw.hpp"
#include "qrmat/rfinite.hpp"

using namespace qrmat;

namespace {

std::vector<SuperData> pbw_instances() {
    std::vector<SuperData> out;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {3, 2}, {2, 2}, {1, 4}, {4, 2}})
        for (const auto& p : admissible_parities(Family::Osp, m, n))
            out.push_back(SuperData::build(Family::Osp, m, n, p));
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}})
        for (const auto& p : admissible_parities(Family::GlA, m, n))
            out.push_back(SuperData::build(Family::GlA, m, n, p));
    return out;
}

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) {
            MESSAGE(c.id, ": ", c.residual);
            return false;
        }
    return true;
}

}  // namespace

TEST_CASE("dominant structure") {
    for (const auto& sd : pbw_instances()) {
        CAPTURE(sd.label());
        CHECK(all_pass(check_dominant_structure(sd)));
    }
}

TEST_CASE("root vectors match their closed forms") {
    for (const auto& sd : pbw_instances()) {
        CAPTURE(sd.label());
        FinRep rep = build_finrep(sd);
        std::vector<RootVectorPair> rvs;
        CHECK_NOTHROW(rvs = root_vectors(sd, rep));
        CHECK(rvs.size() == sd.roots.reduced_positive.size());
    }
}

TEST_CASE("omega symmetry of the root vectors") {
    // omega(f_gamma) = (-1)^{ht-1} (-1)^{P} q^{-N} e_gamma, realized on V by
    // applying omega through the recursion.
    for (const auto& sd : pbw_instances()) {
        CAPTURE(sd.label());
        FinRep rep = build_finrep(sd);
        auto omega_f = [&](auto&& self, const Weight& gamma) -> QMat {
            for (int i = 0; i < sd.s; ++i)
                if (gamma == sd.roots.simple[i]) return rep.e[i];
            auto [alpha, beta] = costandard_split(sd, gamma);
            QMat oa = self(self, alpha), ob = self(self, beta);
            int sign = (sd.root_parity(alpha) * sd.root_parity(beta)) % 2 ? -1 : 1;
            return ob * oa - (oa * ob).scaled(
                                QLaurent::monomial(Rational(sign), -sd.pair4(alpha, beta)));
        };
        for (const auto& rv : root_vectors(sd, rep)) {
            QMat lhs = omega_f(omega_f, rv.gamma);
            PNValue pn = pn_of_root(sd, rv.gamma);
            int ht = root_height(sd, rv.gamma);
            int sign = ((ht - 1) % 2 ? -1 : 1) * (pn.p ? -1 : 1);
            QMat rhs = rv.e_mat.scaled(QLaurent::monomial(Rational(sign), -4 * pn.n));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("power pairings") {
    SuperData sd = SuperData::build(Family::Osp, 2, 2, {0, 1});
    FinRep rep = build_finrep(sd);
    auto rvs = root_vectors(sd, rep);
    for (const auto& rv : rvs) {
        CHECK(pair_J_power(sd, rv, 0) == QRat(1));
        CHECK(pair_J_power(sd, rv, 1) == rv.pairing1);
        bool iso = rv.parity == 1 && sd.pair4(rv.gamma, rv.gamma) == 0;
        if (iso) {
            CHECK_THROWS_AS(pair_J_power(sd, rv, 2), IsotropicPower);
            CHECK((rv.e_mat * rv.e_mat).is_zero());
        } else {
            // k = 2 against the square of the shuffle element
            FreeElem r = concat_bracket(sd, rv.lyndon);
            FreeElem r2 = concat(r, r);
            QLaurent ptw2 = pair_tw(sd, r2, r2);
            QLaurent ptw = pair_tw(sd, r, r);
            CHECK(ptw2 == power_pairing_factor(sd, rv.gamma, 2) * ptw * ptw);
            // (f^2, e^2)_J = (-1)^{P(2 gamma)} q^{2N(gamma)} bar(ptw2) / (q^{-1}-q)^{2 ht}
            int ht = root_height(sd, rv.gamma);
            PNValue pn = pn_of_root(sd, rv.gamma);
            QLaurent num = ptw2.bar() * QLaurent::q_power(2 * pn.n);
            if (rv.parity) num = -num;  // P(2 gamma) = |e_gamma| mod 2
            QLaurent den(1);
            const QLaurent qdm = QLaurent::q_power(-1) - QLaurent::q_power(1);
            for (int k = 0; k < 2 * ht; ++k) den *= qdm;
            CHECK(QRat(num, den) == pair_J_power(sd, rv, 2));
        }
    }
}

TEST_CASE("local factors and q-exponential form") {
    for (const auto& sd : pbw_instances()) {
        if (sd.N > 5) continue;
        CAPTURE(sd.label());
        FinRep rep = build_finrep(sd);
        for (const auto& rv : root_vectors(sd, rep)) {
            QMat theta;
            CHECK_NOTHROW(theta = theta_local(rep, rv));
            // q-exponential form: sum_k (f (x) e)^k / ((k)_{q_gamma}! pairing^k)
            QMat fe = kron_graded(rv.f_mat, rv.e_mat);
            QMat expq = QMat::identity(sd, 2);
            QMat power = QMat::identity(sd, 2);
            QLaurent qg = QLaurent::monomial(Rational(rv.parity ? -1 : 1),
                                             sd.pair4(rv.gamma, rv.gamma));
            QLaurent factorial(1);
            QLaurent qg_pow(1);
            for (int k = 1; k <= 3; ++k) {
                power = power * fe;
                if (power.is_zero()) break;
                qg_pow *= qg;
                factorial *= exact_div(QLaurent(1) - qg_pow, QLaurent(1) - qg);
                QRat denom = QRat(factorial);
                for (int t = 0; t < k; ++t) denom *= rv.pairing1;
                QMat term(sd, 2);
                for (const auto& [row_i, row] : power.rows())
                    for (const auto& [c, v] : row)
                        term.add(row_i, c, exact_div(v * denom.den(), denom.num()));
                expq += term;
            }
            CHECK(theta == expq);
        }
    }
}

TEST_CASE("theta suite") {
    for (const auto& sd : pbw_instances()) {
        CAPTURE(sd.label());
        FinRep rep = build_finrep(sd);
        CHECK(all_pass(check_theta_suite(sd, rep)));
    }
}

TEST_CASE("pairing suite") {
    for (const auto& sd : pbw_instances()) {
        CAPTURE(sd.label());
        CHECK(all_pass(check_pairing_suite(sd)));
    }
}
