#include "doctest.h"
#include "qrmat/exactring.hpp"
#include "qrmat/superdata.hpp"

using namespace qrmat;

namespace {

std::vector<SuperData> sample_instances() {
    std::vector<SuperData> out;
    for (auto [m, n] : std::vector<std::pair<int, int>>{
             {1, 2}, {3, 2}, {2, 2}, {4, 2}, {2, 4}, {1, 4}, {3, 4}, {5, 2}})
        for (const auto& p : admissible_parities(Family::Osp, m, n))
            out.push_back(SuperData::build(Family::Osp, m, n, p));
    for (auto [m, n] :
         std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}})
        for (const auto& p : admissible_parities(Family::GlA, m, n))
            out.push_back(SuperData::build(Family::GlA, m, n, p));
    return out;
}

}  // namespace

TEST_CASE("basic construction") {
    SuperData sd = SuperData::build(Family::Osp, 1, 2, {1});
    CHECK(sd.N == 3);
    CHECK(sd.s == 1);
    CHECK(sd.bar(2) == 0);  // middle vector is even
    CHECK(sd.case_tag == CaseTag::OddM);

    SuperData d22 = SuperData::build(Family::Osp, 2, 2, {1, 0});
    CHECK(d22.case_tag == CaseTag::EvenM_sEven);
    SuperData c22 = SuperData::build(Family::Osp, 2, 2, {0, 1});
    CHECK(c22.case_tag == CaseTag::EvenM_sOdd);

    SuperData gl = SuperData::build(Family::GlA, 1, 1, {0, 1});
    CHECK(gl.s == 1);
    CHECK(gl.roots.cartan[0][0] == 0);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(SuperData::build(Family::Osp, 1, 3, {1, 1}), BadInstance);
    CHECK_THROWS_AS(SuperData::build(Family::Osp, 3, 2, {1}), BadInstance);
    CHECK_THROWS_AS(SuperData::build(Family::Osp, 3, 2, {1, 0}, {1, 1, 1, 1, 1, 1, 1}),
                    BadInstance);
    // theta must be +1 at even positions
    CHECK_THROWS_AS(SuperData::build(Family::Osp, 3, 2, {0, 1}, {-1, 1}), BadInstance);
    // but is a free sign at odd positions
    SuperData sd = SuperData::build(Family::Osp, 3, 2, {0, 1}, {1, -1});
    CHECK(sd.theta_of(2) == -1);
    CHECK(sd.theta_of(sd.prime(2)) == 1);
    CHECK(sd.theta_of(2) * sd.theta_of(sd.prime(2)) == -1);
}

TEST_CASE("theta sign rules hold for defaults") {
    for (const auto& sd : sample_instances()) {
        if (sd.family != Family::Osp) continue;
        for (int i = 1; i <= sd.N; ++i) {
            CHECK(sd.theta_of(i) * sd.theta_of(i) == 1);
            int expect = sd.bar(i) == 0 ? 1 : -1;
            CHECK(sd.theta_of(i) * sd.theta_of(sd.prime(i)) == expect);
        }
    }
}

TEST_CASE("epsilon pairing") {
    SuperData sd = SuperData::build(Family::Osp, 1, 2, {1});
    CHECK(sd.eps_pair(1, 1) == -1);
    CHECK(sd.eps_pair(2, 2) == 0);
    CHECK(sd.eps_pair(1, sd.prime(1)) == 1);
    for (const auto& any : sample_instances()) {
        if (any.family != Family::Osp) continue;
        for (int i = 1; i <= any.N; ++i)
            CHECK(any.eps_pair(i, any.prime(i)) == -any.eps_pair(i, i));
    }
}

TEST_CASE("Weyl vector pairings") {
    for (const auto& sd : sample_instances()) {
        // (rho, alpha_i) = (alpha_i, alpha_i) / 2 for every simple root
        for (int i = 0; i < sd.s; ++i)
            CHECK(2 * sd.rho_pair4(sd.roots.simple[i]) ==
                  sd.pair4(sd.roots.simple[i], sd.roots.simple[i]));
        if (sd.family == Family::Osp) {
            // (rho, eps_1) = (m - n - 1 - (-1)^{bar 1}) / 2
            CHECK(sd.rho_pair4(sd.eps(1)) == 2 * (sd.m - sd.n - 1 - sd.sign(1)));
            if (sd.case_tag == CaseTag::EvenM_sOdd)
                CHECK(sd.rho_pair4(sd.eps(sd.s).scaled(2)) == 8 * sd.sign(sd.s));
        }
    }
    SuperData b12 = SuperData::build(Family::Osp, 1, 2, {1});
    CHECK(b12.rho_pair4(b12.eps(1)) == -2);  // (rho, eps_1) = -1/2
}

TEST_CASE("Cartan matrix is symmetric") {
    for (const auto& sd : sample_instances())
        for (int i = 0; i < sd.s; ++i)
            for (int j = 0; j < sd.s; ++j)
                CHECK(sd.roots.cartan[i][j] == sd.roots.cartan[j][i]);
}

TEST_CASE("reduced roots drop exactly the doubled ones") {
    for (const auto& sd : sample_instances()) {
        size_t doubled = 0;
        if (sd.family == Family::Osp && sd.N % 2 == 1)
            for (int a = 1; a <= sd.s; ++a)
                if (sd.bar(a) == 1) ++doubled;
        CHECK(sd.roots.reduced_positive.size() == sd.roots.positive.size() - doubled);
        for (size_t k = 0; k < sd.roots.reduced_positive.size(); ++k) {
            const Weight& g = sd.roots.reduced_positive[k];
            bool odd = sd.root_parity(g) == 1;
            bool iso = sd.pair4(g, g) == 0;
            RootKind expect = !odd ? RootKind::Even
                                   : (iso ? RootKind::OddIsotropic : RootKind::OddNonIsotropic);
            CHECK(sd.roots.reduced_kind[k] == expect);
        }
    }
}

TEST_CASE("highest root") {
    SuperData odd1 = SuperData::build(Family::Osp, 1, 2, {1});
    CHECK(odd1.highest_root() == odd1.eps(1).scaled(2));
    SuperData even1 = SuperData::build(Family::Osp, 3, 2, {0, 1});
    CHECK(even1.highest_root() == even1.eps(1) + even1.eps(2));
    SuperData gl = SuperData::build(Family::GlA, 2, 1, {0, 1, 0});
    CHECK(gl.highest_root() == gl.eps(1) - gl.eps(3));
    auto k = gl.highest_root_coeffs();
    CHECK(k == std::vector<int>{1, 1});
    for (const auto& sd : sample_instances()) {
        auto coeffs = sd.highest_root_coeffs();
        Weight sum(sd.weight_rank());
        for (int i = 0; i < sd.s; ++i) sum += sd.roots.simple[i].scaled(coeffs[i]);
        CHECK(sum == sd.highest_root());
    }
}

TEST_CASE("telescoping identities for rho") {
    const QLaurent q = QLaurent::q_power(1), qi = QLaurent::q_power(-1);
    for (const auto& sd : sample_instances()) {
        if (sd.family != Family::Osp) continue;
        const int s = sd.s;
        // (q - q^{-1}) sum_{j=i+1}^{s} (-1)^{j} q^{(2rho, eps_j)}
        //   = q^{(2rho,eps_i)-(eps_i,eps_i)} - q^{(2rho,eps_s)-(eps_s,eps_s)}
        for (int i = 1; i <= s; ++i) {
            QLaurent lhs;
            for (int j = i + 1; j <= s; ++j)
                lhs += QLaurent::monomial(Rational(sd.sign(j)), 2 * sd.rho_pair4(sd.eps(j)));
            lhs *= q - qi;
            auto endpoint = [&](int a) {
                return QLaurent::t_power(2 * sd.rho_pair4(sd.eps(a)) - 4 * sd.eps_pair(a, a));
            };
            CHECK(lhs == endpoint(i) - endpoint(s));
            if (sd.N % 2 == 1) CHECK(endpoint(s) == QLaurent(1));
            else CHECK(endpoint(s) == QLaurent::q_power(-1));
        }
        // (q - q^{-1}) sum_{j=1}^{s} (-1)^{j} q^{sum_{k=j}^{s-1}(2rho, alpha_k)}
        //   = q^{-(eps_s,eps_s)} (q^{m-n} - 1)   for even N;
        // the middle even vector shifts the exponent by one for odd N.
        QLaurent lhs2;
        for (int j = 1; j <= s; ++j) {
            int e = 0;
            for (int k = j; k <= s - 1; ++k) e += 2 * sd.rho_pair4(sd.roots.simple[k - 1]);
            lhs2 += QLaurent::monomial(Rational(sd.sign(j)), e);
        }
        lhs2 *= q - qi;
        int top = sd.m - sd.n - (sd.N % 2);
        QLaurent rhs2 = QLaurent::t_power(-4 * sd.eps_pair(s, s)) *
                        (QLaurent::q_power(top) - QLaurent(1));
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("admissible parity counts") {
    CHECK(admissible_parities(Family::Osp, 1, 2).size() == 1);
    CHECK(admissible_parities(Family::Osp, 3, 2).size() == 2);
    CHECK(admissible_parities(Family::Osp, 4, 2).size() == 3);
    CHECK(admissible_parities(Family::Osp, 2, 4).size() == 3);
    CHECK(admissible_parities(Family::GlA, 2, 2).size() == 6);
}
