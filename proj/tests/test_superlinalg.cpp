#include <random>

#include "doctest.h"
#include "qrmat/gradedmatrix.hpp"
#include "qrmat/rfinite.hpp"

using namespace qrmat;

namespace {

using QMat = GradedMatrix<QLaurent>;

QMat random_sparse(const SuperData& sd, int legs, std::mt19937_64& rng, int entries = 6) {
    QMat m(sd, legs);
    int dim = 1;
    for (int l = 0; l < legs; ++l) dim *= sd.N;
    std::uniform_int_distribution<int> idx(0, dim - 1);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<int> expo(-3, 3);
    for (int k = 0; k < entries; ++k)
        m.add(idx(rng), idx(rng), QLaurent::monomial(Rational(num(rng)), expo(rng)));
    return m;
}

/// Homogeneous matrix of the requested parity: every entry connects a row
/// and column whose parities differ by p.
QMat random_homogeneous(const SuperData& sd, int p, std::mt19937_64& rng) {
    QMat m(sd, 1);
    std::uniform_int_distribution<long> num(-5, 5);
    for (int i = 0; i < sd.N; ++i)
        for (int j = 0; j < sd.N; ++j)
            if ((sd.parity[i] + sd.parity[j]) % 2 == p)
                m.add(i, j, QLaurent(Rational(num(rng))));
    return m;
}

/// Dense multiply oracle with plain triple loops.
QMat dense_mul(const QMat& a, const QMat& b) {
    QMat r(a.sd(), a.legs());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            QLaurent acc;
            for (int k = 0; k < a.dim(); ++k) acc += a.at(i, k) * b.at(k, j);
            r.add(i, j, acc);
        }
    return r;
}

}  // namespace

TEST_CASE("graded product table against the sign rule") {
    // (E_ij (x) E_kl)(E_ab (x) E_cd) = (-1)^{(k+l)(a+b)} E_ij E_ab (x) E_kl E_cd,
    // checked elementwise on the smallest odd instance.
    SuperData sd = SuperData::build(Family::Osp, 1, 2, {1});
    const int N = sd.N;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l)
                    for (int a = 1; a <= N; ++a)
                        for (int b = 1; b <= N; ++b)
                            for (int c = 1; c <= N; ++c)
                                for (int d = 1; d <= N; ++d) {
                                    QMat lhs = kron_graded(QMat::unit(sd, i, j),
                                                           QMat::unit(sd, k, l)) *
                                               kron_graded(QMat::unit(sd, a, b),
                                                           QMat::unit(sd, c, d));
                                    int sign =
                                        ((sd.bar(k) + sd.bar(l)) * (sd.bar(a) + sd.bar(b))) % 2;
                                    QMat ej = QMat::unit(sd, i, j) * QMat::unit(sd, a, b);
                                    QMat kl = QMat::unit(sd, k, l) * QMat::unit(sd, c, d);
                                    QMat rhs = kron_graded(ej, kl);
                                    if (sign) rhs = -rhs;
                                    CHECK(lhs == rhs);
                                }
}

TEST_CASE("kron on even-even vectors has no sign") {
    SuperData sd = SuperData::build(Family::Osp, 3, 2, {0, 1});
    REQUIRE(sd.bar(1) == 0);
    QMat e11 = QMat::unit(sd, 1, 1);
    QMat kk = kron_graded(e11, e11);
    CHECK(kk.at(0, 0) == QLaurent(1));
}

TEST_CASE("tau involution and flip") {
    for (auto parity : {std::vector<int>{1}, std::vector<int>{0, 1}}) {
        SuperData sd = SuperData::build(Family::Osp, parity.size() == 1 ? 1 : 3, 2, parity);
        QMat tau = tau_matrix<QLaurent>(sd);
        CHECK(tau * tau == QMat::identity(sd, 2));
        const int N = sd.N;
        // tau(v_1 (x) v_2) = (-1)^{bar1 bar2} v_2 (x) v_1
        SparseVec<QLaurent> v;
        vec_add(v, 0 * N + 1, QLaurent(1));
        SparseVec<QLaurent> img = mat_vec(tau, v);
        REQUIRE(img.size() == 1);
        CHECK(img.begin()->first == 1 * N + 0);
        CHECK(img.begin()->second ==
              QLaurent(Rational((sd.bar(1) * sd.bar(2)) % 2 ? -1 : 1)));
    }
}

TEST_CASE("supertranspose properties") {
    SuperData sd = SuperData::build(Family::Osp, 2, 2, {1, 0});
    CHECK(supertranspose(QMat::identity(sd, 1)) == QMat::identity(sd, 1));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        for (int px = 0; px <= 1; ++px)
            for (int py = 0; py <= 1; ++py) {
                QMat x = random_homogeneous(sd, px, rng), y = random_homogeneous(sd, py, rng);
                QMat lhs = supertranspose(x * y);
                QMat rhs = supertranspose(y) * supertranspose(x);
                if ((px * py) % 2) rhs = -rhs;
                CHECK(lhs == rhs);
            }
        // twice: flips the sign of parity-changing entries
        QMat m = random_sparse(sd, 1, rng);
        QMat twice = supertranspose(supertranspose(m));
        for (const auto& [r, row] : m.rows())
            for (const auto& [c, v] : row) {
                int sign = (sd.parity[r] + sd.parity[c]) % 2 ? -1 : 1;
                CHECK(twice.at(r, c) == v.scaled(Rational(sign)));
            }
    }
}

TEST_CASE("Rinf supertranspose symmetry") {
    for (auto parity : {std::vector<int>{1}, std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
        SuperData sd = SuperData::build(Family::Osp, parity.size() == 1 ? 1 : 3, 2, parity);
        QMat rinf = build_Rinf(sd);
        QMat tau = tau_matrix<QLaurent>(sd);
        QMat stst = supertranspose_leg(supertranspose_leg(rinf, 0), 1);
        CHECK(rinf == tau * stst * tau);
    }
}

TEST_CASE("leg embeddings") {
    SuperData sd = SuperData::build(Family::Osp, 1, 2, {1});
    QMat id2 = QMat::identity(sd, 2);
    CHECK(leg_embed(id2, Legs::L12) == QMat::identity(sd, 3));
    CHECK(leg_embed(id2, Legs::L23) == QMat::identity(sd, 3));
    CHECK(leg_embed(id2, Legs::L13) == QMat::identity(sd, 3));

    // R13 built two ways agree: (Id (x) tau) R12 (Id (x) tau) and
    // (tau (x) Id) R23 (tau (x) Id).
    QMat r = build_R0(sd);
    QMat tau = tau_matrix<QLaurent>(sd);
    QMat t12 = kron_graded(tau, QMat::identity(sd, 1));
    QMat alt = t12 * leg_embed(r, Legs::L23) * t12;
    CHECK(leg_embed(r, Legs::L13) == alt);
}

TEST_CASE("kron is associative under the composite index identification") {
    SuperData sd = SuperData::build(Family::Osp, 2, 2, {0, 1});
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        QMat a = random_sparse(sd, 1, rng), b = random_sparse(sd, 1, rng),
             c = random_sparse(sd, 1, rng);
        CHECK(kron_graded(kron_graded(a, b), c) == kron_graded(a, kron_graded(b, c)));
    }
}

TEST_CASE("sparse product agrees with the dense oracle") {
    std::mt19937_64 rng(23);
    for (auto parity : {std::vector<int>{1}, std::vector<int>{0, 1}, std::vector<int>{1, 0},
                        std::vector<int>{1, 1}}) {
        int n = parity.size() == 1 ? 2 : (parity == std::vector<int>{1, 1} ? 4 : 2);
        int m = static_cast<int>(2 * parity.size() + (parity.size() == 1 ? 1 : 0)) - n;
        SuperData sd = SuperData::build(Family::Osp, m, n, parity);
        for (int trial = 0; trial < 6; ++trial) {
            QMat a = random_sparse(sd, 1, rng, 8), b = random_sparse(sd, 1, rng, 8);
            CHECK(a * b == dense_mul(a, b));
        }
    }
}

TEST_CASE("diagonal inverse") {
    SuperData sd = SuperData::build(Family::Osp, 1, 2, {1});
    QMat d(sd, 1);
    d.set(0, 0, QLaurent::t_power(3));
    d.set(1, 1, QLaurent::monomial(Rational(-2, 3), -1));
    d.set(2, 2, QLaurent(1));
    CHECK(d * diagonal_inverse(d) == QMat::identity(sd, 1));
}
