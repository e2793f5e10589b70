#pragma once

#include <vector>

#include "qrmat/repn.hpp"

namespace qrmat {

/// The finite R-matrices on V (x) V and the eigenvalue triple of
/// tau R_0 = Rhat on the highest weight vectors (lambda3 is meaningful for
/// osp only).
struct FiniteRMatrices {
    QMat R0, Rinf, RJ, RJinv;
    QLaurent lambda1, lambda2, lambda3;
};

QMat build_R0(const SuperData& sd);
QMat build_Rinf(const SuperData& sd);
/// Jantzen-coproduct variants R = f~^{-1/2} R_0 f~^{1/2} and its inverse.
std::pair<QMat, QMat> build_RJ(const SuperData& sd);

QLaurent lambda1_value(const SuperData& sd);
QLaurent lambda2_value(const SuperData& sd);
QLaurent lambda3_value(const SuperData& sd);

FiniteRMatrices build_finite(const SuperData& sd);

/// Rx Delta(g) = DeltaOp(g) Rx for every generator.
std::vector<Check> check_intertwining(const QMat& rx, const FinRep& rep, const std::string& tag);

/// tau R0 acts on w1, w2 (and w3 for osp) by lambda1, lambda2, lambda3.
std::vector<Check> eigen_check(const QMat& rhat, const HighestVectors& hv, const SuperData& sd);

/// Constant Yang-Baxter equation R12 R13 R23 = R23 R13 R12 and the braid
/// form for Rhat = tau R, checked symbolically.
std::vector<Check> check_constant_ybe(const QMat& r, const std::string& tag);

/// Same identity at exact rational specializations q = t0^4.
std::vector<Check> check_constant_ybe_specialized(const QMat& r, const std::string& tag,
                                                  const std::vector<Rational>& t_points);

/// (tau R0)(tau Rinf) = Id, the q -> q^{-1} symmetry between R0 and Rinf,
/// R = R0 at q = 1, and RJ RJ^{-1} = Id.
std::vector<Check> check_finite_structure(const FiniteRMatrices& rm, const SuperData& sd);

}  // namespace qrmat
