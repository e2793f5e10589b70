#pragma once

#include "qrmat/repn.hpp"

namespace qrmat {

/// The u-vector bases of the two large submodules of V (x) V, the
/// distinguished zero-weight vector of the even cases, and the invariant
/// line.
struct TensorSquareDecomp {
    struct Entry {
        int i, j;  // 1-based labels; i == j for the diagonal family
        QVec vec;
    };
    std::vector<Entry> wplus, wminus;
    QVec uss;  // the distinguished (s,s') vector of the even cases
    QVec w3;   // empty for the A family
};

/// The u-vector of the given labels; sign = +1 or -1 selects the family.
QVec u_vector(const SuperData& sd, int i, int j, int sign);

TensorSquareDecomp build_bases(const SuperData& sd, const FinRep& rep);

/// Stability of W+, W-, W3 under every generator (exact membership), plus
/// the expected-image tables for the lowering generators (and the raising
/// ones in the A family).
std::vector<Check> check_stability(const SuperData& sd, const FinRep& rep,
                                   const TensorSquareDecomp& dec);

/// Direct sum / codimension-one dichotomy, membership statements for the
/// invariant line and the tilde vectors, and the explicit zero-weight
/// combination with its closed-form coefficients.
std::vector<Check> check_sum_structure(const SuperData& sd, const FinRep& rep,
                                       const TensorSquareDecomp& dec);

/// tau R0 acts on W+ by lambda1, on W- by lambda2, and on the quotient
/// line by lambda3.
std::vector<Check> check_lambda_action(const SuperData& sd, const TensorSquareDecomp& dec);

/// Closure spans: {w1, w2, w3} generate exactly when n != m, while
/// {w1, w2, v_1 (x) v_{1'}} and {w1, w2, v_{1'} (x) v_1} always do;
/// {w1, w2} suffice in the A family.
std::vector<Check> check_generating(const SuperData& sd, const FinRep& rep);

/// The same statements for the classical specialization at q = 1.
std::vector<Check> check_classical_limit(const SuperData& sd, const FinRep& rep);

}  // namespace qrmat
