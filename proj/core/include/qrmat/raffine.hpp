#pragma once

#include "qrmat/poly2.hpp"
#include "qrmat/repn.hpp"

namespace qrmat {

enum class AffineCase { OddV1, EvenV1, Atype };

/// Evaluation module over the affine algebra: the finite action extended by
/// e_0, f_0, q^{+-h_0/2}. Spectral weight is tracked as a formal degree in
/// u (+1 for e_0, -1 for f_0) rather than through an extra ring variable.
struct AffineRep {
    const FinRep* base = nullptr;
    AffineCase acase = AffineCase::OddV1;
    QMat e0, f0, h0half;
    QLaurent a, b;

    const SuperData& data() const { return base->data(); }
    QMat h0half_inv() const { return diagonal_inverse(h0half); }
};

/// b is derived from the case constraint (ab = -(q+q^{-1}), (-1)^{bar 2},
/// or (-1)^{bar N}); a must be an invertible monomial.
AffineRep build_affine_rep(const FinRep& rep, const QLaurent& a = QLaurent(1));

/// Defining relations on V: the central element acts trivially, Cartan
/// conjugation with the extended Cartan matrix, and the ef-commutators
/// including the affine node.
std::vector<Check> check_affine_relations(const AffineRep& arep);

/// The explicit affine Serre instances: the two quartic-exchange cases on
/// osp(4|2), the degree-five case on osp(3|2) with parity (1,0), and the
/// three-term exchange whenever |v_1| = 0, |v_2| = 1.
std::vector<Check> verify_affine_serre(const AffineRep& arep);

/// Spectral R-matrix: P(z) = (z-1) R(z) stored by z-power, and the entry
/// matrix of R(z) itself over fractions in z.
struct SpectralR {
    std::vector<QMat> pz;  // coefficients of (z-1) R(z), ascending powers
    GradedMatrix<ZRat> rz;
};

SpectralR build_Rz(const SuperData& sd);

/// R(z) assembled from R0, Rinf and the eigenvalues through the spectral
/// combination of the correct case; returned in the same P(z) convention.
std::vector<QMat> yang_baxterize(const SuperData& sd);

/// R(z) built directly equals the spectral combination, and
/// its z -> 0 / z -> infinity limits recover the finite matrices.
std::vector<Check> check_baxterization(const SuperData& sd);

/// Spectral Yang-Baxter equation with two independent parameters, checked
/// symbolically (intended for N <= 4).
std::vector<Check> check_spectral_ybe(const SuperData& sd);

/// The same identity at exact rational points (t0, z1, z2).
std::vector<Check> check_spectral_ybe_specialized(
    const SuperData& sd, const std::vector<std::array<Rational, 3>>& points);

/// R(z) Delta(x) = DeltaOp(x) R(z) over two-variable polynomials for every
/// generator including e_0 and f_0.
std::vector<Check> check_affine_intertwining(const AffineRep& arep);

/// Numeric degeneration to the rational R-matrix (the only non-exact check)
/// plus the exact additive-parameter Yang-Baxter equation for the rational
/// matrix itself.
std::vector<Check> check_rational_limit(const SuperData& sd);

}  // namespace qrmat
