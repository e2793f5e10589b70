#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrmat/gradedmatrix.hpp"
#include "qrmat/report.hpp"

namespace qrmat {

using QMat = GradedMatrix<QLaurent>;
using QVec = SparseVec<QLaurent>;

/// The q-deformed basis element X_{ij} = E_{ij} - (-1)^{i(i+j)} theta_i
/// theta_j E_{j'i'} of osp(V).
QMat x_element(const SuperData& sd, int i, int j);

/// First fundamental representation: matrices of e_i, f_i (with the kappa_i
/// rescaling) and the diagonal q^{+h_i/2} (inverses derived on demand).
struct FinRep {
    const SuperData* sd = nullptr;
    std::vector<QMat> e, f, hhalf;
    std::vector<QLaurent> kappa;

    const SuperData& data() const { return *sd; }
    QMat hhalf_inv(int i) const { return diagonal_inverse(hhalf[i]); }
    /// q^{h_i} = (q^{h_i/2})^2.
    QMat hfull(int i) const { return hhalf[i] * hhalf[i]; }
    int gen_parity(int i) const { return sd->root_parity(sd->roots.simple[i]); }
};

FinRep build_finrep(const SuperData& sd);

/// Integer diagonal of the classical Cartan element h_i acting on V.
std::vector<int> classical_h_diag(const SuperData& sd, int i);

struct GenRef {
    char kind;  // 'e', 'f', '+', '-'  ('+'/'-' are q^{+-h_i/2})
    int i;      // 0-based generator index
};

enum class CoVariant { Delta, DeltaOp, DeltaJ, DeltaJOp };

/// (rho (x) rho) of the chosen coproduct of a generator, as a matrix on
/// V (x) V.
QMat coproduct_action(const FinRep& rep, const GenRef& g, CoVariant variant);

/// The generator matrix rho(g) on V.
QMat generator_matrix(const FinRep& rep, const GenRef& g);

/// Weight of a generator (deg e_i = alpha_i, deg f_i = -alpha_i, 0 for the
/// Cartan pieces).
Weight generator_weight(const FinRep& rep, const GenRef& g);
int generator_parity(const FinRep& rep, const GenRef& g);

/// Diagonal of q^{-(eps_i, eps_j)/2} on V (x) V.
QMat ftilde_half(const SuperData& sd);

/// The highest weight vectors of V (x) V: w1 = v1 (x) v1 of weight 2 eps_1,
/// w2 of weight eps_1 + eps_2, and (osp only) the weight-0 vector w3 with
/// coefficients c_1..c_N. Annihilation and weight properties are verified
/// on construction.
struct HighestVectors {
    QVec w1, w2, w3;
    std::vector<QLaurent> c;  // osp only; 1-based as c[i-1]
};

HighestVectors highest_vectors(const FinRep& rep);

/// Matrix together with the bookkeeping a q-superbracket needs.
struct TaggedOp {
    QMat mat;
    int parity = 0;   // Z2
    Weight deg;       // P-degree
    int udeg = 0;     // spectral degree (affine generators only)
};

TaggedOp tagged_gen(const FinRep& rep, const GenRef& g);

/// [[a, b]] = ab - (-1)^{|a||b|} q^{(deg a, deg b)} ba.
TaggedOp qbracket(const SuperData& sd, const TaggedOp& a, const TaggedOp& b);

/// Defining relations evaluated as exact matrix identities on V.
std::vector<Check> check_relations(const FinRep& rep);

/// The q-Serre relations the representation must satisfy on V: the
/// vanishing [[e_i, e_j]] = 0 (and for f) whenever a_{ij} = 0, the A-type
/// Serre family, and the cubic relation in the even-m case with
/// parity (..,1,0).
std::vector<Check> verify_serre(const FinRep& rep);

/// 1-dimensionality of the highest-weight space of each weight in
/// {2 eps_1, eps_1 + eps_2, 0}: the kernel of the stacked e_a-actions meets
/// the weight space in a line.
std::vector<Check> check_highest_weight_uniqueness(const FinRep& rep);

}  // namespace qrmat
