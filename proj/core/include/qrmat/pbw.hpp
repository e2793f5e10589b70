#pragma once

#include "qrmat/lyndon.hpp"
#include "qrmat/repn.hpp"

namespace qrmat {

/// Root vectors e_gamma, f_gamma realized on V, together with the Hopf
/// pairing value (f_gamma, e_gamma)_J and the word data that produced them.
struct RootVectorPair {
    Weight gamma;
    QMat e_mat, f_mat;
    int parity = 0;
    QRat pairing1;
    Word lyndon;
    bool is_simple = false;
    std::pair<Weight, Weight> split;  // costandard split (non-simple roots)
};

/// The q-deformed matrix units used by the closed forms.
QMat e_small(const SuperData& sd, int i, int j);
QMat f_small(const SuperData& sd, int i, int j);

/// Closed-form values of (f_gamma, e_gamma)_J per case.
QRat pairing_table_value(const SuperData& sd, const Weight& gamma);

/// Build every root-vector pair by the recursive q-bracketing along the
/// costandard splits; each matrix is checked against its closed form and a
/// ClosedFormMismatch is raised on disagreement.
std::vector<RootVectorPair> root_vectors(const SuperData& sd, const FinRep& rep);

/// (f_gamma^k, e_gamma^k)_J from the power formula; IsotropicPower for
/// k >= 2 on isotropic odd roots.
QRat pair_J_power(const SuperData& sd, const RootVectorPair& rv, int k);

/// Local factor Theta_gamma = sum_k f^k (x) e^k / (f^k, e^k)_J; the series
/// terminates by nilpotency. Checked against the closed form.
QMat theta_local(const FinRep& rep, const RootVectorPair& rv);
QMat theta_local_closed_form(const SuperData& sd, const RootVectorPair& rv);

/// Ordered product over the reduced positive system in decreasing
/// lexicographic order.
QMat theta_factorized(const SuperData& sd, const FinRep& rep);

/// The closed form of the whole Theta (case-independent display for osp).
QMat theta_closed_form(const SuperData& sd);

/// Grouped factor Theta_i and its closed form.
QMat theta_grouped_product(const FinRep& rep, const std::vector<RootVectorPair>& rvs, int i);
QMat theta_grouped_closed_form(const SuperData& sd, int i);

/// Factorization suite: local, grouped, and full closed forms, plus the
/// R-matrix identity R0 = tau f~^{1/2} Theta f~^{1/2} tau and the
/// intertwining consequence for Theta f~.
std::vector<Check> check_theta_suite(const SuperData& sd, const FinRep& rep);

/// Pairing suite: brute-force twisted pairings of the dominant Lyndon
/// words against the closed forms, and the reconstruction of the Hopf
/// pairing from them.
std::vector<Check> check_pairing_suite(const SuperData& sd, int max_len = 6);

/// Degree bijection between dominant Lyndon words and the reduced positive
/// system, and consistency of the costandard tables with the word
/// factorizations.
std::vector<Check> check_dominant_structure(const SuperData& sd);

}  // namespace qrmat
