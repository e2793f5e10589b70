#pragma once

#include <string>
#include <vector>

#include "qrmat/errors.hpp"

namespace qrmat {

enum class Family { Osp, GlA };
enum class CaseTag { OddM, EvenM_sEven, EvenM_sOdd, Atype };

/// Weight in the lattice spanned by eps_1..eps_r (r = s for osp, r = N for
/// A-type). Coefficients are half-integers stored doubled, so `half2[i] = 2c`
/// represents the coefficient c of eps_{i+1}.
struct Weight {
    std::vector<int> half2;

    Weight() = default;
    explicit Weight(int rank) : half2(rank, 0) {}

    int rank() const { return static_cast<int>(half2.size()); }
    bool is_zero() const;

    Weight operator-() const;
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight scaled(int k) const;
    bool operator==(const Weight& o) const { return half2 == o.half2; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return half2 < o.half2; }

    std::string str() const;
};

enum class RootKind { Even, OddIsotropic, OddNonIsotropic };

/// Root data: positive system, reduced positive system, simple roots,
/// symmetrized Cartan matrix, and the Weyl vector computed as the literal
/// graded half-sum of the positive roots.
struct RootSystem {
    std::vector<Weight> positive;
    std::vector<Weight> reduced_positive;
    std::vector<RootKind> reduced_kind;
    std::vector<Weight> simple;
    std::vector<std::vector<int>> cartan;
    Weight rho;
};

/// The superspace V = C^{m|n} with a chosen parity sequence and sign
/// sequence, plus all root data derived from it.
class SuperData {
public:
    Family family = Family::Osp;
    CaseTag case_tag = CaseTag::OddM;
    int m = 0, n = 0, N = 0;
    int s = 0;  // number of simple roots
    std::vector<int> parity;  // size N, entries 0/1; parity of v_1..v_N
    std::vector<int> theta;   // size N, entries +-1
    RootSystem roots;

    /// osp: parity_seq has length s = floor(N/2) and describes v_1..v_s;
    /// A-type: length N. theta_choice may be empty (default: +1 for i <= s),
    /// length s, or length N.
    static SuperData build(Family fam, int m, int n, const std::vector<int>& parity_seq,
                           const std::vector<int>& theta_choice = {});

    int prime(int i) const { return N + 1 - i; }         // index involution, 1-based
    int bar(int i) const { return parity[i - 1]; }       // Z2 parity of v_i
    int sign(int i) const { return bar(i) ? -1 : 1; }    // (-1)^{bar i}
    int theta_of(int i) const { return theta[i - 1]; }

    int weight_rank() const { return family == Family::Osp ? s : N; }

    /// eps_i as a Weight, with eps_{i'} = -eps_i and eps_{s+1} = 0 applied
    /// in the osp family.
    Weight eps(int i) const;
    /// (eps_i, eps_j) for any 1 <= i, j <= N.
    int eps_pair(int i, int j) const;

    /// 4 * (mu, nu); the natural unit since t = q^{1/4}.
    int pair4(const Weight& mu, const Weight& nu) const;
    /// 4 * (rho, mu).
    int rho_pair4(const Weight& mu) const { return pair4(roots.rho, mu); }

    /// Z2 parity of a root (or any integer weight).
    int root_parity(const Weight& gamma) const;
    bool is_isotropic(const Weight& gamma) const {
        return root_parity(gamma) == 1 && pair4(gamma, gamma) == 0;
    }

    Weight highest_root() const;
    /// Coefficients k_i of the highest root over the simple roots.
    std::vector<int> highest_root_coeffs() const;

    /// Decompose an integer weight over the simple roots; throws when the
    /// weight is not in the root lattice span.
    std::vector<int> simple_root_coeffs(const Weight& gamma) const;

    std::string label() const;

    bool operator==(const SuperData& o) const {
        return family == o.family && m == o.m && n == o.n && parity == o.parity &&
               theta == o.theta;
    }
};

/// All admissible parity sequences for the given family and dimensions
/// (osp: weight-n/2 binary strings of length s; A-type: weight-n binary
/// strings of length N).
std::vector<std::vector<int>> admissible_parities(Family fam, int m, int n);

}  // namespace qrmat
