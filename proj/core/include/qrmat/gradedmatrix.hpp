#pragma once

#include <map>
#include <type_traits>
#include <sstream>
#include <vector>
#include <string>
#include <utility>

#include "qrmat/errors.hpp"
#include "qrmat/exactring.hpp"
#include "qrmat/poly2.hpp"
#include "qrmat/superdata.hpp"

namespace qrmat {

/// Sparse matrix over an exact ring T acting on V^{otimes legs} for the
/// superspace V of a SuperData. Indices are 0-based internally; the
/// composite index of (i_1,...,i_k) (1-based digits) is
/// (i_1-1)*N^{k-1} + ... + (i_k-1), matching the row-major convention used
/// by the JSON export.
template <typename T>
class GradedMatrix {
public:
    GradedMatrix() : sd_(nullptr), legs_(0), dim_(0) {}
    GradedMatrix(const SuperData& sd, int legs) : sd_(&sd), legs_(legs), dim_(1) {
        for (int i = 0; i < legs; ++i) dim_ *= sd.N;
    }

    static GradedMatrix identity(const SuperData& sd, int legs) {
        GradedMatrix r(sd, legs);
        for (int i = 0; i < r.dim_; ++i) r.rows_[i][i] = T(1);
        return r;
    }
    /// Elementary matrix E_{ij} on V (1-based i, j).
    static GradedMatrix unit(const SuperData& sd, int i, int j) {
        GradedMatrix r(sd, 1);
        r.rows_[i - 1][j - 1] = T(1);
        return r;
    }

    const SuperData& sd() const { return *sd_; }
    const SuperData* sd_ptr() const { return sd_; }
    int dim() const { return dim_; }
    int legs() const { return legs_; }

    bool is_zero() const { return rows_.empty(); }
    size_t nnz() const {
        size_t c = 0;
        for (const auto& [r, row] : rows_) c += row.size();
        return c;
    }

    const std::map<int, std::map<int, T>>& rows() const { return rows_; }

    void add(int r, int c, const T& v) {
        if (qrmat::is_zero(v)) return;
        auto& row = rows_[r];
        auto it = row.find(c);
        if (it == row.end()) {
            row.emplace(c, v);
        } else {
            it->second += v;
            if (qrmat::is_zero(it->second)) {
                row.erase(it);
                if (row.empty()) rows_.erase(r);
            }
        }
    }
    void set(int r, int c, const T& v) {
        auto ri = rows_.find(r);
        if (ri != rows_.end()) {
            ri->second.erase(c);
            if (ri->second.empty()) rows_.erase(ri);
        }
        if (!qrmat::is_zero(v)) rows_[r][c] = v;
    }
    T at(int r, int c) const {
        auto ri = rows_.find(r);
        if (ri == rows_.end()) return T(0);
        auto ci = ri->second.find(c);
        return ci == ri->second.end() ? T(0) : ci->second;
    }

    /// Z2 parity of a composite basis index.
    int index_parity(int x) const {
        int p = 0;
        for (int l = 0; l < legs_; ++l) {
            p += sd_->parity[x % sd_->N];
            x /= sd_->N;
        }
        return p % 2;
    }

    GradedMatrix operator-() const {
        GradedMatrix r = shell();
        for (const auto& [i, row] : rows_)
            for (const auto& [j, v] : row) r.rows_[i].emplace(j, -v);
        return r;
    }
    GradedMatrix& operator+=(const GradedMatrix& o) {
        check_same(o);
        for (const auto& [i, row] : o.rows_)
            for (const auto& [j, v] : row) add(i, j, v);
        return *this;
    }
    GradedMatrix& operator-=(const GradedMatrix& o) {
        check_same(o);
        for (const auto& [i, row] : o.rows_)
            for (const auto& [j, v] : row) add(i, j, -v);
        return *this;
    }
    friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
    friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }

    GradedMatrix scaled(const T& c) const {
        GradedMatrix r = shell();
        if (qrmat::is_zero(c)) return r;
        for (const auto& [i, row] : rows_)
            for (const auto& [j, v] : row) r.add(i, j, v * c);
        return r;
    }

    /// Plain operator composition (no Koszul signs; those live in the
    /// graded tensor product only).
    friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
        a.check_same(b);
        GradedMatrix r = a.shell();
        for (const auto& [i, arow] : a.rows_) {
            auto& rrow = r.rows_[i];
            for (const auto& [k, av] : arow) {
                auto bi = b.rows_.find(k);
                if (bi == b.rows_.end()) continue;
                for (const auto& [j, bv] : bi->second) {
                    auto it = rrow.find(j);
                    if (it == rrow.end())
                        rrow.emplace(j, av * bv);
                    else
                        it->second += av * bv;
                }
            }
        }
        r.prune();
        return r;
    }

    bool operator==(const GradedMatrix& o) const {
        return dim_ == o.dim_ && rows_ == o.rows_;
    }
    bool operator!=(const GradedMatrix& o) const { return !(*this == o); }

    template <typename F>
    auto map_entries(F&& f) const -> GradedMatrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        GradedMatrix<U> r(*sd_, legs_);
        for (const auto& [i, row] : rows_)
            for (const auto& [j, v] : row) r.add(i, j, f(v));
        return r;
    }

    /// Position of the first nonzero entry, for failure reports.
    std::string first_entry_str() const {
        if (rows_.empty()) return "none";
        const auto& [i, row] = *rows_.begin();
        const auto& [j, v] = *row.begin();
        (void)v;
        std::ostringstream os;
        os << "(" << i + 1 << "," << j + 1 << ")";
        return os.str();
    }

    /// Residual dump: up to `limit` entries with their coefficients.
    std::string residual_summary(size_t limit = 8) const {
        if (rows_.empty()) return "none";
        std::ostringstream os;
        size_t count = 0;
        for (const auto& [i, row] : rows_) {
            for (const auto& [j, val] : row) {
                if (count == limit) {
                    os << " ... (" << nnz() - limit << " more)";
                    return os.str();
                }
                if (count) os << "; ";
                os << "(" << i + 1 << "," << j + 1 << ") = " << coeff_str(val);
                ++count;
            }
        }
        return os.str();
    }

private:
    static std::string coeff_str(const Rational& x) { return rational_str(x); }
    template <typename U>
    static auto coeff_str(const U& x) -> decltype(x.str()) {
        return x.str();
    }

public:

    void prune() {
        for (auto ri = rows_.begin(); ri != rows_.end();) {
            for (auto ci = ri->second.begin(); ci != ri->second.end();)
                ci = qrmat::is_zero(ci->second) ? ri->second.erase(ci) : std::next(ci);
            ri = ri->second.empty() ? rows_.erase(ri) : std::next(ri);
        }
    }

private:
    GradedMatrix shell() const {
        GradedMatrix r;
        r.sd_ = sd_;
        r.legs_ = legs_;
        r.dim_ = dim_;
        return r;
    }
    void check_same(const GradedMatrix& o) const {
        if (sd_ == nullptr || o.sd_ == nullptr || !(*sd_ == *o.sd_) || legs_ != o.legs_)
            throw SuperDataMismatch();
    }

    const SuperData* sd_;
    int legs_;
    int dim_;
    std::map<int, std::map<int, T>> rows_;
};

/// Graded tensor product: (A (x) B)(v_a (x) v_b) = (-1)^{|B| * |v_a|} A v_a (x) B v_b,
/// realized entrywise with the sign taken from the parity of B's entry and
/// the parity of the column index of A's entry.
template <typename T>
GradedMatrix<T> kron_graded(const GradedMatrix<T>& a, const GradedMatrix<T>& b) {
    if (a.sd_ptr() == nullptr || b.sd_ptr() == nullptr || !(a.sd() == b.sd()))
        throw SuperDataMismatch();
    GradedMatrix<T> r(a.sd(), a.legs() + b.legs());
    const int db = b.dim();
    for (const auto& [ra, arow] : a.rows())
        for (const auto& [ca, av] : arow) {
            const int col_par = a.index_parity(ca);
            for (const auto& [rb, brow] : b.rows())
                for (const auto& [cb, bv] : brow) {
                    int sign = ((b.index_parity(rb) + b.index_parity(cb)) % 2) * col_par;
                    T v = av * bv;
                    if (sign % 2) v = -v;
                    r.add(ra * db + rb, ca * db + cb, v);
                }
        }
    return r;
}

/// Graded permutation on V (x) V: v_i (x) v_j -> (-1)^{ij} v_j (x) v_i.
template <typename T>
GradedMatrix<T> tau_matrix(const SuperData& sd) {
    GradedMatrix<T> r(sd, 2);
    const int N = sd.N;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            T v(1);
            if (sd.bar(i) && sd.bar(j)) v = -v;
            r.add((j - 1) * N + (i - 1), (i - 1) * N + (j - 1), v);
        }
    return r;
}

enum class Legs { L12, L23, L13 };

/// Embed an operator on V (x) V into V (x) V (x) V on the chosen legs;
/// R13 = (Id (x) tau) R12 (Id (x) tau).
template <typename T>
GradedMatrix<T> leg_embed(const GradedMatrix<T>& r2, Legs legs) {
    const SuperData& sd = r2.sd();
    GradedMatrix<T> id1 = GradedMatrix<T>::identity(sd, 1);
    switch (legs) {
        case Legs::L12:
            return kron_graded(r2, id1);
        case Legs::L23:
            return kron_graded(id1, r2);
        case Legs::L13: {
            GradedMatrix<T> mid = kron_graded(id1, tau_matrix<T>(sd));
            return mid * kron_graded(r2, id1) * mid;
        }
    }
    throw Error("unreachable");
}

namespace detail {

/// Koszul sign of the realization of a pure tensor term E_{r1 c1} (x) ... :
/// the factor on leg b moves past the column vectors consumed by the legs
/// before it.
inline int realization_sign(const SuperData& sd, int legs, int row, int col) {
    const int N = sd.N;
    int acc = 0;
    // digits from the rightmost leg upward
    std::vector<int> rp(legs), cp(legs);
    for (int l = legs - 1; l >= 0; --l) {
        rp[l] = sd.parity[row % N];
        cp[l] = sd.parity[col % N];
        row /= N;
        col /= N;
    }
    for (int a = 0; a < legs; ++a)
        for (int b = a + 1; b < legs; ++b) acc += ((rp[b] + cp[b]) % 2) * cp[a];
    return acc % 2;
}

}  // namespace detail

/// Supertranspose applied to one tensor factor of an operator on
/// V^{otimes legs} (0-based leg): the factor X on that leg is replaced by
/// X^{st} = sum (-1)^{j(i+j)} x_{ij} E_{ji}, with the Koszul realization
/// signs recomputed for the transposed term.
template <typename T>
GradedMatrix<T> supertranspose_leg(const GradedMatrix<T>& m, int leg) {
    const SuperData& sd = m.sd();
    const int N = sd.N;
    int stride = 1;
    for (int l = m.legs() - 1; l > leg; --l) stride *= N;
    GradedMatrix<T> r(sd, m.legs());
    for (const auto& [row, cols] : m.rows())
        for (const auto& [col, v] : cols) {
            int di = (row / stride) % N;  // 0-based row digit at this leg
            int dj = (col / stride) % N;
            int nrow = row + (dj - di) * stride;
            int ncol = col + (di - dj) * stride;
            int sign = sd.parity[dj] * ((sd.parity[di] + sd.parity[dj]) % 2) +
                       detail::realization_sign(sd, m.legs(), row, col) +
                       detail::realization_sign(sd, m.legs(), nrow, ncol);
            T nv = v;
            if (sign % 2) nv = -nv;
            r.add(nrow, ncol, nv);
        }
    return r;
}

template <typename T>
GradedMatrix<T> supertranspose(const GradedMatrix<T>& m) {
    return supertranspose_leg(m, 0);
}

/// Inverse of a diagonal matrix with invertible (monomial-like) entries.
template <typename T>
GradedMatrix<T> diagonal_inverse(const GradedMatrix<T>& m) {
    GradedMatrix<T> r(m.sd(), m.legs());
    for (const auto& [i, row] : m.rows())
        for (const auto& [j, v] : row) {
            if (i != j) throw Error("diagonal_inverse on a non-diagonal matrix");
            r.set(i, j, inverse_of(v));
        }
    if (r.nnz() != static_cast<size_t>(m.dim())) throw Error("diagonal matrix is singular");
    return r;
}

/// Sparse column vector in V^{otimes legs}.
template <typename T>
using SparseVec = std::map<int, T>;

template <typename T>
void vec_add(SparseVec<T>& v, int i, const std::type_identity_t<T>& c) {
    auto it = v.find(i);
    if (it == v.end()) {
        if (!is_zero(c)) v.emplace(i, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) v.erase(it);
    }
}

template <typename T>
SparseVec<T> mat_vec(const GradedMatrix<T>& a, const SparseVec<T>& x) {
    SparseVec<T> y;
    for (const auto& [i, row] : a.rows())
        for (const auto& [j, v] : row) {
            auto it = x.find(j);
            if (it != x.end()) vec_add(y, i, v * it->second);
        }
    return y;
}

template <typename T>
SparseVec<T> vec_scaled(const SparseVec<T>& x, const std::type_identity_t<T>& c) {
    SparseVec<T> y;
    for (const auto& [i, v] : x) vec_add(y, i, v * c);
    return y;
}

template <typename T>
SparseVec<T> vec_sub(SparseVec<T> a, const SparseVec<T>& b) {
    for (const auto& [i, v] : b) vec_add(a, i, -v);
    return a;
}

template <typename T>
SparseVec<T> vec_plus(SparseVec<T> a, const SparseVec<T>& b) {
    for (const auto& [i, v] : b) vec_add(a, i, v);
    return a;
}

}  // namespace qrmat
