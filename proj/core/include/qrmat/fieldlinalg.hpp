#pragma once

#include <optional>
#include <vector>

#include "qrmat/exactring.hpp"

namespace qrmat {

/// Row-echelon accumulator over an exact field, used for ranks, span
/// membership, and exact linear solves on small dense systems.
template <typename F>
class EchelonBasis {
public:
    explicit EchelonBasis(int width) : width_(width) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

    /// Reduce v against the accumulated rows in place; afterwards v is zero
    /// iff it lies in their span. Coefficients of the reduction are
    /// appended to coeffs (index into insertion order) when requested.
    void reduce(std::vector<F>& v, std::vector<std::pair<int, F>>* coeffs = nullptr) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const F& lead = v[pivots_[r]];
            if (is_zero(lead)) continue;
            F factor = lead;  // rows are normalized to pivot 1
            if (coeffs) coeffs->emplace_back(static_cast<int>(r), factor);
            for (int c = 0; c < width_; ++c)
                if (!is_zero(rows_[r][c])) v[c] -= factor * rows_[r][c];
        }
    }

    /// Insert a vector; returns true when it enlarged the span.
    bool insert(std::vector<F> v) {
        reduce(v);
        int pivot = -1;
        for (int c = 0; c < width_; ++c)
            if (!is_zero(v[c])) {
                pivot = c;
                break;
            }
        if (pivot < 0) return false;
        F inv = inverse_of(v[pivot]);
        for (int c = 0; c < width_; ++c)
            if (!is_zero(v[c])) v[c] = v[c] * inv;
        // Back-substitute into the existing rows to keep them fully reduced.
        for (size_t r = 0; r < rows_.size(); ++r) {
            F f = rows_[r][pivot];
            if (is_zero(f)) continue;
            for (int c = 0; c < width_; ++c)
                if (!is_zero(v[c])) rows_[r][c] -= f * v[c];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        // Keep rows sorted by pivot for deterministic reduction.
        for (size_t r = rows_.size(); r-- > 1;) {
            if (pivots_[r] < pivots_[r - 1]) {
                std::swap(pivots_[r], pivots_[r - 1]);
                std::swap(rows_[r], rows_[r - 1]);
            } else {
                break;
            }
        }
        return true;
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        for (const F& x : v)
            if (!is_zero(x)) return false;
        return true;
    }

private:
    int width_;
    std::vector<std::vector<F>> rows_;
    std::vector<int> pivots_;
};

template <typename F>
int field_rank(const std::vector<std::vector<F>>& rows) {
    if (rows.empty()) return 0;
    EchelonBasis<F> basis(static_cast<int>(rows[0].size()));
    for (const auto& r : rows) basis.insert(r);
    return basis.rank();
}

/// Solve sum_k x_k vectors[k] = target exactly; empty when target is not in
/// the span. The returned coefficients are unique when the vectors are
/// independent.
template <typename F>
std::optional<std::vector<F>> solve_in_span(const std::vector<std::vector<F>>& vectors,
                                            const std::vector<F>& target) {
    if (vectors.empty()) return std::nullopt;
    const int width = static_cast<int>(vectors[0].size());
    const int k = static_cast<int>(vectors.size());
    // Augment each vector with an indicator column to track coefficients.
    EchelonBasis<F> basis(width + k);
    for (int i = 0; i < k; ++i) {
        std::vector<F> row(width + k, F(0));
        for (int c = 0; c < width; ++c) row[c] = vectors[i][c];
        row[width + i] = F(1);
        basis.insert(std::move(row));
    }
    std::vector<F> t(width + k, F(0));
    for (int c = 0; c < width; ++c) t[c] = target[c];
    basis.reduce(t);
    for (int c = 0; c < width; ++c)
        if (!is_zero(t[c])) return std::nullopt;
    std::vector<F> coeffs(k);
    for (int i = 0; i < k; ++i) coeffs[i] = -t[width + i];
    return coeffs;
}

}  // namespace qrmat
