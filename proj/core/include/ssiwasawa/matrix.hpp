#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ssiwasawa/padic.hpp"

namespace ssiw {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }
    /// Append the rows of `other` (same column count).
    void append_rows(const Matrix& other) {
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        rows_ += other.rows_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using PadicMatrix = Matrix<PadicScalar>;
using IntMatrix = Matrix<mpz_class>;

/// Result of a Smith normal form computation over a discrete valuation ring.
struct SnfResult {
    /// Valuations of the nonzero diagonal entries, ascending.
    std::vector<int> pivots;
    /// Number of columns (generators) of the presentation.
    std::size_t generators = 0;

    [[nodiscard]] std::size_t relation_rank() const noexcept { return pivots.size(); }
    [[nodiscard]] std::size_t free_rank() const noexcept { return generators - pivots.size(); }
    /// Number of cyclic torsion factors (pivots of positive valuation).
    [[nodiscard]] std::size_t torsion_rank() const noexcept;
    /// Sum of pivot valuations, i.e. log of the torsion order.
    [[nodiscard]] long torsion_length() const noexcept;
};

/// SNF over Z_(p) of an exact integer matrix (rows are relations).
SnfResult snf_local(const IntMatrix& relations, int p);

/// SNF over Z_p with minimal-valuation pivoting. Remaining entries that are
/// zero only to precision make the rank uncertifiable: PrecisionExhausted.
SnfResult snf_padic(const PadicMatrix& relations);

/// Determinant over Q_p by elimination with minimal-valuation pivots.
PadicScalar determinant(PadicMatrix m);

/// Solve A x = b for a square A invertible over Q_p.
std::vector<PadicScalar> solve(PadicMatrix a, std::vector<PadicScalar> b);

/// Least-squares style solve for a full-column-rank overdetermined system:
/// returns x with A x = b on the pivot rows, plus the smallest valuation
/// lower bound of the residual on the other rows (kInfiniteValuation when
/// every residual entry is exactly zero).
struct OverdeterminedSolution {
    std::vector<PadicScalar> x;
    int residual = kInfiniteValuation;
};
OverdeterminedSolution solve_overdetermined(PadicMatrix a, std::vector<PadicScalar> b);

/// Rank over F_p of an integer matrix.
std::size_t rank_mod_p(const IntMatrix& m, int p);

/// Division-free determinant (Berkowitz) over any commutative ring T.
template <class T>
T berkowitz_determinant(const Matrix<T>& a, const T& zero, const T& one) {
    const std::size_t n = a.rows();
    if (n == 0) return one;
    // characteristic polynomial coefficients, highest first
    std::vector<T> poly{one, zero - a(0, 0)};
    for (std::size_t k = 1; k < n; ++k) {
        // Toeplitz column for the leading (k+1)x(k+1) block
        std::vector<T> row(k, zero), col(k, zero);
        for (std::size_t j = 0; j < k; ++j) {
            row[j] = a(k, j);
            col[j] = a(j, k);
        }
        std::vector<T> toeplitz{one, zero - a(k, k)};
        // powers: row * A_k^i * col
        std::vector<T> vec = col;
        for (std::size_t i = 0; i < k; ++i) {
            T dot = zero;
            for (std::size_t j = 0; j < k; ++j) dot = dot + row[j] * vec[j];
            toeplitz.push_back(zero - dot);
            std::vector<T> next(k, zero);
            for (std::size_t r0 = 0; r0 < k; ++r0) {
                T acc = zero;
                for (std::size_t c0 = 0; c0 < k; ++c0) acc = acc + a(r0, c0) * vec[c0];
                next[r0] = acc;
            }
            vec = std::move(next);
        }
        std::vector<T> out(k + 2, zero);
        for (std::size_t i = 0; i < k + 2; ++i) {
            for (std::size_t j = 0; j <= i && j < poly.size(); ++j) {
                out[i] = out[i] + toeplitz[i - j] * poly[j];
            }
        }
        poly = std::move(out);
    }
    T det = poly.back();
    if (n % 2 == 1) det = zero - det;
    return det;
}

} // namespace ssiw
