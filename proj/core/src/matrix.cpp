#include "ssiwasawa/matrix.hpp"

#include <algorithm>

namespace ssiw {

std::size_t SnfResult::torsion_rank() const noexcept {
    return static_cast<std::size_t>(std::count_if(pivots.begin(), pivots.end(), [](int v) { return v > 0; }));
}

long SnfResult::torsion_length() const noexcept {
    long s = 0;
    for (int v : pivots) s += v;
    return s;
}

namespace {

int vq(const mpq_class& x, int p) {
    // denominators stay prime to p throughout
    return vp(mpz_class(x.get_num()), p);
}

} // namespace

SnfResult snf_local(const IntMatrix& relations, int p) {
    const std::size_t rows = relations.rows();
    const std::size_t cols = relations.cols();
    Matrix<mpq_class> m(rows, cols, mpq_class(0));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = relations(r, c);
    }
    SnfResult out;
    out.generators = cols;
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        int best = kInfiniteValuation;
        std::size_t br = 0, bc = 0;
        for (std::size_t r = k; r < rows && best > 0; ++r) {
            for (std::size_t c = k; c < cols; ++c) {
                if (m(r, c) == 0) continue;
                const int v = vq(m(r, c), p);
                if (v < best) {
                    best = v;
                    br = r;
                    bc = c;
                    if (v == 0) break;
                }
            }
        }
        if (best == kInfiniteValuation) break;
        m.swap_rows(k, br);
        m.swap_cols(k, bc);
        const mpq_class pivot = m(k, k);
        for (std::size_t r = k + 1; r < rows; ++r) {
            if (m(r, k) == 0) continue;
            const mpq_class factor = m(r, k) / pivot;
            for (std::size_t c = k + 1; c < cols; ++c) {
                if (m(k, c) != 0) m(r, c) -= factor * m(k, c);
            }
            m(r, k) = 0;
        }
        out.pivots.push_back(best);
    }
    std::sort(out.pivots.begin(), out.pivots.end());
    return out;
}

namespace {

// Position of the certified nonzero entry of least valuation in the block
// [k.., k..]; checks that no imprecise entry could undercut it.
struct PivotChoice {
    bool found = false;
    bool imprecise = false;
    std::size_t row = 0;
    std::size_t col = 0;
    int valuation = kInfiniteValuation;
};

PivotChoice choose_pivot(const PadicMatrix& m, std::size_t k, std::size_t col_end) {
    PivotChoice out;
    int imprecise_bound = kInfiniteValuation;
    for (std::size_t r = k; r < m.rows(); ++r) {
        for (std::size_t c = k; c < col_end; ++c) {
            const PadicScalar& x = m(r, c);
            if (x.is_exact_zero()) continue;
            if (x.is_zero_to_precision()) {
                imprecise_bound = std::min(imprecise_bound, x.valuation_lower_bound());
                continue;
            }
            if (x.valuation() < out.valuation) {
                out = {true, false, r, c, x.valuation()};
            }
        }
    }
    out.imprecise = imprecise_bound <= out.valuation;
    return out;
}

} // namespace

SnfResult snf_padic(const PadicMatrix& relations) {
    PadicMatrix m = relations;
    SnfResult out;
    out.generators = m.cols();
    for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) {
        const PivotChoice choice = choose_pivot(m, k, m.cols());
        if (choice.imprecise) {
            throw Error(ErrorKind::PrecisionExhausted, "SNF pivot cannot be certified at this precision");
        }
        if (!choice.found) break;
        m.swap_rows(k, choice.row);
        m.swap_cols(k, choice.col);
        const PadicScalar pivot = m(k, k);
        for (std::size_t r = k + 1; r < m.rows(); ++r) {
            if (m(r, k).is_exact_zero()) continue;
            const PadicScalar factor = m(r, k) / pivot;
            for (std::size_t c = k + 1; c < m.cols(); ++c) m(r, c) -= factor * m(k, c);
            m(r, k) = PadicScalar::zero(pivot.context());
        }
        out.pivots.push_back(choice.valuation);
    }
    std::sort(out.pivots.begin(), out.pivots.end());
    return out;
}

PadicScalar determinant(PadicMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "determinant of an empty matrix");
    const PadicContext ctx = m(0, 0).context();
    PadicScalar det = PadicScalar::one(ctx);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        int best_v = kInfiniteValuation;
        bool imprecise = false;
        for (std::size_t r = k; r < n; ++r) {
            const PadicScalar& x = m(r, k);
            if (x.is_exact_zero()) continue;
            if (x.is_zero_to_precision()) {
                imprecise = true;
                continue;
            }
            if (x.valuation() < best_v) {
                best_v = x.valuation();
                best = r;
            }
        }
        if (best == n) {
            if (imprecise) throw Error(ErrorKind::PrecisionExhausted, "determinant column is zero to precision");
            return PadicScalar::zero(ctx);
        }
        if (best != k) {
            m.swap_rows(k, best);
            det = -det;
        }
        const PadicScalar pivot = m(k, k);
        det *= pivot;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m(r, k).is_exact_zero()) continue;
            const PadicScalar factor = m(r, k) / pivot;
            for (std::size_t c = k + 1; c < n; ++c) m(r, c) -= factor * m(k, c);
        }
    }
    return det;
}

OverdeterminedSolution solve_overdetermined(PadicMatrix a, std::vector<PadicScalar> b) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (b.size() != rows || rows < cols) throw Error(ErrorKind::InvalidArgument, "solve: shape mismatch");
    for (std::size_t k = 0; k < cols; ++k) {
        std::size_t best = rows;
        int best_v = kInfiniteValuation;
        for (std::size_t r = k; r < rows; ++r) {
            const PadicScalar& x = a(r, k);
            if (x.is_zero()) continue;
            if (x.valuation() < best_v) {
                best_v = x.valuation();
                best = r;
            }
        }
        if (best == rows) throw Error(ErrorKind::PrecisionExhausted, "solve: matrix is singular to precision");
        a.swap_rows(k, best);
        std::swap(b[k], b[best]);
        const PadicScalar pivot = a(k, k);
        for (std::size_t r = k + 1; r < rows; ++r) {
            if (a(r, k).is_exact_zero()) continue;
            const PadicScalar factor = a(r, k) / pivot;
            for (std::size_t c = k + 1; c < cols; ++c) a(r, c) -= factor * a(k, c);
            b[r] -= factor * b[k];
            a(r, k) = PadicScalar::zero(pivot.context());
        }
    }
    OverdeterminedSolution out;
    for (std::size_t r = cols; r < rows; ++r) out.residual = std::min(out.residual, b[r].valuation_lower_bound());
    out.x.assign(cols, PadicScalar());
    for (std::size_t k = cols; k-- > 0;) {
        PadicScalar acc = b[k];
        for (std::size_t c = k + 1; c < cols; ++c) acc -= a(k, c) * out.x[c];
        out.x[k] = acc / a(k, k);
    }
    return out;
}

std::vector<PadicScalar> solve(PadicMatrix a, std::vector<PadicScalar> b) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "solve: matrix is not square");
    return solve_overdetermined(std::move(a), std::move(b)).x;
}

std::size_t rank_mod_p(const IntMatrix& m, int p) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<long>(mpz_fdiv_ui(m(r, c).get_mpz_t(), static_cast<unsigned long>(p)));
    }
    auto inv = [p](long x) {
        long r = 1, base = x % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const long iv = inv(a[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const long f = a[r][c] * iv % p;
            for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace ssiw
