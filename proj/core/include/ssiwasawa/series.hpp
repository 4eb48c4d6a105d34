#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ssiwasawa/padic.hpp"
#include "ssiwasawa/zpoly.hpp"

namespace ssiw {

/// Truncated power series sum_{i<=D} c_i X^i over Q_p.
///
/// A series is "polynomial-exact" when it is known to be a polynomial of
/// degree <= D with exact coefficients; truncation then loses nothing.
class IwasawaSeries {
public:
    IwasawaSeries(const PadicContext& ctx, int degree);
    IwasawaSeries(const PadicContext& ctx, int degree, std::vector<PadicScalar> coeffs, bool polynomial_exact = false);

    static IwasawaSeries from_integers(const PadicContext& ctx, int degree, const std::vector<long>& coeffs);
    /// Coefficients past `degree` are dropped; polynomial-exactness is kept
    /// only if nothing was dropped.
    static IwasawaSeries from_zpoly(const PadicContext& ctx, int degree, const ZPoly& poly);
    static IwasawaSeries variable(const PadicContext& ctx, int degree);
    static IwasawaSeries constant(const PadicContext& ctx, int degree, const PadicScalar& c);

    [[nodiscard]] const PadicContext& context() const noexcept { return ctx_; }
    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] const PadicScalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] std::span<const PadicScalar> coefficients() const noexcept { return c_; }
    [[nodiscard]] bool is_polynomial_exact() const noexcept { return exact_; }
    /// Index of the last coefficient that is not an exact zero (-1 if none).
    [[nodiscard]] int support_degree() const noexcept;
    /// Smallest absolute precision over all coefficients.
    [[nodiscard]] int absolute_precision() const noexcept;
    /// Smallest valuation lower bound over all coefficients.
    [[nodiscard]] int valuation_lower_bound() const noexcept;
    /// Exact integer polynomial; PrecisionExhausted if not polynomial-exact.
    [[nodiscard]] ZPoly to_zpoly() const;

    friend IwasawaSeries operator+(const IwasawaSeries& a, const IwasawaSeries& b);
    friend IwasawaSeries operator-(const IwasawaSeries& a, const IwasawaSeries& b);
    friend IwasawaSeries operator*(const IwasawaSeries& a, const IwasawaSeries& b);
    friend IwasawaSeries operator*(const PadicScalar& s, const IwasawaSeries& a);
    [[nodiscard]] IwasawaSeries operator-() const;

    [[nodiscard]] IwasawaSeries pow(unsigned e) const;
    /// Derivative, truncated one degree lower.
    [[nodiscard]] IwasawaSeries derivative() const;
    /// Multiplicative inverse; the constant term must be certified nonzero.
    [[nodiscard]] IwasawaSeries inverse() const;
    /// Truncate to a lower degree and relative precision cap.
    [[nodiscard]] IwasawaSeries truncated(int degree) const;
    [[nodiscard]] IwasawaSeries truncated(int degree, const PadicContext& ctx) const;
    [[nodiscard]] IwasawaSeries with_coefficient(int i, const PadicScalar& c) const;
    /// Move every coefficient into another context (same p).
    [[nodiscard]] IwasawaSeries in_context(const PadicContext& ctx) const;

    /// Horner evaluation at a scalar; no tail handling.
    [[nodiscard]] PadicScalar evaluate_polynomial(const PadicScalar& x) const;

    [[nodiscard]] std::string str() const;

private:
    PadicContext ctx_;
    int degree_;
    std::vector<PadicScalar> c_;
    bool exact_ = false;
};

/// outer(inner(X)); inner must have zero constant term.
IwasawaSeries compose(const IwasawaSeries& outer, const IwasawaSeries& inner);

/// Compositional inverse by Newton iteration on s(g) = X.
IwasawaSeries reversion(const IwasawaSeries& s);

struct MuLambda {
    int mu;
    int lambda;
    friend bool operator==(const MuLambda&, const MuLambda&) = default;
};

/// Iwasawa invariants of the coefficients 0..D as given.
MuLambda mu_lambda(const IwasawaSeries& g);

/// Truncated two-variable series, total degree <= D.
class BivariateSeries {
public:
    BivariateSeries(const PadicContext& ctx, int degree);

    static BivariateSeries in_x(const IwasawaSeries& s);
    static BivariateSeries in_y(const IwasawaSeries& s);

    [[nodiscard]] const PadicContext& context() const noexcept { return ctx_; }
    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] const PadicScalar& at(int i, int j) const { return c_[index(i, j)]; }
    void set(int i, int j, const PadicScalar& c) { c_[index(i, j)] = c; }

    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(const PadicScalar& s, const BivariateSeries& a);

    [[nodiscard]] BivariateSeries truncated(int degree) const;
    /// Lower bound on coefficient valuations.
    [[nodiscard]] int valuation_lower_bound() const noexcept;
    /// Smallest absolute precision among coefficients.
    [[nodiscard]] int absolute_precision() const noexcept;
    /// Swap the two variables.
    [[nodiscard]] BivariateSeries transposed() const;
    /// The series in X obtained by setting Y = 0.
    [[nodiscard]] IwasawaSeries at_y_zero() const;

    /// sum c_ij x^i y^j for any commutative ring type with +, * and scalar *.
    template <class R>
    R evaluate(const R& x, const R& y, const R& zero, const R& one) const {
        std::vector<R> ypow{one};
        for (int j = 1; j <= degree_; ++j) ypow.push_back(ypow.back() * y);
        R acc = zero;
        for (int i = degree_; i >= 0; --i) {
            R inner = zero;
            for (int j = 0; i + j <= degree_; ++j) {
                const PadicScalar& c = at(i, j);
                if (c.is_exact_zero()) continue;
                inner = inner + c * ypow[static_cast<std::size_t>(j)];
            }
            acc = acc * x + inner;
        }
        return acc;
    }

private:
    [[nodiscard]] std::size_t index(int i, int j) const {
        const int t = i + j;
        return static_cast<std::size_t>(t * (t + 1) / 2 + j);
    }
    PadicContext ctx_;
    int degree_;
    std::vector<PadicScalar> c_;
};

/// outer(inner(X, Y)); inner must have zero constant term.
BivariateSeries compose(const IwasawaSeries& outer, const BivariateSeries& inner);

/// F(a(X), b(Y)) for univariate a, b with zero constant term.
BivariateSeries substitute(const BivariateSeries& law, const IwasawaSeries& a, const IwasawaSeries& b);

/// Smallest agreement valuation between coefficients of equal-shape series.
int agreement(const IwasawaSeries& a, const IwasawaSeries& b);
int agreement(const BivariateSeries& a, const BivariateSeries& b);

} // namespace ssiw
