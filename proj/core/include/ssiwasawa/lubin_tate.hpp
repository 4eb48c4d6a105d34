#pragma once

#include <vector>

#include "ssiwasawa/matrix.hpp"
#include "ssiwasawa/padic.hpp"
#include "ssiwasawa/series.hpp"
#include "ssiwasawa/zpoly.hpp"

namespace ssiw {

/// The good lift f(X) = pi X + sum_{2<=i<=p} C(p,i) X^i of Frobenius for a
/// uniformizer pi with pi/p = 1 mod p.
struct FrobeniusLift {
    PadicContext ctx;
    /// Exact integer uniformizer.
    PadicScalar pi;
    ZPoly poly;

    [[nodiscard]] int p() const noexcept { return ctx.p(); }
    /// f as a polynomial-exact series of degree `degree` (at least p).
    [[nodiscard]] IwasawaSeries series(int degree) const;
};

/// Throws BadUniformizer unless pi is an exact integer with v(pi) = 1 and
/// pi = p mod p^2.
FrobeniusLift good_frobenius_lift(const PadicContext& ctx, const PadicScalar& pi);
FrobeniusLift good_frobenius_lift(const PadicContext& ctx, std::int64_t pi);

/// The Lubin-Tate law F_f with its logarithm and exponential. Everything is
/// carried in the working context of the lift; `precision` is the smallest
/// absolute precision certified on the law's coefficients.
struct FormalGroupLaw {
    FrobeniusLift lift;
    int degree = 0;
    BivariateSeries law;
    IwasawaSeries log;
    IwasawaSeries exp;
    int precision = 0;
};

/// F_f = exp(log X + log Y) with log the coefficientwise limit of
/// f^(k)(X) / pi^k. Verifies f(F(X,Y)) = F(f(X), f(Y)) before returning.
FormalGroupLaw lubin_tate_law(const FrobeniusLift& f, int degree);

/// [a]_f = exp(a log X), truncated to the law's degree.
IwasawaSeries mult_by(const PadicScalar& a, const FormalGroupLaw& law);
IwasawaSeries mult_by(const PadicScalar& a, const FrobeniusLift& f, int degree);

/// [u]_f as the unique series with linear term u commuting with f, solved
/// degree by degree over Z_p. Unlike mult_by this never divides by more than
/// p per degree, so it stays accurate at the large degrees the tower needs.
IwasawaSeries endomorphism_series(const PadicScalar& u, const FrobeniusLift& f, int degree);
/// Several units at once, sharing the table of powers of f.
std::vector<IwasawaSeries> endomorphism_series(const std::vector<PadicScalar>& units, const FrobeniusLift& f,
                                               int degree);

/// det(a_j(i)) for 1 <= i, j <= p - 1, with a_j(i) the X^j coefficient of
/// [i]_f. Throws NotAUnit when the determinant is not a unit.
PadicScalar division_matrix_det(const FrobeniusLift& f);

} // namespace ssiw
