#include "ssiwasawa/lubin_tate.hpp"

#include <algorithm>
#include <optional>

#include "int_series.hpp"

namespace ssiw {

namespace {

int ceil_log(int p, long x) {
    int k = 0;
    long q = 1;
    while (q < x) {
        q *= p;
        ++k;
    }
    return k;
}

mpz_class p_power(int p, int k) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return out;
}

} // namespace

IwasawaSeries FrobeniusLift::series(int degree) const {
    return IwasawaSeries::from_zpoly(ctx.working(), std::max(degree, poly.degree()), poly);
}

FrobeniusLift good_frobenius_lift(const PadicContext& ctx, const PadicScalar& pi) {
    const int p = ctx.p();
    if (!pi.is_exact() || pi.is_exact_zero()) {
        throw Error(ErrorKind::BadUniformizer, "uniformizer must be a nonzero exact integer");
    }
    if (pi.valuation() != 1) throw Error(ErrorKind::BadUniformizer, "uniformizer must have valuation 1");
    const PadicScalar ratio = pi.in_context(ctx.working()).shifted(-1) - PadicScalar::one(ctx.working());
    if (ratio.valuation_lower_bound() < 1) {
        throw Error(ErrorKind::BadUniformizer, "pi / p must be congruent to 1 mod p");
    }
    std::vector<mpz_class> c(static_cast<std::size_t>(p) + 1);
    c[1] = pi.to_mpz();
    for (int i = 2; i <= p; ++i) c[static_cast<std::size_t>(i)] = binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(i));
    return {ctx, pi.in_context(ctx), ZPoly(std::move(c))};
}

FrobeniusLift good_frobenius_lift(const PadicContext& ctx, std::int64_t pi) {
    return good_frobenius_lift(ctx, PadicScalar::from_int(ctx, pi));
}

FormalGroupLaw lubin_tate_law(const FrobeniusLift& f, int degree) {
    if (degree < 1) throw Error(ErrorKind::InvalidArgument, "law degree must be positive");
    const PadicContext work = f.ctx.working();
    const int p = f.p();
    const int digits = work.N();
    const int target = digits - detail::floor_log(p, degree) - 1;
    const int cap = target + ceil_log(p, degree) + 4;
    const int modulus_digits = cap + digits + 2;
    const mpz_class modulus = p_power(p, modulus_digits);
    const PadicScalar pi = f.pi.in_context(work);

    detail::ModSeries iterate = detail::ModSeries::from_zpoly(ZPoly::x(), degree, modulus);
    std::optional<IwasawaSeries> previous;
    std::optional<IwasawaSeries> log;
    int reached = 0;
    for (int k = 1; k <= cap; ++k) {
        iterate = iterate.composed_into(f.poly);
        IwasawaSeries current = detail::divided_series(work, iterate, modulus_digits, pi.pow(static_cast<std::uint64_t>(k)));
        if (previous) {
            reached = agreement(current, *previous);
            if (reached >= target) {
                log = std::move(current);
                break;
            }
        }
        previous = std::move(current);
    }
    if (!log) throw Error(ErrorKind::ConvergenceGuard, "logarithm coefficients did not stabilize");

    // Later iterates move by less than the last step, so the limit agrees
    // with this one to `reached` digits. The linear term is exactly 1.
    std::vector<PadicScalar> coeffs(log->coefficients().begin(), log->coefficients().end());
    for (auto& c : coeffs) c = c.reduced_to(reached);
    coeffs[0] = PadicScalar::zero(work);
    if (degree >= 1) coeffs[1] = PadicScalar::one(work);
    IwasawaSeries logarithm(work, degree, std::move(coeffs));

    IwasawaSeries exponential = reversion(logarithm);
    BivariateSeries law = compose(exponential, BivariateSeries::in_x(logarithm) + BivariateSeries::in_y(logarithm));
    const int precision = law.absolute_precision();
    if (precision < f.ctx.N()) {
        throw Error(ErrorKind::PrecisionExhausted, "law degree too large for the 64-bit working precision");
    }

    const IwasawaSeries fs = f.series(degree);
    const BivariateSeries lhs = compose(fs, law);
    const BivariateSeries rhs = substitute(law, fs, fs);
    if (agreement(lhs, rhs) < precision) {
        throw Error(ErrorKind::PrecisionExhausted, "functional equation check failed for the constructed law");
    }
    return {f, degree, std::move(law), std::move(logarithm), std::move(exponential), precision};
}

IwasawaSeries mult_by(const PadicScalar& a, const FormalGroupLaw& law) {
    if (a.valuation_lower_bound() < 0) throw Error(ErrorKind::InvalidArgument, "multiplier must lie in Z_p");
    const PadicScalar aw = a.in_context(law.log.context());
    return compose(law.exp, aw * law.log);
}

IwasawaSeries mult_by(const PadicScalar& a, const FrobeniusLift& f, int degree) {
    return mult_by(a, lubin_tate_law(f, degree));
}

std::vector<IwasawaSeries> endomorphism_series(const std::vector<PadicScalar>& units, const FrobeniusLift& f,
                                               int degree) {
    for (const auto& u : units) {
        if (u.valuation_lower_bound() < 0) throw Error(ErrorKind::InvalidArgument, "multiplier must lie in Z_p");
    }
    if (degree < 1) throw Error(ErrorKind::InvalidArgument, "series degree must be positive");
    const PadicContext work = f.ctx.working();
    const int p = f.p();
    const auto D = static_cast<std::size_t>(degree);
    const auto P = static_cast<std::size_t>(p);

    // Exact arithmetic modulo p^M. In degree m the unknown b_m appears as
    // (pi - pi^m) b_m, and an error in b_j enters degree m multiplied by p
    // except through the X^(pj) coefficient of f^j, which is 1 mod p. So an
    // error of p^A in b_1 costs at most floor(log_p m) digits in b_m.
    const int modulus_digits = work.N() + 2;
    const mpz_class modulus = p_power(p, modulus_digits);
    const detail::ModSeries fser = detail::ModSeries::from_zpoly(f.poly, degree, modulus);
    std::vector<detail::ModSeries> fpow;
    fpow.reserve(D + 1);
    fpow.push_back(detail::ModSeries(degree, modulus));
    fpow.push_back(fser);
    for (std::size_t j = 2; j <= D; ++j) fpow.push_back(fpow.back().times(fser));

    const mpz_class pi = f.pi.to_mpz();
    const mpz_class w = pi / p;
    std::vector<mpz_class> inverse_factor(D + 1);
    for (std::size_t m = 2; m <= D; ++m) {
        // (pi - pi^m) / p = w (1 - pi^(m-1))
        mpz_class pim;
        mpz_powm_ui(pim.get_mpz_t(), pi.get_mpz_t(), static_cast<unsigned long>(m - 1), modulus.get_mpz_t());
        mpz_class factor = w * (1 - pim);
        mpz_invert(inverse_factor[m].get_mpz_t(), factor.get_mpz_t(), modulus.get_mpz_t());
    }
    auto reduce = [&modulus](mpz_class& x) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()); };

    std::vector<IwasawaSeries> out;
    for (const auto& u : units) {
        const int base = std::min(u.absolute_precision(), modulus_digits - 1);
        std::vector<std::vector<mpz_class>> powers(P + 1, std::vector<mpz_class>(D + 1));
        powers[1][1] = u.to_mpz();
        reduce(powers[1][1]);
        for (std::size_t i = 2; i <= P && i <= D; ++i) {
            powers[i][i] = powers[i - 1][i - 1] * powers[1][1];
            reduce(powers[i][i]);
        }
        for (std::size_t m = 2; m <= D; ++m) {
            for (std::size_t i = 2; i <= P; ++i) {
                if (m <= i) continue;
                mpz_class acc = 0;
                for (std::size_t k = 1; k + (i - 1) <= m; ++k) acc += powers[1][k] * powers[i - 1][m - k];
                reduce(acc);
                powers[i][m] = acc;
            }
            // f(U) = U(f) in degree m: pi b_m + lhs = rhs + pi^m b_m
            mpz_class numerator = 0;
            for (std::size_t j = 1; j < m; ++j) numerator += powers[1][j] * fpow[j][static_cast<int>(m)];
            for (std::size_t i = 2; i <= P; ++i) numerator -= f.poly[static_cast<int>(i)] * powers[i][m];
            reduce(numerator);
            if (!mpz_divisible_ui_p(numerator.get_mpz_t(), static_cast<unsigned long>(p))) {
                throw Error(ErrorKind::PrecisionExhausted, "endomorphism recursion lost integrality");
            }
            numerator /= p;
            powers[1][m] = numerator * inverse_factor[m];
            reduce(powers[1][m]);
        }
        std::vector<PadicScalar> coeffs;
        coeffs.reserve(D + 1);
        coeffs.push_back(PadicScalar::zero(work));
        coeffs.push_back(u.in_context(work));
        for (std::size_t m = 2; m <= D; ++m) {
            const int digits = base - detail::floor_log(p, static_cast<long>(m));
            coeffs.push_back(detail::scalar_from_residue(work, powers[1][m], digits));
        }
        out.emplace_back(work, degree, std::move(coeffs));
    }
    return out;
}

IwasawaSeries endomorphism_series(const PadicScalar& u, const FrobeniusLift& f, int degree) {
    return endomorphism_series(std::vector<PadicScalar>{u}, f, degree).front();
}

PadicScalar division_matrix_det(const FrobeniusLift& f) {
    const int p = f.p();
    const FormalGroupLaw law = lubin_tate_law(f, std::max(p - 1, 2));
    const PadicContext work = law.log.context();
    const auto size = static_cast<std::size_t>(p - 1);
    PadicMatrix m(size, size, PadicScalar::zero(work));
    for (std::size_t i = 1; i <= size; ++i) {
        const IwasawaSeries series = mult_by(PadicScalar::from_int(work, static_cast<std::int64_t>(i)), law);
        for (std::size_t j = 1; j <= size; ++j) m(i - 1, j - 1) = series[static_cast<int>(j)];
    }
    const PadicScalar det = determinant(m);
    if (det.is_zero() || det.valuation() != 0) {
        throw Error(ErrorKind::NotAUnit, "division-point coefficient determinant is not a unit");
    }
    return det;
}

} // namespace ssiw
