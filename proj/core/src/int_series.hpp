#pragma once

// Truncated integer power series reduced modulo p^M. Iterating an integer
// polynomial this way keeps coefficient sizes bounded while staying exact
// modulo p^M, which is all the limits built on top of it need.

#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "ssiwasawa/padic.hpp"
#include "ssiwasawa/series.hpp"
#include "ssiwasawa/zpoly.hpp"

namespace ssiw::detail {

class ModSeries {
public:
    ModSeries(int degree, const mpz_class& modulus) : c_(static_cast<std::size_t>(degree) + 1), mod_(modulus) {}

    static ModSeries from_zpoly(const ZPoly& f, int degree, const mpz_class& modulus) {
        ModSeries s(degree, modulus);
        for (int i = 0; i <= std::min(degree, f.degree()); ++i) s.c_[static_cast<std::size_t>(i)] = f[i];
        s.reduce();
        return s;
    }

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const mpz_class& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    mpz_class& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    [[nodiscard]] ModSeries times(const ModSeries& b) const {
        ModSeries out(degree(), mod_);
        for (int i = 0; i <= degree(); ++i) {
            if (c_[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= degree(); ++j) {
                out[i + j] += (*this)[i] * b[j];
            }
        }
        out.reduce();
        return out;
    }

    /// f(this) for an integer polynomial f; this must have zero constant term.
    [[nodiscard]] ModSeries composed_into(const ZPoly& f) const {
        ModSeries acc(degree(), mod_);
        for (int k = f.degree(); k >= 0; --k) {
            acc = acc.times(*this);
            acc[0] += f[k];
            acc.reduce();
        }
        return acc;
    }

    [[nodiscard]] ModSeries minus(const ModSeries& b) const {
        ModSeries out(degree(), mod_);
        for (int i = 0; i <= degree(); ++i) out[i] = (*this)[i] - b[i];
        out.reduce();
        return out;
    }

    void reduce() {
        for (auto& x : c_) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod_.get_mpz_t());
    }

private:
    std::vector<mpz_class> c_;
    mpz_class mod_;
};

/// The integer `c` known modulo p^abs_precision, as a scalar of `ctx`.
inline PadicScalar scalar_from_residue(const PadicContext& ctx, const mpz_class& c, int abs_precision) {
    const int p = ctx.p();
    mpz_class r;
    mpz_class pm;
    mpz_ui_pow_ui(pm.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(abs_precision));
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pm.get_mpz_t());
    if (r == 0) return PadicScalar::big_oh(ctx, abs_precision);
    const int v = vp(r, p);
    const int rel = std::min(abs_precision - v, ctx.N());
    mpz_class unit;
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(v));
    mpz_divexact(unit.get_mpz_t(), r.get_mpz_t(), pv.get_mpz_t());
    mpz_class prel;
    mpz_ui_pow_ui(prel.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(rel));
    mpz_fdiv_r(unit.get_mpz_t(), unit.get_mpz_t(), prel.get_mpz_t());
    return PadicScalar::from_unit(ctx, mpz_get_ui(unit.get_mpz_t()), v, rel);
}

/// Series s / divisor with s known modulo p^abs_precision; the constant term
/// is taken to be exactly zero.
inline IwasawaSeries divided_series(const PadicContext& ctx, const ModSeries& s, int abs_precision,
                                    const PadicScalar& divisor) {
    std::vector<PadicScalar> coeffs;
    coeffs.reserve(static_cast<std::size_t>(s.degree()) + 1);
    coeffs.push_back(PadicScalar::zero(ctx));
    for (int i = 1; i <= s.degree(); ++i) coeffs.push_back(scalar_from_residue(ctx, s[i], abs_precision) / divisor);
    return {ctx, s.degree(), std::move(coeffs)};
}

inline int floor_log(int p, long x) {
    int k = 0;
    long q = p;
    while (q <= x) {
        q *= p;
        ++k;
    }
    return k;
}

} // namespace ssiw::detail
