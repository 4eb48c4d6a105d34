#include "ssiwasawa/series.hpp"

#include <algorithm>
#include <sstream>

namespace ssiw {

namespace {

using Coeffs = std::vector<PadicScalar>;

void check_shape(const IwasawaSeries& a, const IwasawaSeries& b) {
    if (a.context() != b.context()) throw Error(ErrorKind::ContextMismatch, "series from different contexts");
    if (a.degree() != b.degree()) throw Error(ErrorKind::ContextMismatch, "series with different truncation degrees");
}

bool all_exact(const Coeffs& c) {
    return std::all_of(c.begin(), c.end(), [](const PadicScalar& s) { return s.is_exact(); });
}

// Product truncated to `len` coefficients.
Coeffs mul_trunc(const Coeffs& a, const Coeffs& b, std::size_t len, const PadicContext& ctx) {
    Coeffs out(len, PadicScalar::zero(ctx));
    for (std::size_t i = 0; i < std::min(len, a.size()); ++i) {
        if (a[i].is_exact_zero()) continue;
        const std::size_t top = std::min(len - i, b.size());
        for (std::size_t j = 0; j < top; ++j) {
            if (b[j].is_exact_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

int support(const Coeffs& c) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (!c[static_cast<std::size_t>(i)].is_exact_zero()) return i;
    }
    return -1;
}

// Horner composition truncated to `len`; inner[0] is ignored.
Coeffs compose_trunc(const Coeffs& outer, const Coeffs& inner, std::size_t len, const PadicContext& ctx) {
    Coeffs in(inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(std::min(len, inner.size())));
    if (!in.empty()) in[0] = PadicScalar::zero(ctx);
    const int top = std::min(support(outer), static_cast<int>(len) - 1);
    Coeffs acc(len, PadicScalar::zero(ctx));
    for (int i = top; i >= 0; --i) {
        acc = mul_trunc(acc, in, len, ctx);
        acc[0] += outer[static_cast<std::size_t>(i)];
    }
    return acc;
}

Coeffs inverse_trunc(const Coeffs& a, std::size_t len, const PadicContext& ctx) {
    if (a.empty() || a[0].is_exact_zero()) {
        throw Error(ErrorKind::InvalidArgument, "series inverse needs a nonzero constant term");
    }
    if (a[0].is_zero_to_precision()) {
        throw Error(ErrorKind::PrecisionExhausted, "constant term is zero to precision");
    }
    const PadicScalar inv0 = PadicScalar::one(ctx) / a[0];
    Coeffs b(len, PadicScalar::zero(ctx));
    b[0] = inv0;
    for (std::size_t n = 1; n < len; ++n) {
        PadicScalar acc = PadicScalar::zero(ctx);
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) {
            if (a[k].is_exact_zero()) continue;
            acc += a[k] * b[n - k];
        }
        b[n] = -(inv0 * acc);
    }
    return b;
}

} // namespace

IwasawaSeries::IwasawaSeries(const PadicContext& ctx, int degree)
    : ctx_(ctx), degree_(degree), c_(static_cast<std::size_t>(degree) + 1, PadicScalar::zero(ctx)), exact_(true) {
    if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation degree");
}

IwasawaSeries::IwasawaSeries(const PadicContext& ctx, int degree, std::vector<PadicScalar> coeffs,
                             bool polynomial_exact)
    : ctx_(ctx), degree_(degree), c_(std::move(coeffs)) {
    if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation degree");
    if (c_.size() > static_cast<std::size_t>(degree) + 1) {
        throw Error(ErrorKind::InvalidArgument, "more coefficients than the truncation degree allows");
    }
    for (auto& c : c_) {
        if (c.context().is_set() && c.context() != ctx) throw Error(ErrorKind::ContextMismatch, "coefficient context");
        if (!c.context().is_set()) c = PadicScalar::zero(ctx);
    }
    c_.resize(static_cast<std::size_t>(degree) + 1, PadicScalar::zero(ctx));
    exact_ = polynomial_exact && all_exact(c_);
}

IwasawaSeries IwasawaSeries::from_integers(const PadicContext& ctx, int degree, const std::vector<long>& coeffs) {
    std::vector<PadicScalar> c;
    bool dropped = false;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (static_cast<int>(i) > degree) {
            dropped = dropped || coeffs[i] != 0;
            continue;
        }
        c.push_back(PadicScalar::from_int(ctx, coeffs[i]));
    }
    return {ctx, degree, std::move(c), !dropped};
}

IwasawaSeries IwasawaSeries::from_zpoly(const PadicContext& ctx, int degree, const ZPoly& poly) {
    std::vector<PadicScalar> c;
    for (int i = 0; i <= std::min(degree, poly.degree()); ++i) c.push_back(PadicScalar::from_mpz(ctx, poly[i]));
    return {ctx, degree, std::move(c), poly.degree() <= degree};
}

IwasawaSeries IwasawaSeries::variable(const PadicContext& ctx, int degree) {
    if (degree < 1) throw Error(ErrorKind::InvalidArgument, "X needs truncation degree >= 1");
    return from_integers(ctx, degree, {0, 1});
}

IwasawaSeries IwasawaSeries::constant(const PadicContext& ctx, int degree, const PadicScalar& c) {
    return {ctx, degree, {c}, true};
}

int IwasawaSeries::support_degree() const noexcept { return support(c_); }

int IwasawaSeries::absolute_precision() const noexcept {
    int best = kInfiniteValuation;
    for (const auto& c : c_) best = std::min(best, c.absolute_precision());
    return best;
}

int IwasawaSeries::valuation_lower_bound() const noexcept {
    int best = kInfiniteValuation;
    for (const auto& c : c_) best = std::min(best, c.valuation_lower_bound());
    return best;
}

ZPoly IwasawaSeries::to_zpoly() const {
    if (!exact_) throw Error(ErrorKind::PrecisionExhausted, "series is not polynomial-exact");
    std::vector<mpz_class> out;
    for (const auto& c : c_) out.push_back(c.to_mpz());
    return ZPoly(std::move(out));
}

IwasawaSeries operator+(const IwasawaSeries& a, const IwasawaSeries& b) {
    check_shape(a, b);
    std::vector<PadicScalar> out(a.c_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.c_[i] + b.c_[i];
    return {a.ctx_, a.degree_, std::move(out), a.exact_ && b.exact_};
}

IwasawaSeries IwasawaSeries::operator-() const {
    std::vector<PadicScalar> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(-c);
    return {ctx_, degree_, std::move(out), exact_};
}

IwasawaSeries operator-(const IwasawaSeries& a, const IwasawaSeries& b) { return a + (-b); }

IwasawaSeries operator*(const IwasawaSeries& a, const IwasawaSeries& b) {
    check_shape(a, b);
    auto out = mul_trunc(a.c_, b.c_, a.c_.size(), a.ctx_);
    const bool exact = a.exact_ && b.exact_ && a.support_degree() + b.support_degree() <= a.degree_;
    return {a.ctx_, a.degree_, std::move(out), exact};
}

IwasawaSeries operator*(const PadicScalar& s, const IwasawaSeries& a) {
    std::vector<PadicScalar> out;
    out.reserve(a.c_.size());
    for (const auto& c : a.c_) out.push_back(s * c);
    return {a.ctx_, a.degree_, std::move(out), a.exact_ && s.is_exact()};
}

IwasawaSeries IwasawaSeries::pow(unsigned e) const {
    IwasawaSeries result = constant(ctx_, degree_, PadicScalar::one(ctx_));
    IwasawaSeries base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

IwasawaSeries IwasawaSeries::derivative() const {
    std::vector<PadicScalar> out;
    for (int i = 1; i <= degree_; ++i) out.push_back(PadicScalar::from_int(ctx_, i) * c_[static_cast<std::size_t>(i)]);
    const int degree = std::max(degree_ - 1, 0);
    out.resize(static_cast<std::size_t>(degree) + 1, PadicScalar::zero(ctx_));
    return {ctx_, degree, std::move(out), exact_};
}

IwasawaSeries IwasawaSeries::inverse() const {
    return {ctx_, degree_, inverse_trunc(c_, c_.size(), ctx_), false};
}

IwasawaSeries IwasawaSeries::truncated(int degree) const { return truncated(degree, ctx_); }

IwasawaSeries IwasawaSeries::truncated(int degree, const PadicContext& ctx) const {
    if (degree > degree_) throw Error(ErrorKind::InvalidArgument, "cannot extend a truncated series");
    std::vector<PadicScalar> out;
    for (int i = 0; i <= degree; ++i) out.push_back(c_[static_cast<std::size_t>(i)].in_context(ctx));
    return {ctx, degree, std::move(out), exact_ && support_degree() <= degree};
}

IwasawaSeries IwasawaSeries::with_coefficient(int i, const PadicScalar& c) const {
    std::vector<PadicScalar> out = c_;
    out.at(static_cast<std::size_t>(i)) = c;
    return {ctx_, degree_, std::move(out), exact_};
}

IwasawaSeries IwasawaSeries::in_context(const PadicContext& ctx) const { return truncated(degree_, ctx); }

PadicScalar IwasawaSeries::evaluate_polynomial(const PadicScalar& x) const {
    PadicScalar acc = PadicScalar::zero(ctx_);
    for (int i = support_degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
    return acc;
}

std::string IwasawaSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree_; ++i) {
        const auto& c = c_[static_cast<std::size_t>(i)];
        if (c.is_exact_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (i > 0) os << "*X^" << i;
        first = false;
    }
    if (first) os << "0";
    if (!exact_) os << " + O(X^" << degree_ + 1 << ")";
    return os.str();
}

IwasawaSeries compose(const IwasawaSeries& outer, const IwasawaSeries& inner) {
    check_shape(outer, inner);
    const PadicContext& ctx = outer.context();
    const PadicScalar& c0 = inner[0];
    if (c0.is_nonzero()) throw Error(ErrorKind::NonzeroConstantTerm, "inner series has a nonzero constant term");
    const std::size_t len = static_cast<std::size_t>(outer.degree()) + 1;
    Coeffs out_c(outer.coefficients().begin(), outer.coefficients().end());
    Coeffs in_c(inner.coefficients().begin(), inner.coefficients().end());
    Coeffs result = compose_trunc(out_c, in_c, len, ctx);
    if (c0.is_zero_to_precision()) {
        // dropping c0 = O(p^A) changes the result by a multiple of c0
        if (inner.valuation_lower_bound() < 0) {
            throw Error(ErrorKind::PrecisionExhausted, "inexact constant term with non-integral inner series");
        }
        int vmin = kInfiniteValuation;
        for (std::size_t j = 1; j < out_c.size(); ++j) vmin = std::min(vmin, out_c[j].valuation_lower_bound());
        if (vmin != kInfiniteValuation) {
            for (auto& c : result) c = c.reduced_to(c0.valuation_lower_bound() + vmin);
        }
    }
    const int so = outer.support_degree();
    const int si = inner.support_degree();
    const bool exact = outer.is_polynomial_exact() && inner.is_polynomial_exact() && c0.is_exact_zero() &&
                       static_cast<long>(so) * std::max(si, 0) <= outer.degree();
    return {ctx, outer.degree(), std::move(result), exact};
}

IwasawaSeries reversion(const IwasawaSeries& s) {
    const PadicContext& ctx = s.context();
    const int degree = s.degree();
    if (s[0].is_nonzero()) throw Error(ErrorKind::NonzeroConstantTerm, "reversion needs s(0) = 0");
    if (degree < 1 || s[1].is_zero()) throw Error(ErrorKind::NonUnitLinearTerm, "linear coefficient is not invertible");
    Coeffs sc(s.coefficients().begin(), s.coefficients().end());
    sc[0] = PadicScalar::zero(ctx);
    Coeffs ds;
    for (int i = 1; i <= degree; ++i) ds.push_back(PadicScalar::from_int(ctx, i) * sc[static_cast<std::size_t>(i)]);

    Coeffs g{PadicScalar::zero(ctx), PadicScalar::one(ctx) / sc[1]};
    int cur = 1;
    while (cur < degree) {
        const int next = std::min(2 * cur + 1, degree);
        const auto len = static_cast<std::size_t>(next) + 1;
        g.resize(len, PadicScalar::zero(ctx));
        Coeffs residual = compose_trunc(sc, g, len, ctx);
        residual[1] -= PadicScalar::one(ctx);
        // residual vanishes below degree cur + 1, so 1/s'(g) is needed only to len - cur - 1 terms
        const std::size_t short_len = len - static_cast<std::size_t>(cur) - 1;
        Coeffs dsg = compose_trunc(ds, g, short_len, ctx);
        Coeffs inv = inverse_trunc(dsg, short_len, ctx);
        Coeffs shifted(residual.begin() + cur + 1, residual.end());
        Coeffs corr = mul_trunc(shifted, inv, short_len, ctx);
        for (std::size_t k = 0; k < short_len; ++k) g[k + static_cast<std::size_t>(cur) + 1] -= corr[k];
        cur = next;
    }
    g.resize(static_cast<std::size_t>(degree) + 1, PadicScalar::zero(ctx));
    const bool linear = s.is_polynomial_exact() && s.support_degree() == 1 && all_exact(g);
    return {ctx, degree, std::move(g), linear};
}

MuLambda mu_lambda(const IwasawaSeries& g) {
    int mu = kInfiniteValuation;
    int lambda = -1;
    for (int i = 0; i <= g.degree(); ++i) {
        const auto& c = g[i];
        if (!c.is_nonzero()) continue;
        if (c.valuation() < mu) {
            mu = c.valuation();
            lambda = i;
        }
    }
    if (lambda < 0) throw Error(ErrorKind::ZeroToPrecision, "series is zero to working precision");
    for (int i = 0; i <= g.degree(); ++i) {
        const auto& c = g[i];
        if (!c.is_zero_to_precision()) continue;
        const int bound = c.valuation_lower_bound();
        if ((i < lambda && bound <= mu) || (i > lambda && bound < mu)) {
            throw Error(ErrorKind::PrecisionExhausted,
                        "coefficient " + std::to_string(i) + " is too imprecise to certify mu/lambda");
        }
    }
    return {mu, lambda};
}

// ---------------------------------------------------------------------------

BivariateSeries::BivariateSeries(const PadicContext& ctx, int degree)
    : ctx_(ctx), degree_(degree),
      c_(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2), PadicScalar::zero(ctx)) {
    if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation degree");
}

BivariateSeries BivariateSeries::in_x(const IwasawaSeries& s) {
    BivariateSeries out(s.context(), s.degree());
    for (int i = 0; i <= s.degree(); ++i) out.set(i, 0, s[i]);
    return out;
}

BivariateSeries BivariateSeries::in_y(const IwasawaSeries& s) {
    BivariateSeries out(s.context(), s.degree());
    for (int j = 0; j <= s.degree(); ++j) out.set(0, j, s[j]);
    return out;
}

namespace {
void check_shape(const BivariateSeries& a, const BivariateSeries& b) {
    if (a.context() != b.context()) throw Error(ErrorKind::ContextMismatch, "series from different contexts");
    if (a.degree() != b.degree()) throw Error(ErrorKind::ContextMismatch, "series with different truncation degrees");
}
} // namespace

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    check_shape(a, b);
    BivariateSeries out = a;
    for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a.c_[k] + b.c_[k];
    return out;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    check_shape(a, b);
    BivariateSeries out = a;
    for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a.c_[k] - b.c_[k];
    return out;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    check_shape(a, b);
    const int d = a.degree_;
    BivariateSeries out(a.ctx_, d);
    for (int t1 = 0; t1 <= d; ++t1) {
        for (int j1 = 0; j1 <= t1; ++j1) {
            const PadicScalar& x = a.at(t1 - j1, j1);
            if (x.is_exact_zero()) continue;
            for (int t2 = 0; t1 + t2 <= d; ++t2) {
                for (int j2 = 0; j2 <= t2; ++j2) {
                    const PadicScalar& y = b.at(t2 - j2, j2);
                    if (y.is_exact_zero()) continue;
                    auto& slot = out.c_[out.index(t1 - j1 + t2 - j2, j1 + j2)];
                    slot += x * y;
                }
            }
        }
    }
    return out;
}

BivariateSeries operator*(const PadicScalar& s, const BivariateSeries& a) {
    BivariateSeries out = a;
    for (auto& c : out.c_) c = s * c;
    return out;
}

BivariateSeries BivariateSeries::truncated(int degree) const {
    BivariateSeries out(ctx_, degree);
    for (int t = 0; t <= degree; ++t) {
        for (int j = 0; j <= t; ++j) out.set(t - j, j, at(t - j, j));
    }
    return out;
}

int BivariateSeries::valuation_lower_bound() const noexcept {
    int best = kInfiniteValuation;
    for (const auto& c : c_) best = std::min(best, c.valuation_lower_bound());
    return best;
}

int BivariateSeries::absolute_precision() const noexcept {
    int best = kInfiniteValuation;
    for (const auto& c : c_) best = std::min(best, c.absolute_precision());
    return best;
}

BivariateSeries BivariateSeries::transposed() const {
    BivariateSeries out(ctx_, degree_);
    for (int t = 0; t <= degree_; ++t) {
        for (int j = 0; j <= t; ++j) out.set(j, t - j, at(t - j, j));
    }
    return out;
}

IwasawaSeries BivariateSeries::at_y_zero() const {
    std::vector<PadicScalar> out;
    for (int i = 0; i <= degree_; ++i) out.push_back(at(i, 0));
    return {ctx_, degree_, std::move(out), false};
}

BivariateSeries compose(const IwasawaSeries& outer, const BivariateSeries& inner) {
    if (outer.context() != inner.context()) throw Error(ErrorKind::ContextMismatch, "series from different contexts");
    if (inner.at(0, 0).is_nonzero()) throw Error(ErrorKind::NonzeroConstantTerm, "inner series has a nonzero constant term");
    BivariateSeries in = inner;
    in.set(0, 0, PadicScalar::zero(inner.context()));
    BivariateSeries acc(inner.context(), inner.degree());
    const int top = std::min(outer.support_degree(), inner.degree());
    for (int i = top; i >= 0; --i) {
        acc = acc * in;
        acc.set(0, 0, acc.at(0, 0) + outer[i]);
    }
    return acc;
}

BivariateSeries substitute(const BivariateSeries& law, const IwasawaSeries& a, const IwasawaSeries& b) {
    const PadicContext& ctx = law.context();
    const int d = law.degree();
    const IwasawaSeries at = a.truncated(d);
    const IwasawaSeries bt = b.truncated(d);
    std::vector<IwasawaSeries> apow{IwasawaSeries::constant(ctx, d, PadicScalar::one(ctx))};
    std::vector<IwasawaSeries> bpow = apow;
    for (int i = 1; i <= d; ++i) {
        apow.push_back(apow.back() * at);
        bpow.push_back(bpow.back() * bt);
    }
    BivariateSeries out(ctx, d);
    for (int t = 0; t <= d; ++t) {
        for (int j = 0; j <= t; ++j) {
            const int i = t - j;
            const PadicScalar& c = law.at(i, j);
            if (c.is_exact_zero()) continue;
            const auto& ai = apow[static_cast<std::size_t>(i)];
            const auto& bj = bpow[static_cast<std::size_t>(j)];
            for (int k = i; k <= d; ++k) {
                if (ai[k].is_exact_zero()) continue;
                const PadicScalar ca = c * ai[k];
                for (int l = j; k + l <= d; ++l) {
                    if (bj[l].is_exact_zero()) continue;
                    out.set(k, l, out.at(k, l) + ca * bj[l]);
                }
            }
        }
    }
    return out;
}

int agreement(const IwasawaSeries& a, const IwasawaSeries& b) {
    check_shape(a, b);
    int best = kInfiniteValuation;
    for (int i = 0; i <= a.degree(); ++i) best = std::min(best, agreement(a[i], b[i]));
    return best;
}

int agreement(const BivariateSeries& a, const BivariateSeries& b) {
    check_shape(a, b);
    int best = kInfiniteValuation;
    for (int t = 0; t <= a.degree(); ++t) {
        for (int j = 0; j <= t; ++j) best = std::min(best, agreement(a.at(t - j, j), b.at(t - j, j)));
    }
    return best;
}

} // namespace ssiw
