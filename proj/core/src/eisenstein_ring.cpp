#include "ssiwasawa/eisenstein_ring.hpp"

#include <algorithm>

namespace ssiw {

namespace {

int ceil_div(long a, long b) {
    // b > 0
    long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return static_cast<int>(q);
}

long scaled_bound(int lower_bound, int e, int index) {
    if (lower_bound == kInfiniteValuation) return kInfiniteValuation;
    return static_cast<long>(lower_bound) * e + index;
}

void check_ring(const RingElement& a, const RingElement& b) {
    if (a.ring() == b.ring()) return;
    if (!a.ring() || !b.ring()) throw Error(ErrorKind::InvalidArgument, "element without a ring");
    // distinct instances with the same modulus are interchangeable
    if (a.ring()->modulus() != b.ring()->modulus() || a.ring()->context() != b.ring()->context()) {
        throw Error(ErrorKind::ContextMismatch, "elements of different rings");
    }
}

} // namespace

EisensteinRing::EisensteinRing(const PadicContext& ctx, const ZPoly& modulus)
    : ctx_(ctx), e_(modulus.degree()), modulus_(modulus) {
    const int p = ctx.p();
    if (e_ < 1 || modulus.leading() != 1) throw Error(ErrorKind::NotEisenstein, "modulus must be monic of degree >= 1");
    if (vp(modulus[0], p) != 1) throw Error(ErrorKind::NotEisenstein, "constant term must have valuation exactly 1");
    for (int i = 1; i < e_; ++i) {
        if (modulus[i] != 0 && vp(modulus[i], p) < 1) {
            throw Error(ErrorKind::NotEisenstein, "coefficient of T^" + std::to_string(i) + " is a unit");
        }
    }
    for (int i = 0; i < e_; ++i) g_.push_back(PadicScalar::from_mpz(ctx, modulus[i]));
}

std::shared_ptr<const EisensteinRing> EisensteinRing::create(const PadicContext& ctx, const ZPoly& modulus) {
    return std::make_shared<const EisensteinRing>(ctx, modulus);
}

RingElement EisensteinRing::zero() const {
    return {shared_from_this(), std::vector<PadicScalar>(static_cast<std::size_t>(e_), PadicScalar::zero(ctx_))};
}

RingElement EisensteinRing::one() const { return from_scalar(PadicScalar::one(ctx_)); }

RingElement EisensteinRing::generator() const {
    if (e_ == 1) return from_scalar(-g_[0]);
    auto c = std::vector<PadicScalar>(static_cast<std::size_t>(e_), PadicScalar::zero(ctx_));
    c[1] = PadicScalar::one(ctx_);
    return {shared_from_this(), std::move(c)};
}

RingElement EisensteinRing::from_scalar(const PadicScalar& s) const {
    auto c = std::vector<PadicScalar>(static_cast<std::size_t>(e_), PadicScalar::zero(ctx_));
    c[0] = s;
    return {shared_from_this(), std::move(c)};
}

RingElement EisensteinRing::from_coords(std::vector<PadicScalar> coords) const {
    if (coords.size() != static_cast<std::size_t>(e_)) throw Error(ErrorKind::InvalidArgument, "coordinate count");
    return {shared_from_this(), std::move(coords)};
}

RingElement EisensteinRing::from_zpoly(const ZPoly& poly) const {
    const ZPoly r = poly.rem_monic(modulus_);
    auto c = std::vector<PadicScalar>(static_cast<std::size_t>(e_), PadicScalar::zero(ctx_));
    for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = PadicScalar::from_mpz(ctx_, r[i]);
    return {shared_from_this(), std::move(c)};
}

std::vector<PadicScalar> EisensteinRing::multiply(const std::vector<PadicScalar>& a,
                                                  const std::vector<PadicScalar>& b) const {
    const auto e = static_cast<std::size_t>(e_);
    std::vector<PadicScalar> prod(2 * e - 1, PadicScalar::zero(ctx_));
    for (std::size_t i = 0; i < e; ++i) {
        if (a[i].is_exact_zero()) continue;
        for (std::size_t j = 0; j < e; ++j) {
            if (b[j].is_exact_zero()) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    for (std::size_t k = 2 * e - 2; k >= e; --k) {
        const PadicScalar top = prod[k];
        if (top.is_exact_zero()) continue;
        for (std::size_t i = 0; i < e; ++i) {
            if (!g_[i].is_exact_zero()) prod[k - e + i] -= top * g_[i];
        }
    }
    prod.resize(e);
    return prod;
}

std::vector<PadicScalar> EisensteinRing::times_generator(const std::vector<PadicScalar>& a) const {
    const auto e = static_cast<std::size_t>(e_);
    std::vector<PadicScalar> out(e, PadicScalar::zero(ctx_));
    const PadicScalar top = a[e - 1];
    for (std::size_t i = 0; i + 1 < e; ++i) out[i + 1] = a[i];
    if (!top.is_exact_zero()) {
        for (std::size_t i = 0; i < e; ++i) out[i] -= top * g_[i];
    }
    return out;
}

// ---------------------------------------------------------------------------

RingElement::RingElement(std::shared_ptr<const EisensteinRing> ring, std::vector<PadicScalar> coords)
    : ring_(std::move(ring)), c_(std::move(coords)) {}

RingElement operator+(const RingElement& a, const RingElement& b) {
    check_ring(a, b);
    std::vector<PadicScalar> out(a.c_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.c_[i] + b.c_[i];
    return {a.ring_, std::move(out)};
}

RingElement RingElement::operator-() const {
    std::vector<PadicScalar> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(-c);
    return {ring_, std::move(out)};
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    check_ring(a, b);
    return {a.ring_, a.ring_->multiply(a.c_, b.c_)};
}

RingElement operator*(const PadicScalar& s, const RingElement& a) {
    std::vector<PadicScalar> out;
    out.reserve(a.c_.size());
    for (const auto& c : a.c_) out.push_back(s * c);
    return {a.ring_, std::move(out)};
}

RingElement RingElement::pow(unsigned e) const {
    RingElement result = ring_->one();
    RingElement base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

PadicMatrix RingElement::multiplication_matrix() const {
    const auto e = c_.size();
    PadicMatrix m(e, e, PadicScalar::zero(context()));
    std::vector<PadicScalar> col = c_;
    for (std::size_t j = 0; j < e; ++j) {
        for (std::size_t i = 0; i < e; ++i) m(i, j) = col[i];
        if (j + 1 < e) col = ring_->times_generator(col);
    }
    return m;
}

RingElement RingElement::inverse() const {
    if (is_zero()) throw Error(ErrorKind::PrecisionExhausted, "inverse of an element that is zero to precision");
    std::vector<PadicScalar> rhs(c_.size(), PadicScalar::zero(context()));
    rhs[0] = PadicScalar::one(context());
    return {ring_, solve(multiplication_matrix(), std::move(rhs))};
}

RingElement operator/(const RingElement& a, const RingElement& b) {
    check_ring(a, b);
    return a * b.inverse();
}

bool RingElement::is_exact_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const PadicScalar& s) { return s.is_exact_zero(); });
}

bool RingElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const PadicScalar& s) { return s.is_zero(); });
}

int RingElement::pi_valuation_lower_bound() const {
    const int e = ring_->degree();
    long best = kInfiniteValuation;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        best = std::min(best, scaled_bound(c_[i].valuation_lower_bound(), e, static_cast<int>(i)));
    }
    return static_cast<int>(std::min<long>(best, kInfiniteValuation));
}

int RingElement::pi_valuation() const {
    const int e = ring_->degree();
    long best = kInfiniteValuation;
    long imprecise = kInfiniteValuation;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const PadicScalar& c = c_[i];
        if (c.is_exact_zero()) continue;
        const long v = scaled_bound(c.valuation_lower_bound(), e, static_cast<int>(i));
        if (c.is_zero_to_precision()) {
            imprecise = std::min(imprecise, v);
        } else {
            best = std::min(best, v);
        }
    }
    if (imprecise <= best) {
        if (best == kInfiniteValuation && imprecise == kInfiniteValuation) return kInfiniteValuation;
        throw Error(ErrorKind::PrecisionExhausted, "valuation cannot be certified at this precision");
    }
    return static_cast<int>(best);
}

Rational RingElement::ordp() const {
    const int v = pi_valuation();
    if (v == kInfiniteValuation) throw Error(ErrorKind::PrecisionExhausted, "valuation of exact zero");
    return {v, ring_->degree()};
}

int RingElement::absolute_precision() const {
    int best = kInfiniteValuation;
    for (const auto& c : c_) best = std::min(best, c.absolute_precision());
    return best;
}

RingElement RingElement::with_pi_error(int t) const {
    if (t == kInfiniteValuation) return *this;
    const int e = ring_->degree();
    std::vector<PadicScalar> out = c_;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = out[i].reduced_to(ceil_div(static_cast<long>(t) - static_cast<long>(i), e));
    }
    return {ring_, std::move(out)};
}

PadicScalar RingElement::absolute_trace() const {
    const PadicMatrix m = multiplication_matrix();
    PadicScalar tr = PadicScalar::zero(context());
    for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
    return tr;
}

int pi_agreement(const RingElement& a, const RingElement& b) { return (a - b).pi_valuation_lower_bound(); }

RingElement evaluate(const IwasawaSeries& s, const RingElement& x, int tail_pi_bound) {
    const auto& ring = x.ring();
    RingElement acc = ring->zero();
    for (int i = s.support_degree(); i >= 0; --i) {
        acc = acc * x;
        if (!s[i].is_exact_zero()) acc = acc + ring->from_scalar(s[i].in_context(ring->context()));
    }
    return acc.with_pi_error(tail_pi_bound);
}

SnfResult snf_dvr(const Matrix<RingElement>& relations) {
    Matrix<RingElement> m = relations;
    SnfResult out;
    out.generators = m.cols();
    for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) {
        int best = kInfiniteValuation;
        int imprecise = kInfiniteValuation;
        std::size_t br = 0, bc = 0;
        for (std::size_t r = k; r < m.rows(); ++r) {
            for (std::size_t c = k; c < m.cols(); ++c) {
                const RingElement& x = m(r, c);
                if (x.is_exact_zero()) continue;
                int v = kInfiniteValuation;
                try {
                    v = x.pi_valuation();
                } catch (const Error&) {
                    imprecise = std::min(imprecise, x.pi_valuation_lower_bound());
                    continue;
                }
                if (v < best) {
                    best = v;
                    br = r;
                    bc = c;
                }
            }
        }
        if (imprecise == kInfiniteValuation && best == kInfiniteValuation) break;
        if (imprecise <= best) throw Error(ErrorKind::PrecisionExhausted, "DVR pivot cannot be certified");
        m.swap_rows(k, br);
        m.swap_cols(k, bc);
        const RingElement pivot_inv = m(k, k).inverse();
        for (std::size_t r = k + 1; r < m.rows(); ++r) {
            if (m(r, k).is_exact_zero()) continue;
            const RingElement factor = m(r, k) * pivot_inv;
            for (std::size_t c = k + 1; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(k, c);
            m(r, k) = m(r, k).ring()->zero();
        }
        out.pivots.push_back(best);
    }
    std::sort(out.pivots.begin(), out.pivots.end());
    return out;
}

} // namespace ssiw
