#pragma once

#include <memory>
#include <vector>

#include "ssiwasawa/matrix.hpp"
#include "ssiwasawa/padic.hpp"
#include "ssiwasawa/series.hpp"
#include "ssiwasawa/zpoly.hpp"

namespace ssiw {

class RingElement;

/// Q_p[T]/(g) for a monic Eisenstein polynomial g of degree e: a totally
/// ramified extension whose ring of integers is Z_p[T]/(g), with T a
/// uniformizer. Elements are coordinate vectors in the basis 1, T, ..., T^(e-1).
class EisensteinRing : public std::enable_shared_from_this<EisensteinRing> {
public:
    /// Throws NotEisenstein unless g is monic Eisenstein at p.
    static std::shared_ptr<const EisensteinRing> create(const PadicContext& ctx, const ZPoly& modulus);

    [[nodiscard]] const PadicContext& context() const noexcept { return ctx_; }
    [[nodiscard]] int degree() const noexcept { return e_; }
    [[nodiscard]] const ZPoly& modulus() const noexcept { return modulus_; }

    [[nodiscard]] RingElement zero() const;
    [[nodiscard]] RingElement one() const;
    /// The class of T.
    [[nodiscard]] RingElement generator() const;
    [[nodiscard]] RingElement from_scalar(const PadicScalar& s) const;
    [[nodiscard]] RingElement from_coords(std::vector<PadicScalar> coords) const;
    /// Exact reduction of an integer polynomial in T.
    [[nodiscard]] RingElement from_zpoly(const ZPoly& poly) const;

    // used by RingElement
    [[nodiscard]] std::vector<PadicScalar> multiply(const std::vector<PadicScalar>& a,
                                                    const std::vector<PadicScalar>& b) const;
    [[nodiscard]] std::vector<PadicScalar> times_generator(const std::vector<PadicScalar>& a) const;

    EisensteinRing(const PadicContext& ctx, const ZPoly& modulus);

private:
    PadicContext ctx_;
    int e_;
    ZPoly modulus_;
    std::vector<PadicScalar> g_;  // g_0 .. g_{e-1}
};

/// Element of an EisensteinRing.
class RingElement {
public:
    RingElement() = default;
    RingElement(std::shared_ptr<const EisensteinRing> ring, std::vector<PadicScalar> coords);

    [[nodiscard]] const std::shared_ptr<const EisensteinRing>& ring() const noexcept { return ring_; }
    [[nodiscard]] const std::vector<PadicScalar>& coords() const noexcept { return c_; }
    [[nodiscard]] const PadicScalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const PadicContext& context() const { return ring_->context(); }

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const PadicScalar& s, const RingElement& a);
    friend RingElement operator/(const RingElement& a, const RingElement& b);
    [[nodiscard]] RingElement operator-() const;
    RingElement& operator+=(const RingElement& b) { return *this = *this + b; }

    [[nodiscard]] RingElement pow(unsigned e) const;
    /// Inverse in the field; the element must be certified nonzero.
    [[nodiscard]] RingElement inverse() const;

    [[nodiscard]] bool is_exact_zero() const;
    /// Every coordinate is zero (exactly or to precision).
    [[nodiscard]] bool is_zero() const;
    /// Valuation in units of the uniformizer; throws PrecisionExhausted when
    /// the minimum cannot be certified. kInfiniteValuation for exact zero.
    [[nodiscard]] int pi_valuation() const;
    [[nodiscard]] int pi_valuation_lower_bound() const;
    /// p-adic valuation, pi_valuation / e.
    [[nodiscard]] Rational ordp() const;
    /// Smallest absolute precision among coordinates.
    [[nodiscard]] int absolute_precision() const;

    /// Forget everything at or beyond pi-valuation `t` (tail error bound).
    [[nodiscard]] RingElement with_pi_error(int t) const;
    /// Trace to Q_p.
    [[nodiscard]] PadicScalar absolute_trace() const;
    /// Matrix of multiplication in the power basis (column j = this * T^j).
    [[nodiscard]] PadicMatrix multiplication_matrix() const;

private:
    std::shared_ptr<const EisensteinRing> ring_;
    std::vector<PadicScalar> c_;
};

/// Lower bound on the pi-valuation of a - b.
int pi_agreement(const RingElement& a, const RingElement& b);

/// Horner evaluation of s at x; `tail_pi_bound` bounds the pi-valuation of
/// the omitted tail (kInfiniteValuation when s is polynomial-exact).
RingElement evaluate(const IwasawaSeries& s, const RingElement& x, int tail_pi_bound);

/// SNF over the valuation ring of an Eisenstein extension; pivots are in
/// units of the uniformizer.
SnfResult snf_dvr(const Matrix<RingElement>& relations);

} // namespace ssiw
