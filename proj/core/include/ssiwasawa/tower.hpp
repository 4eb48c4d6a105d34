#pragma once

#include <memory>
#include <vector>

#include "ssiwasawa/eisenstein_ring.hpp"
#include "ssiwasawa/lubin_tate.hpp"

namespace ssiw {

/// Elements of a tower field are elements of its Eisenstein quotient ring.
using TowerElement = RingElement;

/// k_n = Q_p(F_f[pi^n]) as Z_p[T]/(g_n), g_n = f^(n)(T) / f^(n-1)(T), with T
/// the division point e_n. Subfields k_m and L_m (the Delta-fixed part of
/// k_(m+1)) are handled inside this one ring.
///
/// Galois action: u in Z_p^x sends e_n to [u]_f(e_n). The ring stores the
/// images of T under 1 + p^a (a = 1..n-1) and under the Teichmuller lift of a
/// primitive root, which generate everything the traces need.
class TowerRing {
public:
    /// `digits` is the target p-adic precision of Galois images; ring
    /// degree above `cap` throws CapExceeded.
    static std::shared_ptr<const TowerRing> build(const FrobeniusLift& f, int level, int digits, int cap = 120);

    [[nodiscard]] const FrobeniusLift& lift() const noexcept { return lift_; }
    [[nodiscard]] int level() const noexcept { return level_; }
    [[nodiscard]] int degree() const noexcept { return ring_->degree(); }
    [[nodiscard]] int digits() const noexcept { return digits_; }
    /// Galois images are certified to this pi-valuation.
    [[nodiscard]] int pi_precision() const noexcept { return digits_ * ring_->degree(); }
    [[nodiscard]] const std::shared_ptr<const EisensteinRing>& ring() const noexcept { return ring_; }
    [[nodiscard]] const ZPoly& minimal_polynomial() const noexcept { return ring_->modulus(); }

    /// e_m = f^(n-m)(e_n) for 0 <= m <= n; e_0 = 0.
    [[nodiscard]] TowerElement division_point(int m) const;

    /// sigma_u(x) for any u in Z_p^x.
    [[nodiscard]] TowerElement galois(const PadicScalar& u, const TowerElement& x) const;
    /// sigma_(1 + p^a)(x) for 1 <= a.
    [[nodiscard]] TowerElement gamma(int a, const TowerElement& x) const;
    /// sigma_delta(x) for delta the Teichmuller lift of the primitive root.
    [[nodiscard]] TowerElement delta(const TowerElement& x) const;

    /// Images of x under coset representatives of Gal(k_n / k_m).
    [[nodiscard]] std::vector<TowerElement> conjugates(const TowerElement& x, int m) const;
    /// sum of sigma(x) over Gal(k_from / k_to) for x in k_from.
    [[nodiscard]] TowerElement field_trace(const TowerElement& x, int from, int to) const;
    /// Same for the L-tower: x in L_from, result in L_to (from < n).
    [[nodiscard]] TowerElement field_trace_l(const TowerElement& x, int from, int to) const;
    /// sum over Delta, i.e. the trace k_(m+1) -> L_m.
    [[nodiscard]] TowerElement delta_trace(const TowerElement& x) const;

    /// Lower bound on the pi-valuation of sigma(x) - x over generators of
    /// Gal(k_n / k_m); large means x is certified to lie in k_m.
    [[nodiscard]] int invariance_k(const TowerElement& x, int m) const;
    /// Same for L_m.
    [[nodiscard]] int invariance_l(const TowerElement& x, int m) const;

    /// Coordinates of x in the basis e_m^i of k_m, with the residual
    /// pi-valuation of the fit.
    struct Descent {
        std::vector<PadicScalar> coords;
        int residual = 0;
    };
    [[nodiscard]] Descent descend(const TowerElement& x, int m) const;

    TowerRing(FrobeniusLift f, int level, int digits, std::shared_ptr<const EisensteinRing> ring);

private:
    [[nodiscard]] TowerElement apply(const TowerElement& image_of_t, const TowerElement& x) const;

    FrobeniusLift lift_;
    int level_;
    int digits_;
    std::shared_ptr<const EisensteinRing> ring_;
    std::vector<TowerElement> gamma_images_;  // index a - 1
    TowerElement delta_image_;
};

std::shared_ptr<const TowerRing> build_tower(const FrobeniusLift& f, int level, int digits);

/// Exact minimal polynomial f^(n) / f^(n-1) of e_n.
ZPoly tower_polynomial(const FrobeniusLift& f, int level);

/// Smallest primitive root modulo p.
int primitive_root(int p);

/// Images of x under representatives of Gal(k_n / k_m), the free-function
/// form of TowerRing::conjugates.
std::vector<TowerElement> galois_conjugates(const TowerRing& tower, const TowerElement& x, int m);
TowerElement field_trace(const TowerRing& tower, const TowerElement& x, int m);

struct SpanReport {
    int level = 0;
    int ramification = 0;
    /// pi-valuations b attained by a valuation-echelon basis, ascending.
    std::vector<int> attained;
    /// SNF of the spanning set in coordinates of M_n: full means pivots all 0.
    bool snf_full = false;
    bool budget_limited = false;
    bool passed = false;
};

/// Builds the Z_p-span of [i]_f(beta), i = 1..p-1, beta running over the
/// nonzero pi^n-division points (lower levels included: the primitive ones
/// alone satisfy a trace relation and span a sublattice of lower rank), and
/// checks that it is the maximal ideal M_n: every pi-valuation 1..e must
/// occur and the SNF route must agree.
/// `budget` is the p-adic depth explored; 0 yields an empty, budget-limited
/// report.
SpanReport span_check_maximal_ideal(const FrobeniusLift& f, int level, int budget, int cap = 120);

} // namespace ssiw
