#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "ssiwasawa/eisenstein_ring.hpp"
#include "ssiwasawa/series.hpp"
#include "ssiwasawa/zpoly.hpp"

namespace ssiw {

/// Members of the p-power cyclotomic family in the variable X.
///  Phi:   Phi_n(X) = sum_{i<p} X^(i p^(n-1))      (Phi_0 = X - 1)
///  Xi:    xi_n = Phi_n(1 + X)                     (xi_0 = X)
///  Omega: omega_n = (1 + X)^(p^n) - 1
///  OmegaTildePlus / Minus: products of xi_m over even / odd 1 <= m <= n
///  OmegaPlus / Minus: X times the matching tilde product
enum class CycloKind { Phi, Xi, Omega, OmegaTildePlus, OmegaTildeMinus, OmegaPlus, OmegaMinus };

CycloKind parse_cyclo_kind(std::string_view name);
std::string_view to_string(CycloKind kind);

ZPoly cyclo_polynomial(int p, int n, CycloKind which);

/// Polynomial-exact series of exactly the polynomial's degree (or `degree`
/// when larger).
IwasawaSeries cyclo_family(const PadicContext& ctx, int n, CycloKind which, int degree = -1);

/// Degree p^n - p^(n-1) of xi_n (1 for n = 0).
std::int64_t xi_degree(int p, int n);
std::int64_t cyclo_degree(int p, int n, CycloKind which);

/// q_n: alternating sum p^(n-1) - p^(n-2) + ... ending in -1 (n even) or
/// -p (n odd); q_0 = q_1 = 0.
std::int64_t q_value(int p, int n);
/// sum_{k<=n} q_k.
std::int64_t q_sum(int p, int n);

/// Z_p[X]/(xi_n) = Z_p[mu_{p^n}], with X mapping to the uniformizer zeta_n - 1.
std::shared_ptr<const EisensteinRing> cyclotomic_ring(const PadicContext& ctx, int n);

/// g(zeta_n - 1). For a series that is not polynomial-exact, the omitted
/// tail is assumed integral and its error is attached.
RingElement eval_at_zeta(const IwasawaSeries& g, int n);

/// p-adic valuation of a certified nonzero element.
Rational ordp_fractional(const RingElement& x);

/// ord_p #(Z_p[X]/(f, g)) as ord_p Res(f, g). NotFinite when the resultant
/// vanishes; f must be monic or a nonzero constant.
int quotient_order_resultant(const ZPoly& f, const ZPoly& g, int p);
/// Same for series; PrecisionExhausted unless both are polynomial-exact.
int quotient_order_resultant(const IwasawaSeries& f, const IwasawaSeries& g);

/// CSV rows (n, q_n, sum q_k, deg omega_tilde_plus, deg omega_tilde_minus).
std::string cyclotomic_table_csv(int p, int n_max);

} // namespace ssiw
