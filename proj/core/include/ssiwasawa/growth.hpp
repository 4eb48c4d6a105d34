#pragma once

#include <cstdint>
#include <string>

#include "ssiwasawa/series.hpp"

namespace ssiw {

/// Which display of the Sha-increment formula to use. They differ in the
/// lambda term: (lambda - s) n versus the constant lambda - s.
enum class IncrementVariant { AsStated, ProofDerived };

std::string_view to_string(IncrementVariant v);
IncrementVariant parse_increment_variant(std::string_view name);

/// Global hypotheses the growth formulas are conditional on. They are never
/// checked, only echoed into report headers.
struct Hypotheses {
    bool s = true;
    bool g = true;
    bool w = true;
    bool b = true;
    /// "# hypotheses: S=asserted G=asserted W=asserted B=not asserted".
    [[nodiscard]] std::string header() const;
};

struct GrowthParams {
    int p = 3;
    int d = 1;
    int n_min = 1;
    int n_max = 4;
    /// Lambda-ranks of the plus/minus Selmer duals.
    long r_plus = 0;
    long r_minus = 0;
    long mu_plus = 0;
    long mu_minus = 0;
    long lambda_plus = 0;
    long lambda_minus = 0;
    /// Stable corank of the Selmer groups.
    long s = 0;
    /// rank of the Sigma-primitive Selmer group, which equals rk (Y)_Gamma_n.
    long s0 = 0;
    IncrementVariant variant = IncrementVariant::ProofDerived;
    Hypotheses hypotheses;

    /// InvalidArgument on negative fields, p outside {3, 5, 7, ...} primes or
    /// an empty range.
    void validate() const;
};

/// r^e q_n + r^(-e) q_(n-1) with e = (-1)^n. Only the main term: the bounded
/// correction is not known and is not produced.
long corank_growth(const GrowthParams& params, int n);

struct ShaIncrement {
    int n = 0;
    long as_stated = 0;
    long proof_derived = 0;
    /// The value of the variant chosen in the parameters.
    long selected = 0;
    [[nodiscard]] bool diverges() const noexcept { return as_stated != proof_derived; }
};

/// ord_p #(S_n / S_(n-1)) for large n by both displays; the parity of n picks
/// (mu^+, lambda^+) for even n and (mu^-, lambda^-) for odd n.
ShaIncrement sha_increment(const GrowthParams& params, int n);

/// Smallest n >= 1 with p^n - p^(n-1) > lambda.
int stabilization_threshold(int p, long lambda);

enum class QuotientBranch { Coprime, CyclotomicFactor };

struct StableQuotient {
    long size = 0;
    QuotientBranch branch = QuotientBranch::Coprime;
    /// k with f = xi_k in the cyclotomic branch, -1 otherwise.
    int k = -1;
};

/// ord_p #(omega_(n-1) Y / omega_n Y) for Y = Lambda / f^e, f irreducible.
/// Coprime branch: mu(Y) (p^n - p^(n-1)) + lambda(Y), needing p^n - p^(n-1) >
/// lambda(Y). Branch f = xi_k: (e - 1) deg xi_k, needing n > k. Below either
/// threshold: NotStabilized.
StableQuotient stable_quotient_size(const IwasawaSeries& f, int e, int n);

struct QuotientOracle {
    /// ord_p Res(xi_n, g) with g = f^e (coprime) or xi_k^(e-1).
    long by_resultant = 0;
    /// Torsion length of Z_p[X]/(xi_n, g) by SNF.
    long by_snf = 0;
};

/// Independent count of Lambda/(g, xi_n), the module the quotient is
/// isomorphic to. f must be polynomial-exact.
QuotientOracle stable_quotient_oracle(const IwasawaSeries& f, int e, int n);

/// CSV: n, parity, corank main term, both increments, divergence, selected
/// increment and its running sum from n_min. Header lines start with '#'.
std::string growth_table_csv(const GrowthParams& params);

/// CSV: n, d, sum_q, ord_p Sha (d sum q), SNF and resultant cross-checks.
std::string sha_table_csv(int p, int n_max, int d, const Hypotheses& hypotheses);

/// CSV: n, q_n, sum_q.
std::string q_table_csv(int p, int n_max);

/// CSV: n and the degrees of xi_n, omega_n and its plus/minus factors.
std::string degree_table_csv(int p, int n_max);

} // namespace ssiw
