#include "ssiwasawa/growth.hpp"

#include <algorithm>
#include <sstream>

#include "ssiwasawa/cyclotomic.hpp"
#include "ssiwasawa/error.hpp"
#include "ssiwasawa/modules.hpp"

namespace ssiw {

namespace {

long p_power_gap(int p, int n) { return static_cast<long>(xi_degree(p, n)); }

const char* asserted(bool flag) { return flag ? "asserted" : "not-asserted"; }

/// k with f = +-xi_k, or -1.
int cyclotomic_index(const IwasawaSeries& f) {
    if (!f.is_polynomial_exact()) return -1;
    const ZPoly poly = f.to_zpoly();
    const int p = f.context().p();
    for (int k = 0; xi_degree(p, k) <= poly.degree(); ++k) {
        const ZPoly xi = cyclo_polynomial(p, k, CycloKind::Xi);
        if (poly == xi || poly == -xi) return k;
    }
    return -1;
}

/// The g with omega_(n-1) Y / omega_n Y = Lambda / (g, xi_n).
ZPoly quotient_partner(const IwasawaSeries& f, int e, int k) {
    if (k >= 0) return cyclo_polynomial(f.context().p(), k, CycloKind::Xi).pow(static_cast<unsigned>(e - 1));
    return f.to_zpoly().pow(static_cast<unsigned>(e));
}

} // namespace

std::string_view to_string(IncrementVariant v) {
    return v == IncrementVariant::AsStated ? "as-stated" : "proof-derived";
}

IncrementVariant parse_increment_variant(std::string_view name) {
    if (name == "as-stated") return IncrementVariant::AsStated;
    if (name == "proof-derived") return IncrementVariant::ProofDerived;
    throw Error(ErrorKind::ParseError, "variant must be \"as-stated\" or \"proof-derived\", got \"" + std::string(name) + "\"");
}

std::string Hypotheses::header() const {
    std::ostringstream os;
    os << "# hypotheses: S=" << asserted(s) << " G=" << asserted(g) << " W=" << asserted(w) << " B=" << asserted(b);
    return os.str();
}

void GrowthParams::validate() const {
    (void)PadicContext(p, 1);  // rejects non-primes and p = 2
    if (d < 0 || r_plus < 0 || r_minus < 0 || mu_plus < 0 || mu_minus < 0 || lambda_plus < 0 || lambda_minus < 0 ||
        s < 0 || s0 < 0) {
        throw Error(ErrorKind::InvalidArgument, "growth parameters must be nonnegative");
    }
    if (n_min < 1 || n_max < n_min) throw Error(ErrorKind::InvalidArgument, "need 1 <= n_min <= n_max");
}

long corank_growth(const GrowthParams& params, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "corank growth needs n >= 1");
    const bool even = n % 2 == 0;
    const long r_same = even ? params.r_plus : params.r_minus;
    const long r_other = even ? params.r_minus : params.r_plus;
    return r_same * q_value(params.p, n) + r_other * q_value(params.p, n - 1);
}

ShaIncrement sha_increment(const GrowthParams& params, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "the increment needs n >= 1");
    const bool even = n % 2 == 0;
    const long mu = even ? params.mu_plus : params.mu_minus;
    const long lambda = even ? params.lambda_plus : params.lambda_minus;
    const long gap = p_power_gap(params.p, n);
    const long dq = static_cast<long>(params.d) * q_value(params.p, n);

    ShaIncrement out;
    out.n = n;
    out.as_stated = mu * gap + (lambda - params.s) * n + dq;
    // rk (Y)_Gamma_n and s0 coincide, so the pair cancels; kept for legibility
    const long rank_y = params.s0;
    out.proof_derived = mu * gap + lambda - rank_y + dq - params.s + params.s0;
    out.selected = params.variant == IncrementVariant::AsStated ? out.as_stated : out.proof_derived;
    return out;
}

int stabilization_threshold(int p, long lambda) {
    int n = 1;
    while (p_power_gap(p, n) <= lambda) ++n;
    return n;
}

StableQuotient stable_quotient_size(const IwasawaSeries& f, int e, int n) {
    if (e < 1) throw Error(ErrorKind::InvalidArgument, "exponent must be at least 1");
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1");
    const int p = f.context().p();
    StableQuotient out;
    out.k = cyclotomic_index(f);
    if (out.k >= 0) {
        out.branch = QuotientBranch::CyclotomicFactor;
        if (n <= out.k) {
            throw Error(ErrorKind::NotStabilized, "f = xi_" + std::to_string(out.k) + " needs n > " + std::to_string(out.k));
        }
        out.size = static_cast<long>(e - 1) * p_power_gap(p, out.k);
        return out;
    }

    const MuLambda ml = mu_lambda(f);
    const long mu = static_cast<long>(e) * ml.mu;
    const long lambda = static_cast<long>(e) * ml.lambda;
    if (p_power_gap(p, n) <= lambda) {
        throw Error(ErrorKind::NotStabilized,
                    "lambda(Y) = " + std::to_string(lambda) + " needs n >= " + std::to_string(stabilization_threshold(p, lambda)));
    }
    if (f.is_polynomial_exact()) {
        const ZPoly poly = f.to_zpoly();
        for (int m = 0; m <= n; ++m) {
            if (resultant(cyclo_polynomial(p, m, CycloKind::Xi), poly) == 0) {
                throw Error(ErrorKind::InvalidArgument, "f shares a factor with omega_n without being some xi_k");
            }
        }
    }
    out.size = mu * p_power_gap(p, n) + lambda;
    return out;
}

QuotientOracle stable_quotient_oracle(const IwasawaSeries& f, int e, int n) {
    if (e < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "need e >= 1 and n >= 1");
    const int p = f.context().p();
    const ZPoly xi = cyclo_polynomial(p, n, CycloKind::Xi);
    const ZPoly g = quotient_partner(f, e, cyclotomic_index(f));
    QuotientOracle out;
    out.by_resultant = quotient_order_resultant(xi, g, p);
    out.by_snf = snf(polynomial_quotient(p, xi, {g})).length;
    return out;
}

std::string growth_table_csv(const GrowthParams& params) {
    params.validate();
    std::ostringstream os;
    os << params.hypotheses.header() << "\n";
    os << "# p=" << params.p << " d=" << params.d << " variant=" << to_string(params.variant) << "\n";
    os << "# corank_main_term omits the bounded correction\n";
    const long lambda = std::max(params.lambda_plus, params.lambda_minus);
    os << "# increments hold for n >= " << stabilization_threshold(params.p, lambda)
       << " at the least (p^n - p^(n-1) > lambda)\n";
    os << "n,parity,corank_main_term,increment_as_stated,increment_proof_derived,diverges,increment,cumulative\n";
    long cumulative = 0;
    for (int n = params.n_min; n <= params.n_max; ++n) {
        const ShaIncrement inc = sha_increment(params, n);
        cumulative += inc.selected;
        os << n << ',' << (n % 2 == 0 ? "+" : "-") << ',' << corank_growth(params, n) << ',' << inc.as_stated << ','
           << inc.proof_derived << ',' << (inc.diverges() ? "yes" : "no") << ',' << inc.selected << ',' << cumulative
           << "\n";
    }
    return os.str();
}

std::string sha_table_csv(int p, int n_max, int d, const Hypotheses& hypotheses) {
    std::ostringstream os;
    os << hypotheses.header() << "\n";
    os << "n,d,sum_q,ord_p_sha,by_snf,by_resultant\n";
    for (int n = 0; n <= n_max; ++n) {
        const ShaSize size = sha_structure_size(p, n, d);
        os << n << ',' << d << ',' << q_sum(p, n) << ',' << size.predicted << ',' << size.by_snf << ','
           << size.by_resultant << "\n";
    }
    return os.str();
}

std::string q_table_csv(int p, int n_max) {
    std::ostringstream os;
    os << "n,q_n,sum_q\n";
    for (int n = 0; n <= n_max; ++n) os << n << ',' << q_value(p, n) << ',' << q_sum(p, n) << "\n";
    return os.str();
}

std::string degree_table_csv(int p, int n_max) {
    std::ostringstream os;
    os << "n,deg_xi,deg_omega,deg_omega_tilde_plus,deg_omega_tilde_minus,deg_omega_plus,deg_omega_minus\n";
    for (int n = 0; n <= n_max; ++n) {
        os << n << ',' << cyclo_degree(p, n, CycloKind::Xi) << ',' << cyclo_degree(p, n, CycloKind::Omega) << ','
           << cyclo_degree(p, n, CycloKind::OmegaTildePlus) << ',' << cyclo_degree(p, n, CycloKind::OmegaTildeMinus)
           << ',' << cyclo_degree(p, n, CycloKind::OmegaPlus) << ',' << cyclo_degree(p, n, CycloKind::OmegaMinus)
           << "\n";
    }
    return os.str();
}

} // namespace ssiw
