#include "ssiwasawa/cyclotomic.hpp"

#include <sstream>

namespace ssiw {

namespace {

std::int64_t ipow(int p, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

void check_level(int p, int n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "level must be nonnegative");
    if (n > max_digits(p)) throw Error(ErrorKind::InvalidArgument, "level too large for 64-bit degrees");
}

} // namespace

CycloKind parse_cyclo_kind(std::string_view name) {
    if (name == "Phi" || name == "phi") return CycloKind::Phi;
    if (name == "xi") return CycloKind::Xi;
    if (name == "omega") return CycloKind::Omega;
    if (name == "omega_tilde_plus") return CycloKind::OmegaTildePlus;
    if (name == "omega_tilde_minus") return CycloKind::OmegaTildeMinus;
    if (name == "omega_plus") return CycloKind::OmegaPlus;
    if (name == "omega_minus") return CycloKind::OmegaMinus;
    throw Error(ErrorKind::ParseError, "unknown cyclotomic family member '" + std::string(name) + "'");
}

std::string_view to_string(CycloKind kind) {
    switch (kind) {
    case CycloKind::Phi: return "Phi";
    case CycloKind::Xi: return "xi";
    case CycloKind::Omega: return "omega";
    case CycloKind::OmegaTildePlus: return "omega_tilde_plus";
    case CycloKind::OmegaTildeMinus: return "omega_tilde_minus";
    case CycloKind::OmegaPlus: return "omega_plus";
    case CycloKind::OmegaMinus: return "omega_minus";
    }
    return "?";
}

ZPoly cyclo_polynomial(int p, int n, CycloKind which) {
    check_level(p, n);
    switch (which) {
    case CycloKind::Phi: {
        if (n == 0) return ZPoly{-1, 1};
        const std::int64_t step = ipow(p, n - 1);
        std::vector<mpz_class> c(static_cast<std::size_t>(step * (p - 1) + 1));
        for (int i = 0; i < p; ++i) c[static_cast<std::size_t>(i * step)] = 1;
        return ZPoly(std::move(c));
    }
    case CycloKind::Xi:
        if (n == 0) return ZPoly::x();
        return cyclo_polynomial(p, n, CycloKind::Phi).shift_one();
    case CycloKind::Omega:
        return ZPoly{1, 1}.pow(static_cast<unsigned>(ipow(p, n))) - ZPoly{1};
    case CycloKind::OmegaTildePlus:
    case CycloKind::OmegaTildeMinus: {
        const int parity = which == CycloKind::OmegaTildePlus ? 0 : 1;
        ZPoly acc{1};
        for (int m = 1; m <= n; ++m) {
            if (m % 2 == parity) acc = acc * cyclo_polynomial(p, m, CycloKind::Xi);
        }
        return acc;
    }
    case CycloKind::OmegaPlus:
        return ZPoly::x() * cyclo_polynomial(p, n, CycloKind::OmegaTildePlus);
    case CycloKind::OmegaMinus:
        return ZPoly::x() * cyclo_polynomial(p, n, CycloKind::OmegaTildeMinus);
    }
    return {};
}

IwasawaSeries cyclo_family(const PadicContext& ctx, int n, CycloKind which, int degree) {
    const ZPoly poly = cyclo_polynomial(ctx.p(), n, which);
    return IwasawaSeries::from_zpoly(ctx, std::max(degree, poly.degree()), poly);
}

std::int64_t xi_degree(int p, int n) { return n == 0 ? 1 : ipow(p, n) - ipow(p, n - 1); }

std::int64_t cyclo_degree(int p, int n, CycloKind which) {
    switch (which) {
    case CycloKind::Phi: return n == 0 ? 1 : xi_degree(p, n);
    case CycloKind::Xi: return xi_degree(p, n);
    case CycloKind::Omega: return ipow(p, n);
    case CycloKind::OmegaTildePlus:
    case CycloKind::OmegaTildeMinus: {
        const int parity = which == CycloKind::OmegaTildePlus ? 0 : 1;
        std::int64_t d = 0;
        for (int m = 1; m <= n; ++m) {
            if (m % 2 == parity) d += xi_degree(p, m);
        }
        return d;
    }
    case CycloKind::OmegaPlus: return 1 + cyclo_degree(p, n, CycloKind::OmegaTildePlus);
    case CycloKind::OmegaMinus: return 1 + cyclo_degree(p, n, CycloKind::OmegaTildeMinus);
    }
    return 0;
}

std::int64_t q_value(int p, int n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "level must be nonnegative");
    // p^(n-1) - p^(n-2) + ... down to p^0 (n even) or p^1 (n odd)
    const int lowest = n % 2 == 0 ? 0 : 1;
    std::int64_t q = 0;
    int sign = 1;
    for (int k = n - 1; k >= lowest; --k) {
        q += sign * ipow(p, k);
        sign = -sign;
    }
    return q;
}

std::int64_t q_sum(int p, int n) {
    std::int64_t s = 0;
    for (int k = 0; k <= n; ++k) s += q_value(p, k);
    return s;
}

std::shared_ptr<const EisensteinRing> cyclotomic_ring(const PadicContext& ctx, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic ring needs n >= 1");
    return EisensteinRing::create(ctx, cyclo_polynomial(ctx.p(), n, CycloKind::Xi));
}

RingElement eval_at_zeta(const IwasawaSeries& g, int n) {
    const auto ring = cyclotomic_ring(g.context(), n);
    if (g.is_polynomial_exact()) return ring->from_zpoly(g.to_zpoly());
    return evaluate(g, ring->generator(), g.degree() + 1);
}

Rational ordp_fractional(const RingElement& x) {
    const int v = x.pi_valuation();
    if (v == kInfiniteValuation) throw Error(ErrorKind::PrecisionExhausted, "valuation of exact zero");
    return {v, x.ring()->degree()};
}

int quotient_order_resultant(const ZPoly& f, const ZPoly& g, int p) {
    const mpz_class r = resultant(f, g);
    if (r == 0) throw Error(ErrorKind::NotFinite, "resultant vanishes: the quotient is infinite");
    if (f.degree() > 0 && abs(f.leading()) != 1 && g.degree() > 0 && abs(g.leading()) != 1) {
        throw Error(ErrorKind::InvalidArgument, "one of the polynomials must be monic or constant");
    }
    return vp(r, p);
}

int quotient_order_resultant(const IwasawaSeries& f, const IwasawaSeries& g) {
    if (!f.is_polynomial_exact() || !g.is_polynomial_exact()) {
        throw Error(ErrorKind::PrecisionExhausted, "resultant needs exact polynomial lifts");
    }
    return quotient_order_resultant(f.to_zpoly(), g.to_zpoly(), f.context().p());
}

std::string cyclotomic_table_csv(int p, int n_max) {
    std::ostringstream os;
    os << "n,q_n,sum_q,deg_omega_tilde_plus,deg_omega_tilde_minus\n";
    for (int n = 0; n <= n_max; ++n) {
        os << n << ',' << q_value(p, n) << ',' << q_sum(p, n) << ',' << cyclo_degree(p, n, CycloKind::OmegaTildePlus)
           << ',' << cyclo_degree(p, n, CycloKind::OmegaTildeMinus) << "\n";
    }
    return os.str();
}

} // namespace ssiw
