#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ssiwasawa/error.hpp"
#include "ssiwasawa/modules.hpp"

using namespace ssiw;

namespace {

const PadicContext kCtx{3, 10};

IwasawaSeries poly(const oracle::Poly& c, int degree = 8) {
    return IwasawaSeries::from_zpoly(kCtx, degree, ZPoly(c));
}

long xi_deg(int p, int n) { return static_cast<long>(oracle::xi(p, n).size()) - 1; }

} // namespace

TEST(Modules, PointGroupModelIsFree) {
    for (int n = 1; n <= 4; ++n) {
        const ModuleStructure m = snf(model_E_Ln(3, n));
        EXPECT_EQ(static_cast<long>(m.rank), oracle::ipow(3, n));
        EXPECT_TRUE(m.torsion.empty());
    }
    EXPECT_EQ(static_cast<long>(snf(model_E_Ln(5, 2)).rank), 25);
}

TEST(Modules, TraceKernelAndCokernel) {
    for (int p : {3, 5}) {
        for (int n = 2; n <= (p == 3 ? 5 : 3); ++n) {
            const TraceMapReport t = trace_kernel_cokernel(p, n);
            EXPECT_EQ(t.kernel_rank, xi_deg(p, n)) << "p=" << p << " n=" << n;
            EXPECT_EQ(t.cokernel_free_rank, 0);
            EXPECT_EQ(t.cokernel_p_rank, oracle::q_display(p, n));
        }
    }
    EXPECT_EQ(trace_kernel_cokernel(3, 2).kernel_rank, 6);
    EXPECT_EQ(trace_kernel_cokernel(3, 3).kernel_rank, 18);
    EXPECT_EQ(trace_kernel_cokernel(3, 4).kernel_rank, 54);
}

TEST(Modules, ShaSizes) {
    const ShaSize small = sha_structure_size(3, 2, 1);
    EXPECT_EQ(small.predicted, 2);
    EXPECT_TRUE(small.consistent());
    const ShaSize bigger = sha_structure_size(3, 3, 2);
    EXPECT_EQ(bigger.predicted, 16);
    EXPECT_TRUE(bigger.consistent());
    for (int n = 1; n <= 4; ++n) {
        const long by_oracle =
            oracle::vp(oracle::resultant(oracle::omega_tilde(3, n, true), oracle::omega_tilde(3, n, false)), 3);
        for (int d = 1; d <= 3; ++d) EXPECT_EQ(sha_structure_size(3, n, d).by_snf, d * by_oracle);
    }
}

TEST(Modules, PolynomialQuotient) {
    // Z_3[X]/(xi_1, 3) has length 2, Z_3[X]/(xi_1, X) has length 1
    EXPECT_EQ(snf(polynomial_quotient(3, ZPoly{3, 3, 1}, {ZPoly{3}})).length, 2);
    EXPECT_EQ(snf(polynomial_quotient(3, ZPoly{3, 3, 1}, {ZPoly{0, 1}})).length, 1);
    EXPECT_EQ(snf(polynomial_quotient(3, ZPoly{3, 3, 1}, {})).rank, 2u);
    const PresentedModule m = direct_power(polynomial_quotient(3, ZPoly{3, 3, 1}, {ZPoly{3}}), 3);
    EXPECT_EQ(snf(m).length, 6);
}

TEST(Modules, PlusMinusLExamples) {
    PlusMinusLData one{{{poly({1})}}, poly({1})};
    const PlusMinusL a = plus_minus_L(one);
    EXPECT_EQ(a.invariants, (MuLambda{0, 0}));
    EXPECT_TRUE(a.unit_at_zero);

    PlusMinusLData diag{{{poly({1}), poly({})}, {poly({}), poly({3, 1})}}, poly({1})};
    const PlusMinusL b = plus_minus_L(diag);
    EXPECT_EQ(b.invariants, (MuLambda{0, 1}));

    PlusMinusLData torsion{{{poly({1})}}, poly({9, 3, 3})};
    EXPECT_EQ(plus_minus_L(torsion).invariants, (MuLambda{1, 1}));

    PlusMinusLData zero{{{poly({})}}, poly({1})};
    try {
        (void)plus_minus_L(zero);
        FAIL() << "expected ZeroToPrecision";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroToPrecision);
    }
}

TEST(ModulesProperty, PlusMinusLUnitInvariance) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto random = [&] {
            oracle::Poly c;
            for (int i = 0; i <= 3; ++i) c.emplace_back(static_cast<long>(rng() % 9) - 4);
            return c;
        };
        const oracle::Poly a = random(), b = random(), c = random(), d = random();
        const oracle::Poly det = oracle::sub(oracle::mul(a, d), oracle::mul(b, c));
        if (det.empty()) continue;
        // right multiplication by [[1, k], [0, 1]] with k a polynomial
        const oracle::Poly k = random();
        PlusMinusLData base{{{poly(a), poly(b)}, {poly(c), poly(d)}}, poly({1})};
        PlusMinusLData moved{{{poly(a), poly(oracle::add(b, oracle::mul(a, k)))},
                              {poly(c), poly(oracle::add(d, oracle::mul(c, k)))}},
                             poly({1})};
        try {
            const MuLambda before = plus_minus_L(base).invariants;
            EXPECT_EQ(plus_minus_L(moved).invariants, before);
            // and against the oracle determinant
            EXPECT_EQ(mu_lambda(poly(det)), before);
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ZeroToPrecision);
        }
    }
}

TEST(Modules, ZetaQuotientExamples) {
    for (int n = 1; n <= 3; ++n) {
        const ZetaQuotient x = quotient_finiteness_at_zeta({{poly({0, 1})}}, n);
        EXPECT_TRUE(x.finite);
        EXPECT_EQ(x.size, 1);
        const ZetaQuotient p = quotient_finiteness_at_zeta({{poly({3}), poly({})}, {poly({}), poly({1})}}, n);
        EXPECT_EQ(p.size, xi_deg(3, n));
        EXPECT_TRUE(p.agrees());
        const ZetaQuotient xi = quotient_finiteness_at_zeta(
            {{IwasawaSeries::from_zpoly(kCtx, xi_deg(3, n), ZPoly(oracle::xi(3, n)))}}, n);
        EXPECT_FALSE(xi.finite);
    }
}

// The quotient of Z_p[zeta_n]^2 by the columns of u(zeta_n - 1) has order
// |N(det u(zeta_n - 1))|, i.e. ord_p Res(xi_n, det u).
TEST(ModulesProperty, ZetaQuotientMatchesResultant) {
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 15) {
        std::vector<oracle::Poly> e(4);
        for (auto& c : e) {
            for (int i = 0; i <= 2; ++i) c.emplace_back(static_cast<long>(rng() % 9) - 4);
            oracle::trim(c);
        }
        const oracle::Poly det = oracle::sub(oracle::mul(e[0], e[3]), oracle::mul(e[1], e[2]));
        if (det.empty()) continue;
        for (int n = 1; n <= 3; ++n) {
            const mpz_class res = oracle::resultant(oracle::xi(3, n), det);
            if (res == 0) continue;
            const ZetaQuotient z =
                quotient_finiteness_at_zeta({{poly(e[0]), poly(e[1])}, {poly(e[2]), poly(e[3])}}, n);
            EXPECT_TRUE(z.finite);
            EXPECT_EQ(z.size, oracle::vp(res, 3)) << "n=" << n;
            EXPECT_TRUE(z.agrees());
        }
        ++checked;
    }
}
