#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ssiwasawa/error.hpp"
#include "ssiwasawa/lubin_tate.hpp"

using namespace ssiw;

namespace {

bool congruent_mod_p(const PadicScalar& value, const mpz_class& target) {
    return agreement(value, PadicScalar::from_mpz(value.context(), target)) >= 1;
}

/// Smallest total degree where the law differs from X + Y + XY mod p.
int law_defect(const FormalGroupLaw& law) {
    int defect = -1;
    for (int t = 0; t <= law.degree && defect < 0; ++t) {
        for (int i = 0; i <= t; ++i) {
            if (!congruent_mod_p(law.law.at(i, t - i), oracle::multiplicative_law(i, t - i))) defect = t;
        }
    }
    return defect;
}

} // namespace

TEST(LubinTate, GoodLiftCoefficients) {
    for (int p : {3, 5, 7}) {
        const PadicContext ctx(p, 8);
        for (std::int64_t pi : {static_cast<std::int64_t>(p), static_cast<std::int64_t>(p) * (1 + p)}) {
            const FrobeniusLift f = good_frobenius_lift(ctx, pi);
            oracle::Poly want = oracle::one_plus_x_pow_minus_one(static_cast<unsigned long>(p));
            want[1] = pi;
            EXPECT_EQ(f.poly.coefficients(), want) << "p=" << p << " pi=" << pi;
        }
    }
    const PadicContext ctx(3, 8);
    EXPECT_EQ(good_frobenius_lift(ctx, 3).poly, (ZPoly{0, 3, 3, 1}));
    EXPECT_EQ(good_frobenius_lift(ctx, 12).poly, (ZPoly{0, 12, 3, 1}));
}

TEST(LubinTate, BadUniformizerRejected) {
    const PadicContext ctx(3, 8);
    for (std::int64_t pi : {6L, 9L, 1L}) {
        try {
            (void)good_frobenius_lift(ctx, pi);
            FAIL() << "expected BadUniformizer for " << pi;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::BadUniformizer);
        }
    }
}

TEST(LubinTate, LawIsMultiplicativeModPForPiEqualP) {
    for (int p : {3, 5}) {
        const PadicContext ctx(p, 6);
        const FrobeniusLift f = good_frobenius_lift(ctx, p);
        const FormalGroupLaw law = lubin_tate_law(f, 20);
        EXPECT_EQ(law_defect(law), -1) << "p=" << p;
        for (int a = 1; a <= 2 * p; ++a) {
            const IwasawaSeries mult = endomorphism_series(PadicScalar::from_int(ctx, a), f, 20);
            const oracle::Poly want = oracle::one_plus_x_pow_minus_one(static_cast<unsigned long>(a));
            for (int i = 0; i <= 20; ++i) {
                const mpz_class w = static_cast<std::size_t>(i) < want.size() ? want[static_cast<std::size_t>(i)] : 0;
                EXPECT_TRUE(congruent_mod_p(mult[i], w)) << "p=" << p << " a=" << a << " i=" << i;
            }
        }
    }
}

// For pi = p(1+p) the reduction of [pi] = f is X^p, while (1+X)^pi - 1 reduces
// to (1+X^p)(1+X^(p^2)) - 1, which has an X^(p^2) term. A law agreeing with
// X + Y + XY mod p below total degree t would give [pi] = (1+X)^pi - 1 below
// degree t, so the law must differ from the multiplicative one by degree p^2.
TEST(LubinTate, TwistedUniformizerIsNotMultiplicativeModP) {
    for (int p : {3, 5}) {
        const oracle::Poly twisted = oracle::one_plus_x_pow_minus_one(static_cast<unsigned long>(p * (1 + p)));
        EXPECT_NE(twisted[static_cast<std::size_t>(p * p)] % p, 0);
        const PadicContext ctx(p, 6);
        const FrobeniusLift f = good_frobenius_lift(ctx, p * (1 + p));
        EXPECT_EQ(f.poly.degree(), p);
        const FormalGroupLaw law = lubin_tate_law(f, p * p);
        const int defect = law_defect(law);
        EXPECT_GE(defect, 2) << "p=" << p;
        EXPECT_LE(defect, p * p) << "p=" << p;
    }
}

TEST(LubinTate, GroupLawAxioms) {
    const PadicContext ctx(3, 8);
    for (std::int64_t pi : {3L, 12L}) {
        const FormalGroupLaw law = lubin_tate_law(good_frobenius_lift(ctx, pi), 12);
        const int digits = law.precision;
        ASSERT_GE(digits, 3);
        EXPECT_GE(agreement(law.law.at_y_zero(), IwasawaSeries::variable(law.law.context(), 12)), digits);
        EXPECT_GE(agreement(law.law, law.law.transposed()), digits);
        // log is a homomorphism to the additive group
        const auto lhs = compose(law.log, law.law);
        const auto rhs = BivariateSeries::in_x(law.log) + BivariateSeries::in_y(law.log);
        EXPECT_GE(agreement(lhs, rhs), std::min(digits, 3));
    }
}

TEST(LubinTate, Associativity) {
    const PadicContext ctx(3, 8);
    const FormalGroupLaw law = lubin_tate_law(good_frobenius_lift(ctx, 3), 10);
    const PadicContext& w = law.law.context();
    // F(F(a, b), c) = F(a, F(b, c)) at three small integers of positive valuation
    const auto value = [&](const PadicScalar& a, const PadicScalar& b) {
        return law.law.evaluate(a, b, PadicScalar::zero(w), PadicScalar::one(w));
    };
    const auto a = PadicScalar::from_int(w, 3);
    const auto b = PadicScalar::from_int(w, 6);
    const auto c = PadicScalar::from_int(w, -9);
    // the tail past degree 10 has valuation at least 11
    EXPECT_GE(agreement(value(value(a, b), c), value(a, value(b, c))), std::min(law.precision, 6));
}

TEST(LubinTate, EndomorphismRing) {
    const PadicContext ctx(5, 8);
    const FrobeniusLift f = good_frobenius_lift(ctx, 5);
    const int d = 12;
    const auto mul = [&](std::int64_t a) { return endomorphism_series(PadicScalar::from_int(ctx, a), f, d); };
    const FormalGroupLaw law = lubin_tate_law(f, d);
    for (std::int64_t a : {1, 2, 3}) {
        for (std::int64_t b : {2, 4}) {
            EXPECT_GE(agreement(compose(mul(a), mul(b)), mul(a * b)), 6);
            const PadicContext& w = law.law.context();
            const auto sum = law.law.evaluate(mul(a).in_context(w), mul(b).in_context(w), IwasawaSeries(w, d),
                                              IwasawaSeries::constant(w, d, PadicScalar::one(w)));
            EXPECT_GE(agreement(sum.in_context(mul(a + b).context()), mul(a + b)), std::min(6, law.precision));
        }
    }
    // [p] is f itself
    EXPECT_GE(agreement(mul(5), f.series(d).in_context(mul(5).context())), 6);
    EXPECT_GE(agreement(mult_by(PadicScalar::from_int(ctx, 2), law).in_context(mul(2).context()), mul(2)),
              std::min(6, law.precision));
}

TEST(LubinTate, DivisionMatrixDeterminantIsUnit) {
    for (int p : {3, 5, 7}) {
        const PadicContext ctx(p, 8);
        const PadicScalar det = division_matrix_det(good_frobenius_lift(ctx, p));
        EXPECT_TRUE(det.is_nonzero());
        EXPECT_EQ(det.valuation(), 0) << "p=" << p;
    }
}
