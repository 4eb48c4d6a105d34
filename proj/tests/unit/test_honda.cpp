#include <gtest/gtest.h>

#include "ssiwasawa/honda.hpp"

using namespace ssiw;

namespace {

const PadicContext kCtx{3, 8};

const HondaGroup& group_p3() {
    static const HondaGroup h = honda_logarithm(good_frobenius_lift(kCtx, 3), 15);
    return h;
}

} // namespace

TEST(Honda, LinearCoefficient) {
    const PadicContext work = kCtx.working();
    EXPECT_GE(agreement(honda_linear_coefficient(good_frobenius_lift(kCtx, 3)), PadicScalar::from_rational(work, 1, 4)), 20);
    // 3 / (3 + 144) = 1 / 49
    EXPECT_GE(agreement(honda_linear_coefficient(good_frobenius_lift(kCtx, 12)), PadicScalar::from_rational(work, 1, 49)),
              20);
    EXPECT_GE(agreement(group_p3().log[1], PadicScalar::from_rational(group_p3().log.context(), 1, 4)), 8);
}

TEST(Honda, LawIsIntegralAndAHomomorphism) {
    const HondaGroup& h = group_p3();
    EXPECT_GE(h.precision, 4);
    EXPECT_GE(h.homomorphism_residual, 4);
    EXPECT_GE(h.law.valuation_lower_bound(), 0);
    // recomputed here: l(G(X, Y)) against l(X) + l(Y)
    const auto lhs = compose(h.log, h.law);
    const auto rhs = BivariateSeries::in_x(h.log) + BivariateSeries::in_y(h.log);
    EXPECT_GE(agreement(lhs, rhs), 4);
    EXPECT_GE(agreement(h.law.at_y_zero(), IwasawaSeries::variable(h.law.context(), h.degree)), 4);
    EXPECT_GE(agreement(h.law, h.law.transposed()), 4);
}

// [p]_G mod p starts in degree p^2 with a unit coefficient: height 2, so the
// group is not the multiplicative one mod p.
TEST(Honda, HeightTwo) {
    const HondaGroup& h = group_p3();
    const IwasawaSeries x = IwasawaSeries::variable(h.law.context(), h.degree);
    IwasawaSeries multiple = x;
    const IwasawaSeries zero(x.context(), h.degree);
    const IwasawaSeries one = IwasawaSeries::constant(x.context(), h.degree, PadicScalar::one(x.context()));
    for (int k = 1; k < 3; ++k) multiple = h.law.evaluate(multiple, x, zero, one);
    for (int i = 0; i < 9; ++i) EXPECT_GE(agreement(multiple[i], PadicScalar::zero(multiple.context())), 1) << "i=" << i;
    EXPECT_EQ(multiple[9].valuation(), 0);
    EXPECT_LT(agreement(multiple[3], PadicScalar::one(multiple.context())), 1);
}

TEST(Honda, EpsilonPoint) {
    const HondaGroup& h = group_p3();
    const BasePoint eps = epsilon_point(h, 10);
    ASSERT_TRUE(eps.value.is_nonzero());
    EXPECT_EQ(eps.value.valuation(), 1);
    EXPECT_GE(eps.residual, 8);
    // terms of l past degree 15 have valuation at least 16 - 2 at a point of valuation 1
    const PadicScalar target = PadicScalar::from_rational(h.log.context(), 3, 4);
    EXPECT_GE(agreement(h.log.evaluate_polynomial(eps.value.in_context(h.log.context())), target), 8);
}

TEST(Honda, TraceRelationsZeroConvention) {
    const auto reports = trace_relations(group_p3(), E0Convention::Zero, 3);
    ASSERT_EQ(reports.size(), 5u);
    for (const auto& r : reports) {
        EXPECT_TRUE(r.passed) << r.name << " residual " << r.residual_digits << " " << r.note;
        if (r.name.find("u ") != std::string::npos) {
            ASSERT_TRUE(r.unit.has_value());
            EXPECT_EQ(r.unit->valuation(), 0);
        }
    }
}

TEST(Honda, PrimitiveConventionHasNoRationalMultiplier) {
    const auto reports = trace_relations(group_p3(), E0Convention::Primitive, 3);
    ASSERT_EQ(reports.size(), 3u);
    const auto& tr10 = reports[2];
    EXPECT_FALSE(tr10.passed);
    EXPECT_FALSE(tr10.unit.has_value());
}

TEST(Honda, GroupTraceMatchesLogTrace) {
    const HondaGroup& h = group_p3();
    const auto tower = TowerRing::build(h.lift, 2, 6);
    const BasePoint eps = epsilon_point(h, 8);
    const FormalPoint c2 = c_point(h, eps, tower, 2);
    ASSERT_TRUE(c2.value.has_value());
    const int e = tower->degree();
    const FormalPoint by_log = formal_trace(c2, 2, 1);
    // the degree-15 law bounds the tail by 16 v(x), so ask for two digits
    const FormalPoint by_group = formal_trace_group(h, c2, 2, 1, 2 * e);
    EXPECT_GE(pi_agreement(by_log.log, by_group.log), 2 * e);
}

TEST(Honda, PlusMinusMembership) {
    const HondaGroup& h = group_p3();
    const auto tower = TowerRing::build(h.lift, 3, 6);
    const BasePoint eps = epsilon_point(h, 8);
    const FormalPoint d0 = d_point(h, eps, tower, 0);
    const FormalPoint d1 = d_point(h, eps, tower, 1);
    const FormalPoint d2 = d_point(h, eps, tower, 2);
    EXPECT_TRUE(pm_membership(d2, 2, PmSign::Plus, 3));
    EXPECT_FALSE(pm_membership(d2, 2, PmSign::Minus, 3));
    EXPECT_TRUE(pm_membership(d1, 2, PmSign::Minus, 3));
    EXPECT_FALSE(pm_membership(d1, 2, PmSign::Plus, 3));
    EXPECT_TRUE(pm_membership(d0, 2, PmSign::Plus, 3));
    EXPECT_TRUE(pm_membership(d0, 2, PmSign::Minus, 3));
}
