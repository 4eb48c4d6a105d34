#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ssiwasawa/series.hpp"

using namespace ssiw;

namespace {

IwasawaSeries ints(const PadicContext& ctx, int degree, const std::vector<long>& c) {
    return IwasawaSeries::from_integers(ctx, degree, c);
}

void expect_coefficients(const IwasawaSeries& s, const oracle::Poly& expected, int digits) {
    for (int i = 0; i <= s.degree(); ++i) {
        const mpz_class want = static_cast<std::size_t>(i) < expected.size() ? expected[static_cast<std::size_t>(i)] : 0;
        EXPECT_GE(agreement(s[i], PadicScalar::from_mpz(s.context(), want)), digits) << "coefficient " << i;
    }
}

ErrorKind kind_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;  // sentinel: nothing thrown
}

const PadicContext kCtx{3, 8};

} // namespace

TEST(Series, Arithmetic) {
    expect_coefficients(ints(kCtx, 4, {1, 1}) * ints(kCtx, 4, {1, -1}), {1, 0, -1}, 8);
    const auto a = ints(kCtx, 4, {2, 5, 7});
    expect_coefficients(a * ints(kCtx, 4, {1}), {2, 5, 7}, 8);
    expect_coefficients(ints(kCtx, 2, {1, 3}) * ints(kCtx, 2, {1, 3}), {1, 6, 9}, 8);
}

TEST(Series, Composition) {
    expect_coefficients(compose(ints(kCtx, 6, {0, 0, 1}), ints(kCtx, 6, {0, 1, 1})), {0, 0, 1, 2, 1}, 8);
    const auto f = ints(kCtx, 9, {0, 3, 3, 1});
    expect_coefficients(compose(f, IwasawaSeries::variable(kCtx, 9)), {0, 3, 3, 1}, 8);
    expect_coefficients(compose(f, f), oracle::one_plus_x_pow_minus_one(9), 8);
    EXPECT_EQ(kind_of([&] { (void)compose(f, ints(kCtx, 9, {1, 1})); }), ErrorKind::NonzeroConstantTerm);
}

TEST(Series, Reversion) {
    const int degree = 12;
    expect_coefficients(reversion(IwasawaSeries::variable(kCtx, degree)), {0, 1}, 8);
    oracle::Poly catalan{0};
    for (unsigned long n = 1; n <= static_cast<unsigned long>(degree); ++n) catalan.push_back(oracle::signed_catalan(n));
    expect_coefficients(reversion(ints(kCtx, degree, {0, 1, 1})), catalan, 8);
    EXPECT_EQ(kind_of([&] { (void)reversion(ints(kCtx, degree, {0, 0, 1})); }), ErrorKind::NonUnitLinearTerm);
}

TEST(Series, MuLambda) {
    EXPECT_EQ(mu_lambda(ints(kCtx, 3, {0, 3, 0, 1})), (MuLambda{0, 3}));
    EXPECT_EQ(mu_lambda(ints(kCtx, 3, {3, 3})), (MuLambda{1, 0}));
    EXPECT_EQ(mu_lambda(ints(kCtx, 3, {3, 3, 1})), (MuLambda{0, 2}));
    EXPECT_EQ(kind_of([&] { (void)mu_lambda(IwasawaSeries(kCtx, 3)); }), ErrorKind::ZeroToPrecision);
}

TEST(SeriesProperty, ReversionRoundTrip) {
    std::mt19937_64 rng(7);
    for (int p : {3, 5}) {
        const PadicContext ctx(p, 10);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<long> c{0};
            long unit = 0;
            while (unit % p == 0) unit = static_cast<long>(rng() % 50) - 25;
            c.push_back(unit);
            for (int i = 2; i <= 10; ++i) c.push_back(static_cast<long>(rng() % 41) - 20);
            const auto s = ints(ctx, 10, c);
            const auto r = reversion(s);
            const auto x = IwasawaSeries::variable(ctx, 10);
            EXPECT_GE(agreement(compose(r, s), x), std::min(10, r.absolute_precision()));
            EXPECT_GE(agreement(compose(s, r), x), std::min(10, r.absolute_precision()));
        }
    }
}

TEST(SeriesProperty, MuLambdaMultiplicative) {
    std::mt19937_64 rng(11);
    const PadicContext ctx(3, 12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto random_poly = [&] {
            const long mu = static_cast<long>(rng() % 3);
            const long lambda = static_cast<long>(rng() % 4);
            std::vector<long> c;
            long scale = 1;
            for (long i = 0; i < mu; ++i) scale *= 3;
            for (long i = 0; i < lambda; ++i) c.push_back(scale * 3 * (static_cast<long>(rng() % 7) - 3));
            c.push_back(scale * (1 + static_cast<long>(rng() % 2)));
            c.push_back(scale * (static_cast<long>(rng() % 7) - 3));
            return ints(ctx, 12, c);
        };
        const auto g = random_poly();
        const auto h = random_poly();
        const MuLambda a = mu_lambda(g);
        const MuLambda b = mu_lambda(h);
        EXPECT_EQ(mu_lambda(g * h), (MuLambda{a.mu + b.mu, a.lambda + b.lambda}));
    }
}

TEST(SeriesProperty, TruncationConsistency) {
    std::mt19937_64 rng(5);
    const PadicContext big(3, 10);
    const PadicContext small(3, 6);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long> a{0, 1};
        std::vector<long> b{0, 1};
        for (int i = 2; i <= 12; ++i) {
            a.push_back(static_cast<long>(rng() % 19) - 9);
            b.push_back(static_cast<long>(rng() % 19) - 9);
        }
        const auto high = compose(ints(big, 12, a), ints(big, 12, b)) * ints(big, 12, b);
        const auto low = compose(ints(small, 8, a), ints(small, 8, b)) * ints(small, 8, b);
        EXPECT_GE(agreement(high.truncated(8, small), low), 6);
    }
}
