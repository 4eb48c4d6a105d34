#include <functional>

#include <gtest/gtest.h>

#include "ssiwasawa/error.hpp"
#include "ssiwasawa/json_io.hpp"

using namespace ssiw;
using nlohmann::json;

namespace {

const PadicContext kCtx{3, 6};

ErrorKind kind_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;  // sentinel: nothing thrown
}

} // namespace

TEST(JsonIo, Scalars) {
    EXPECT_EQ(scalar_from_json(kCtx, json(12)).to_mpz(), 12);
    EXPECT_EQ(scalar_from_json(kCtx, json("-7")).to_mpz(), -7);
    const auto fifteen = scalar_from_json(kCtx, json::parse(R"({"u":"5","v":1})"));
    EXPECT_TRUE(fifteen.is_exact());
    EXPECT_EQ(fifteen.to_mpz(), 15);
    const auto inexact = scalar_from_json(kCtx, json::parse(R"({"u":"2","v":1,"r":3})"));
    EXPECT_EQ(inexact.absolute_precision(), 4);
    EXPECT_EQ(inexact.valuation(), 1);
    EXPECT_TRUE(scalar_from_json(kCtx, json::parse(R"({"u":"0","v":2,"r":0})")).is_zero_to_precision());
    EXPECT_TRUE(scalar_from_json(kCtx, json::parse(R"({"u":"0","v":null})")).is_exact_zero());
}

TEST(JsonIo, ScalarRoundTrip) {
    for (const char* text : {R"({"u":"5","v":1})", R"({"u":"2","v":1,"r":3})", R"({"u":"0","v":null})",
                             R"({"u":"0","v":2,"r":0})", R"({"u":"-4","v":0})"}) {
        const json j = json::parse(text);
        EXPECT_EQ(scalar_to_json(scalar_from_json(kCtx, j)), j) << text;
    }
}

TEST(JsonIo, MalformedScalars) {
    for (const char* text : {R"({"u":"3","v":0,"r":2})", R"({"u":"1"})", R"({"u":"x","v":0})", R"({"u":"1","v":0,"r":99})",
                             R"([1,2])", R"({"u":"2","v":null})"}) {
        EXPECT_EQ(kind_of([&] { (void)scalar_from_json(kCtx, json::parse(text)); }), ErrorKind::ParseError) << text;
    }
}

TEST(JsonIo, SeriesRoundTrip) {
    const json j = json::parse(R"({"p":3,"N":8,"D":4,"coeffs":[0,3,{"u":"1","v":0}]})");
    const IwasawaSeries g = series_from_json(j);
    EXPECT_EQ(g.degree(), 4);
    EXPECT_TRUE(g.is_polynomial_exact());
    EXPECT_EQ(mu_lambda(g), (MuLambda{0, 2}));
    const IwasawaSeries again = series_from_json(series_to_json(g));
    EXPECT_EQ(agreement(g, again), kInfiniteValuation);
    EXPECT_EQ(again.is_polynomial_exact(), g.is_polynomial_exact());

    const json inexact = json::parse(R"({"p":5,"N":4,"D":2,"coeffs":[{"u":"1","v":1,"r":2},1]})");
    const IwasawaSeries h = series_from_json(inexact);
    EXPECT_FALSE(h.is_polynomial_exact());
    EXPECT_EQ(series_to_json(series_from_json(series_to_json(h))), series_to_json(h));
}

TEST(JsonIo, MalformedSeries) {
    for (const char* text : {R"({"p":3,"N":8,"D":1,"coeffs":[1,2,3]})", R"({"p":3,"N":8,"coeffs":[1]})",
                             R"({"p":3,"N":8,"D":1,"coeffs":[{"u":"1","v":0,"r":1}],"exact":true})"}) {
        EXPECT_EQ(kind_of([&] { (void)series_from_json(json::parse(text)); }), ErrorKind::ParseError) << text;
    }
    // a composite p is rejected by the context itself
    EXPECT_EQ(kind_of([] { (void)series_from_json(json::parse(R"({"p":4,"N":8,"D":1,"coeffs":[1]})")); }),
              ErrorKind::InvalidArgument);
}

TEST(JsonIo, MatrixData) {
    const json j = json::parse(R"({"d":2,"entries":[[{"p":3,"N":8,"D":3,"coeffs":[1]},{"p":3,"N":8,"D":3,"coeffs":[]}],
        [{"p":3,"N":8,"D":3,"coeffs":[]},{"p":3,"N":8,"D":3,"coeffs":[3,1]}]],"tY":{"p":3,"N":8,"D":3,"coeffs":[1]}})");
    const PlusMinusLData data = matrix_from_json(j);
    ASSERT_EQ(data.u.size(), 2u);
    EXPECT_EQ(plus_minus_L(data).invariants, (MuLambda{0, 1}));
    EXPECT_EQ(kind_of([] { (void)matrix_from_json(json::parse(R"({"d":2,"entries":[],"tY":1})")); }), ErrorKind::ParseError);
}

TEST(JsonIo, GrowthParams) {
    const json j = json::parse(R"({"p":5,"d":2,"n_max":6,"lambda_plus":3,"variant":"as-stated","hypotheses":{"B":false}})");
    const GrowthParams params = growth_params_from_json(j);
    EXPECT_EQ(params.p, 5);
    EXPECT_EQ(params.d, 2);
    EXPECT_EQ(params.n_max, 6);
    EXPECT_EQ(params.lambda_plus, 3);
    EXPECT_EQ(params.variant, IncrementVariant::AsStated);
    EXPECT_FALSE(params.hypotheses.b);
    EXPECT_TRUE(params.hypotheses.s);
    const GrowthParams again = growth_params_from_json(growth_params_to_json(params));
    EXPECT_EQ(growth_params_to_json(again), growth_params_to_json(params));
}

TEST(JsonIo, GrowthVariantIsRequired) {
    EXPECT_EQ(kind_of([] { (void)growth_params_from_json(json::parse(R"({"p":3})")); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { (void)growth_params_from_json(json::parse(R"({"variant":"sideways"})")); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { (void)growth_params_from_json(json::parse(R"({"variant":"proof-derived","s":"x"})")); }),
              ErrorKind::ParseError);
}
