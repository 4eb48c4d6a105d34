#include "ssiwasawa/json_io.hpp"

#include <string>

#include "ssiwasawa/error.hpp"

namespace ssiw {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

mpz_class parse_integer(const json& j, const char* field) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class out;
        if (out.set_str(j.get<std::string>(), 10) != 0) bad(std::string(field) + " is not a decimal integer");
        return out;
    }
    bad(std::string(field) + " must be an integer or a decimal string");
}

int int_field(const json& j, const char* name) {
    if (!j.contains(name)) bad(std::string("missing field \"") + name + "\"");
    const json& v = j.at(name);
    if (!v.is_number_integer()) bad(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

long long_field(const json& j, const char* name, long fallback) {
    if (!j.contains(name)) return fallback;
    const json& v = j.at(name);
    if (!v.is_number_integer()) bad(std::string("field \"") + name + "\" must be an integer");
    return v.get<long>();
}

bool bool_field(const json& j, const char* name, bool fallback) {
    if (!j.contains(name)) return fallback;
    const json& v = j.at(name);
    if (!v.is_boolean()) bad(std::string("field \"") + name + "\" must be a boolean");
    return v.get<bool>();
}

/// Runs `body`, turning JSON library exceptions into ParseError.
template <class F>
auto guarded(F&& body) {
    try {
        return body();
    } catch (const json::exception& err) {
        throw Error(ErrorKind::ParseError, err.what());
    }
}

} // namespace

PadicScalar scalar_from_json(const PadicContext& ctx, const json& j) {
    return guarded([&] {
        if (j.is_number_integer() || j.is_string()) return PadicScalar::from_mpz(ctx, parse_integer(j, "scalar"));
        if (!j.is_object()) bad("scalar must be an object, an integer or a decimal string");
        if (!j.contains("v")) bad("scalar is missing \"v\"");
        const mpz_class unit = j.contains("u") ? parse_integer(j.at("u"), "u") : mpz_class(0);
        if (j.at("v").is_null()) {
            if (unit != 0 || j.contains("r")) bad("a null valuation denotes exact zero only");
            return PadicScalar::zero(ctx);
        }
        const int v = int_field(j, "v");
        if (!j.contains("r")) return PadicScalar::from_mpz(ctx, unit).shifted(v);
        const int r = int_field(j, "r");
        if (r < 0 || r > ctx.N()) bad("relative precision \"r\" must lie in [0, N]");
        if (r == 0) return PadicScalar::big_oh(ctx, v);
        if (mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(ctx.p())) != 0) {
            bad("\"u\" must be a unit when \"r\" is given");
        }
        mpz_class modulus;
        mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(ctx.p()), static_cast<unsigned long>(r));
        mpz_class reduced = unit % modulus;
        if (reduced < 0) reduced += modulus;
        return PadicScalar::from_unit(ctx, reduced.get_ui(), v, r);
    });
}

json scalar_to_json(const PadicScalar& x) {
    if (x.is_exact_zero()) return {{"u", "0"}, {"v", nullptr}};
    if (x.is_zero_to_precision()) return {{"u", "0"}, {"v", x.absolute_precision()}, {"r", 0}};
    if (x.is_exact()) return {{"u", std::to_string(x.exact_unit())}, {"v", x.valuation()}};
    return {{"u", std::to_string(x.unit_residue())}, {"v", x.valuation()}, {"r", x.relative_precision()}};
}

IwasawaSeries series_from_json(const json& j) {
    return guarded([&] {
        if (!j.is_object()) bad("series must be an object");
        const PadicContext ctx(int_field(j, "p"), int_field(j, "N"));
        const int degree = int_field(j, "D");
        if (degree < 0) bad("\"D\" must be nonnegative");
        if (!j.contains("coeffs") || !j.at("coeffs").is_array()) bad("series needs a \"coeffs\" array");
        const json& list = j.at("coeffs");
        if (list.size() > static_cast<std::size_t>(degree) + 1) bad("more than D + 1 coefficients");
        std::vector<PadicScalar> coeffs(static_cast<std::size_t>(degree) + 1, PadicScalar::zero(ctx));
        bool all_exact = true;
        for (std::size_t i = 0; i < list.size(); ++i) {
            coeffs[i] = scalar_from_json(ctx, list[i]);
            all_exact = all_exact && coeffs[i].is_exact();
        }
        const bool exact = bool_field(j, "exact", all_exact);
        if (exact && !all_exact) bad("\"exact\" series need exact coefficients");
        return IwasawaSeries(ctx, degree, std::move(coeffs), exact);
    });
}

json series_to_json(const IwasawaSeries& g) {
    json coeffs = json::array();
    for (const auto& c : g.coefficients()) coeffs.push_back(scalar_to_json(c));
    return {{"p", g.context().p()},
            {"N", g.context().N()},
            {"D", g.degree()},
            {"exact", g.is_polynomial_exact()},
            {"coeffs", std::move(coeffs)}};
}

PlusMinusLData matrix_from_json(const json& j) {
    return guarded([&] {
        if (!j.is_object()) bad("matrix data must be an object");
        const int d = int_field(j, "d");
        if (d < 1) bad("\"d\" must be positive");
        if (!j.contains("entries") || !j.at("entries").is_array() || j.at("entries").size() != static_cast<std::size_t>(d)) {
            bad("\"entries\" must hold d rows");
        }
        if (!j.contains("tY")) bad("missing field \"tY\"");
        std::vector<std::vector<IwasawaSeries>> u;
        for (const json& row : j.at("entries")) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) bad("every row needs d entries");
            std::vector<IwasawaSeries> parsed;
            for (const json& entry : row) parsed.push_back(series_from_json(entry));
            u.push_back(std::move(parsed));
        }
        IwasawaSeries t_y = series_from_json(j.at("tY"));
        for (const auto& row : u) {
            for (const auto& g : row) {
                if (g.context() != t_y.context() || g.degree() != t_y.degree()) bad("all series must share p, N and D");
            }
        }
        return PlusMinusLData{std::move(u), std::move(t_y)};
    });
}

GrowthParams growth_params_from_json(const json& j) {
    return guarded([&] {
        if (!j.is_object()) bad("growth parameters must be an object");
        GrowthParams out;
        out.p = static_cast<int>(long_field(j, "p", out.p));
        out.d = static_cast<int>(long_field(j, "d", out.d));
        out.n_min = static_cast<int>(long_field(j, "n_min", out.n_min));
        out.n_max = static_cast<int>(long_field(j, "n_max", out.n_max));
        out.r_plus = long_field(j, "r_plus", 0);
        out.r_minus = long_field(j, "r_minus", 0);
        out.mu_plus = long_field(j, "mu_plus", 0);
        out.mu_minus = long_field(j, "mu_minus", 0);
        out.lambda_plus = long_field(j, "lambda_plus", 0);
        out.lambda_minus = long_field(j, "lambda_minus", 0);
        out.s = long_field(j, "s", 0);
        out.s0 = long_field(j, "s0", 0);
        if (!j.contains("variant") || !j.at("variant").is_string()) {
            bad("\"variant\" is required: \"as-stated\" or \"proof-derived\"");
        }
        out.variant = parse_increment_variant(j.at("variant").get<std::string>());
        if (j.contains("hypotheses")) {
            const json& h = j.at("hypotheses");
            if (!h.is_object()) bad("\"hypotheses\" must be an object");
            out.hypotheses.s = bool_field(h, "S", true);
            out.hypotheses.g = bool_field(h, "G", true);
            out.hypotheses.w = bool_field(h, "W", true);
            out.hypotheses.b = bool_field(h, "B", true);
        }
        try {
            out.validate();
        } catch (const Error& err) {
            bad(err.what());
        }
        return out;
    });
}

json growth_params_to_json(const GrowthParams& params) {
    return {{"p", params.p},
            {"d", params.d},
            {"n_min", params.n_min},
            {"n_max", params.n_max},
            {"r_plus", params.r_plus},
            {"r_minus", params.r_minus},
            {"mu_plus", params.mu_plus},
            {"mu_minus", params.mu_minus},
            {"lambda_plus", params.lambda_plus},
            {"lambda_minus", params.lambda_minus},
            {"s", params.s},
            {"s0", params.s0},
            {"variant", std::string(to_string(params.variant))},
            {"hypotheses",
             {{"S", params.hypotheses.s}, {"G", params.hypotheses.g}, {"W", params.hypotheses.w}, {"B", params.hypotheses.b}}}};
}

} // namespace ssiw
