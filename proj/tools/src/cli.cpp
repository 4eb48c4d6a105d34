#include "ssiwasawa_cli/cli.hpp"

#include <fstream>
#include <iterator>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ssiwasawa/cyclotomic.hpp"
#include "ssiwasawa/error.hpp"
#include "ssiwasawa/growth.hpp"
#include "ssiwasawa/json_io.hpp"
#include "ssiwasawa/modules.hpp"
#include "ssiwasawa/verify.hpp"

namespace ssiw::cli {

namespace {

using ordered = nlohmann::ordered_json;

struct Globals {
    int p = 3;
    int precision = 8;
    int degree = 32;
    std::uint64_t seed = 1;
};

/// Inline JSON (starts with '{'), "-" for stdin, otherwise a file path.
nlohmann::json read_input(const std::string& source, std::istream& in) {
    std::string text;
    if (!source.empty() && source.front() == '{') {
        text = source;
    } else if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(source);
        if (!file) throw Error(ErrorKind::ParseError, "cannot open " + source);
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

int run_verify(const Globals& g, std::ostream& out) {
    VerifyOptions options;
    options.p = g.p;
    options.precision = g.precision;
    options.degree = g.degree;
    options.seed = g.seed;
    const auto items = run_verification(options);
    out << "# verify p=" << g.p << " precision=" << g.precision << " degree=" << g.degree << " seed=" << g.seed << "\n";
    out << format_report(items);
    const bool ok = all_passed(items);
    out << (ok ? "ALL PASS" : "SOME CHECKS FAILED") << "\n";
    return ok ? kOk : kFailed;
}

int run_tables(const Globals& g, const std::string& kind, int n_max, int d, std::ostream& out) {
    if (kind == "q") {
        out << q_table_csv(g.p, n_max);
    } else if (kind == "degrees") {
        out << degree_table_csv(g.p, n_max);
    } else {
        out << sha_table_csv(g.p, n_max, d, Hypotheses{});
    }
    return kOk;
}

int run_invariants(const nlohmann::json& input, std::ostream& out, std::ostream& err) {
    ordered result;
    if (input.is_object() && input.contains("d")) {
        const PlusMinusL l = plus_minus_L(matrix_from_json(input));
        result["mu"] = l.invariants.mu;
        result["lambda"] = l.invariants.lambda;
        result["unit_at_zero"] = l.unit_at_zero;
        if (!l.unit_at_zero) err << "warning: det u(0) is not a unit; the generators may not be normalized\n";
    } else {
        const MuLambda ml = mu_lambda(series_from_json(input));
        result["mu"] = ml.mu;
        result["lambda"] = ml.lambda;
    }
    out << result.dump() << "\n";
    return kOk;
}

int run_eval_zeta(const nlohmann::json& input, int n, std::ostream& out) {
    const IwasawaSeries g = series_from_json(input);
    const RingElement value = eval_at_zeta(g, n);
    ordered result;
    result["n"] = n;
    ordered coords = ordered::array();
    for (const auto& c : value.coords()) coords.push_back(ordered::parse(scalar_to_json(c).dump()));
    result["coords"] = std::move(coords);
    try {
        result["ordp"] = ordp_fractional(value).str();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ZeroToPrecision && e.kind() != ErrorKind::PrecisionExhausted) throw;
        result["ordp"] = nullptr;
    }
    out << result.dump() << "\n";
    return kOk;
}

int run_growth(const nlohmann::json& input, std::ostream& out) {
    out << growth_table_csv(growth_params_from_json(input));
    return kOk;
}

bool is_input_error(ErrorKind kind) { return kind == ErrorKind::ParseError || kind == ErrorKind::InvalidArgument; }

} // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Supersingular Iwasawa toolkit: verification suite, tables and growth calculators", "ssiwasawa"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    app.add_option("--p", g.p, "odd prime")->check(CLI::Range(3, 251));
    app.add_option("--precision", g.precision, "relative p-adic precision N")->check(CLI::Range(1, 64));
    app.add_option("--degree", g.degree, "truncation degree of formal group laws")->check(CLI::Range(2, 200));
    app.add_option("--seed", g.seed, "seed of the randomized checks");

    auto* verify = app.add_subcommand("verify", "run the verification suite; exit 1 on any FAIL");

    std::string table_kind;
    int n_max = 5;
    int d = 1;
    auto* tables = app.add_subcommand("tables", "CSV tables: q, degrees or sha");
    tables->add_option("kind", table_kind, "q | degrees | sha")->required()->check(CLI::IsMember({"q", "degrees", "sha"}));
    tables->add_option("--n", n_max, "largest n")->check(CLI::Range(0, 12));
    tables->add_option("--d", d, "number of copies (sha table)")->check(CLI::Range(0, 64));

    std::string source;
    auto* invariants = app.add_subcommand("invariants", "mu and lambda of a JSON series or matrix data");
    invariants->add_option("input", source, "inline JSON, a file, or - for stdin")->required();

    int zeta_n = 1;
    auto* eval_zeta = app.add_subcommand("eval-zeta", "evaluate a JSON series at zeta_n - 1");
    eval_zeta->add_option("input", source, "inline JSON, a file, or - for stdin")->required();
    eval_zeta->add_option("--n", zeta_n, "level n >= 1")->check(CLI::Range(1, 8));

    auto* growth = app.add_subcommand("growth", "corank and Sha-increment table for growth parameters JSON");
    growth->add_option("input", source, "inline JSON, a file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        (void)PadicContext(g.p, 1);
        if (verify->parsed()) return run_verify(g, out);
        if (tables->parsed()) return run_tables(g, table_kind, n_max, d, out);
        if (invariants->parsed()) return run_invariants(read_input(source, in), out, err);
        if (eval_zeta->parsed()) return run_eval_zeta(read_input(source, in), zeta_n, out);
        if (growth->parsed()) return run_growth(read_input(source, in), out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? kBadInput : kFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kBadInput;
}

} // namespace ssiw::cli
