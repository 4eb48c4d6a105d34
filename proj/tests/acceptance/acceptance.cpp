// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expected values come from oracles.hpp or from the construction of the input.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "oracles.hpp"
#include "ssiwasawa/cyclotomic.hpp"
#include "ssiwasawa/error.hpp"
#include "ssiwasawa/growth.hpp"
#include "ssiwasawa/honda.hpp"
#include "ssiwasawa/lubin_tate.hpp"
#include "ssiwasawa/modules.hpp"
#include "ssiwasawa/tower.hpp"

#ifndef SSIW_CLI_PATH
#error "SSIW_CLI_PATH must name the CLI executable"
#endif

using namespace ssiw;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

bool congruent_mod_p(const PadicScalar& value, const mpz_class& target) {
    return agreement(value, PadicScalar::from_mpz(value.context(), target)) >= 1;
}

mpz_class coefficient(const oracle::Poly& poly, int i) {
    return static_cast<std::size_t>(i) < poly.size() ? poly[static_cast<std::size_t>(i)] : mpz_class(0);
}

// ---------------------------------------------------------------------------

Outcome good_lift() {
    bool ok = true;
    for (int p : {3, 5, 7}) {
        const PadicContext ctx(p, 8);
        const oracle::Poly target = oracle::one_plus_x_pow_minus_one(static_cast<unsigned long>(p));
        for (std::int64_t pi : {static_cast<std::int64_t>(p), static_cast<std::int64_t>(p) * (1 + p)}) {
            const ZPoly f = good_frobenius_lift(ctx, pi).poly;
            const oracle::Poly diff = oracle::sub(f.coefficients(), target);
            for (const auto& c : diff) ok = ok && c % (p * p) == 0;
            ok = ok && f[p - 1] == p;
            if (pi == p) ok = ok && f.coefficients() == target;
        }
    }
    return {ok, "p in {3, 5, 7}, pi in {p, p(1+p)}"};
}

Outcome law_mod_p() {
    bool ok = true;
    std::ostringstream detail;
    const int degree = 20;
    for (int p : {3, 5}) {
        const PadicContext ctx(p, 6);
        for (std::int64_t pi : {static_cast<std::int64_t>(p), static_cast<std::int64_t>(p) * (1 + p)}) {
            const FrobeniusLift f = good_frobenius_lift(ctx, pi);
            const FormalGroupLaw law = lubin_tate_law(f, degree);
            int defect = -1;
            const auto note = [&](int t) { defect = defect < 0 ? t : std::min(defect, t); };
            for (int i = 0; i <= degree; ++i) {
                for (int j = 0; i + j <= degree; ++j) {
                    if (!congruent_mod_p(law.law.at(i, j), oracle::multiplicative_law(i, j))) note(i + j);
                }
            }
            for (int a = 1; a < p; ++a) {
                const IwasawaSeries mult = endomorphism_series(PadicScalar::from_int(ctx, a), f, degree);
                const oracle::Poly target = oracle::one_plus_x_pow_minus_one(static_cast<unsigned long>(a));
                for (int i = 0; i <= degree; ++i) {
                    if (!congruent_mod_p(mult[i], coefficient(target, i))) note(i);
                }
            }
            detail << " p=" << p << ",pi=" << pi << ":" << (defect < 0 ? "ok" : "differs at degree " + std::to_string(defect))
                   << ";";
            ok = ok && defect < 0;
        }
    }
    return {ok, "degree 20:" + detail.str()};
}

// det(a_j(i)) recomputed from the [i] coefficients with a plain Bareiss
// determinant mod p, next to the library's own determinant.
Outcome division_det() {
    bool ok = true;
    std::ostringstream detail;
    for (int p : {3, 5, 7}) {
        const PadicContext ctx(p, 8);
        const FrobeniusLift f = good_frobenius_lift(ctx, p);
        const PadicScalar det = division_matrix_det(f);
        std::vector<std::vector<mpz_class>> rows;
        for (int i = 1; i < p; ++i) {
            const IwasawaSeries mult = endomorphism_series(PadicScalar::from_int(ctx, i), f, p - 1);
            std::vector<mpz_class> row;
            for (int j = 1; j < p; ++j) row.push_back(mult[j].to_mpz());
            rows.push_back(std::move(row));
        }
        const mpz_class independent = oracle::bareiss(rows);
        const bool unit = det.is_nonzero() && det.valuation() == 0 && independent % p != 0;
        ok = ok && unit;
        detail << " p=" << p << (unit ? " unit" : " not a unit") << ";";
    }
    return {ok, detail.str()};
}

Outcome span() {
    const PadicContext ctx(3, 8);
    const FrobeniusLift f = good_frobenius_lift(ctx, 3);
    bool ok = true;
    std::ostringstream detail;
    for (int n = 1; n <= 2; ++n) {
        const SpanReport r = span_check_maximal_ideal(f, n, 3);
        // every b in 1..e must be attained
        bool all = static_cast<int>(r.attained.size()) == r.ramification;
        for (int b = 1; all && b <= r.ramification; ++b) all = r.attained[static_cast<std::size_t>(b - 1)] == b;
        ok = ok && r.passed && r.snf_full && all;
        detail << " n=" << n << " e=" << r.ramification << (r.passed && all ? " spans" : " short") << ";";
    }
    return {ok, detail.str()};
}

Outcome honda_law() {
    const PadicContext ctx(3, 8);
    const HondaGroup h = honda_logarithm(good_frobenius_lift(ctx, 3), 15);
    const int residual = agreement(compose(h.log, h.law), BivariateSeries::in_x(h.log) + BivariateSeries::in_y(h.log));
    const bool integral = h.law.valuation_lower_bound() >= 0;
    const bool ok = integral && residual >= 4 && h.precision >= 4;
    return {ok, "degree 15, law precision " + std::to_string(h.precision) + ", recomputed residual " +
                    std::to_string(residual) + (integral ? ", integral" : ", not integral")};
}

Outcome epsilon() {
    bool ok = true;
    std::ostringstream detail;
    for (int p : {3, 5}) {
        const PadicContext ctx(p, 8);
        const HondaGroup h = honda_logarithm(good_frobenius_lift(ctx, p), 15);
        const BasePoint eps = epsilon_point(h, 8);
        const PadicContext& w = h.log.context();
        const PadicScalar target = PadicScalar::from_rational(w, p, p + 1);
        const int residual = agreement(h.log.evaluate_polynomial(eps.value.in_context(w)), target);
        const bool good = eps.value.is_nonzero() && eps.value.valuation() == 1 && residual >= 4 && eps.residual >= 4;
        ok = ok && good;
        detail << " p=" << p << " v=" << (eps.value.is_nonzero() ? eps.value.valuation() : -1) << " residual " << residual << ";";
    }
    return {ok, detail.str()};
}

Outcome trace_relation_check() {
    const PadicContext ctx(3, 8);
    const HondaGroup h = honda_logarithm(good_frobenius_lift(ctx, 3), 15);
    const auto reports = trace_relations(h, E0Convention::Zero, 3);
    bool ok = true;
    std::ostringstream detail;
    for (const std::string& name : {"Tr^2_1(c_2) = -c_0", "Tr^3_2(c_3) = -c_1", "Tr^1_0(c_1) = u c_0", "Tr^2_1(d_2) = -d_0"}) {
        bool found = false;
        for (const auto& r : reports) {
            if (r.name != name) continue;
            found = true;
            ok = ok && r.passed && r.residual_digits >= 3;
            detail << " " << name << ": " << r.residual_digits << " digits" << (r.passed ? "" : " FAILED") << ";";
        }
        ok = ok && found;
    }
    return {ok, detail.str()};
}

Outcome module_oracle() {
    bool ok = true;
    std::ostringstream detail;
    for (int n = 2; n <= 4; ++n) {
        const ModuleStructure m = snf(model_E_Ln(3, n));
        const TraceMapReport t = trace_kernel_cokernel(3, n);
        const long xi_deg = static_cast<long>(oracle::xi(3, n).size()) - 1;
        const long q = oracle::q_display(3, n);
        ok = ok && static_cast<long>(m.rank) == oracle::ipow(3, n) && m.torsion.empty() && t.kernel_rank == xi_deg &&
             t.cokernel_free_rank == 0 && t.cokernel_p_rank == q;
        detail << " n=" << n << " rank " << m.rank << " kernel " << t.kernel_rank << " coker p-rank " << t.cokernel_p_rank
               << " q " << q << ";";
    }
    return {ok, detail.str()};
}

Outcome sha_sizes() {
    bool ok = true;
    std::ostringstream detail;
    for (int n = 1; n <= 4; ++n) {
        const long sum_q = oracle::q_sum_display(3, n);
        const long res = oracle::vp(oracle::resultant(oracle::omega_tilde(3, n, true), oracle::omega_tilde(3, n, false)), 3);
        ok = ok && res == sum_q;
        for (int d = 1; d <= 2; ++d) {
            const ShaSize s = sha_structure_size(3, n, d);
            ok = ok && s.by_snf == d * sum_q && s.by_resultant == d * sum_q && s.predicted == d * sum_q;
        }
        detail << " n=" << n << ":" << sum_q;
    }
    const bool anchor = sha_structure_size(3, 2, 1).by_snf == 2;
    ok = ok && anchor;
    return {ok, "ord_3 sum q_k" + detail.str() + (anchor ? ", anchor n=2 -> 2" : ", anchor broken")};
}

Outcome evaluation_law() {
    std::mt19937_64 rng(2026);
    const PadicContext ctx(3, 10);
    const auto draw = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    bool ok = true;
    int evaluations = 0;
    for (int sample = 0; sample < 50; ++sample) {
        const long mu = draw(0, 2);
        const long lambda = draw(0, 10);
        oracle::Poly c;
        for (long i = 0; i < lambda; ++i) c.emplace_back(3 * draw(-9, 9));
        c.emplace_back(draw(0, 1) ? 1 : -2);
        for (long i = draw(0, 3); i > 0; --i) c.emplace_back(draw(-9, 9));
        c = oracle::scale(c, oracle::ipow(3, static_cast<int>(mu)));
        const ZPoly poly(c);
        const IwasawaSeries g = IwasawaSeries::from_zpoly(ctx, poly.degree(), poly);
        for (int n = 1; n <= 4; ++n) {
            const long e = static_cast<long>(oracle::xi(3, n).size()) - 1;
            if (e <= lambda) continue;
            ok = ok && ordp_fractional(eval_at_zeta(g, n)) == Rational(mu * e + lambda, e);
            ++evaluations;
        }
    }
    // d = 2 matrices: quotient size against mu/lambda of the determinant read
    // off the integer coefficients, and against ord_p Res(xi_n, det)
    int matrices = 0;
    int quotients = 0;
    while (matrices < 10) {
        std::array<oracle::Poly, 4> entry;
        for (auto& e : entry) {
            for (int i = 0; i <= 2; ++i) e.emplace_back(draw(-4, 4));
            oracle::trim(e);
        }
        const oracle::Poly det = oracle::sub(oracle::mul(entry[0], entry[3]), oracle::mul(entry[1], entry[2]));
        if (det.empty()) continue;
        int mu = 64;
        for (const auto& coeff : det) {
            if (coeff != 0) mu = std::min(mu, oracle::vp(coeff, 3));
        }
        int lambda = 0;
        while (det[static_cast<std::size_t>(lambda)] == 0 || oracle::vp(det[static_cast<std::size_t>(lambda)], 3) != mu) ++lambda;
        ++matrices;
        std::vector<std::vector<IwasawaSeries>> u(2);
        for (int k = 0; k < 4; ++k) u[static_cast<std::size_t>(k / 2)].push_back(IwasawaSeries::from_zpoly(ctx, 8, ZPoly(entry[static_cast<std::size_t>(k)])));
        for (int n = 1; n <= 4; ++n) {
            const long e = static_cast<long>(oracle::xi(3, n).size()) - 1;
            if (e <= lambda) continue;
            const ZetaQuotient z = quotient_finiteness_at_zeta(u, n);
            const long want = mu * e + lambda;
            ok = ok && z.finite && z.size == want && want == oracle::vp(oracle::resultant(oracle::xi(3, n), det), 3);
            ++quotients;
        }
    }
    return {ok, "50 seeded polynomials, " + std::to_string(evaluations) + " evaluations; 10 seeded 2x2 matrices, " +
                    std::to_string(quotients) + " quotients"};
}

Outcome stable_quotients() {
    const PadicContext ctx(3, 10);
    struct Case {
        std::string label;
        oracle::Poly f;
        unsigned e;
        bool cyclotomic;
    };
    const std::vector<Case> cases{{"Lambda/p", {3}, 1, false},
                                  {"Lambda/(p+X)", {3, 1}, 1, false},
                                  {"Lambda/xi_1", {3, 3, 1}, 1, true},
                                  {"Lambda/(p+X)^2", {3, 1}, 2, false}};
    bool ok = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        const ZPoly f(c.f);
        const IwasawaSeries series = IwasawaSeries::from_zpoly(ctx, f.degree(), f);
        detail << " " << c.label << ":";
        for (int n = 2; n <= 4; ++n) {
            const long size = stable_quotient_size(series, static_cast<int>(c.e), n).size;
            const oracle::Poly g = oracle::power(c.f, c.cyclotomic ? c.e - 1 : c.e);
            const mpz_class res = oracle::resultant(oracle::xi(3, n), g);
            const long want = oracle::vp(res, 3);
            const QuotientOracle lib = stable_quotient_oracle(series, static_cast<int>(c.e), n);
            ok = ok && size == want && lib.by_snf == want;
            detail << " " << size;
        }
    }
    return {ok, detail.str()};
}

struct Captured {
    int status = -1;
    std::string out;
};

Captured capture(const std::string& args) {
    const std::string command = std::string("\"") + SSIW_CLI_PATH + "\" " + args + " 2>/dev/null";
    Captured c;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return c;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) c.out.append(buffer.data(), got);
    const int raw = pclose(pipe);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

std::vector<std::string> csv_column(const std::string& csv, int index) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream cells(line);
        std::string cell;
        std::vector<std::string> all;
        while (std::getline(cells, cell, ',')) all.push_back(cell);
        out.push_back(index < 0 ? all.back() : all.at(static_cast<std::size_t>(index)));
    }
    return out;
}

Outcome end_to_end() {
    const Captured verify = capture("--p 3 --precision 6 --degree 24 verify");
    const std::string growth_args = "growth '{\"variant\":\"proof-derived\",\"n_min\":1,\"n_max\":4}'";
    const std::string sha_args = "--p 3 tables sha --n 4 --d 1";
    const Captured growth = capture(growth_args);
    const Captured sha = capture(sha_args);
    std::vector<std::string> sha_col = growth.status == 0 && sha.status == 0 ? csv_column(sha.out, 3) : std::vector<std::string>{};
    if (!sha_col.empty()) sha_col.erase(sha_col.begin());
    const std::vector<std::string> cumulative = growth.status == 0 ? csv_column(growth.out, -1) : std::vector<std::string>{};
    const bool tables_agree = !cumulative.empty() && cumulative == sha_col;
    const Captured verify_again = capture("--p 3 --precision 6 --degree 24 verify");
    const bool deterministic = verify_again.out == verify.out && capture(growth_args).out == growth.out &&
                               capture(sha_args).out == sha.out;
    std::string joined;
    for (const auto& v : cumulative) joined += (joined.empty() ? "" : " ") + v;
    const bool ok = verify.status == 0 && tables_agree && deterministic;
    return {ok, "verify exit " + std::to_string(verify.status) + ", cumulative [" + joined + "]" +
                    (tables_agree ? " = sha table" : " != sha table") + (deterministic ? ", deterministic" : ", output changed")};
}

} // namespace

int main() {
    struct Criterion {
        int number;
        std::string title;
        std::function<Outcome()> body;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "good-lift identities", good_lift, 1.0},
        {2, "Lubin-Tate law = X+Y+XY and [a] = (1+X)^a-1 mod p", law_mod_p, 10.0},
        {3, "division matrix determinant is a unit", division_det, 0.0},
        {4, "division points span the maximal ideal (p=3, n=1,2)", span, 30.0},
        {5, "Honda law integral, l a homomorphism (p=3, degree 15)", honda_law, 0.0},
        {6, "epsilon: l(epsilon) = p/(p+1), v(epsilon) = 1 (p=3,5)", epsilon, 0.0},
        {7, "trace relations in l-coordinates (p=3)", trace_relation_check, 120.0},
        {8, "point group model, trace kernel and cokernel (p=3, n=2..4)", module_oracle, 0.0},
        {9, "ord_3 of Lambda/(omega_tilde+, omega_tilde-) and Sha sizes", sha_sizes, 30.0},
        {10, "evaluation law and quotient sizes at zeta_n - 1", evaluation_law, 60.0},
        {11, "stable quotient sizes against Lambda/(g, xi_n)", stable_quotients, 0.0},
        {12, "CLI end to end", end_to_end, 0.0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = {false, std::string("threw: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = c.limit_seconds <= 0.0 || seconds < c.limit_seconds;
        const bool passed = outcome.passed && in_time;
        failures += passed ? 0 : 1;
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << seconds << " s";
        if (!in_time) time << " (limit " << c.limit_seconds << " s)";
        std::cout << (passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " -- " << outcome.detail
                  << " [" << time.str() << "]" << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " of " + std::to_string(criteria.size()) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
