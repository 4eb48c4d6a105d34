#include "ssiwasawa/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "ssiwasawa/cyclotomic.hpp"
#include "ssiwasawa/error.hpp"
#include "ssiwasawa/growth.hpp"
#include "ssiwasawa/honda.hpp"
#include "ssiwasawa/lubin_tate.hpp"
#include "ssiwasawa/modules.hpp"
#include "ssiwasawa/tower.hpp"

namespace ssiw {

namespace {

VerifyItem make(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail), false, false};
}

/// Largest n <= 4 whose models stay small (p^n <= 243).
int module_levels(int p) {
    int n = 1;
    while (n < 4 && cyclo_degree(p, n + 1, CycloKind::Omega) <= 243) ++n;
    return n;
}

/// Largest n whose cyclotomic ring has degree <= 100.
int zeta_levels(int p) {
    int n = 1;
    while (xi_degree(p, n + 1) <= 100) ++n;
    return n;
}

long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Nonzero residue mod p, lifted to a small integer.
long draw_unit(std::mt19937_64& rng, int p) {
    const long r = draw(rng, 1, p - 1);
    return r + p * draw(rng, -2, 2);
}

bool congruent_mod_p(const PadicScalar& value, long target) {
    return agreement(value, PadicScalar::from_int(value.context(), target)) >= 1;
}

VerifyItem check_good_lift(const VerifyOptions& o) {
    const PadicContext ctx(o.p, o.precision);
    const FrobeniusLift f = good_frobenius_lift(ctx, o.p);
    const ZPoly target = ZPoly{1, 1}.pow(static_cast<unsigned>(o.p)) - ZPoly{1};
    bool ok = f.poly == target && f.poly[o.p - 1] == o.p;
    const FrobeniusLift g = good_frobenius_lift(ctx, static_cast<std::int64_t>(o.p) * (1 + o.p));
    const ZPoly diff = g.poly - target;
    for (const auto& c : diff.coefficients()) ok = ok && c % (o.p * o.p) == 0;
    ok = ok && g.poly[o.p - 1] == o.p;
    return make("good Frobenius lift", ok, "exact, pi in {p, p(1+p)}");
}

/// Smallest total degree where the law or some [a] differs from the
/// multiplicative group mod p; -1 when they agree up to `degree`.
int first_mod_p_defect(const FrobeniusLift& f, int degree, int& precision) {
    const FormalGroupLaw law = lubin_tate_law(f, degree);
    precision = law.precision;
    int defect = -1;
    const auto note = [&](int t) { defect = defect < 0 ? t : std::min(defect, t); };
    for (int i = 0; i <= degree; ++i) {
        for (int j = 0; i + j <= degree; ++j) {
            const long target = (i == 1 && j == 0) || (i == 0 && j == 1) || (i == 1 && j == 1) ? 1 : 0;
            if (!congruent_mod_p(law.law.at(i, j), target)) note(i + j);
        }
    }
    for (int a = 1; a < f.p(); ++a) {
        const IwasawaSeries mult = endomorphism_series(PadicScalar::from_int(f.ctx, a), f, degree);
        const ZPoly target = ZPoly{1, 1}.pow(static_cast<unsigned>(a)) - ZPoly{1};
        for (int i = 0; i <= degree; ++i) {
            if (!congruent_mod_p(mult[i], i <= target.degree() ? target[i].get_si() : 0)) note(i);
        }
    }
    return defect;
}

std::vector<VerifyItem> check_law_mod_p(const VerifyOptions& o) {
    const PadicContext ctx(o.p, o.precision);
    std::vector<VerifyItem> out;
    int precision = 0;
    const int defect = first_mod_p_defect(good_frobenius_lift(ctx, o.p), o.degree, precision);
    out.push_back(make("Lubin-Tate law = X+Y+XY and [a] = (1+X)^a-1 mod p, pi = p", defect < 0,
                       "degree " + std::to_string(o.degree) + ", law precision " + std::to_string(precision)));
    // With pi = p u, u != 1, the reduction of [pi] = f is X^p while (1+X)^pi - 1
    // is not, so the congruence must break; report where.
    const std::int64_t twisted = static_cast<std::int64_t>(o.p) * (1 + o.p);
    const int broken = first_mod_p_defect(good_frobenius_lift(ctx, twisted), o.degree, precision);
    VerifyItem item = make("Lubin-Tate law mod p, pi = p(1+p)", broken < 0,
                           broken < 0 ? "agrees to degree " + std::to_string(o.degree)
                                      : "differs from X+Y+XY first in total degree " + std::to_string(broken));
    item.informational = true;
    out.push_back(std::move(item));
    return out;
}

VerifyItem check_division_det(const VerifyOptions& o) {
    const PadicContext ctx(o.p, o.precision);
    const PadicScalar det = division_matrix_det(good_frobenius_lift(ctx, o.p));
    return make("division matrix determinant is a unit", det.is_nonzero() && det.valuation() == 0, "det = " + det.str());
}

VerifyItem check_span(const VerifyOptions& o, int level) {
    const PadicContext ctx(o.p, o.precision);
    const SpanReport r = span_check_maximal_ideal(good_frobenius_lift(ctx, o.p), level, 3);
    std::ostringstream detail;
    detail << "e = " << r.ramification << ", valuations attained " << r.attained.size() << ", SNF "
           << (r.snf_full ? "full" : "short");
    return make("division points span the maximal ideal, n = " + std::to_string(level), r.passed, detail.str());
}

struct HondaSetup {
    HondaGroup group;
    BasePoint eps;
};

HondaSetup honda_setup(const VerifyOptions& o) {
    const PadicContext ctx(o.p, o.precision);
    HondaGroup h = honda_logarithm(good_frobenius_lift(ctx, o.p), 15);
    BasePoint eps = epsilon_point(h, o.precision + 2);
    return {std::move(h), std::move(eps)};
}

std::vector<VerifyItem> honda_checks(const HondaSetup& s, const VerifyOptions& o) {
    std::vector<VerifyItem> out;
    const int need = std::min(o.precision, 4);
    out.push_back(make("Honda law integral and a homomorphism of l",
                       s.group.precision >= need && s.group.homomorphism_residual >= need,
                       "degree 15, law precision " + std::to_string(s.group.precision) + ", residual " +
                           std::to_string(s.group.homomorphism_residual)));
    const bool eps_ok = s.eps.residual >= need && s.eps.value.is_nonzero() && s.eps.value.valuation() == 1;
    out.push_back(make("epsilon: l(epsilon) = p/(p+1), v(epsilon) = 1", eps_ok, "residual " + std::to_string(s.eps.residual)));
    return out;
}

std::vector<VerifyItem> relation_checks(const HondaSetup& s, const VerifyOptions& o, E0Convention convention) {
    std::vector<VerifyItem> out;
    const bool primitive = convention == E0Convention::Primitive;
    for (const auto& r : trace_relations(s.group, convention, o.relation_digits)) {
        std::string detail = "residual " + std::to_string(r.residual_digits) + " digits (need " +
                             std::to_string(r.required_digits) + ")";
        if (r.unit) detail += ", u = " + r.unit->str();
        if (!r.note.empty()) detail += ", " + r.note;
        VerifyItem item = make((primitive ? "[e_0 primitive] " : "") + r.name, r.passed, detail);
        item.informational = primitive;
        out.push_back(std::move(item));
    }
    return out;
}

std::vector<VerifyItem> module_checks(const VerifyOptions& o) {
    std::vector<VerifyItem> out;
    const int top = module_levels(o.p);
    for (int n = 1; n <= top; ++n) {
        const ModuleStructure m = snf(model_E_Ln(o.p, n));
        const long pn = static_cast<long>(cyclo_degree(o.p, n, CycloKind::Omega));
        out.push_back(make("point group model over L_" + std::to_string(n) + " is free of rank p^n",
                           m.torsion.empty() && static_cast<long>(m.rank) == pn,
                           "rank " + std::to_string(m.rank) + ", torsion factors " + std::to_string(m.torsion.size())));
    }
    for (int n = 2; n <= top; ++n) {
        const TraceMapReport t = trace_kernel_cokernel(o.p, n);
        const bool ok = t.kernel_rank == xi_degree(o.p, n) && t.cokernel_free_rank == 0 && t.cokernel_p_rank == t.q;
        std::ostringstream detail;
        detail << "kernel rank " << t.kernel_rank << ", cokernel p-rank " << t.cokernel_p_rank << " vs q_n " << t.q;
        out.push_back(make("trace L_" + std::to_string(n) + " -> L_" + std::to_string(n - 1) + ": kernel and cokernel",
                           ok, detail.str()));
    }
    for (int d = 1; d <= 2; ++d) {
        bool ok = true;
        std::ostringstream detail;
        for (int n = 0; n <= top; ++n) {
            const ShaSize s = sha_structure_size(o.p, n, d);
            ok = ok && s.consistent();
            detail << (n ? " " : "") << s.predicted;
        }
        out.push_back(make("Sha sizes d * sum q_k, d = " + std::to_string(d) + " (SNF and resultant)", ok,
                           "ord_p for n = 0.." + std::to_string(top) + ":" + detail.str()));
    }
    return out;
}

VerifyItem check_evaluation_law(const VerifyOptions& o) {
    std::mt19937_64 rng(o.seed);
    const PadicContext ctx(o.p, o.precision);
    const int top = zeta_levels(o.p);
    int evaluations = 0;
    bool ok = true;
    for (int sample = 0; sample < o.samples; ++sample) {
        const long mu = draw(rng, 0, 2);
        const long lambda = draw(rng, 0, 10);
        const int extra = static_cast<int>(draw(rng, 0, 3));
        std::vector<mpz_class> coeffs;
        for (long i = 0; i < lambda; ++i) coeffs.emplace_back(o.p * draw(rng, -9, 9));
        coeffs.emplace_back(draw_unit(rng, o.p));
        for (int i = 0; i < extra; ++i) coeffs.emplace_back(draw(rng, -9, 9));
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(o.p), static_cast<unsigned long>(mu));
        const ZPoly poly = scale * ZPoly(std::move(coeffs));
        const IwasawaSeries g = IwasawaSeries::from_zpoly(ctx, poly.degree(), poly);
        for (int n = stabilization_threshold(o.p, lambda); n <= top; ++n) {
            const std::int64_t e = xi_degree(o.p, n);
            ok = ok && ordp_fractional(eval_at_zeta(g, n)) == Rational(mu * e + lambda, e);
            ++evaluations;
        }
    }
    return make("ord_p g(zeta_n - 1) = mu + lambda/(p^n - p^(n-1)) past the threshold", ok,
                std::to_string(o.samples) + " seeded polynomials, " + std::to_string(evaluations) + " evaluations");
}

VerifyItem check_zeta_finiteness(const VerifyOptions& o) {
    std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
    const PadicContext ctx(o.p, o.precision);
    const int top = zeta_levels(o.p);
    const int degree = 8;
    int matrices = 0;
    int evaluations = 0;
    bool ok = true;
    while (matrices < 10) {
        std::vector<std::vector<IwasawaSeries>> u(2);
        for (auto& row : u) {
            for (int c = 0; c < 2; ++c) {
                std::vector<long> coeffs;
                for (int i = 0; i <= 2; ++i) coeffs.push_back(draw(rng, -4, 4));
                row.push_back(IwasawaSeries::from_integers(ctx, degree, coeffs));
            }
        }
        const IwasawaSeries det = series_determinant(u);
        MuLambda ml{};
        try {
            ml = mu_lambda(det);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::ZeroToPrecision) continue;  // singular draw
            throw;
        }
        ++matrices;
        for (int n = stabilization_threshold(o.p, ml.lambda); n <= top; ++n) {
            const ZetaQuotient z = quotient_finiteness_at_zeta(u, n);
            ok = ok && z.finite && z.predicted && z.agrees();
            ++evaluations;
        }
    }
    return make("quotient by u(zeta_n - 1) has ord_p mu(det)(p^n - p^(n-1)) + lambda(det)", ok,
                "10 seeded 2x2 matrices, " + std::to_string(evaluations) + " evaluations");
}

VerifyItem check_stable_quotients(const VerifyOptions& o) {
    const PadicContext ctx(o.p, o.precision);
    struct Case {
        std::string label;
        ZPoly f;
        int e;
    };
    const std::vector<Case> cases{{"Lambda/p", ZPoly{o.p}, 1},
                                  {"Lambda/(p+X)", ZPoly{o.p, 1}, 1},
                                  {"Lambda/xi_1", cyclo_polynomial(o.p, 1, CycloKind::Xi), 1},
                                  {"Lambda/(p+X)^2", ZPoly{o.p, 1}, 2}};
    const int top = std::min(4, zeta_levels(o.p));
    bool ok = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        const IwasawaSeries f = IwasawaSeries::from_zpoly(ctx, c.f.degree(), c.f);
        detail << (c.label == cases.front().label ? "" : "; ") << c.label << ':';
        for (int n = 2; n <= top; ++n) {
            const long size = stable_quotient_size(f, c.e, n).size;
            const QuotientOracle oracle = stable_quotient_oracle(f, c.e, n);
            ok = ok && size == oracle.by_resultant && size == oracle.by_snf;
            detail << ' ' << size;
        }
    }
    return make("omega_(n-1)Y/omega_nY sizes match Lambda/(f^e, xi_n), n = 2.." + std::to_string(top), ok,
                detail.str());
}

/// Appends the items of `body`. A computation past the ring-degree cap is a
/// SKIP (informational items stay INFO); any other exception is a FAIL.
void run(std::vector<VerifyItem>& out, const std::string& name, const std::function<std::vector<VerifyItem>()>& body,
         bool informational = false) {
    try {
        for (auto& item : body()) out.push_back(std::move(item));
    } catch (const Error& err) {
        VerifyItem item = make(name, false, std::string(err.kind() == ErrorKind::CapExceeded ? "not run: " : "threw: ") + err.what());
        item.skipped = err.kind() == ErrorKind::CapExceeded;
        item.informational = informational;
        out.push_back(std::move(item));
    } catch (const std::exception& err) {
        VerifyItem item = make(name, false, std::string("threw: ") + err.what());
        item.informational = informational;
        out.push_back(std::move(item));
    }
}

} // namespace

std::vector<VerifyItem> run_verification(const VerifyOptions& o) {
    std::vector<VerifyItem> out;
    const auto one = [](VerifyItem item) { return std::vector<VerifyItem>{std::move(item)}; };
    run(out, "good Frobenius lift", [&] { return one(check_good_lift(o)); });
    run(out, "Lubin-Tate law mod p", [&] { return check_law_mod_p(o); });
    run(out, "division matrix determinant", [&] { return one(check_division_det(o)); });
    run(out, "span check n = 1", [&] { return one(check_span(o, 1)); });
    run(out, "span check n = 2", [&] { return one(check_span(o, 2)); });
    std::optional<HondaSetup> honda;
    run(out, "Honda group", [&] {
        honda = honda_setup(o);
        return honda_checks(*honda, o);
    });
    if (honda) {
        run(out, "trace relations", [&] { return relation_checks(*honda, o, E0Convention::Zero); });
        run(out, "[e_0 primitive] trace relations", [&] { return relation_checks(*honda, o, E0Convention::Primitive); }, true);
    }
    run(out, "module models", [&] { return module_checks(o); });
    run(out, "evaluation law", [&] { return one(check_evaluation_law(o)); });
    run(out, "finiteness at zeta_n - 1", [&] { return one(check_zeta_finiteness(o)); });
    run(out, "stable quotients", [&] { return one(check_stable_quotients(o)); });
    return out;
}

std::string format_report(const std::vector<VerifyItem>& items) {
    std::ostringstream os;
    for (const auto& item : items) {
        os << (item.skipped ? "SKIP" : item.informational ? "INFO" : item.passed ? "PASS" : "FAIL") << "  " << item.name << "  (" << item.detail
           << ")\n";
    }
    return os.str();
}

bool all_passed(const std::vector<VerifyItem>& items) {
    return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.informational || i.skipped || i.passed; });
}

} // namespace ssiw
