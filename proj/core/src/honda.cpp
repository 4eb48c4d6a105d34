#include "ssiwasawa/honda.hpp"

#include <algorithm>

#include "int_series.hpp"

namespace ssiw {

namespace {

mpz_class p_power(int p, int k) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return out;
}

long ipow(int p, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

ZPoly derivative(const ZPoly& f) {
    std::vector<mpz_class> c;
    for (int i = 1; i <= f.degree(); ++i) c.push_back(f[i] * i);
    return ZPoly(std::move(c));
}

int lower_bound(const PadicScalar& x) { return x.valuation_lower_bound(); }
int lower_bound(const TowerElement& x) { return x.pi_valuation_lower_bound(); }

PadicScalar certified(const PadicScalar& x, int t) { return x.reduced_to(t); }
TowerElement certified(const TowerElement& x, int t) { return x.with_pi_error(t); }

/// Polynomial evaluation with an exact integer polynomial; `embed` maps an
/// integer into the element type.
template <class T, class Embed>
T apply_zpoly(const ZPoly& f, const T& y, const Embed& embed) {
    T acc = embed(f.leading());
    for (int i = f.degree() - 1; i >= 0; --i) acc = acc * y + embed(f[i]);
    return acc;
}

// Valuations are in units where p has valuation e.
//
// l(x) = sum_k (-1)^k f^(2k)(x) / p^k. Once v(y) >= e/(p-1) every term of
// f(y) has valuation at least v(y) + e, so each later summand is at least
// e above the previous one and the tail is bounded by the next summand.
template <class T, class Embed>
T log_sum(const FrobeniusLift& f, const T& x, int target, int e, const Embed& embed) {
    const int p = f.p();
    const PadicContext work = f.ctx.working();
    T acc = x;
    T y = x;
    const int guard = target / e + 64;
    for (int k = 1;; ++k) {
        if (y.is_exact_zero()) break;
        const int before = lower_bound(y);
        if (static_cast<long>(p - 1) * before >= e && static_cast<long>(before) + static_cast<long>(2 - k) * e >= target) {
            break;
        }
        if (k > guard) throw Error(ErrorKind::ConvergenceGuard, "Honda logarithm did not converge");
        y = apply_zpoly(f.poly, apply_zpoly(f.poly, y, embed), embed);
        const PadicScalar scale = (k % 2 == 0 ? PadicScalar::one(work) : -PadicScalar::one(work)).shifted(-k);
        acc = acc + scale * y;
    }
    return certified(acc, target);
}

/// l'(x) = sum_k (-1)^k prod_{i<2k} f'(f^(i)(x)) / p^k. Every factor f'(y)
/// is divisible by p, so the k-th summand has valuation at least k e.
template <class T, class Embed>
T log_derivative(const FrobeniusLift& f, const T& x, int target, int e, const Embed& embed) {
    const PadicContext work = f.ctx.working();
    const ZPoly df = derivative(f.poly);
    T acc = embed(mpz_class(1));
    T product = acc;
    T y = x;
    for (int k = 1; static_cast<long>(k) * e < target; ++k) {
        for (int half = 0; half < 2; ++half) {
            product = product * apply_zpoly(df, y, embed);
            y = apply_zpoly(f.poly, y, embed);
        }
        const PadicScalar scale = (k % 2 == 0 ? PadicScalar::one(work) : -PadicScalar::one(work)).shifted(-k);
        acc = acc + scale * product;
    }
    return acc;
}

std::vector<TowerElement> conjugate_list(const TowerRing& tower, const TowerElement& x, int from, int to,
                                         TraceField field) {
    const int p = tower.lift().p();
    std::vector<TowerElement> out;
    auto orbit = [&](const TowerElement& seed, int a, long count) {
        TowerElement y = seed;
        for (long j = 0; j < count; ++j) {
            out.push_back(y);
            if (j + 1 < count) y = tower.gamma(a, y);
        }
    };
    if (from == to) return {x};
    if (field == TraceField::L) {
        orbit(x, to + 1, ipow(p, from - to));
        return out;
    }
    if (to >= 1) {
        orbit(x, to, ipow(p, from - to));
        return out;
    }
    TowerElement seed = x;
    for (int a = 0; a < p - 1; ++a) {
        orbit(seed, 1, ipow(p, from - 1));
        seed = tower.delta(seed);
    }
    return out;
}

int digits_of(int pi_valuation, int e) {
    if (pi_valuation >= kInfiniteValuation) return kInfiniteValuation;
    return pi_valuation >= 0 ? pi_valuation / e : -((-pi_valuation + e - 1) / e);
}

} // namespace

PadicScalar honda_linear_coefficient(const FrobeniusLift& f) {
    const PadicContext work = f.ctx.working();
    const mpz_class pi = f.pi.to_mpz();
    const mpz_class p = f.p();
    return PadicScalar::from_mpz(work, p) / PadicScalar::from_mpz(work, p + pi * pi);
}

HondaGroup honda_logarithm(const FrobeniusLift& f, int degree) {
    if (degree < 1) throw Error(ErrorKind::InvalidArgument, "Honda degree must be positive");
    const PadicContext work = f.ctx.working();
    const int p = f.p();
    // v([X^m] f^(j)) >= j - floor(log_p m), so stopping after K terms leaves
    // a tail of valuation at least K + 1 - floor(log_p m).
    const int target = work.N();
    const int spread = detail::floor_log(p, degree);
    const int terms = target + spread;
    const int modulus_digits = terms + target + 1;
    const mpz_class modulus = p_power(p, modulus_digits);

    std::vector<mpz_class> sum(static_cast<std::size_t>(degree) + 1);
    detail::ModSeries y = detail::ModSeries::from_zpoly(ZPoly::x(), degree, modulus);
    for (int k = 0; k <= terms; ++k) {
        if (k > 0) y = y.composed_into(f.poly).composed_into(f.poly);
        const mpz_class weight = (k % 2 == 0 ? 1 : -1) * p_power(p, terms - k);
        for (int m = 1; m <= degree; ++m) sum[static_cast<std::size_t>(m)] += weight * y[m];
    }
    std::vector<PadicScalar> coeffs;
    coeffs.push_back(PadicScalar::zero(work));
    for (int m = 1; m <= degree; ++m) {
        mpz_class s = sum[static_cast<std::size_t>(m)];
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
        const int tail = terms + 1 - detail::floor_log(p, m);
        const PadicScalar c = detail::scalar_from_residue(work, s, modulus_digits).shifted(-terms);
        coeffs.push_back(c.reduced_to(std::min(modulus_digits - terms, tail)));
    }
    IwasawaSeries log(work, degree, std::move(coeffs));
    IwasawaSeries exp = reversion(log);
    BivariateSeries law = compose(exp, BivariateSeries::in_x(log) + BivariateSeries::in_y(log));
    if (law.valuation_lower_bound() < 0) {
        throw Error(ErrorKind::PrecisionExhausted, "Honda law could not be certified integral");
    }
    const int precision = law.absolute_precision();
    const int residual = agreement(compose(log, law), BivariateSeries::in_x(log) + BivariateSeries::in_y(log));
    return {f, degree, std::move(log), std::move(exp), std::move(law), precision, residual};
}

PadicScalar honda_log_value(const FrobeniusLift& f, const PadicScalar& x, int target) {
    if (x.valuation_lower_bound() < 1) throw Error(ErrorKind::InvalidArgument, "point must lie in pZ_p");
    const PadicContext work = f.ctx.working();
    return log_sum(f, x.in_context(work), target, 1, [&work](const mpz_class& c) { return PadicScalar::from_mpz(work, c); });
}

TowerElement honda_log_value(const TowerRing& tower, const TowerElement& x, int target_pi) {
    if (x.pi_valuation_lower_bound() < 1) throw Error(ErrorKind::InvalidArgument, "point must lie in the maximal ideal");
    const auto& ring = tower.ring();
    const PadicContext work = ring->context();
    return log_sum(tower.lift(), x, target_pi, ring->degree(),
                   [&](const mpz_class& c) { return ring->from_scalar(PadicScalar::from_mpz(work, c)); });
}

BasePoint epsilon_point(const HondaGroup& h, int digits) {
    const FrobeniusLift& f = h.lift;
    const PadicContext work = f.ctx.working();
    const int p = f.p();
    auto embed = [&work](const mpz_class& c) { return PadicScalar::from_mpz(work, c); };
    const PadicScalar t = PadicScalar::from_rational(work, p, p + 1);
    // The truncated exponential is correct modulo p^2, inside the disc where
    // l is an isometry; from there Newton steps are certified by the residual.
    PadicScalar x = h.exp.evaluate_polynomial(t);
    int residual = -kInfiniteValuation;
    for (int iter = 0; iter < 64; ++iter) {
        const PadicScalar r = log_sum(f, x, digits, 1, embed) - t;
        const int v = r.is_exact_zero() ? kInfiniteValuation : r.valuation_lower_bound();
        if (v <= residual) break;
        residual = v;
        if (residual >= digits) break;
        x = x - r / log_derivative(f, x, digits, 1, embed);
    }
    if (residual < digits) throw Error(ErrorKind::ConvergenceGuard, "epsilon did not reach the requested precision");
    const PadicScalar value = x.reduced_to(digits + 1);
    if (value.valuation() != 1) throw Error(ErrorKind::ConvergenceGuard, "epsilon does not have valuation 1");
    const PadicScalar log = log_sum(f, value, digits, 1, embed);
    return {value, log, std::min(residual, agreement(log, t))};
}

TowerElement law_sum(const HondaGroup& h, const TowerElement& x, const TowerElement& y, int target_pi) {
    const int vx = x.pi_valuation_lower_bound();
    const int vy = y.pi_valuation_lower_bound();
    const int vmin = std::min(vx, vy);
    if (vmin < 1) throw Error(ErrorKind::InvalidArgument, "group-law inputs must lie in the maximal ideal");
    const long tail = vmin >= kInfiniteValuation ? kInfiniteValuation
                                                  : std::min<long>(static_cast<long>(h.degree + 1) * vmin, kInfiniteValuation);
    if (tail < target_pi) throw Error(ErrorKind::ConvergenceGuard, "group-law degree too small for these valuations");
    const auto& ring = x.ring();
    const PadicContext work = ring->context();
    std::vector<TowerElement> ypow{ring->one()};
    for (int j = 1; j <= h.degree; ++j) ypow.push_back(ypow.back() * y);
    TowerElement acc = ring->zero();
    for (int i = h.degree; i >= 0; --i) {
        TowerElement inner = ring->zero();
        for (int j = 0; i + j <= h.degree; ++j) {
            const PadicScalar& c = h.law.at(i, j);
            if (c.is_exact_zero()) continue;
            inner = inner + c.in_context(work) * ypow[static_cast<std::size_t>(j)];
        }
        acc = acc * x + inner;
    }
    return acc.with_pi_error(static_cast<int>(tail));
}

TowerElement log_inverse_near(const TowerRing& tower, const TowerElement& start, const TowerElement& log_target) {
    const auto& ring = tower.ring();
    const PadicContext work = ring->context();
    const int e = ring->degree();
    const int target = tower.pi_precision();
    auto embed = [&](const mpz_class& c) { return ring->from_scalar(PadicScalar::from_mpz(work, c)); };
    TowerElement x = start;
    int residual = -kInfiniteValuation;
    for (int iter = 0; iter < 64; ++iter) {
        const TowerElement r = log_sum(tower.lift(), x, target, e, embed) - log_target;
        const int v = r.is_exact_zero() ? kInfiniteValuation : r.pi_valuation_lower_bound();
        if (v <= residual) break;
        residual = v;
        if (residual >= target) break;
        x = x - r * log_derivative(tower.lift(), x, target, e, embed).inverse();
    }
    return x.with_pi_error(std::min(residual, target));
}

FormalPoint c_point(const HondaGroup& h, const BasePoint& eps, const std::shared_ptr<const TowerRing>& tower, int n,
                    E0Convention convention) {
    const int index = convention == E0Convention::Zero ? n : n + 1;
    if (n < 0 || index > tower->level()) throw Error(ErrorKind::InvalidArgument, "c_n needs a tower of level n");
    const auto& ring = tower->ring();
    const int target = tower->pi_precision();
    const TowerElement epsilon = ring->from_scalar(eps.value.in_context(ring->context()));
    if (index == 0) return {tower, 0, epsilon, honda_log_value(*tower, epsilon, target)};
    (void)h;
    const TowerElement point = tower->division_point(index);
    // G(e, eps) = e + eps + (terms divisible by e * eps), so e + eps is within
    // valuation 1 + v(e) of the answer: inside the isometry disc.
    const TowerElement log_target = honda_log_value(*tower, point, target) + honda_log_value(*tower, epsilon, target);
    const TowerElement value = log_inverse_near(*tower, point + epsilon, log_target);
    return {tower, index, value, honda_log_value(*tower, value, target)};
}

FormalPoint formal_trace(const FormalPoint& x, int from, int to, TraceField field) {
    const auto& tower = x.tower;
    const TowerElement log =
        field == TraceField::K ? tower->field_trace(x.log, from, to) : tower->field_trace_l(x.log, from, to);
    return {tower, to, std::nullopt, log};
}

FormalPoint formal_trace_group(const HondaGroup& h, const FormalPoint& x, int from, int to, int target_pi,
                               TraceField field) {
    if (!x.value) throw Error(ErrorKind::InvalidArgument, "group-law trace needs the point's coordinates");
    const auto& tower = x.tower;
    const auto conjugates = conjugate_list(*tower, *x.value, from, to, field);
    TowerElement acc = conjugates.front();
    for (std::size_t i = 1; i < conjugates.size(); ++i) acc = law_sum(h, acc, conjugates[i], target_pi);
    return {tower, to, acc, honda_log_value(*tower, acc, std::min(target_pi, tower->pi_precision()))};
}

FormalPoint d_point(const HondaGroup& h, const BasePoint& eps, const std::shared_ptr<const TowerRing>& tower, int n) {
    const FormalPoint c = c_point(h, eps, tower, n + 1);
    return {tower, n, std::nullopt, tower->delta_trace(c.log)};
}

bool pm_membership(const FormalPoint& x, int level, PmSign sign, int digits) {
    const auto& tower = x.tower;
    const int e = tower->degree();
    const int need = digits * e;
    if (tower->pi_precision() < need) throw Error(ErrorKind::PrecisionExhausted, "tower precision below the requested digits");
    if (level >= tower->level()) throw Error(ErrorKind::InvalidArgument, "L_n needs a tower of level n + 1");
    const int parity = sign == PmSign::Plus ? 1 : 0;
    for (int m = 1; m <= level; ++m) {
        if (m % 2 != parity) continue;
        const TowerElement trace = m == level ? x.log : tower->field_trace_l(x.log, level, m);
        if (tower->invariance_l(trace, m - 1) < need) return false;
    }
    return true;
}

std::vector<RelationReport> trace_relations(const HondaGroup& h, E0Convention convention, int required_digits) {
    const int shift = convention == E0Convention::Zero ? 0 : 1;
    // headroom for the division by p^k inside l
    const int digits = required_digits + 3;
    const auto tower = TowerRing::build(h.lift, 3 + shift, digits);
    const BasePoint eps = epsilon_point(h, digits + 2);
    std::vector<FormalPoint> c;
    for (int m = 0; m <= 3; ++m) c.push_back(c_point(h, eps, tower, m, convention));
    const int e = tower->degree();
    const int need = required_digits * e;

    std::vector<RelationReport> out;
    auto negation = [&](std::string name, const TowerElement& lhs, const TowerElement& rhs) {
        RelationReport r;
        r.name = std::move(name);
        r.required_digits = required_digits;
        const int v = pi_agreement(lhs, -rhs);
        r.residual_digits = digits_of(v, e);
        r.passed = v >= need;
        out.push_back(std::move(r));
    };
    auto multiple = [&](std::string name, const TowerElement& lhs, const TowerElement& rhs) {
        RelationReport r;
        r.name = std::move(name);
        r.required_digits = required_digits;
        const TowerElement ratio = lhs / rhs;
        const int rational = tower->invariance_k(ratio, 0);
        const PadicScalar u = ratio[0];
        const int v = std::min(rational, pi_agreement(lhs, u * rhs));
        r.residual_digits = digits_of(v, e);
        bool unit = false;
        if (rational >= need) {
            r.unit = u;
            unit = u.is_nonzero() && u.valuation() == 0;
            if (!unit) r.note = "multiplier is not a unit";
        } else {
            r.note = "multiplier does not lie in Q_p";
        }
        r.passed = v >= need && unit;
        out.push_back(std::move(r));
    };

    negation("Tr^2_1(c_2) = -c_0", tower->field_trace(c[2].log, 2 + shift, 1 + shift), c[0].log);
    negation("Tr^3_2(c_3) = -c_1", tower->field_trace(c[3].log, 3 + shift, 2 + shift), c[1].log);
    multiple("Tr^1_0(c_1) = u c_0", tower->field_trace(c[1].log, 1 + shift, shift), c[0].log);
    if (convention == E0Convention::Zero) {
        const TowerElement d0 = tower->delta_trace(c[1].log);
        const TowerElement d1 = tower->delta_trace(c[2].log);
        const TowerElement d2 = tower->delta_trace(c[3].log);
        negation("Tr^2_1(d_2) = -d_0", tower->field_trace_l(d2, 2, 1), d0);
        multiple("Tr^1_0(d_1) = u d_0", tower->field_trace_l(d1, 1, 0), d0);
    }
    return out;
}

} // namespace ssiw
