#include "ssiwasawa/tower.hpp"

#include <algorithm>
#include <map>

namespace ssiw {

namespace {

long ipow(int p, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

ZPoly iterate(const ZPoly& f, int times) {
    ZPoly out = ZPoly::x();
    for (int i = 0; i < times; ++i) out = f.compose(out);
    return out;
}

} // namespace

int primitive_root(int p) {
    for (int g = 2; g < p; ++g) {
        long x = 1;
        int order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1) return g;
    }
    return 1;  // p = 2 is rejected earlier; kept total for safety
}

ZPoly tower_polynomial(const FrobeniusLift& f, int level) {
    if (level < 1) throw Error(ErrorKind::InvalidArgument, "tower level must be at least 1");
    const ZPoly top = iterate(f.poly, level);
    const ZPoly below = iterate(f.poly, level - 1);
    return top.exact_div(below);
}

TowerRing::TowerRing(FrobeniusLift f, int level, int digits, std::shared_ptr<const EisensteinRing> ring)
    : lift_(std::move(f)), level_(level), digits_(digits), ring_(std::move(ring)) {}

std::shared_ptr<const TowerRing> TowerRing::build(const FrobeniusLift& f, int level, int digits, int cap) {
    if (level < 1) throw Error(ErrorKind::InvalidArgument, "tower level must be at least 1");
    if (digits < 1) throw Error(ErrorKind::InvalidArgument, "tower precision must be positive");
    const int p = f.p();
    const long e = ipow(p, level - 1) * (p - 1);
    if (e > cap) throw Error(ErrorKind::CapExceeded, "tower degree " + std::to_string(e) + " exceeds the cap");
    const PadicContext work = f.ctx.working();
    auto ring = EisensteinRing::create(work, tower_polynomial(f, level));
    auto tower = std::make_shared<TowerRing>(f, level, digits, ring);

    std::vector<PadicScalar> units;
    for (int a = 1; a < level; ++a) units.push_back(PadicScalar::from_int(work, 1 + ipow(p, a)));
    units.push_back(PadicScalar::teichmuller(work, primitive_root(p)));
    const int precision = tower->pi_precision();
    const auto series = endomorphism_series(units, f, std::max(precision - 1, p));
    const TowerElement t = ring->generator();
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        tower->gamma_images_.push_back(evaluate(series[i], t, precision).with_pi_error(precision));
    }
    tower->delta_image_ = evaluate(series.back(), t, precision).with_pi_error(precision);
    return tower;
}

std::shared_ptr<const TowerRing> build_tower(const FrobeniusLift& f, int level, int digits) {
    return TowerRing::build(f, level, digits);
}

TowerElement TowerRing::division_point(int m) const {
    if (m < 0 || m > level_) throw Error(ErrorKind::InvalidArgument, "division point index out of range");
    if (m == level_) return ring_->generator();
    return ring_->from_zpoly(iterate(lift_.poly, level_ - m));
}

TowerElement TowerRing::apply(const TowerElement& image_of_t, const TowerElement& x) const {
    const int e = ring_->degree();
    TowerElement acc = ring_->from_scalar(x[e - 1]);
    for (int i = e - 2; i >= 0; --i) acc = acc * image_of_t + ring_->from_scalar(x[i]);
    return acc;
}

TowerElement TowerRing::galois(const PadicScalar& u, const TowerElement& x) const {
    if (u.is_zero() || u.valuation() != 0) throw Error(ErrorKind::NotAUnit, "Galois parameter must be a unit");
    const int precision = pi_precision();
    const auto series = endomorphism_series(u, lift_, std::max(precision - 1, lift_.p()));
    return apply(evaluate(series, ring_->generator(), precision).with_pi_error(precision), x);
}

TowerElement TowerRing::gamma(int a, const TowerElement& x) const {
    if (a < 1) throw Error(ErrorKind::InvalidArgument, "gamma index must be at least 1");
    if (a >= level_) return x;
    return apply(gamma_images_[static_cast<std::size_t>(a - 1)], x);
}

TowerElement TowerRing::delta(const TowerElement& x) const { return apply(delta_image_, x); }

std::vector<TowerElement> TowerRing::conjugates(const TowerElement& x, int m) const {
    if (m < 0) throw Error(ErrorKind::InvalidArgument, "negative level");
    if (m >= level_) return {x};
    std::vector<TowerElement> out;
    const int base = std::max(m, 1);
    const long count = ipow(lift_.p(), level_ - base);
    std::vector<TowerElement> seeds{x};
    if (m == 0) {
        for (int a = 1; a + 1 < lift_.p(); ++a) seeds.push_back(delta(seeds.back()));
    }
    for (const auto& seed : seeds) {
        TowerElement y = seed;
        for (long j = 0; j < count; ++j) {
            out.push_back(y);
            if (j + 1 < count) y = gamma(base, y);
        }
    }
    return out;
}

TowerElement TowerRing::delta_trace(const TowerElement& x) const {
    TowerElement acc = x;
    TowerElement y = x;
    for (int a = 1; a + 1 < lift_.p(); ++a) {
        y = delta(y);
        acc = acc + y;
    }
    return acc;
}

namespace {

TowerElement unipotent_trace(const TowerRing& tower, const TowerElement& x, int a, int count_exponent) {
    const long count = ipow(tower.lift().p(), count_exponent);
    TowerElement acc = x;
    TowerElement y = x;
    for (long j = 1; j < count; ++j) {
        y = tower.gamma(a, y);
        acc = acc + y;
    }
    return acc;
}

} // namespace

TowerElement TowerRing::field_trace(const TowerElement& x, int from, int to) const {
    if (to < 0 || to > from || from > level_) throw Error(ErrorKind::InvalidArgument, "trace levels out of range");
    if (from == to) return x;
    if (to >= 1) return unipotent_trace(*this, x, to, from - to);
    const TowerElement to_one = from > 1 ? unipotent_trace(*this, x, 1, from - 1) : x;
    return delta_trace(to_one);
}

TowerElement TowerRing::field_trace_l(const TowerElement& x, int from, int to) const {
    if (to < 0 || to > from || from >= level_) throw Error(ErrorKind::InvalidArgument, "trace levels out of range");
    if (from == to) return x;
    return unipotent_trace(*this, x, to + 1, from - to);
}

int TowerRing::invariance_k(const TowerElement& x, int m) const {
    if (m >= level_) return kInfiniteValuation;
    int v = (gamma(std::max(m, 1), x) - x).pi_valuation_lower_bound();
    if (m == 0) v = std::min(v, (delta(x) - x).pi_valuation_lower_bound());
    return v;
}

int TowerRing::invariance_l(const TowerElement& x, int m) const {
    int v = (delta(x) - x).pi_valuation_lower_bound();
    if (m + 1 < level_) v = std::min(v, (gamma(m + 1, x) - x).pi_valuation_lower_bound());
    return v;
}

TowerRing::Descent TowerRing::descend(const TowerElement& x, int m) const {
    if (m < 0 || m > level_) throw Error(ErrorKind::InvalidArgument, "descent level out of range");
    const int e = ring_->degree();
    const int sub = m == 0 ? 1 : static_cast<int>(ipow(lift_.p(), m - 1) * (lift_.p() - 1));
    const TowerElement em = division_point(m);
    PadicMatrix a(static_cast<std::size_t>(e), static_cast<std::size_t>(sub), PadicScalar::zero(ring_->context()));
    TowerElement power = ring_->one();
    for (int j = 0; j < sub; ++j) {
        for (int i = 0; i < e; ++i) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = power[i];
        power = power * em;
    }
    auto solution = solve_overdetermined(std::move(a), x.coords());
    return {std::move(solution.x), solution.residual};
}

std::vector<TowerElement> galois_conjugates(const TowerRing& tower, const TowerElement& x, int m) {
    return tower.conjugates(x, m);
}

TowerElement field_trace(const TowerRing& tower, const TowerElement& x, int m) {
    return tower.field_trace(x, tower.level(), m);
}

SpanReport span_check_maximal_ideal(const FrobeniusLift& f, int level, int budget, int cap) {
    SpanReport report;
    report.level = level;
    const int p = f.p();
    const long e = ipow(p, level - 1) * (p - 1);
    if (e > cap) throw Error(ErrorKind::CapExceeded, "tower degree " + std::to_string(e) + " exceeds the cap");
    report.ramification = static_cast<int>(e);
    if (budget <= 0) {
        report.budget_limited = true;
        return report;
    }
    const auto tower = TowerRing::build(f, level, budget + 2, cap);
    const auto& ring = tower->ring();
    const PadicContext work = ring->context();

    std::vector<PadicScalar> multipliers;
    for (int i = 2; i < p; ++i) multipliers.push_back(PadicScalar::from_int(work, i));
    const int precision = tower->pi_precision();
    const auto series = endomorphism_series(multipliers, f, std::max(precision - 1, p));

    // F_f[pi^n] minus zero: the conjugates of e_m for every 1 <= m <= n
    std::vector<TowerElement> spanning;
    for (int m = 1; m <= level; ++m) {
        const long count = ipow(p, m - 1) * (p - 1);
        auto points = tower->conjugates(tower->division_point(m), 0);
        for (long k = 0; k < count; ++k) {
            // conjugates of e_m repeat with period deg k_m in this ordering
            const auto& beta = points[static_cast<std::size_t>(k * ipow(p, level - m))];
            spanning.push_back(beta);
            for (const auto& s : series) spanning.push_back(evaluate(s, beta, precision).with_pi_error(precision));
        }
    }

    // valuation echelon: one element per residue class of the pi-valuation
    const int ei = static_cast<int>(e);
    const int limit = budget * ei;
    std::map<int, TowerElement> table;
    for (const auto& v0 : spanning) {
        TowerElement x = v0;
        while (!x.is_zero() && x.pi_valuation_lower_bound() <= limit) {
            const int v = x.pi_valuation();
            const int r = v % ei;
            auto it = table.find(r);
            if (it == table.end()) {
                table.emplace(r, x);
                break;
            }
            if (it->second.pi_valuation() > v) std::swap(it->second, x);
            const TowerElement& t = it->second;
            const PadicScalar c = x[r] / t[r];
            x = x - c * t;
        }
    }
    for (const auto& [r, t] : table) report.attained.push_back(t.pi_valuation());
    std::sort(report.attained.begin(), report.attained.end());

    // SNF route in the M_n basis T, ..., T^(e-1), T^e
    const ZPoly& g = ring->modulus();
    const PadicScalar g0 = PadicScalar::from_mpz(work, g[0]);
    PadicMatrix rows(spanning.size(), static_cast<std::size_t>(e), PadicScalar::zero(work));
    for (std::size_t k = 0; k < spanning.size(); ++k) {
        const auto& x = spanning[k];
        const PadicScalar ratio = x[0] / g0;
        for (int i = 1; i < ei; ++i) {
            rows(k, static_cast<std::size_t>(i - 1)) = x[i] - ratio * PadicScalar::from_mpz(work, g[i]);
        }
        rows(k, static_cast<std::size_t>(ei - 1)) = -ratio;
    }
    const SnfResult snf = snf_padic(rows);
    report.snf_full = snf.relation_rank() == static_cast<std::size_t>(e) &&
                      std::all_of(snf.pivots.begin(), snf.pivots.end(), [](int v) { return v == 0; });

    std::vector<int> expected(static_cast<std::size_t>(e));
    for (int b = 1; b <= ei; ++b) expected[static_cast<std::size_t>(b - 1)] = b;
    report.budget_limited = report.attained.size() < static_cast<std::size_t>(e);
    report.passed = report.attained == expected && report.snf_full;
    return report;
}

} // namespace ssiw
