#include "ssiwasawa/padic.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

namespace ssiw {

namespace {

constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;

struct PowerTable {
    std::array<std::vector<std::uint64_t>, 256> rows;
    PowerTable() {
        for (int p = 2; p < 256; ++p) {
            std::vector<std::uint64_t> row{1};
            while (row.back() < kLimit / static_cast<std::uint64_t>(p)) {
                row.push_back(row.back() * static_cast<std::uint64_t>(p));
            }
            rows[static_cast<std::size_t>(p)] = std::move(row);
        }
    }
};

const PowerTable& powers() {
    static const PowerTable table;
    return table;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    i128 t = 0, new_t = 1;
    i128 r = static_cast<i128>(m), new_r = static_cast<i128>(a % m);
    while (new_r != 0) {
        const i128 q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

i128 abs128(i128 x) { return x < 0 ? -x : x; }

void check_same(const PadicScalar& a, const PadicScalar& b) {
    const auto& ca = a.context();
    const auto& cb = b.context();
    if (!ca.is_set() || !cb.is_set() || ca == cb) return;
    throw Error(ErrorKind::ContextMismatch, "scalars from different p-adic contexts");
}

PadicContext pick(const PadicScalar& a, const PadicScalar& b) {
    return a.context().is_set() ? a.context() : b.context();
}

} // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

int max_digits(int p) {
    if (p < 2 || p > 255) throw Error(ErrorKind::InvalidArgument, "prime out of supported range 3..251");
    return static_cast<int>(powers().rows[static_cast<std::size_t>(p)].size()) - 1;
}

std::uint64_t ppow(int p, int k) {
    const auto& row = powers().rows.at(static_cast<std::size_t>(p));
    if (k < 0 || static_cast<std::size_t>(k) >= row.size()) {
        throw Error(ErrorKind::InvalidArgument, "power of p exceeds 64-bit range");
    }
    return row[static_cast<std::size_t>(k)];
}

int vp(std::int64_t n, int p) {
    if (n == 0) return kInfiniteValuation;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int vp(const mpz_class& n, int p) {
    if (n == 0) return kInfiniteValuation;
    mpz_class q = n;
    const mpz_class pp = p;
    int v = 0;
    while (mpz_divisible_p(q.get_mpz_t(), pp.get_mpz_t()) != 0) {
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t());
        ++v;
    }
    return v;
}

PadicContext::PadicContext(int p, int digits) : p_(p), n_(digits) {
    if (p < 3 || p > 251 || !is_prime(p)) {
        throw Error(ErrorKind::InvalidArgument, "p must be an odd prime below 256");
    }
    if (digits < 1 || digits > max_digits(p)) {
        throw Error(ErrorKind::InvalidArgument,
                    "precision must be between 1 and " + std::to_string(max_digits(p)) + " for p=" +
                        std::to_string(p));
    }
}

std::ostream& operator<<(std::ostream& os, const PadicContext& ctx) {
    return os << "(p=" << ctx.p() << ", N=" << ctx.N() << ")";
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 lhs = static_cast<i128>(a.num) * b.den;
    const i128 rhs = static_cast<i128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------

PadicScalar PadicScalar::zero(const PadicContext& ctx) { return {ctx, 0, kInfiniteValuation, kExact}; }

PadicScalar PadicScalar::make_exact(const PadicContext& ctx, i128 value, int valuation) {
    if (value == 0) return zero(ctx);
    const int p = ctx.p();
    while (value % p == 0) {
        value /= p;
        ++valuation;
    }
    if (abs128(value) < static_cast<i128>(kLimit)) {
        return {ctx, static_cast<std::uint64_t>(static_cast<std::int64_t>(value)), valuation, kExact};
    }
    const std::uint64_t m = ppow(p, ctx.N());
    i128 r = value % static_cast<i128>(m);
    if (r < 0) r += m;
    return {ctx, static_cast<std::uint64_t>(r), valuation, static_cast<std::uint8_t>(ctx.N())};
}

PadicScalar PadicScalar::make_inexact(const PadicContext& ctx, std::uint64_t residue, int valuation, int rel) {
    // residue is taken modulo p^rel; strip factors of p.
    const int p = ctx.p();
    rel = std::min(rel, ctx.N());
    if (rel <= 0) return {ctx, 0, valuation, 0};
    residue %= ppow(p, rel);
    if (residue == 0) return {ctx, 0, valuation + rel, 0};
    while (residue % static_cast<std::uint64_t>(p) == 0) {
        residue /= static_cast<std::uint64_t>(p);
        ++valuation;
        --rel;
    }
    return {ctx, residue, valuation, static_cast<std::uint8_t>(rel)};
}

PadicScalar PadicScalar::from_int(const PadicContext& ctx, std::int64_t value) {
    return make_exact(ctx, value, 0);
}

PadicScalar PadicScalar::from_mpz(const PadicContext& ctx, const mpz_class& value) {
    if (value == 0) return zero(ctx);
    const int v = vp(value, ctx.p());
    mpz_class unit = value;
    for (int i = 0; i < v; ++i) unit /= ctx.p();
    if (mpz_sizeinbase(unit.get_mpz_t(), 2) < 62) {
        return {ctx, static_cast<std::uint64_t>(unit.get_si()), v, kExact};
    }
    const std::uint64_t r = mpz_fdiv_ui(unit.get_mpz_t(), ppow(ctx.p(), ctx.N()));
    return {ctx, r, v, static_cast<std::uint8_t>(ctx.N())};
}

PadicScalar PadicScalar::from_rational(const PadicContext& ctx, std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    return from_int(ctx, num) / from_int(ctx, den);
}

PadicScalar PadicScalar::from_residue(const PadicContext& ctx, std::uint64_t residue, int abs_precision) {
    if (abs_precision <= 0) return {ctx, 0, abs_precision, 0};
    if (abs_precision > max_digits(ctx.p())) abs_precision = max_digits(ctx.p());
    residue %= ppow(ctx.p(), abs_precision);
    if (residue == 0) return {ctx, 0, abs_precision, 0};
    const int v = vp(static_cast<std::int64_t>(residue), ctx.p());
    return make_inexact(ctx, residue / ppow(ctx.p(), v), v, abs_precision - v);
}

PadicScalar PadicScalar::from_unit(const PadicContext& ctx, std::uint64_t unit, int valuation, int rel) {
    return make_inexact(ctx, unit, valuation, rel);
}

PadicScalar PadicScalar::big_oh(const PadicContext& ctx, int abs_precision) { return {ctx, 0, abs_precision, 0}; }

PadicScalar PadicScalar::teichmuller(const PadicContext& ctx, std::int64_t residue) {
    const int p = ctx.p();
    std::int64_t r = residue % p;
    if (r < 0) r += p;
    if (r == 0) throw Error(ErrorKind::ZeroResidue, "Teichmuller lift of a residue divisible by p");
    if (r == 1) return one(ctx);
    if (r == p - 1) return from_int(ctx, -1);
    const std::uint64_t m = ppow(p, ctx.N());
    std::uint64_t x = static_cast<std::uint64_t>(r);
    for (int iter = 0; iter <= ctx.N() + 1; ++iter) {
        std::uint64_t y = 1, base = x;
        for (int e = p; e > 0; e >>= 1) {
            if (e & 1) y = mulmod(y, base, m);
            base = mulmod(base, base, m);
        }
        if (y == x) break;
        x = y;
    }
    return make_inexact(ctx, x, 0, ctx.N());
}

int PadicScalar::valuation() const {
    if (is_zero_to_precision()) {
        throw Error(ErrorKind::PrecisionExhausted,
                    "value is zero modulo p^" + std::to_string(val_) + " but not known to be zero");
    }
    return val_;
}

int PadicScalar::valuation_lower_bound() const noexcept { return val_; }

int PadicScalar::absolute_precision() const noexcept {
    if (is_exact()) return kInfiniteValuation;
    return val_ + rel_;
}

int PadicScalar::relative_precision() const noexcept { return is_exact() ? ctx_.N() : rel_; }

std::uint64_t PadicScalar::residue_at(int rel) const {
    // unit modulo p^rel; rel must not exceed the known digits.
    const std::uint64_t m = ppow(ctx_.p(), rel);
    if (is_exact()) {
        const auto s = static_cast<std::int64_t>(unit_);
        std::int64_t r = s % static_cast<std::int64_t>(m);
        if (r < 0) r += static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r);
    }
    return unit_ % m;
}

std::uint64_t PadicScalar::unit_residue() const {
    if (is_zero()) return 0;
    return residue_at(relative_precision());
}

std::int64_t PadicScalar::exact_unit() const {
    if (!is_exact()) throw Error(ErrorKind::PrecisionExhausted, "value is not exact");
    return static_cast<std::int64_t>(unit_);
}

std::uint64_t PadicScalar::residue_mod(int k) const {
    if (k <= 0) return 0;
    if (absolute_precision() < k) {
        throw Error(ErrorKind::PrecisionExhausted, "value not known modulo p^" + std::to_string(k));
    }
    if (is_zero()) return 0;
    if (val_ < 0) throw Error(ErrorKind::InvalidArgument, "residue of a non-integral value");
    if (val_ >= k) return 0;
    const std::uint64_t m = ppow(ctx_.p(), k);
    return mulmod(residue_at(k - val_), ppow(ctx_.p(), val_), m);
}

mpz_class PadicScalar::to_mpz() const {
    if (is_zero()) return 0;
    if (val_ < 0) throw Error(ErrorKind::InvalidArgument, "integer representative of a non-integral value");
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(ctx_.p()), static_cast<unsigned long>(val_));
    if (is_exact()) return mpz_class(static_cast<long>(static_cast<std::int64_t>(unit_))) * pv;
    return mpz_class(static_cast<unsigned long>(unit_)) * pv;
}

PadicScalar PadicScalar::as_inexact() const {
    if (!is_exact() || is_exact_zero()) return *this;
    return make_inexact(ctx_, residue_at(ctx_.N()), val_, ctx_.N());
}

PadicScalar PadicScalar::operator-() const {
    if (is_zero()) return *this;
    if (is_exact()) return {ctx_, static_cast<std::uint64_t>(-static_cast<std::int64_t>(unit_)), val_, kExact};
    return {ctx_, ppow(ctx_.p(), rel_) - unit_, val_, rel_};
}

PadicScalar PadicScalar::reduced_to(int abs_precision) const {
    if (is_exact_zero()) return big_oh(ctx_, abs_precision);
    if (absolute_precision() <= abs_precision) return *this;
    if (val_ >= abs_precision) return big_oh(ctx_, abs_precision);
    const int rel = std::min(abs_precision - val_, ctx_.N());
    return {ctx_, residue_at(rel), val_, static_cast<std::uint8_t>(rel)};
}

PadicScalar PadicScalar::in_context(const PadicContext& ctx) const {
    if (ctx.p() != ctx_.p() && ctx_.is_set()) throw Error(ErrorKind::ContextMismatch, "different primes");
    PadicScalar out = *this;
    out.ctx_ = ctx;
    if (!is_exact() && rel_ > ctx.N()) {
        out.unit_ = residue_at(ctx.N());
        out.rel_ = static_cast<std::uint8_t>(ctx.N());
    }
    return out;
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
    check_same(a, b);
    if (a.is_exact_zero()) return b.context().is_set() ? b : PadicScalar::zero(a.context());
    if (b.is_exact_zero()) return a;
    const PadicContext& ctx = pick(a, b);
    const int p = ctx.p();
    if (a.is_exact() && b.is_exact()) {
        const int v = std::min(a.val_, b.val_);
        const int da = a.val_ - v, db = b.val_ - v;
        if (std::max(da, db) < max_digits(p)) {
            const i128 s = static_cast<i128>(static_cast<std::int64_t>(a.unit_)) * ppow(p, da) +
                               static_cast<i128>(static_cast<std::int64_t>(b.unit_)) * ppow(p, db);
            return PadicScalar::make_exact(ctx, s, v);
        }
    }
    if (a.is_zero_to_precision()) return b.reduced_to(a.val_);
    if (b.is_zero_to_precision()) return a.reduced_to(b.val_);
    const int v = std::min(a.val_, b.val_);
    const long abs = std::min<long>({a.absolute_precision(), b.absolute_precision(), static_cast<long>(v) + ctx.N()});
    const int r = static_cast<int>(abs - v);
    const std::uint64_t m = ppow(p, r);
    auto part = [&](const PadicScalar& x) -> std::uint64_t {
        const int shift = x.val_ - v;
        if (shift >= r) return 0;
        return mulmod(x.residue_at(r - shift), ppow(p, shift), m);
    };
    const std::uint64_t s = (part(a) + part(b)) % m;
    if (s == 0) return PadicScalar::big_oh(ctx, static_cast<int>(abs));
    return PadicScalar::make_inexact(ctx, s, v, r);
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
    check_same(a, b);
    const PadicContext& ctx = pick(a, b);
    if (a.is_exact_zero() || b.is_exact_zero()) return PadicScalar::zero(ctx);
    if (a.is_exact() && b.is_exact()) {
        const i128 prod = static_cast<i128>(static_cast<std::int64_t>(a.unit_)) *
                              static_cast<std::int64_t>(b.unit_);
        return PadicScalar::make_exact(ctx, prod, a.val_ + b.val_);
    }
    if (a.is_zero_to_precision() || b.is_zero_to_precision()) {
        return PadicScalar::big_oh(ctx, a.val_ + b.val_);
    }
    const int r = std::min(a.relative_precision(), b.relative_precision());
    const std::uint64_t m = ppow(ctx.p(), r);
    return {ctx, mulmod(a.residue_at(r), b.residue_at(r), m), a.val_ + b.val_, static_cast<std::uint8_t>(r)};
}

PadicScalar PadicScalar::inverse() const {
    if (is_exact_zero()) throw Error(ErrorKind::NotAUnit, "inverse of exact zero");
    if (is_zero_to_precision()) throw Error(ErrorKind::NotAUnit, "inverse of a value that is zero to precision");
    if (val_ != 0) throw Error(ErrorKind::NotAUnit, "inverse of a non-unit (valuation " + std::to_string(val_) + ")");
    if (is_exact() && (static_cast<std::int64_t>(unit_) == 1 || static_cast<std::int64_t>(unit_) == -1)) return *this;
    const int r = relative_precision();
    const std::uint64_t m = ppow(ctx_.p(), r);
    return {ctx_, invmod(residue_at(r), m), 0, static_cast<std::uint8_t>(r)};
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
    check_same(a, b);
    if (b.is_exact_zero()) throw Error(ErrorKind::InvalidArgument, "division by exact zero");
    if (b.is_zero_to_precision()) throw Error(ErrorKind::PrecisionExhausted, "division by a value that is zero to precision");
    const PadicScalar unit_b = b.shifted(-b.val_);
    return (a * unit_b.inverse()).shifted(-b.val_);
}

PadicScalar PadicScalar::shifted(int k) const {
    if (is_exact_zero()) return *this;
    PadicScalar out = *this;
    out.val_ += k;
    return out;
}

PadicScalar PadicScalar::pow(std::uint64_t e) const {
    PadicScalar result = one(ctx_);
    PadicScalar base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

int agreement(const PadicScalar& a, const PadicScalar& b) { return (a - b).valuation_lower_bound(); }

std::string PadicScalar::str() const {
    std::ostringstream os;
    if (is_exact_zero()) return "0";
    if (is_zero_to_precision()) {
        os << "O(" << ctx_.p() << "^" << val_ << ")";
        return os.str();
    }
    if (is_exact()) {
        os << static_cast<std::int64_t>(unit_);
    } else {
        os << unit_;
    }
    if (val_ != 0) os << "*" << ctx_.p() << "^" << val_;
    if (!is_exact()) os << " + O(" << ctx_.p() << "^" << absolute_precision() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicScalar& x) { return os << x.str(); }

} // namespace ssiw
