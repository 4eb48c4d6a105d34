#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "ssiwasawa/error.hpp"

namespace ssiw {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

bool is_prime(std::int64_t n);

/// Largest k with p^k < 2^62, so residues and their sums fit in 64 bits.
int max_digits(int p);

/// p^k for 0 <= k <= max_digits(p).
std::uint64_t ppow(int p, int k);

/// v_p(n) for n != 0.
int vp(std::int64_t n, int p);
int vp(const mpz_class& n, int p);

class PadicContext {
public:
    PadicContext() = default;
    PadicContext(int p, int digits);

    [[nodiscard]] int p() const noexcept { return p_; }
    [[nodiscard]] int N() const noexcept { return n_; }
    [[nodiscard]] bool is_set() const noexcept { return p_ != 0; }

    /// Same prime, relative precision cap raised to the largest the 64-bit
    /// representation supports. Long computations run here and are compared
    /// against the caller's N at the end.
    [[nodiscard]] PadicContext working() const { return {p_, max_digits(p_)}; }
    [[nodiscard]] PadicContext with_digits(int digits) const { return {p_, digits}; }

    friend bool operator==(const PadicContext&, const PadicContext&) = default;

private:
    int p_ = 0;
    int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PadicContext& ctx);

/// Reduced fraction with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
    friend Rational operator+(const Rational& a, const Rational& b);
    [[nodiscard]] std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// An element of Q_p stored as unit * p^valuation in a capped-relative model.
///
/// Three shapes exist:
///  - exact: an integer unit (|unit| < 2^62) times p^v; arithmetic stays exact
///    while results fit, then degrades to a residue with N relative digits;
///  - inexact nonzero: unit known modulo p^r for some 1 <= r <= N;
///  - inexact zero: the value is only known to be 0 mod p^A ("O(p^A)").
/// Exact zero is a separate marker and is never produced by rounding.
class PadicScalar {
public:
    PadicScalar() = default;

    static PadicScalar zero(const PadicContext& ctx);
    static PadicScalar one(const PadicContext& ctx) { return from_int(ctx, 1); }
    static PadicScalar from_int(const PadicContext& ctx, std::int64_t value);
    static PadicScalar from_mpz(const PadicContext& ctx, const mpz_class& value);
    /// num/den in Q_p; den must be nonzero.
    static PadicScalar from_rational(const PadicContext& ctx, std::int64_t num, std::int64_t den);
    /// The integer `residue` known modulo p^abs_precision.
    static PadicScalar from_residue(const PadicContext& ctx, std::uint64_t residue, int abs_precision);
    /// unit * p^valuation with the unit known modulo p^rel (rel <= N).
    static PadicScalar from_unit(const PadicContext& ctx, std::uint64_t unit, int valuation, int rel);
    /// O(p^abs_precision).
    static PadicScalar big_oh(const PadicContext& ctx, int abs_precision);
    /// (p-1)-st root of unity congruent to `residue` mod p.
    static PadicScalar teichmuller(const PadicContext& ctx, std::int64_t residue);

    [[nodiscard]] const PadicContext& context() const noexcept { return ctx_; }
    [[nodiscard]] int p() const noexcept { return ctx_.p(); }

    [[nodiscard]] bool is_exact() const noexcept { return rel_ == kExact; }
    [[nodiscard]] bool is_exact_zero() const noexcept { return rel_ == kExact && unit_ == 0; }
    [[nodiscard]] bool is_zero_to_precision() const noexcept { return rel_ == 0; }
    /// True for exact zero and for O(p^A).
    [[nodiscard]] bool is_zero() const noexcept { return is_exact_zero() || is_zero_to_precision(); }
    [[nodiscard]] bool is_nonzero() const noexcept { return !is_zero(); }

    /// Throws PrecisionExhausted for O(p^A); kInfiniteValuation for exact zero.
    [[nodiscard]] int valuation() const;
    /// The value is certainly divisible by p^k for every k up to this bound.
    [[nodiscard]] int valuation_lower_bound() const noexcept;
    /// Absolute precision (kInfiniteValuation for exact values).
    [[nodiscard]] int absolute_precision() const noexcept;
    /// Number of known unit digits; N for exact values.
    [[nodiscard]] int relative_precision() const noexcept;
    /// Unit part modulo p^relative_precision (for exact values, the signed
    /// unit reduced into [0, p^N)).
    [[nodiscard]] std::uint64_t unit_residue() const;
    /// Signed unit of an exact value.
    [[nodiscard]] std::int64_t exact_unit() const;
    /// Representative in [0, p^k) of an integral value; requires the value to
    /// be known modulo p^k.
    [[nodiscard]] std::uint64_t residue_mod(int k) const;
    /// Integer representative of an integral value (exact if possible).
    [[nodiscard]] mpz_class to_mpz() const;

    [[nodiscard]] PadicScalar operator-() const;
    friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
    friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
    friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
    /// Q_p division; b must be certified nonzero.
    friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);
    PadicScalar& operator+=(const PadicScalar& b) { return *this = *this + b; }
    PadicScalar& operator-=(const PadicScalar& b) { return *this = *this - b; }
    PadicScalar& operator*=(const PadicScalar& b) { return *this = *this * b; }

    /// Multiplicative inverse of a unit (valuation 0).
    [[nodiscard]] PadicScalar inverse() const;
    /// Multiplication by p^k (k may be negative).
    [[nodiscard]] PadicScalar shifted(int k) const;
    [[nodiscard]] PadicScalar pow(std::uint64_t e) const;
    /// Forget digits so that the absolute precision is at most `abs_precision`.
    [[nodiscard]] PadicScalar reduced_to(int abs_precision) const;
    /// Move to another cap on relative precision (same p).
    [[nodiscard]] PadicScalar in_context(const PadicContext& ctx) const;

    /// Lower bound on v(a - b); kInfiniteValuation when equal exactly.
    friend int agreement(const PadicScalar& a, const PadicScalar& b);

    [[nodiscard]] std::string str() const;

private:
    static constexpr std::uint8_t kExact = 255;

    PadicScalar(const PadicContext& ctx, std::uint64_t unit, int valuation, std::uint8_t rel)
        : ctx_(ctx), unit_(unit), val_(valuation), rel_(rel) {}

    static PadicScalar make_exact(const PadicContext& ctx, i128 value, int valuation);
    static PadicScalar make_inexact(const PadicContext& ctx, std::uint64_t residue, int valuation, int rel);
    [[nodiscard]] PadicScalar as_inexact() const;
    [[nodiscard]] std::uint64_t residue_at(int rel) const;

    PadicContext ctx_;
    std::uint64_t unit_ = 0;
    int val_ = kInfiniteValuation;
    std::uint8_t rel_ = kExact;
};

std::ostream& operator<<(std::ostream& os, const PadicScalar& x);

} // namespace ssiw
