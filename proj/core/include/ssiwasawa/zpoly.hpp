#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ssiw {

/// Exact polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs);
    ZPoly(std::initializer_list<long> coeffs);

    static ZPoly constant(const mpz_class& c);
    static ZPoly x();
    static ZPoly monomial(const mpz_class& c, int degree);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] const std::vector<mpz_class>& coefficients() const noexcept { return c_; }
    /// Coefficient of X^i (zero past the degree).
    [[nodiscard]] mpz_class operator[](int i) const;
    [[nodiscard]] const mpz_class& leading() const { return c_.back(); }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const mpz_class& s, const ZPoly& a);
    [[nodiscard]] ZPoly operator-() const;
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    [[nodiscard]] ZPoly pow(unsigned e) const;
    /// this(inner(X)).
    [[nodiscard]] ZPoly compose(const ZPoly& inner) const;
    /// this(1 + X).
    [[nodiscard]] ZPoly shift_one() const;
    [[nodiscard]] mpz_class eval(const mpz_class& x) const;

    /// Quotient and remainder by a monic divisor.
    struct DivMod;
    [[nodiscard]] DivMod divmod_monic(const ZPoly& divisor) const;
    /// Exact quotient; throws if the division leaves a remainder.
    [[nodiscard]] ZPoly exact_div(const ZPoly& divisor) const;
    [[nodiscard]] ZPoly rem_monic(const ZPoly& divisor) const;

    [[nodiscard]] std::string str() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

struct ZPoly::DivMod {
    ZPoly quotient;
    ZPoly remainder;
};

/// Resultant via the fraction-free (Bareiss) determinant of the Sylvester matrix.
mpz_class resultant(const ZPoly& a, const ZPoly& b);

/// Determinant of a square integer matrix by Bareiss elimination.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

/// C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

} // namespace ssiw
