#include "ssiwasawa/zpoly.hpp"

#include <algorithm>
#include <sstream>

#include "ssiwasawa/error.hpp"

namespace ssiw {

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

ZPoly ZPoly::constant(const mpz_class& c) { return ZPoly(std::vector<mpz_class>{c}); }

ZPoly ZPoly::x() { return ZPoly{0, 1}; }

ZPoly ZPoly::monomial(const mpz_class& c, int degree) {
    std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return ZPoly(std::move(v));
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class ZPoly::operator[](int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return ZPoly(std::move(out));
}

ZPoly ZPoly::operator-() const {
    ZPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(out));
}

ZPoly operator*(const mpz_class& s, const ZPoly& a) {
    std::vector<mpz_class> out = a.c_;
    for (auto& c : out) c *= s;
    return ZPoly(std::move(out));
}

ZPoly ZPoly::pow(unsigned e) const {
    ZPoly result = constant(1);
    ZPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

ZPoly ZPoly::compose(const ZPoly& inner) const {
    ZPoly result;
    for (int i = degree(); i >= 0; --i) result = result * inner + constant(c_[static_cast<std::size_t>(i)]);
    return result;
}

ZPoly ZPoly::shift_one() const { return compose(ZPoly{1, 1}); }

mpz_class ZPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
    return acc;
}

ZPoly::DivMod ZPoly::divmod_monic(const ZPoly& divisor) const {
    if (divisor.is_zero() || divisor.leading() != 1) {
        throw Error(ErrorKind::InvalidArgument, "divisor must be monic");
    }
    std::vector<mpz_class> r = c_;
    const int db = divisor.degree();
    if (degree() < db) return {ZPoly{}, *this};
    std::vector<mpz_class> q(static_cast<std::size_t>(degree() - db) + 1);
    for (int k = degree(); k >= db; --k) {
        const mpz_class lead = r[static_cast<std::size_t>(k)];
        if (lead == 0) continue;
        q[static_cast<std::size_t>(k - db)] = lead;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= lead * divisor.c_[static_cast<std::size_t>(i)];
    }
    return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

ZPoly ZPoly::exact_div(const ZPoly& divisor) const {
    auto [q, r] = divmod_monic(divisor);
    if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
    return q;
}

ZPoly ZPoly::rem_monic(const ZPoly& divisor) const { return divmod_monic(divisor).remainder; }

std::string ZPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        const mpz_class a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) os << (a != 1 ? "*" : "") << "X" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

mpz_class resultant(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const int m = a.degree();
    const int n = b.degree();
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    const auto size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size));
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = a[m - i];
    }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = b[n - i];
    }
    return bareiss_determinant(std::move(s));
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace ssiw
