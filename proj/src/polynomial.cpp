#include "denum/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "denum/combinatorics.hpp"

namespace denum {

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c(p.c_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * p.c_[k];
    return Polynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << "[";
    for (std::size_t k = 0; k < p.c_.size(); ++k) {
        if (k) os << ", ";
        os << p.c_[k];
    }
    return os << "]";
}

Polynomial Polynomial::shift(const Rational& a) const {
    // result[k] = sum_{m >= k} c[m] * C(m,k) * a^(m-k)
    if (c_.empty()) return Polynomial();
    std::vector<Rational> r(c_.size());
    for (std::size_t m = 0; m < c_.size(); ++m) {
        Rational apow(1);
        for (std::size_t j = 0; j <= m; ++j) {
            std::size_t k = m - j;  // j = m-k, apow = a^j
            r[k] += c_[m] * Rational(binomial_uint(m, k)) * apow;
            apow *= a;
        }
    }
    return Polynomial(std::move(r));
}

Polynomial poly_shift_negate(const Polynomial& p, const Rational& offset) {
    // result[k] = (-1)^k sum_{m >= k} p[m] * C(m,k) * (-offset)^(m-k)
    if (p.is_zero()) return Polynomial();
    const auto& c = p.coeffs();
    std::vector<Rational> r(c.size());
    Rational noff = -offset;
    for (std::size_t m = 0; m < c.size(); ++m) {
        Rational opow(1);
        for (std::size_t j = 0; j <= m; ++j) {
            std::size_t k = m - j;
            Rational term = c[m] * Rational(binomial_uint(m, k)) * opow;
            r[k] += (k % 2 == 0) ? term : -term;
            opow *= noff;
        }
    }
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    Rational lead = b.coeff(db).inverse();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> quot(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        Rational q = rem[k] * lead;
        if (q.is_zero()) continue;
        quot[k - db] = q;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_divexact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division leaves a remainder");
    return q;
}

}  // namespace denum
