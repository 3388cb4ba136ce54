#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "denum/rational.hpp"

namespace denum {

// Dense univariate polynomial over Rational. Coefficient k multiplies x^k;
// no trailing zero coefficients, so the zero polynomial is the empty vector
// and equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(const Rational& a) { return Polynomial({a}); }
    static Polynomial monomial(const Rational& a, std::size_t power) {
        std::vector<Rational> c(power + 1);
        c[power] = a;
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    // p(x + a), expanded exactly.
    Polynomial shift(const Rational& a) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// q(x) = p(-x - offset).
Polynomial poly_shift_negate(const Polynomial& p, const Rational& offset);

// Quotient and remainder of a by nonzero b: a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

// Exact quotient; error if the remainder is nonzero.
Polynomial poly_divexact(const Polynomial& a, const Polynomial& b);

}  // namespace denum
