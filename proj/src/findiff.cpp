#include "denum/findiff.hpp"

#include <stdexcept>

#include "denum/combinatorics.hpp"
#include "denum/laurent.hpp"

namespace denum {

Rational DeltaPoly::apply_power_zero(unsigned long m) const {
    Rational acc(0);
    for (int k = 0; k <= p.degree(); ++k)
        acc += p.coeff(static_cast<std::size_t>(k)) *
               Rational(delta_power_zero(static_cast<unsigned long>(k), m));
    return acc;
}

Int delta_power_zero(unsigned long n, unsigned long m) {
    Int acc = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        Int kp;
        mpz_pow_ui(kp.get_mpz_t(), Int(k).get_mpz_t(), m);
        Int term = binomial_uint(n, k) * kp;
        if ((n - k) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

Rational euler_h(unsigned long n, const Rational& lambda) {
    if (lambda == Rational(1)) throw std::domain_error("euler_h: pole at lambda = 1");
    Rational w = (lambda - Rational(1)).inverse();
    Rational wpow(1), acc(0);
    for (unsigned long k = 0; k <= n; ++k) {
        acc += wpow * Rational(delta_power_zero(k, n));
        wpow *= w;
    }
    return -acc;
}

Rational euler_h_series(unsigned long n, const Rational& lambda) {
    if (lambda == Rational(1)) throw std::domain_error("euler_h: pole at lambda = 1");
    int hi = static_cast<int>(n);
    // lambda - e^x, known through x^n.
    std::vector<Rational> den(n + 1);
    Rational invfac(1);
    for (unsigned long j = 0; j <= n; ++j) {
        if (j > 0) invfac /= Rational(static_cast<long>(j));
        den[j] = (j == 0 ? lambda - Rational(1) : -invfac);
    }
    LaurentSeries<Rational> d(0, std::move(den), hi, Rational(0));
    Rational cn = coefficient(series_inv(d), hi) * (Rational(1) - lambda);
    return cn * Rational(factorial(n));
}

namespace {

// Expansion of the operator d/(1 - c e^(-d)) through d^m; entry k multiplies
// the k-th derivative. The d factor in the numerator kills the constant term.
std::vector<Rational> todd_series_weights(const Rational& c, int m) {
    std::vector<Rational> den(static_cast<std::size_t>(m) + 1);
    Rational invfac(1);
    for (int j = 0; j <= m; ++j) {
        if (j > 0) invfac /= Rational(j);
        Rational e = -c * invfac;
        if (j % 2 == 1) e = -e;
        den[static_cast<std::size_t>(j)] = (j == 0 ? Rational(1) + e : e);
    }
    LaurentSeries<Rational> inv = series_inv(LaurentSeries<Rational>(0, std::move(den), m, Rational(0)));
    std::vector<Rational> w(static_cast<std::size_t>(m) + 1);
    for (int k = 1; k <= m; ++k) w[static_cast<std::size_t>(k)] = coefficient(inv, k - 1);
    return w;
}

}  // namespace

Polynomial todd_apply(const Rational& c, const Polynomial& f) {
    if (c == Rational(1)) throw std::domain_error("todd_apply: pole at c = 1");
    if (f.is_zero()) return Polynomial();
    int m = f.degree();
    std::vector<Rational> w = todd_series_weights(c, m);
    Polynomial result, der = f;
    for (int k = 1; k <= m; ++k) {
        der = der.derivative();
        result = result + w[static_cast<std::size_t>(k)] * der;
    }
    return result;
}

Polynomial todd_apply_differences(const Rational& c, const Polynomial& f) {
    if (c == Rational(1)) throw std::domain_error("todd_apply: pole at c = 1");
    if (f.degree() <= 0) return Polynomial();  // no constant term in the operator
    int m = f.degree();
    // log(1+D) / (c(1+D) - 1) as a series in the forward difference D.
    std::vector<Rational> logc(static_cast<std::size_t>(m) + 1);
    for (int j = 1; j <= m; ++j)
        logc[static_cast<std::size_t>(j)] = Rational(j % 2 == 1 ? 1 : -1, j);
    LaurentSeries<Rational> lg(0, std::move(logc), m, Rational(0));
    LaurentSeries<Rational> den(0, {c - Rational(1), c}, m, Rational(0));
    LaurentSeries<Rational> a = lg * series_inv(den);
    // Differences act on j in f(h - j); Delta^k at j=0 mixes f(h), ..., f(h-k).
    std::vector<Polynomial> shifted(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) shifted[static_cast<std::size_t>(i)] = f.shift(Rational(-i));
    Polynomial result;
    for (int k = 0; k <= m; ++k) {
        Rational ak = coefficient(a, k);
        if (ak.is_zero()) continue;
        Polynomial dk;
        for (int i = 0; i <= k; ++i) {
            Rational s = Rational(binomial_uint(static_cast<unsigned long>(k),
                                                static_cast<unsigned long>(i)));
            if ((k - i) % 2 == 1) s = -s;
            dk = dk + s * shifted[static_cast<std::size_t>(i)];
        }
        result = result + ak * dk;
    }
    return result;
}

Polynomial inv_expm1_derivative(unsigned long n) {
    std::vector<Rational> c(n + 2);
    Int kfac = 1;
    for (unsigned long k = 1; k <= n + 1; ++k) {
        if (k >= 2) kfac *= static_cast<long>(k - 1);
        Int v = kfac * stirling2(n + 1, k);
        if (n % 2 == 1) v = -v;
        c[k] = Rational(v);
    }
    return Polynomial(std::move(c));
}

Polynomial inv_expm1_derivative_chain(unsigned long n) {
    // u' = -u - u^2; differentiate p(u) through the chain rule n times.
    Polynomial uprime({0, -1, -1});
    Polynomial p = Polynomial::x();
    for (unsigned long i = 0; i < n; ++i) p = p.derivative() * uprime;
    return p;
}

std::vector<Rational> scherk_herschel_coeffs(unsigned long n) {
    std::vector<Rational> row(n + 1);
    for (unsigned long k = 0; k <= n; ++k) row[k] = Rational(stirling2(n, k));
    return row;
}

Int delta_of_kronecker(unsigned long k, DiffDirection direction, long l, long lprime) {
    long m = direction == DiffDirection::forward ? lprime - l : l - lprime;
    if (m < 0 || m > static_cast<long>(k)) return 0;
    unsigned long exponent =
        direction == DiffDirection::forward ? k - static_cast<unsigned long>(m)
                                            : static_cast<unsigned long>(m);
    Int v = binomial_uint(k, static_cast<unsigned long>(m));
    return exponent % 2 == 1 ? Int(-v) : v;
}

}  // namespace denum
