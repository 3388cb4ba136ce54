#include "denum/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace denum {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial_uint(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int binomial_int(const Int& n, unsigned long k) {
    Int num(1);
    for (unsigned long j = 0; j < k; ++j) num *= n - static_cast<long>(j);
    Int den = factorial(k);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("integer binomial is not an integer");
    return q;
}

Int falling_factorial(const Int& m, unsigned long k) {
    Int r(1);
    for (unsigned long j = 0; j < k; ++j) r *= m - static_cast<long>(j);
    return r;
}

Rational binomial_generalized(const Rational& alpha, unsigned long l) {
    Rational num(1);
    for (unsigned long j = 0; j < l; ++j) num *= alpha + Rational(static_cast<long>(j));
    return num / Rational(factorial(l));
}

Int stirling2(unsigned long m, unsigned long n) {
    Int sum(0);
    for (unsigned long k = 0; k <= n; ++k) {
        Int kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), k, m);
        Int term = binomial_uint(n, k) * kp;
        if ((n - k) % 2) sum -= term; else sum += term;
    }
    Int den = factorial(n);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("stirling2 alternating sum not divisible by n!");
    return q;
}

Int stirling2_recurrence(unsigned long m, unsigned long n) {
    if (n > m) return 0;
    // row[j] = S(i, j) for the current i
    std::vector<Int> row(n + 1, Int(0));
    row[0] = 1;  // S(0,0)
    for (unsigned long i = 1; i <= m; ++i) {
        for (unsigned long j = std::min<unsigned long>(i, n); j > 0; --j)
            row[j] = static_cast<long>(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[n];
}

}  // namespace denum
