#pragma once

#include <vector>

#include "denum/polynomial.hpp"
#include "denum/rational.hpp"

namespace denum {

// Polynomial in the abstract forward-difference operator Delta; applying it
// to the sequence j -> j^m at 0 contracts each Delta^k against Delta^k 0^m.
struct DeltaPoly {
    Polynomial p;
    Rational apply_power_zero(unsigned long m) const;
};

// Delta^n 0^m = sum_k (-1)^(n-k) C(n,k) k^m = n! * stirling2(m, n).
Int delta_power_zero(unsigned long n, unsigned long m);

// H_n(lambda): n! times the t^n coefficient of (1-lambda)/(lambda - e^t).
// Closed difference form -sum_{k=0}^n (lambda-1)^(-k) Delta^k 0^n.
Rational euler_h(unsigned long n, const Rational& lambda);
// Independent evaluation straight from the series definition.
Rational euler_h_series(unsigned long n, const Rational& lambda);

// The operator d/(1 - c e^(-d)) (d = d/dh) expanded as a power series in d
// to degree deg f and applied termwise. c = 1 is a pole of the expansion.
Polynomial todd_apply(const Rational& c, const Polynomial& f);
// Same operator in difference form: sum_k a_k (Delta^k_j f(h-j))|_{j=0} with
// sum a_k Delta^k the expansion of log(1+Delta)/(c(1+Delta)-1).
Polynomial todd_apply_differences(const Rational& c, const Polynomial& f);

// d^n/ds^n 1/(e^s - 1) as a polynomial in u = 1/(e^s - 1):
// (-1)^n sum_{k=1}^{n+1} (k-1)! stirling2(n+1, k) u^k.
Polynomial inv_expm1_derivative(unsigned long n);
// Chain-rule construction from u' = -u - u^2, differentiated n times.
Polynomial inv_expm1_derivative_chain(unsigned long n);

// Coefficients {n k} with (x d/dx)^n = sum_k {n k} x^k d^k/dx^k;
// the k-th entry is stirling2(n, k).
std::vector<Rational> scherk_herschel_coeffs(unsigned long n);

enum class DiffDirection { forward, backward };

// k-th difference, in l, of the Kronecker spike at lprime:
// forward  (-1)^(lprime-l-k) C(k, lprime-l), backward (-1)^(l-lprime) C(k, l-lprime),
// zero outside the binomial range.
Int delta_of_kronecker(unsigned long k, DiffDirection direction, long l, long lprime);

}  // namespace denum
