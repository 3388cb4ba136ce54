#pragma once

#include "denum/rational.hpp"

namespace denum {

Int factorial(unsigned long n);

// C(n, k) for nonnegative n.
Int binomial_uint(unsigned long n, unsigned long k);

// C(n, k) for arbitrary integer n (negative upper index allowed).
Int binomial_int(const Int& n, unsigned long k);

// m(m-1)...(m-k+1).
Int falling_factorial(const Int& m, unsigned long k);

// prod_{j=0}^{l-1} (alpha + j) / l!. Equals C(alpha-1+l, l) for integer
// alpha >= 1 and stays well defined for every rational alpha, in particular
// negative integers, where it degenerates to (-1)^l C(k, l) at alpha = -k.
Rational binomial_generalized(const Rational& alpha, unsigned long l);

// Stirling numbers of the second kind {m over n}, alternating-sum form:
// (1/n!) sum_k (-1)^(n-k) C(n,k) k^m.
Int stirling2(unsigned long m, unsigned long n);

// Same numbers by the triangle recurrence S(m,n) = n S(m-1,n) + S(m-1,n-1);
// kept as an independent cross-check path.
Int stirling2_recurrence(unsigned long m, unsigned long n);

}  // namespace denum
