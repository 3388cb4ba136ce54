#pragma once

#include <string>
#include <vector>

#include "denum/rational.hpp"

namespace denum {

// Multiset of part sizes, order preserved as given.
using Components = std::vector<long>;

// Nonempty, every entry >= 1; throws std::invalid_argument otherwise.
void validate_components(const Components& c);

// All q >= 1 dividing at least one component, ascending.
std::vector<long> component_divisors(const Components& c);

// values[l] counts nonnegative solutions of m . d = l for l = 0..L.
struct DenumerantTable {
    Components components;
    std::vector<Int> values;

    // header "l,value", LF endings, no quoting
    std::string to_csv() const;
    // JSON array of decimal strings
    std::string to_json() const;
};

// 1 if q divides l, else 0.
int herschel_indicator(long l, long q);

// One-component-at-a-time convolution DP; the trusted oracle.
DenumerantTable denumerant_bruteforce(long L, const Components& c);

// Series inverse of the expanded product of (1 - sigma^d_i), order L;
// independent code path from the DP. Non-integer or negative coefficient
// throws std::logic_error.
DenumerantTable denumerant_series(long L, const Components& c);

// C(d-1+l, l): l-th coefficient of 1/(1-sigma)^d.
Int unit_denumerant(long l, long d);

// Table for c extended by k unit components, via a single binomial
// convolution against the base table of c.
DenumerantTable add_ones_smoothing(const Components& c, long k, long L);

// S_n^(r) = sum_{v=0}^{n} C(r+n-v, r) g_v; needs len(g) > n.
Rational cesaro_sum(long r, const std::vector<Int>& g, long n);

}  // namespace denum
