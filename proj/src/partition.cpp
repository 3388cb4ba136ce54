#include "denum/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "denum/combinatorics.hpp"
#include "denum/laurent.hpp"

namespace denum {

void validate_components(const Components& c) {
    if (c.empty()) throw std::invalid_argument("components list is empty");
    for (long d : c)
        if (d < 1) throw std::invalid_argument("component " + std::to_string(d) + " is not positive");
}

std::vector<long> component_divisors(const Components& c) {
    validate_components(c);
    std::set<long> qs;
    for (long d : c)
        for (long q = 1; q <= d; ++q)
            if (d % q == 0) qs.insert(q);
    return std::vector<long>(qs.begin(), qs.end());
}

std::string DenumerantTable::to_csv() const {
    std::ostringstream os;
    os << "l,value\n";
    for (std::size_t l = 0; l < values.size(); ++l) os << l << ',' << values[l].get_str() << '\n';
    return os.str();
}

std::string DenumerantTable::to_json() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t l = 0; l < values.size(); ++l) {
        if (l) os << ',';
        os << '"' << values[l].get_str() << '"';
    }
    os << ']';
    return os.str();
}

int herschel_indicator(long l, long q) {
    if (q < 1) throw std::invalid_argument("herschel_indicator: q must be positive");
    return l % q == 0 ? 1 : 0;
}

DenumerantTable denumerant_bruteforce(long L, const Components& c) {
    validate_components(c);
    if (L < 0) throw std::invalid_argument("negative table length");
    std::vector<Int> ways(static_cast<std::size_t>(L) + 1, Int(0));
    ways[0] = 1;
    for (long d : c)
        for (long l = d; l <= L; ++l) ways[static_cast<std::size_t>(l)] += ways[static_cast<std::size_t>(l - d)];
    return DenumerantTable{c, std::move(ways)};
}

DenumerantTable denumerant_series(long L, const Components& c) {
    validate_components(c);
    if (L < 0) throw std::invalid_argument("negative table length");
    int hi = static_cast<int>(L);
    LaurentSeries<Rational> den = LaurentSeries<Rational>::constant(Rational(1), hi);
    for (long d : c) {
        if (d > L) continue;  // (1 - sigma^d) is 1 inside the window
        den = den * (LaurentSeries<Rational>::constant(Rational(1), hi) -
                     LaurentSeries<Rational>::monomial(Rational(1), static_cast<int>(d), hi));
    }
    LaurentSeries<Rational> inv = series_inv(den);
    std::vector<Int> values;
    values.reserve(static_cast<std::size_t>(L) + 1);
    for (long l = 0; l <= L; ++l) {
        Rational v = coefficient(inv, static_cast<int>(l));
        if (!v.is_integer() || v.sign() < 0)
            throw std::logic_error("denumerant series produced non-count coefficient " + v.to_string());
        values.push_back(v.as_integer());
    }
    return DenumerantTable{c, std::move(values)};
}

Int unit_denumerant(long l, long d) {
    if (l < 0 || d < 1) throw std::invalid_argument("unit_denumerant needs l >= 0, d >= 1");
    return binomial_uint(static_cast<unsigned long>(d - 1 + l), static_cast<unsigned long>(l));
}

DenumerantTable add_ones_smoothing(const Components& c, long k, long L) {
    if (k < 1) throw std::invalid_argument("add_ones_smoothing needs k >= 1");
    DenumerantTable base = denumerant_bruteforce(L, c);
    std::vector<Int> values(base.values.size(), Int(0));
    for (long l = 0; l <= L; ++l) {
        Int acc = 0;
        for (long lp = 0; lp <= l; ++lp)
            acc += unit_denumerant(l - lp, k) * base.values[static_cast<std::size_t>(lp)];
        values[static_cast<std::size_t>(l)] = acc;
    }
    Components extended = c;
    extended.insert(extended.end(), static_cast<std::size_t>(k), 1L);
    return DenumerantTable{std::move(extended), std::move(values)};
}

Rational cesaro_sum(long r, const std::vector<Int>& g, long n) {
    if (r < 0 || n < 0) throw std::invalid_argument("cesaro_sum needs r, n >= 0");
    if (static_cast<std::size_t>(n) >= g.size())
        throw std::invalid_argument("cesaro_sum: sequence prefix shorter than n+1");
    Int acc = 0;
    for (long v = 0; v <= n; ++v)
        acc += binomial_uint(static_cast<unsigned long>(r + n - v), static_cast<unsigned long>(r)) *
               g[static_cast<std::size_t>(v)];
    return Rational(acc);
}

}  // namespace denum
